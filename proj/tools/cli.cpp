#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "rankcertify/cones.hpp"
#include "rankcertify/errors.hpp"
#include "rankcertify/io.hpp"
#include "rankcertify/qualifications.hpp"
#include "rankcertify/solvers.hpp"
#include "rankcertify/stationarity.hpp"

namespace rankcertify::cli {

namespace {

using io::Json;

struct CommonFlags {
  std::string report = "json";
  double tol = 1e-8;
  double rank_tol = 1e-10;
  std::optional<double> alpha;
};

CertifyOptions options_from(const CommonFlags& f) {
  CertifyOptions o;
  o.tol = f.tol;
  o.rank_tol = f.rank_tol;
  return o;
}

int exit_code(const Certificate& c) {
  if (!c.feasible) return kExitInfeasible;
  return c.f_stationary ? kExitStationary : kExitNotStationary;
}

void emit(std::ostream& out, const CommonFlags& f, const Certificate& c) {
  if (f.report == "text") {
    out << io::certificate_text(c);
  } else {
    out << io::certificate_to_json(c).dump(2) << "\n";
  }
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("RANKCERTIFY_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("RANKCERTIFY_SEED is not an unsigned integer: ") + env);
    }
  }
  return flag_seed;
}

int cmd_certify(const std::string& problem_file, const std::string& point_file,
                const CommonFlags& flags, std::ostream& out) {
  const Problem prob = io::problem_from_json(io::read_json_file(problem_file));
  const Matrix X = io::point_from_json(io::read_json_file(point_file));
  const Certificate c = classify(prob, X, flags.alpha, options_from(flags));
  emit(out, flags, c);
  return exit_code(c);
}

struct SolveFlags {
  std::string solver = "alm";
  Index rank = -1;
  double tol = -1.0;
  int max_iter = -1;
  std::uint64_t seed = 0;
  std::string trace;
  std::string params;
};

int cmd_solve(const std::string& problem_file, const CommonFlags& flags, const SolveFlags& sf,
              std::ostream& out) {
  Json problem_json = io::read_json_file(problem_file);
  if (sf.rank != -1) {
    if (sf.rank < 1) throw InputError("--rank must be at least 1");
    problem_json["rank"] = sf.rank;
  }
  const Problem prob = io::problem_from_json(problem_json);
  const CertifyOptions copt = options_from(flags);

  Json report;
  report["solver"] = sf.solver;
  SolveTrace trace;
  Matrix X;
  if (sf.solver == "ap") {
    if (prob.name != "hankel") throw InputError("--solver ap applies to hankel problems only");
    const Json& params = problem_json["params"];
    Matrix H = params.contains("H")
                   ? io::matrix_from_json(params["H"])
                   : hankel_from_signal(io::vector_from_json(params["signal"]),
                                        params["rows"].get<Index>());
    APResult res = alternating_projections(H, prob.rank, sf.max_iter > 0 ? sf.max_iter : 5000,
                                           sf.tol > 0.0 ? sf.tol : 1e-13);
    X = res.X;
    trace = std::move(res.trace);
    trace.certificate = classify(prob, X, flags.alpha, copt);
  } else if (sf.solver == "alm") {
    ALMParams p;
    if (!sf.params.empty()) p = io::alm_params_from_json(io::read_json_file(sf.params), p);
    if (sf.tol > 0.0) p.tol = sf.tol;
    if (sf.max_iter > 0) p.max_outer = sf.max_iter;
    std::mt19937_64 rng(effective_seed(sf.seed));
    std::normal_distribution<double> g;
    Matrix X0(prob.rows(), prob.cols());
    for (Index j = 0; j < X0.cols(); ++j) {
      for (Index i = 0; i < X0.rows(); ++i) X0(i, j) = g(rng);
    }
    if (prob.structure == Structure::diagonal) X0 = Matrix(X0.diagonal().asDiagonal());
    ALMResult res = alm_projected_gradient(prob, X0, p, copt);
    X = res.X;
    report["multipliers"] = io::vector_to_json(res.y);
    report["final_alpha"] = res.alpha;
    trace = std::move(res.trace);
  } else {
    throw InputError("--solver must be 'ap' or 'alm'");
  }

  if (!sf.trace.empty()) {
    std::ofstream csv(sf.trace);
    if (!csv) throw InputError("cannot write trace file " + sf.trace);
    write_trace_csv(csv, trace);
  }

  const Certificate& cert = *trace.certificate;
  const bool certified = cert.feasible && cert.f_stationary && cert.alpha_stationary;
  if (flags.report == "text") {
    out << "solver " << sf.solver << ": " << (trace.converged ? "converged" : "not converged")
        << " (" << to_string(trace.stop_reason) << ", " << trace.iterates.size()
        << " iterations, " << trace.ambiguity_events << " projection ties)\n";
    out << io::certificate_text(cert);
  } else {
    const Json summary = io::trace_summary_to_json(trace);
    for (auto it = summary.begin(); it != summary.end(); ++it) report[it.key()] = it.value();
    report["point"] = io::matrix_to_json(X);
    out << report.dump(2) << "\n";
  }
  if (!cert.feasible) return kExitInfeasible;
  return trace.converged && certified ? kExitStationary : kExitNotStationary;
}

Matrix hankel3_data() {
  Matrix H = Matrix::Zero(3, 3);
  H(0, 1) = H(1, 0) = H(2, 2) = 1.0;
  return H;
}

Matrix hankel3_point() {
  Matrix X = Matrix::Zero(3, 3);
  X(0, 1) = X(1, 0) = 1.0;
  return X;
}

int demo_hankel3(const CommonFlags& flags, std::ostream& out) {
  out << "Nearest rank-2 Hankel matrix to H = (e2, e1, e3), candidate X = (e2, e1, 0).\n"
      << "Expected: feasible, s = 2, y = 0, F-stationary, beta = 1,\n"
      << "          global minimizer on R_X(Gamma) (convex objective, s = r).\n\n";
  const Problem prob = hankel_problem(hankel3_data(), 2);
  const Certificate c = classify(prob, hankel3_point(), flags.alpha, options_from(flags));
  emit(out, flags, c);
  return exit_code(c);
}

int demo_lrr4(const CommonFlags& flags, std::ostream& out) {
  out << "Low-rank representation with B^i = I, N = 4, r = 2, candidate W = E/4.\n"
      << "Expected: feasible, s = 1 < r, y = -1/4 (all rows), grad L = 0, global minimizer.\n\n";
  const std::vector<Matrix> B(4, Matrix::Identity(4, 4));
  const Problem prob = lrr_problem(B, 2);
  const Certificate c =
      classify(prob, Matrix::Constant(4, 4, 0.25), flags.alpha, options_from(flags));
  emit(out, flags, c);
  return exit_code(c);
}

int demo_cone5x4(std::ostream& out) {
  Matrix X0 = Matrix::Zero(5, 4);
  X0(0, 0) = X0(1, 1) = 1.0;
  Matrix A1 = Matrix::Zero(5, 4);
  Matrix A2 = Matrix::Zero(5, 4);
  A1(0, 0) = 1.0;
  A2(1, 1) = 1.0;
  const AffineSet S(5, 4, {A1, A2}, Vector::Ones(2));
  const Index r = 3;
  const SvdPoint P = SvdPoint::from_factors(X0, Matrix::Identity(5, 5), Matrix::Identity(4, 4));

  out << "5x4 point X0 = e1e1' + e2e2' (top block), constraints X11 = X22 = 1, r = 3,\n"
      << "factors U = I5, V = I4, support {1, 2}.\n";
  const IndependenceCheck rchk = check_assumption(build_TR(P, S).R);
  out << "R-block independence: " << (rchk.independent ? "holds" : "fails")
      << " (sigma_min " << rchk.sigma_min << ")\n";

  Matrix G1 = Matrix::Zero(5, 4);
  Matrix G2 = Matrix::Zero(5, 4);
  Matrix G3 = Matrix::Zero(5, 4);
  G1(2, 3) = 1.0;
  G2(3, 2) = 1.0;
  G3.row(4) << 1.0, -2.0, 0.5, 3.0;
  const std::pair<const char*, Matrix> gens[] = {
      {"e3 e4'", G1}, {"e4 e3'", G2}, {"fifth row u'", G3}};
  bool all_ok = true;
  for (const auto& [name, G] : gens) {
    const FrechetRXrResult res = in_frechet_RXr(P, r, G);
    const double dnorm = res.decomposition.D.diagonal().norm();
    out << "normal-cone generator " << name << ": " << (res.member ? "member" : "not a member")
        << ", |diag(D)| = " << dnorm << ", in T_L: " << (in_tangent_L(S, G) ? "yes" : "no") << "\n";
    all_ok = all_ok && res.member && dnorm == 0.0;
  }
  const Verdict nit = check_normal_in_tangent(P, S, r);
  out << "normal cone of R_X(r) inside T_L: " << to_string(nit) << "\n";
  all_ok = all_ok && rchk.independent && nit == Verdict::holds;
  return all_ok ? kExitStationary : kExitNotStationary;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify stationarity for rank-constrained problems over affine sets"};
  app.require_subcommand(1);
  CommonFlags flags;
  double alpha_value = 0.0;

  auto add_common = [&](CLI::App* sub, bool stationarity_tol) {
    sub->add_option("--report", flags.report, "Report format")
        ->check(CLI::IsMember({"json", "text"}));
    if (stationarity_tol) {
      sub->add_option("--tol", flags.tol, "Stationarity tolerance, scaled by 1 + ||grad f||_F")
          ->check(CLI::PositiveNumber);
    }
    sub->add_option("--rank-tol", flags.rank_tol, "Relative singular-value threshold")
        ->check(CLI::PositiveNumber);
  };

  std::string problem_file;
  std::string point_file;
  auto* certify = app.add_subcommand("certify", "Classify a candidate point");
  certify->add_option("problem", problem_file, "Problem JSON")->required();
  certify->add_option("point", point_file, "Point JSON")->required();
  add_common(certify, true);
  auto* certify_alpha = certify->add_option("--alpha", alpha_value, "Step for the alpha test");

  SolveFlags sf;
  auto* solve = app.add_subcommand("solve", "Run a solver and certify its output");
  solve->add_option("problem", problem_file, "Problem JSON")->required();
  add_common(solve, false);
  solve->add_option("--solver", sf.solver, "ap | alm")->check(CLI::IsMember({"ap", "alm"}));
  auto* solve_alpha = solve->add_option("--alpha", alpha_value, "Step for the alpha test");
  solve->add_option("--rank", sf.rank, "Override the problem's rank bound");
  solve->add_option("--tol", sf.tol, "Solver tolerance")->check(CLI::PositiveNumber);
  solve->add_option("--max-iter", sf.max_iter, "Iteration cap (outer iterations for alm)");
  solve->add_option("--seed", sf.seed, "Seed for the random start; RANKCERTIFY_SEED overrides");
  solve->add_option("--trace", sf.trace, "Write the iteration trace as CSV");
  solve->add_option("--params", sf.params, "Solver parameters as JSON");

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "Run a bundled worked example");
  auto* demo_alpha = demo->add_option("--alpha", alpha_value, "Step for the alpha test");
  demo->add_option("name", demo_name, "hankel3 | lrr4 | example21")
      ->required()
      ->check(CLI::IsMember({"hankel3", "lrr4", "example21"}));
  add_common(demo, true);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (certify->parsed()) {
      if (certify_alpha->count() > 0) flags.alpha = alpha_value;
      return cmd_certify(problem_file, point_file, flags, out);
    }
    if (solve->parsed()) {
      if (solve_alpha->count() > 0) flags.alpha = alpha_value;
      return cmd_solve(problem_file, flags, sf, out);
    }
    if (demo->parsed()) {
      if (demo_alpha->count() > 0) flags.alpha = alpha_value;
      if (demo_name == "hankel3") return demo_hankel3(flags, out);
      if (demo_name == "lrr4") return demo_lrr4(flags, out);
      return demo_cone5x4(out);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InfeasibleSetError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvalidPointError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const SolverAbort& e) {
    err << "solver aborted: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace rankcertify::cli

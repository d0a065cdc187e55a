#include "rankcertify/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "rankcertify/errors.hpp"

namespace rankcertify::io {

namespace {

Json real_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (v == kInfinity) return nullptr;
  if (v == -kInfinity) return "-inf";
  return v;
}

double real_from_json(const Json& j, std::string_view what) {
  if (j.is_null()) return kInfinity;
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    if (s == "-inf") return -kInfinity;
    if (s == "inf") return kInfinity;
  }
  throw InputError(std::string(what) + ": expected a number");
}

const Json& field(const Json& j, const char* key, std::string_view ctx) {
  if (!j.is_object()) throw InputError(std::string(ctx) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(ctx) + ": missing field '" + key + "'");
  return *it;
}

double number(const Json& j, std::string_view ctx) {
  if (!j.is_number()) throw InputError(std::string(ctx) + ": expected a number");
  return j.get<double>();
}

Index integer(const Json& j, std::string_view ctx) {
  if (!j.is_number_integer()) throw InputError(std::string(ctx) + ": expected an integer");
  return j.get<Index>();
}

bool boolean(const Json& j, std::string_view ctx) {
  if (!j.is_boolean()) throw InputError(std::string(ctx) + ": expected true or false");
  return j.get<bool>();
}

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Locate the failing byte as line/column (1-based).
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << source << ": line " << line << ", column " << col << ": malformed JSON";
    throw InputError(os.str());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

Json matrix_to_json(const Matrix& M) {
  Json data = Json::array();
  for (Index i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    data.push_back(std::move(row));
  }
  Json out;
  out["rows"] = M.rows();
  out["cols"] = M.cols();
  out["data"] = std::move(data);
  return out;
}

Matrix matrix_from_json(const Json& j) {
  const Index rows = integer(field(j, "rows", "matrix"), "matrix.rows");
  const Index cols = integer(field(j, "cols", "matrix"), "matrix.cols");
  const Json& data = field(j, "data", "matrix");
  if (rows < 1 || cols < 1) throw InputError("matrix: dimensions must be positive");
  if (!data.is_array() || static_cast<Index>(data.size()) != rows) {
    throw InputError("matrix: 'data' must hold " + std::to_string(rows) + " rows");
  }
  Matrix M(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = data[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw InputError("matrix: row " + std::to_string(i) + " does not have " +
                       std::to_string(cols) + " entries");
    }
    for (Index k = 0; k < cols; ++k) M(i, k) = number(row[static_cast<std::size_t>(k)], "matrix entry");
  }
  if (!M.allFinite()) throw InputError("matrix: non-finite entry");
  return M;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("vector: expected an array");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Index>(i)] = number(j[i], "vector entry");
  return v;
}

Json affine_to_json(const AffineSet& S) {
  Json list = Json::array();
  for (Index i = 0; i < S.size(); ++i) {
    Json c;
    c["A"] = matrix_to_json(S.mats()[i]);
    c["b"] = S.rhs()[i];
    list.push_back(std::move(c));
  }
  Json out;
  out["rows"] = S.rows();
  out["cols"] = S.cols();
  out["constraints"] = std::move(list);
  return out;
}

AffineSet affine_from_json(const Json& j) {
  const Json& list = field(j, "constraints", "affine set");
  if (!list.is_array()) throw InputError("affine set: 'constraints' must be an array");
  std::vector<Matrix> mats;
  Vector rhs(static_cast<Index>(list.size()));
  for (std::size_t i = 0; i < list.size(); ++i) {
    mats.push_back(matrix_from_json(field(list[i], "A", "constraint")));
    rhs[static_cast<Index>(i)] = number(field(list[i], "b", "constraint"), "constraint.b");
  }
  Index rows = 0;
  Index cols = 0;
  if (!mats.empty()) {
    rows = mats.front().rows();
    cols = mats.front().cols();
  } else {
    rows = integer(field(j, "rows", "affine set"), "affine set.rows");
    cols = integer(field(j, "cols", "affine set"), "affine set.cols");
  }
  return AffineSet(rows, cols, std::move(mats), std::move(rhs));
}

Problem problem_from_json(const Json& j) {
  const Json& type_j = field(j, "type", "problem");
  if (!type_j.is_string()) throw InputError("problem.type must be a string");
  const std::string type = type_j.get<std::string>();
  const Json& params = field(j, "params", "problem");
  const Index r = integer(field(j, "rank", "problem"), "problem.rank");

  if (type == "hankel") {
    Matrix H;
    if (params.contains("H")) {
      H = matrix_from_json(params["H"]);
    } else {
      const Vector signal = vector_from_json(field(params, "signal", "hankel params"));
      const Index rows = integer(field(params, "rows", "hankel params"), "hankel params.rows");
      H = hankel_from_signal(signal, rows);
    }
    return hankel_problem(H, r);
  }
  if (type == "lrr") {
    std::vector<Matrix> B;
    if (params.contains("B")) {
      if (!params["B"].is_array()) throw InputError("lrr params.B must be an array of matrices");
      for (const Json& m : params["B"]) B.push_back(matrix_from_json(m));
    } else {
      const Index N = integer(field(params, "N", "lrr params"), "lrr params.N");
      if (N < 2) throw InputError("lrr params.N must be at least 2");
      B.assign(static_cast<std::size_t>(N), Matrix::Identity(N, N));
    }
    return lrr_problem(B, r);
  }
  if (type == "quadratic") {
    const Matrix Q = matrix_from_json(field(params, "Q", "quadratic params"));
    const Matrix C = matrix_from_json(field(params, "C", "quadratic params"));
    Problem p;
    p.objective = quadratic_objective(Q, C);
    if (params.contains("constraints")) {
      Json wrapped = params;
      wrapped["rows"] = C.rows();
      wrapped["cols"] = C.cols();
      p.constraints = affine_from_json(wrapped);
      if (p.constraints.rows() != C.rows() || p.constraints.cols() != C.cols()) {
        throw InputError("quadratic params: constraint shape differs from C");
      }
    } else {
      p.constraints = AffineSet(C.rows(), C.cols());
    }
    if (r < 1 || r >= std::min(C.rows(), C.cols())) {
      throw InputError("quadratic problem: rank bound must satisfy 1 <= r < min(m, n)");
    }
    p.rank = r;
    p.name = "quadratic";
    return p;
  }
  if (type == "diagonal") {
    const Json& a_j = field(params, "a", "diagonal params");
    if (!a_j.is_array()) throw InputError("diagonal params.a must be an array of vectors");
    std::vector<Vector> a;
    for (const Json& v : a_j) a.push_back(vector_from_json(v));
    const Vector b = vector_from_json(field(params, "b", "diagonal params"));
    const Matrix Q = matrix_from_json(field(params, "Q", "diagonal params"));
    const Vector c = vector_from_json(field(params, "c", "diagonal params"));
    return diagonal_problem(a, b, r, vector_quadratic(Q, c));
  }
  throw InputError("unknown problem type '" + type + "'");
}

Matrix point_from_json(const Json& j) {
  if (j.is_object() && j.contains("point")) return matrix_from_json(j["point"]);
  return matrix_from_json(j);
}

ALMParams alm_params_from_json(const Json& j, ALMParams base) {
  if (!j.is_object()) throw InputError("solver params: expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k == "rho") base.rho = number(*it, k);
    else if (k == "rho_growth") base.rho_growth = number(*it, k);
    else if (k == "rho_max") base.rho_max = number(*it, k);
    else if (k == "alpha0") base.alpha0 = number(*it, k);
    else if (k == "max_outer") base.max_outer = static_cast<int>(integer(*it, k));
    else if (k == "max_inner") base.max_inner = static_cast<int>(integer(*it, k));
    else if (k == "tol") base.tol = number(*it, k);
    else throw InputError("solver params: unknown key '" + k + "'");
  }
  return base;
}

Json qualification_to_json(const QualificationReport& q) {
  Json out;
  out["assumption1"] = q.assumption1;
  out["assumption2"] = q.assumption2;
  out["dim_ok_1"] = q.dim_ok_1;
  out["dim_ok_2"] = q.dim_ok_2;
  out["normal_in_tangent"] = std::string(to_string(q.normal_in_tangent));
  out["sigma_min_T"] = real_to_json(q.sigma_min_T);
  out["sigma_min_R"] = real_to_json(q.sigma_min_R);
  return out;
}

QualificationReport qualification_from_json(const Json& j) {
  QualificationReport q;
  q.assumption1 = boolean(field(j, "assumption1", "qualification"), "assumption1");
  q.assumption2 = boolean(field(j, "assumption2", "qualification"), "assumption2");
  q.dim_ok_1 = boolean(field(j, "dim_ok_1", "qualification"), "dim_ok_1");
  q.dim_ok_2 = boolean(field(j, "dim_ok_2", "qualification"), "dim_ok_2");
  q.normal_in_tangent =
      verdict_from_string(field(j, "normal_in_tangent", "qualification").get<std::string>());
  q.sigma_min_T = real_from_json(field(j, "sigma_min_T", "qualification"), "sigma_min_T");
  q.sigma_min_R = real_from_json(field(j, "sigma_min_R", "qualification"), "sigma_min_R");
  return q;
}

Json certificate_to_json(const Certificate& c) {
  Json out;
  out["feasible"] = c.feasible;
  out["feasibility_residual"] = real_to_json(c.feasibility_residual);
  out["rank_s"] = c.rank_s;
  out["multipliers"] = vector_to_json(c.multipliers);
  out["multipliers_unique"] = c.multipliers_unique;
  out["stationary_residual"] = real_to_json(c.stationary_residual);
  out["f_stationary"] = c.f_stationary;
  out["alpha"] = real_to_json(c.alpha);
  out["beta"] = real_to_json(c.beta);
  out["alpha_stationary"] = c.alpha_stationary;
  out["sonc"] = std::string(to_string(c.sonc));
  out["sonc_min_eigenvalue"] = real_to_json(c.sonc_min_eigenvalue);
  out["sosc"] = std::string(to_string(c.sosc));
  out["sosc_min_value"] = real_to_json(c.sosc_min_value);
  out["second_order_partial"] = c.second_order_partial;
  out["sosc_sampled"] = c.sosc_sampled;
  out["global_min_scope"] = std::string(to_string(c.global_min_scope));
  out["qualification"] = qualification_to_json(c.qualification);
  out["notes"] = c.notes;
  return out;
}

Certificate certificate_from_json(const Json& j) {
  auto get = [&](const char* k) -> const Json& { return field(j, k, "certificate"); };
  Certificate c;
  c.feasible = boolean(get("feasible"), "feasible");
  c.feasibility_residual = real_from_json(get("feasibility_residual"), "feasibility_residual");
  c.rank_s = integer(get("rank_s"), "rank_s");
  c.multipliers = vector_from_json(get("multipliers"));
  c.multipliers_unique = boolean(get("multipliers_unique"), "multipliers_unique");
  c.stationary_residual = real_from_json(get("stationary_residual"), "stationary_residual");
  c.f_stationary = boolean(get("f_stationary"), "f_stationary");
  c.alpha = real_from_json(get("alpha"), "alpha");
  c.beta = real_from_json(get("beta"), "beta");
  c.alpha_stationary = boolean(get("alpha_stationary"), "alpha_stationary");
  c.sonc = verdict_from_string(get("sonc").get<std::string>());
  c.sonc_min_eigenvalue = real_from_json(get("sonc_min_eigenvalue"), "sonc_min_eigenvalue");
  c.sosc = verdict_from_string(get("sosc").get<std::string>());
  c.sosc_min_value = real_from_json(get("sosc_min_value"), "sosc_min_value");
  c.second_order_partial = boolean(get("second_order_partial"), "second_order_partial");
  c.sosc_sampled = boolean(get("sosc_sampled"), "sosc_sampled");
  c.global_min_scope = global_scope_from_string(get("global_min_scope").get<std::string>());
  c.qualification = qualification_from_json(get("qualification"));
  const Json& notes = get("notes");
  if (!notes.is_array()) throw InputError("certificate.notes must be an array");
  for (const Json& n : notes) c.notes.push_back(n.get<std::string>());
  return c;
}

std::string certificate_text(const Certificate& c) {
  std::ostringstream os;
  os.precision(6);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  auto real = [](double v) {
    std::ostringstream s;
    s.precision(6);
    if (v == kInfinity) s << "inf";
    else s << v;
    return s.str();
  };
  os << "feasible             " << yn(c.feasible) << " (residual " << real(c.feasibility_residual) << ")\n";
  os << "rank s               " << c.rank_s << "\n";
  os << "multipliers          [";
  for (Index i = 0; i < c.multipliers.size(); ++i) os << (i ? ", " : "") << c.multipliers[i];
  os << "]" << (c.multipliers_unique ? "" : " (minimum-norm, not unique)") << "\n";
  os << "stationary residual  " << real(c.stationary_residual) << "\n";
  os << "F-stationary         " << yn(c.f_stationary) << "\n";
  os << "beta                 " << real(c.beta) << "\n";
  os << "alpha                " << real(c.alpha) << " -> alpha-stationary " << yn(c.alpha_stationary) << "\n";
  os << "second-order nec.    " << to_string(c.sonc) << " (min eigenvalue " << real(c.sonc_min_eigenvalue) << ")\n";
  os << "second-order suff.   " << to_string(c.sosc) << " (min value " << real(c.sosc_min_value) << ")"
     << (c.sosc_sampled ? " [sampled]" : "") << "\n";
  os << "global scope         " << to_string(c.global_min_scope) << "\n";
  const QualificationReport& q = c.qualification;
  os << "qualification        T-blocks " << yn(q.assumption1) << ", R-blocks " << yn(q.assumption2)
     << ", dims " << yn(q.dim_ok_1) << "/" << yn(q.dim_ok_2) << ", normal-in-tangent "
     << to_string(q.normal_in_tangent) << "\n";
  for (const std::string& n : c.notes) os << "note: " << n << "\n";
  return os.str();
}

Json trace_summary_to_json(const SolveTrace& t) {
  Json out;
  out["converged"] = t.converged;
  out["stop_reason"] = std::string(to_string(t.stop_reason));
  out["iterations"] = t.iterates.size();
  out["ambiguity_events"] = t.ambiguity_events;
  if (!t.iterates.empty()) {
    out["final_objective"] = real_to_json(t.iterates.back().objective);
    out["final_feas_residual"] = real_to_json(t.iterates.back().feas_residual);
  }
  if (t.certificate) out["certificate"] = certificate_to_json(*t.certificate);
  return out;
}

}  // namespace rankcertify::io

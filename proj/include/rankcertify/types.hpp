#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <limits>
#include <string_view>

namespace rankcertify {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Outcome of a check that may not apply at the given point.
enum class Verdict { holds, fails, not_applicable };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

}  // namespace rankcertify

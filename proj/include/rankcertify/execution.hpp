#pragma once

#include <cstddef>
#include <vector>

namespace rankcertify {

/// Selects the OpenMP kernel or the serial reference loop. Both visit the
/// same items and must produce identical results.
enum class ExecPolicy { serial, parallel };

inline constexpr ExecPolicy kDefaultPolicy = ExecPolicy::parallel;

/// Conjunction of pred(i) over i in [0, count).
template <typename Pred>
bool all_of_indices(std::size_t count, ExecPolicy policy, Pred&& pred) {
  const auto n = static_cast<long long>(count);
  if (policy == ExecPolicy::serial) {
    for (long long i = 0; i < n; ++i) {
      if (!pred(static_cast<std::size_t>(i))) return false;
    }
    return true;
  }
  bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
  for (long long i = 0; i < n; ++i) {
    ok = ok && pred(static_cast<std::size_t>(i));
  }
  return ok;
}

/// out[i] = fn(i). The result is written by index, so ordering matches the
/// serial loop regardless of scheduling.
template <typename T, typename Fn>
std::vector<T> map_indices(std::size_t count, ExecPolicy policy, Fn&& fn) {
  std::vector<T> out(count);
  const auto n = static_cast<long long>(count);
  if (policy == ExecPolicy::serial) {
    for (long long i = 0; i < n; ++i) out[i] = fn(static_cast<std::size_t>(i));
    return out;
  }
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) out[i] = fn(static_cast<std::size_t>(i));
  return out;
}

}  // namespace rankcertify

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace towercalc::cli {

/// Exit statuses of `run`.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`; usage diagnostics to `err`. Domain errors print their typed name on
/// both streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default cap on q_max when TOWER_CALC_MAX_DEGREE is unset.
inline constexpr int kDefaultMaxDegree = 64;

/// Value of TOWER_CALC_MAX_DEGREE, or kDefaultMaxDegree.
int max_degree_from_env();

}  // namespace towercalc::cli

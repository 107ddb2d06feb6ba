#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monorr::cli {

inline constexpr const char* version = "0.1.0";

enum ExitCode : int {
  ok = 0,
  failure = 1,
  parse_failure = 2,
  not_m_primary_failure = 3,
  bad_ideal_failure = 4,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace monorr::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sagnac {

inline constexpr int k_exit_ok = 0;
inline constexpr int k_exit_config_error = 2;
inline constexpr int k_exit_domain_error = 3;

// Command-line front end; `args` excludes the program name. Returns the
// process exit code: 0 success, 2 configuration error, 3 numerical domain
// error.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace sagnac

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilhyp {

/// Command-line front end. `args` excludes the program name. Exit codes:
/// 0 success or verified, 1 verification failed or search exhausted, 2 usage
/// or input error.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nilhyp

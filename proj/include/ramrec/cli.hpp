#ifndef RAMREC_CLI_HPP
#define RAMREC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ramrec {

// Exit codes: 0 success, 1 check failure, 2 validation error, 3 parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramrec

#endif

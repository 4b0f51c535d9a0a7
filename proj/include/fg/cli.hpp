#ifndef FG_CLI_HPP_
#define FG_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace fg::cli {

// Runs one CLI invocation. args excludes the program name.
// Exit codes: 0/1 for predicates (true/false), 0 for other successful
// commands, 2 for usage or input errors, 3 for internal inconsistencies.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fg::cli

#endif  // FG_CLI_HPP_

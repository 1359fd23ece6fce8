#ifndef LANDAU_CLI_HPP
#define LANDAU_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace landau::cli {

// Runs one subcommand. Exit codes: 0 success, 1 domain/validation error
// (diagnostic on err), 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace landau::cli

#endif

#ifndef TVMIN_TOOLS_CLI_H_
#define TVMIN_TOOLS_CLI_H_

#include <iosfwd>
#include <span>
#include <string>

namespace tvmin::cli {

// Entry point of the `tvmin` tool with subcommands generate, cluster, sweep
// and analyze. Returns the process exit code: 0 on success, 1 for usage
// errors, 2 for validation or I/O errors, 3 for anything unexpected.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tvmin::cli

#endif  // TVMIN_TOOLS_CLI_H_

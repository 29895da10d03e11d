// Command-line front end. Every subcommand is deterministic: fixed inputs
// produce byte-identical output.
#ifndef SYMCOX_CLI_HPP
#define SYMCOX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace symcox::cli {

/// Runs one invocation. Returns 0 on success, 1 on validation/usage errors,
/// 2 when a verification subcommand reports failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symcox::cli

#endif

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cliff::tools {

struct CommandInfo {
  std::string_view name;
  std::string_view summary;
  /// Library operations the command exposes, as "module.operation".
  std::vector<std::string_view> operations;
};

const std::vector<CommandInfo>& command_table();

/// Runs one invocation; args excludes the program name.
/// Returns 0 on success, 1 on a domain error or failed check, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliff::tools

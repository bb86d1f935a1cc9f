#ifndef BASKETCHEF_CLI_H_
#define BASKETCHEF_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace basketchef {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

// Entry point of the basketchef command. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace basketchef

#endif  // BASKETCHEF_CLI_H_

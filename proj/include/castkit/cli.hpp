#ifndef CASTKIT_CLI_HPP
#define CASTKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace castkit {

// Exit codes: 0 value, 1 parse error, 2 type error, 3 blame, 4 timeout,
// 5 space-bound violation.
enum ExitCode {
  kExitValue = 0,
  kExitParseError = 1,
  kExitTypeError = 2,
  kExitBlame = 3,
  kExitTimeout = 4,
  kExitBoundViolation = 5,
};

// Default fuel, overridable through CASTKIT_FUEL.
int default_fuel();

int cmd_run(const std::string& source, const std::string& calculus, const std::string& variant,
            int fuel, bool trace, std::ostream& out, std::ostream& err);

int cmd_measure(const std::string& source, const std::string& calculus, int fuel,
                std::ostream& out, std::ostream& err);

int cmd_diff(const std::string& source, const std::vector<std::string>& calculi, int fuel,
             std::ostream& out, std::ostream& err);

}  // namespace castkit

#endif  // CASTKIT_CLI_HPP

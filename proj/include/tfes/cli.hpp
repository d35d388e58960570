#ifndef TFES_CLI_HPP
#define TFES_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tfes {

// Exit codes of the command-line driver.
namespace exit_code {
inline constexpr int ok = 0;      // success / YES
inline constexpr int no = 1;      // solver or verifier answered NO
inline constexpr int usage = 2;   // bad command line
inline constexpr int input = 3;   // unreadable or malformed input
inline constexpr int guard = 4;   // enumeration guard tripped
}  // namespace exit_code

// The whole driver behind the `tfes` binary, callable in-process.
// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tfes

#endif

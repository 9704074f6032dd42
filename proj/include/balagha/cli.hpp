#ifndef BALAGHA_CLI_HPP
#define BALAGHA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace balagha::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // validation or document format errors
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace balagha::cli

#endif  // BALAGHA_CLI_HPP

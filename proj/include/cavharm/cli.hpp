// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with captured streams.
#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cavharm/cavity.hpp"

namespace cavharm::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Bad command-line input; maps to exit code 1.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arithmetic over numbers, `pi`, named variables, + - * / ^, unary minus,
/// parentheses and sqrt(). Throws UsageError quoting the offending token.
[[nodiscard]] double evaluate(std::string_view expr, const std::map<std::string, double>& vars = {});

/// "Lx,Ly,Lz", each an expression.
[[nodiscard]] CavityGeometry parse_geometry(std::string_view text);

/// "TE011", "TM110", "TE:n=1,p=0,q=1,F0=2", "TM011:F0=2", "1D:n=2,alpha=0.5".
[[nodiscard]] ModeSpec parse_mode(std::string_view text);

/// Signal indices "130" or "1,3,0".
[[nodiscard]] std::array<int, 3> parse_indices(std::string_view text);

/// args[0] is the program name. Returns the exit code: 0 success, 1 usage,
/// 2 computation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cavharm::cli

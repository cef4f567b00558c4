#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbl::cli {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitDomain = 65;
inline constexpr int kExitResource = 69;

// args excludes the program name.
auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int;

}  // namespace rbl::cli

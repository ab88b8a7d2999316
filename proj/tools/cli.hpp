#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpg::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kNoCertificate = 2;
inline constexpr int kContradiction = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpg::cli

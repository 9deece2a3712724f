#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewpath::cli {

// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

// args excludes the program name. Output goes to `out` as one JSON document
// (or CSV/plain text when asked for); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewpath::cli

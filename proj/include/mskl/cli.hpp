#pragma once

// Command-line front door: parses permutations, dispatches the analyses, and
// renders reports as stable JSON envelopes, ASCII grids, or DOT graphs.
//
// Exit codes: 0 success, 1 domain error (e.g. the pair is not ordered, or a
// verification sweep found a counterexample), 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace mskl {

// Runs one invocation.  `args` excludes the program name.  All regular
// output goes to `out` (or the file named by --out), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Convenience overload for main().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mskl

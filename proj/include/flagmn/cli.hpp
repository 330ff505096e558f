#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagmn::cli {

// Exit codes: 0 success, 1 verification failure or fixture mismatch, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Output of `reproduce <name>`, computed from the library.
std::string reproduce_text(const std::string& name);
// FLAGMN_FIXTURES, else the bundled fixture directory.
std::string fixture_dir();

}  // namespace flagmn::cli

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

namespace quasi::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInvalidInput = 2,
    kMismatch = 3,
};

/// Entry point of the `quasi` tool, with output streams injected.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Printable ASCII is kept; every other byte becomes \xHH.
std::string escape(std::string_view bytes);

} // namespace quasi::cli

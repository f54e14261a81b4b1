#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xdt::cli {

inline constexpr const char* kVersion = "0.1.0";

enum Exit : int { Ok = 0, Diagnostics = 1, Usage = 2 };

/// Entry point behind the `xdt` executable. `args` excludes the program
/// name. Artifacts go to `out`, diagnostics to `err`. `errIsTerminal`
/// decides styling when XDT_COLOR is unset or `auto`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool errIsTerminal = false);

/// The `-- expect: TYPE` header of a demo program, if present before the
/// first line of code.
std::string expected_type_header(const std::string& source, bool& found);

}  // namespace xdt::cli

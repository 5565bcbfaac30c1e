#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcdg {

/// Run one command; args excludes the program name. Payload goes to `out`
/// (or the --out file), diagnostics to `err`. Returns the process exit code:
/// 0 success, 1 validation or verification failure (with the witness),
/// 2 malformed input or usage.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mcdg

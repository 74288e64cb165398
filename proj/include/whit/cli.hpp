#pragma once

namespace whit {

// Entry point for the whit binary.  Exit codes: 0 success, 2 validation or
// usage error, 3 resource limit hit, 4 theorem check failure.
int cli_run(int argc, const char* const* argv);

}  // namespace whit

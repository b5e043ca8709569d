#pragma once

#include <ostream>

namespace wzaccel {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,         // verification or identity failure, inconclusive check
  kExitInapplicable = 2,   // inapplicable identity, undefined term, no convergence
  kExitBadInput = 3,       // usage, parse or schema error
};

/// Entry point of the wzaccel tool, with the streams injectable for tests.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wzaccel

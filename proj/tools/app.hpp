#pragma once

#include <ostream>

namespace halfstat::cli {

/// Full command dispatch. Returns the process exit code:
/// 0 success, 2 usage error, 3 validation/invariance/exclusion failure.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace halfstat::cli

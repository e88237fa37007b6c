#pragma once

#include <vector>

#include "ideal24/pipeline.hpp"

namespace ideal24 {

/// Oracle table build plus the invariant suites that need no input files.
std::vector<CheckResult> run_selftest();

}  // namespace ideal24

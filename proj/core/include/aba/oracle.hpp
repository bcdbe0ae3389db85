#pragma once

#include <vector>

#include "aba/framework.hpp"

namespace aba {

/// Brute-force test oracle: enumerates every deduction tree for phi up to the
/// depth cap by explicit top-down expansion and returns the exact
/// assumption-leaf sets, sorted ascending. Independent of the fixed-point
/// support computation; only meant to validate it.
std::vector<AssumptionSet> derivation_oracle(const Framework& f, SentenceId phi, int depth_cap,
                                             const Limits& limits = {});

}  // namespace aba

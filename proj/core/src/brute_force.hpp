#pragma once

#include "chromstab/graph.hpp"

namespace chromstab::detail {

// Scans all k^n color vectors of g. Shares no code with the DSATUR solver;
// the oracles are built on it.
bool brute_force_colorable(const Graph& g, int k);

// Smallest k accepted by brute_force_colorable.
int brute_force_chromatic_number(const Graph& g);

}  // namespace chromstab::detail

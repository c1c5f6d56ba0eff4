#pragma once

#include "sturmpart/towers.hpp"

namespace sturmpart {

// Side-by-side ASCII boxes for the two towers forming P^{r_k-1}: one box row
// per level, top level first, bases aligned on the bottom row. Levels are
// annotated with their endpoints <i> and, when a partition is given, with
// that partition's code letter.
std::string render_towers_ascii(const TowerPair& pair, const LabeledPartition* code_partition,
                                const Limits& limits = default_limits());

} // namespace sturmpart

#pragma once

#include <cstdint>
#include <vector>

namespace popsynth {

// Largest-remainder apportionment: distributes `total` units proportionally to
// `weights`, exactly. Zero total weight falls back to equal shares. Ties on
// remainders break toward the lower index, so results are deterministic.
// apportion(c, sum(c)) returns c unchanged.
std::vector<std::int64_t> apportion(const std::vector<double>& weights,
                                    std::int64_t total);

// Proportional rescale of non-negative integer counts to a new exact total.
std::vector<std::int64_t> rescale_counts(const std::vector<std::int64_t>& counts,
                                         std::int64_t total);

// Rescale with per-entry floors: entries scale proportionally but never drop
// below floor[i]. Requires total >= sum(floors) and counts[i] >= floor[i].
std::vector<std::int64_t> rescale_with_floors(const std::vector<std::int64_t>& counts,
                                              const std::vector<std::int64_t>& floors,
                                              std::int64_t total);

} // namespace popsynth

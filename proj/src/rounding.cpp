#include "popsynth/rounding.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace popsynth {

std::vector<std::int64_t> apportion(const std::vector<double>& weights,
                                    std::int64_t total) {
  const std::size_t n = weights.size();
  std::vector<std::int64_t> out(n, 0);
  if (n == 0 || total <= 0) return out;

  long double weight_sum = 0.0L;
  for (double w : weights) weight_sum += std::max(0.0, w);

  std::vector<long double> quota(n, 0.0L);
  if (weight_sum <= 0.0L) {
    for (auto& q : quota) q = static_cast<long double>(total) / n;
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      quota[i] = std::max(0.0, weights[i]) / weight_sum * total;
    }
  }

  std::int64_t assigned = 0;
  std::vector<std::pair<long double, std::size_t>> remainders;
  remainders.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(std::floor(quota[i]));
    assigned += out[i];
    remainders.emplace_back(quota[i] - out[i], i);
  }

  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  std::int64_t leftover = total - assigned;
  std::size_t cursor = 0;
  while (leftover > 0) {
    out[remainders[cursor].second] += 1;
    --leftover;
    cursor = (cursor + 1) % n;
  }
  // Floating-point slack can in principle overshoot; take back from the
  // smallest remainders.
  cursor = n;
  while (leftover < 0) {
    --cursor;
    if (out[remainders[cursor % n].second] > 0) {
      out[remainders[cursor % n].second] -= 1;
      ++leftover;
    }
    if (cursor == 0) cursor = n;
  }
  return out;
}

std::vector<std::int64_t> rescale_counts(const std::vector<std::int64_t>& counts,
                                         std::int64_t total) {
  const std::int64_t sum = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  if (sum == total) return counts;
  std::vector<double> weights(counts.begin(), counts.end());
  return apportion(weights, total);
}

std::vector<std::int64_t> rescale_with_floors(const std::vector<std::int64_t>& counts,
                                              const std::vector<std::int64_t>& floors,
                                              std::int64_t total) {
  assert(counts.size() == floors.size());
  const std::size_t n = counts.size();
  const std::int64_t sum = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  const std::int64_t floor_sum =
      std::accumulate(floors.begin(), floors.end(), std::int64_t{0});
  if (total < floor_sum) {
    throw std::invalid_argument("rescale_with_floors: total below floor sum");
  }
  if (sum == total) return counts;

  // Entries clamp to their floor when proportional scaling would dip under it;
  // re-solve on the rest until stable.
  std::vector<bool> clamped(n, false);
  std::vector<long double> value(n, 0.0L);
  while (true) {
    std::int64_t clamped_total = 0;
    long double active_weight = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      if (clamped[i]) {
        clamped_total += floors[i];
      } else {
        active_weight += static_cast<long double>(counts[i]);
      }
    }
    const std::int64_t active_target = total - clamped_total;
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (clamped[i]) {
        value[i] = static_cast<long double>(floors[i]);
        continue;
      }
      value[i] = active_weight > 0.0L
                     ? counts[i] / active_weight * active_target
                     : static_cast<long double>(active_target) /
                           std::max<std::size_t>(1, n);
      if (value[i] < static_cast<long double>(floors[i])) {
        clamped[i] = true;
        changed = true;
      }
    }
    if (!changed) break;
  }

  // Integerize the active entries by largest remainder.
  std::vector<std::int64_t> out(n, 0);
  std::int64_t remaining = total;
  std::vector<double> weights(n, 0.0);
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i) {
    if (clamped[i]) {
      out[i] = floors[i];
      remaining -= floors[i];
    } else {
      active.push_back(i);
    }
  }
  std::vector<double> active_weights;
  active_weights.reserve(active.size());
  for (std::size_t i : active) active_weights.push_back(static_cast<double>(counts[i]));
  const auto shares = apportion(active_weights, remaining);
  for (std::size_t k = 0; k < active.size(); ++k) out[active[k]] = shares[k];
  return out;
}

} // namespace popsynth

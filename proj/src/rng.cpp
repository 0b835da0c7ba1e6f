#include "popsynth/rng.hpp"

#include <cassert>

namespace popsynth {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view key) {
  std::uint64_t h = 0xcbf29ce484222325ULL; // FNV offset basis
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(global_seed ^ splitmix64(h));
}

std::size_t Rng::uniform(std::size_t n) {
  assert(n > 0);
  if (n == 1) return 0;
  const std::uint64_t bound = n;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = gen_();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % bound);
}

double Rng::uniform_real() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::weighted(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w > 0.0 ? w : 0.0;
  assert(total > 0.0);
  double target = uniform_real() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i] > 0.0 ? weights[i] : 0.0;
    if (target < w) return i;
    target -= w;
  }
  // Rounding slack: return the last positive-weight index.
  for (std::size_t i = weights.size(); i > 0; --i) {
    if (weights[i - 1] > 0.0) return i - 1;
  }
  return 0;
}

std::size_t Rng::weighted_counts(const std::vector<std::int64_t>& counts) {
  std::int64_t total = 0;
  for (auto c : counts) total += c > 0 ? c : 0;
  assert(total > 0);
  std::int64_t target = static_cast<std::int64_t>(uniform_real() * static_cast<double>(total));
  if (target >= total) target = total - 1;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const std::int64_t c = counts[i] > 0 ? counts[i] : 0;
    if (target < c) return i;
    target -= c;
  }
  for (std::size_t i = counts.size(); i > 0; --i) {
    if (counts[i - 1] > 0) return i - 1;
  }
  return 0;
}

} // namespace popsynth

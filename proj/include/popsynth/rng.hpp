#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace popsynth {

// Stream seed for one SA2, independent of task scheduling: FNV-1a over the
// area code folded into the global seed, then scrambled.
std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view key);

// mt19937_64 with hand-rolled draw helpers. std:: distributions are
// implementation-defined, which would break the byte-identical-output
// contract across toolchains; these are not.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform integer in [0, n), unbiased via rejection.
  std::size_t uniform(std::size_t n);

  // Uniform in [0, 1).
  double uniform_real();

  bool bernoulli(double p) { return uniform_real() < p; }

  // Index drawn proportionally to non-negative weights; total must be > 0.
  std::size_t weighted(const std::vector<double>& weights);
  std::size_t weighted_counts(const std::vector<std::int64_t>& counts);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[uniform(i)]);
    }
  }

private:
  std::mt19937_64 gen_;
};

} // namespace popsynth

#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace narrowpass {

// splitmix64; used to derive independent sub-stream seeds from one master seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return mix_seed(base ^ mix_seed(stream));
}

// mt19937_64 with hand-rolled draw methods. std::uniform_*_distribution is
// implementation-defined, which would break byte-identical reproducibility
// across standard libraries; these are pinned.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : gen_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // {lo, ..., hi} inclusive
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo) + 1));
  }

  // {0, ..., n-1}, unbiased via rejection
  std::size_t index(std::size_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

  // Draw from an unnormalized discrete distribution.
  std::size_t discrete(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = uniform() * total;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      u -= weights[i];
      if (u < 0.0) return i;
    }
    return weights.size() - 1;
  }

  // Independent generator for sub-stream `stream`, reproducible from the seed
  // this Rng was constructed with (not from its current position).
  Rng derive(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

 private:
  std::mt19937_64 gen_;
  std::uint64_t seed_;
};

}  // namespace narrowpass

#pragma once

#include <cstdint>
#include <random>

namespace weil {

/// Deterministic uniform sampling on top of mt19937_64. Doubles are
/// derived from the top 53 bits directly so that streams are reproducible
/// independent of the standard library's distribution internals.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Uniform integer in [0, n).
    int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

  private:
    std::mt19937_64 gen_;
};

}  // namespace weil

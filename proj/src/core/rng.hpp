#pragma once

#include <cstdint>
#include <random>

namespace convexo {

// Seeded generator with platform-independent uniform draws. The standard
// distributions are implementation-defined, so sampling is done from raw
// mt19937_64 output to keep `--seed` runs bit-identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : bits() % n; }

  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace convexo

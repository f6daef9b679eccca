#pragma once

#include <cstdint>
#include <random>

namespace spanbound {

// splitmix64 finalizer; used to derive per-instance seeds from a master seed.
constexpr std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic across standard libraries: mt19937_64 output is fully specified,
// and bounded draws avoid the implementation-defined distribution classes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform in [0, n); n > 0
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  // uniform in [lo, hi]
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (engine_() >> 17) & 1U; }

 private:
  std::mt19937_64 engine_;
};

// Bounds for sample_element: polynomial degrees, group-algebra support sizes,
// and numerator/denominator magnitudes for rational coefficients.
struct SizeBudget {
  int degree = 2;
  int support = 3;
  int coeff = 3;
};

}  // namespace spanbound

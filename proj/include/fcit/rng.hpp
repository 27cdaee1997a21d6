#ifndef FCIT_RNG_HPP
#define FCIT_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "fcit/config.hpp"

namespace fcit {

/// Deterministic uniform double generator. Avoids std::uniform_real_distribution,
/// whose output is implementation-defined; the 53-bit scaling below produces
/// the same stream on every platform for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n).
  std::int64_t uniform_int(std::int64_t n) {
    auto v = static_cast<std::int64_t>(uniform01() * static_cast<double>(n));
    return v < n ? v : n - 1;
  }

 private:
  std::mt19937_64 gen_;
};

/// 64-bit FNV-1a, used to derive stable per-trial seeds from strings.
/// std::hash is implementation-defined and unsuitable for reproducible runs.
std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull);

/// splitmix64 finalizer; mixes raw values into well-distributed seeds.
std::uint64_t mix64(std::uint64_t x);

enum class SamplerKind { kPseudorandom, kHalton };

/// Deterministic low-discrepancy sequence: radical inverse in the first d
/// prime bases. The index persists across calls so that consecutive requests
/// continue one stream.
class HaltonSequence {
 public:
  explicit HaltonSequence(int dim);

  /// Next point scaled into the bounds; advances the stream.
  void next(const Bounds& bounds, std::span<double> out);
  std::uint64_t index() const { return index_; }

 private:
  std::vector<int> bases_;
  std::uint64_t index_ = 1;  // index 0 would yield the all-zero corner
};

}  // namespace fcit

#endif  // FCIT_RNG_HPP

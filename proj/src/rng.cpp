#include "fcit/rng.hpp"

namespace fcit {

std::uint64_t fnv1a64(std::string_view s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

namespace {

std::vector<int> first_primes(int n) {
  std::vector<int> primes;
  int candidate = 2;
  while (static_cast<int>(primes.size()) < n) {
    bool prime = true;
    for (int p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
    ++candidate;
  }
  return primes;
}

double radical_inverse(std::uint64_t i, int base) {
  double inv_base = 1.0 / base;
  double f = inv_base;
  double r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % static_cast<std::uint64_t>(base));
    i /= static_cast<std::uint64_t>(base);
    f *= inv_base;
  }
  return r;
}

}  // namespace

HaltonSequence::HaltonSequence(int dim) : bases_(first_primes(dim)) {
  if (dim < 1) throw ContractViolation("halton: dimension must be >= 1");
}

void HaltonSequence::next(const Bounds& bounds, std::span<double> out) {
  if (out.size() != bases_.size()) throw ContractViolation("halton: dimension mismatch");
  for (std::size_t c = 0; c < bases_.size(); ++c) {
    const double u = radical_inverse(index_, bases_[c]);
    out[c] = bounds.lower[c] + (bounds.upper[c] - bounds.lower[c]) * u;
  }
  ++index_;
}

}  // namespace fcit

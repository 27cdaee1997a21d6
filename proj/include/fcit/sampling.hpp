#ifndef FCIT_SAMPLING_HPP
#define FCIT_SAMPLING_HPP

#include <optional>

#include "fcit/block.hpp"
#include "fcit/rng.hpp"
#include "fcit/sample_store.hpp"

namespace fcit {

inline constexpr int kDefaultRejectionBudgetPerSample = 10000;

/// Owns the random stream for one planner run. Candidate generation order is
/// independent of how candidates are grouped into validation blocks, so the
/// first k accepted samples of repeated calls equal the first k of one large
/// call.
class SamplerState {
 public:
  SamplerState(SamplerKind kind, std::uint64_t seed, int dim)
      : kind_(kind), rng_(seed), halton_(dim) {}

  SamplerKind kind() const { return kind_; }
  Rng& rng() { return rng_; }
  void next_candidate(const Bounds& bounds, std::span<double> out);

 private:
  SamplerKind kind_;
  Rng rng_;
  HaltonSequence halton_;
};

/// Draws exactly n valid configurations by rejection sampling and appends
/// them to the store; returns their ids in append order. Candidates are
/// validated in blocks of the store's width. Throws SamplingStarved once
/// attempt_budget_per_sample * n candidates have been generated without
/// producing n valid ones.
std::vector<SampleId> sample_batch(SampleStore& store, int n, SamplerState& sampler,
                                   const StateValidity& validity, const Bounds& bounds,
                                   int attempt_budget_per_sample = kDefaultRejectionBudgetPerSample,
                                   long long* states_checked = nullptr);

}  // namespace fcit

#endif  // FCIT_SAMPLING_HPP

#include "fcit/sampling.hpp"

namespace fcit {

void SamplerState::next_candidate(const Bounds& bounds, std::span<double> out) {
  if (kind_ == SamplerKind::kHalton) {
    halton_.next(bounds, out);
    return;
  }
  for (std::size_t c = 0; c < out.size(); ++c) {
    out[c] = rng_.uniform(bounds.lower[c], bounds.upper[c]);
  }
}

std::vector<SampleId> sample_batch(SampleStore& store, int n, SamplerState& sampler,
                                   const StateValidity& validity, const Bounds& bounds,
                                   int attempt_budget_per_sample, long long* states_checked) {
  if (n < 1) throw ContractViolation("sample_batch: n must be >= 1");
  bounds.validate();
  if (bounds.dim() != store.dim()) throw ContractViolation("sample_batch: bounds dimension mismatch");

  const long long budget = static_cast<long long>(attempt_budget_per_sample) * n;
  long long attempts = 0;

  std::vector<SampleId> ids;
  ids.reserve(static_cast<std::size_t>(n));
  ValidationBlock block(store.dim(), store.block_width());
  std::vector<double> lane(static_cast<std::size_t>(store.dim()));

  while (static_cast<int>(ids.size()) < n) {
    const int needed = n - static_cast<int>(ids.size());
    const int round = needed < store.block_width() ? needed : store.block_width();
    block.clear();
    for (int i = 0; i < round && attempts < budget; ++i) {
      sampler.next_candidate(bounds, lane);
      block.push(lane);
      ++attempts;
    }
    if (block.occupancy() == 0) break;
    const std::uint32_t mask = validity.valid_mask(block);
    if (states_checked) *states_checked += block.occupancy();
    for (int l = 0; l < block.occupancy(); ++l) {
      if (mask & (1u << l)) {
        block.copy_lane(l, lane);
        ids.push_back(store.append(lane));
      }
    }
  }
  if (static_cast<int>(ids.size()) < n) {
    // Samples already appended stay in the store (append-only); the caller
    // still learns how far the batch got.
    throw SamplingStarved("sampling starved: attempt budget exceeded", attempts,
                          static_cast<long long>(ids.size()));
  }
  return ids;
}

}  // namespace fcit

#ifndef FCIT_SAMPLE_STORE_HPP
#define FCIT_SAMPLE_STORE_HPP

#include <span>
#include <vector>

#include "fcit/block.hpp"
#include "fcit/config.hpp"

namespace fcit {

/// Append-only store of all valid sampled configurations, addressed by id.
/// Coordinates are laid out block-aligned: any W consecutive samples can be
/// read as W parallel lanes per coordinate. Ids are never reused or
/// reordered. By convention id 0 is the start, ids 1..|goals| are the goals,
/// and sampled states follow.
class SampleStore {
 public:
  explicit SampleStore(int dim, int block_width = kDefaultBlockWidth);

  int dim() const { return dim_; }
  int block_width() const { return width_; }
  SampleId size() const { return count_; }

  SampleId append(std::span<const double> q);
  SampleId append(const Config& q) { return append(q.view()); }

  double coord(SampleId id, int c) const {
    return data_[block_base(id / width_, c) + static_cast<std::size_t>(id % width_)];
  }
  Config config(SampleId id) const;
  void copy_config(SampleId id, std::span<double> out) const;

  double distance(SampleId a, SampleId b) const;
  double distance_to(SampleId a, std::span<const double> q) const;

  int block_count() const { return count_ == 0 ? 0 : (count_ - 1) / width_ + 1; }
  int block_occupancy(int block) const;
  /// Pointer to the W contiguous lane values of coordinate c in a block.
  const double* block_lane_values(int block, int c) const { return data_.data() + block_base(block, c); }

 private:
  std::size_t block_base(int block, int c) const {
    return (static_cast<std::size_t>(block) * dim_ + c) * width_;
  }

  int dim_;
  int width_;
  SampleId count_ = 0;
  std::vector<double> data_;
};

/// Ids of the goal states within a store; fixed at problem setup.
struct GoalSet {
  std::vector<SampleId> ids;

  bool empty() const { return ids.empty(); }
};

/// Admissible cost-to-go estimate: minimum straight-line distance from q to
/// any goal. Exact for a direct valid segment.
double heuristic_cost_to_go(std::span<const double> q, const GoalSet& goals, const SampleStore& store);
inline double heuristic_cost_to_go(const Config& q, const GoalSet& goals, const SampleStore& store) {
  return heuristic_cost_to_go(q.view(), goals, store);
}

}  // namespace fcit

#endif  // FCIT_SAMPLE_STORE_HPP

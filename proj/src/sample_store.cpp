#include "fcit/sample_store.hpp"

#include <cmath>

namespace fcit {

SampleStore::SampleStore(int dim, int block_width) : dim_(dim), width_(block_width) {
  if (dim < 1) throw ContractViolation("store: dimension must be >= 1");
  if (!is_power_of_two(block_width)) throw ContractViolation("store: block width must be a power of two");
}

SampleId SampleStore::append(std::span<const double> q) {
  if (static_cast<int>(q.size()) != dim_) throw ContractViolation("store: dimension mismatch");
  for (double v : q) {
    if (!std::isfinite(v)) throw ContractViolation("store: coordinates must be finite");
  }
  const SampleId id = count_;
  if (id % width_ == 0) {
    data_.resize(data_.size() + static_cast<std::size_t>(dim_) * width_, 0.0);
  }
  const int block = id / width_;
  const int lane = id % width_;
  for (int c = 0; c < dim_; ++c) {
    data_[block_base(block, c) + lane] = q[static_cast<std::size_t>(c)];
  }
  ++count_;
  return id;
}

Config SampleStore::config(SampleId id) const {
  Config out;
  out.coords.resize(static_cast<std::size_t>(dim_));
  copy_config(id, out.coords);
  return out;
}

void SampleStore::copy_config(SampleId id, std::span<double> out) const {
  for (int c = 0; c < dim_; ++c) {
    out[static_cast<std::size_t>(c)] = coord(id, c);
  }
}

double SampleStore::distance(SampleId a, SampleId b) const {
  double d2 = 0.0;
  for (int c = 0; c < dim_; ++c) {
    const double e = coord(b, c) - coord(a, c);
    d2 += e * e;
  }
  return std::sqrt(d2);
}

double SampleStore::distance_to(SampleId a, std::span<const double> q) const {
  double d2 = 0.0;
  for (int c = 0; c < dim_; ++c) {
    const double e = q[static_cast<std::size_t>(c)] - coord(a, c);
    d2 += e * e;
  }
  return std::sqrt(d2);
}

int SampleStore::block_occupancy(int block) const {
  const SampleId begin = static_cast<SampleId>(block) * width_;
  const SampleId left = count_ - begin;
  return left >= width_ ? width_ : static_cast<int>(left);
}

double heuristic_cost_to_go(std::span<const double> q, const GoalSet& goals, const SampleStore& store) {
  if (goals.empty()) throw ContractViolation("heuristic: empty goal set");
  double best = kInf;
  for (SampleId g : goals.ids) {
    const double d = store.distance_to(g, q);
    if (d < best) best = d;
  }
  return best;
}

}  // namespace fcit

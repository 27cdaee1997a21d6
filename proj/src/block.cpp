#include "fcit/block.hpp"

namespace fcit {

ValidationBlock::ValidationBlock(int dim, int width) : dim_(dim), width_(width) {
  if (dim < 1) throw ContractViolation("block: dimension must be >= 1");
  if (!is_power_of_two(width)) throw ContractViolation("block: width must be a power of two");
  data_.assign(static_cast<std::size_t>(dim) * width, 0.0);
}

int ValidationBlock::push(std::span<const double> q) {
  if (static_cast<int>(q.size()) != dim_) throw ContractViolation("block: dimension mismatch");
  if (occupancy_ >= width_) throw ContractViolation("block: full");
  const int lane = occupancy_++;
  for (int c = 0; c < dim_; ++c) {
    data_[static_cast<std::size_t>(c) * width_ + lane] = q[static_cast<std::size_t>(c)];
  }
  return lane;
}

void ValidationBlock::copy_lane(int lane, std::span<double> out) const {
  for (int c = 0; c < dim_; ++c) {
    out[static_cast<std::size_t>(c)] = coord(lane, c);
  }
}

std::uint32_t StateValidity::valid_mask(const ValidationBlock& block) const {
  std::uint32_t mask = 0;
  std::vector<double> lane(static_cast<std::size_t>(block.dim()));
  for (int l = 0; l < block.occupancy(); ++l) {
    block.copy_lane(l, lane);
    if (is_valid(lane)) mask |= 1u << l;
  }
  return mask;
}

}  // namespace fcit

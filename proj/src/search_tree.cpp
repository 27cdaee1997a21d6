#include "fcit/search_tree.hpp"

#include <algorithm>
#include <cmath>

namespace fcit {

SearchTree::SearchTree(SampleId root) : root_(root) {
  if (root < 0) throw ContractViolation("tree: invalid root id");
  ensure_capacity(root + 1);
  in_tree_[static_cast<std::size_t>(root)] = 1;
  g_[static_cast<std::size_t>(root)] = 0.0;
  num_vertices_ = 1;
}

void SearchTree::ensure_capacity(SampleId count) {
  if (count <= static_cast<SampleId>(g_.size())) return;
  const auto n = static_cast<std::size_t>(count);
  parent_.resize(n, kNoSample);
  g_.resize(n, kInf);
  edge_cost_.resize(n, 0.0);
  in_tree_.resize(n, 0);
  children_.resize(n);
}

std::span<const SampleId> SearchTree::children(SampleId id) const {
  if (id < 0 || id >= static_cast<SampleId>(children_.size())) return {};
  return children_[static_cast<std::size_t>(id)];
}

void SearchTree::insert(SampleId child, SampleId parent, double edge_cost) {
  ensure_capacity(std::max(child, parent) + 1);
  if (!contains(parent)) throw ContractViolation("tree insert: parent not in tree");
  if (contains(child)) throw ContractViolation("tree insert: child already in tree");
  if (!(edge_cost >= 0.0)) throw ContractViolation("tree insert: negative edge cost");
  in_tree_[static_cast<std::size_t>(child)] = 1;
  parent_[static_cast<std::size_t>(child)] = parent;
  edge_cost_[static_cast<std::size_t>(child)] = edge_cost;
  g_[static_cast<std::size_t>(child)] = g_[static_cast<std::size_t>(parent)] + edge_cost;
  children_[static_cast<std::size_t>(parent)].push_back(child);
  ++num_vertices_;
}

bool SearchTree::is_ancestor(SampleId ancestor, SampleId id) const {
  for (SampleId v = id; v != kNoSample; v = parent(v)) {
    if (v == ancestor) return true;
  }
  return false;
}

std::vector<SampleId> SearchTree::rewire(SampleId parent, SampleId child, double edge_cost) {
  if (!contains(parent)) throw ContractViolation("rewire: parent not in tree");
  if (!contains(child)) throw ContractViolation("rewire: child not in tree");
  if (child == root_) throw ContractViolation("rewire: cannot reparent the root");
  if (is_ancestor(child, parent)) {
    throw ContractViolation("rewire: parent is a descendant of child");
  }
  if (!(g(parent) + edge_cost < g(child))) {
    throw ContractViolation("rewire: not a strict improvement");
  }

  const SampleId old_parent = parent_[static_cast<std::size_t>(child)];
  auto& siblings = children_[static_cast<std::size_t>(old_parent)];
  siblings.erase(std::find(siblings.begin(), siblings.end(), child));

  parent_[static_cast<std::size_t>(child)] = parent;
  edge_cost_[static_cast<std::size_t>(child)] = edge_cost;
  children_[static_cast<std::size_t>(parent)].push_back(child);

  std::vector<SampleId> affected;
  propagate(child, affected);
  return affected;
}

void SearchTree::propagate(SampleId from, std::vector<SampleId>& affected) {
  // Recompute, never shift: g is always the exact parent-chain sum.
  std::vector<SampleId> stack{from};
  while (!stack.empty()) {
    const SampleId v = stack.back();
    stack.pop_back();
    g_[static_cast<std::size_t>(v)] =
        g_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])] +
        edge_cost_[static_cast<std::size_t>(v)];
    affected.push_back(v);
    for (SampleId c : children_[static_cast<std::size_t>(v)]) stack.push_back(c);
  }
}

bool SearchTree::check_costs(const SampleStore& store, double tol) const {
  for (SampleId id = 0; id < static_cast<SampleId>(g_.size()); ++id) {
    if (!contains(id)) {
      if (g(id) != kInf || parent(id) != kNoSample) return false;
      continue;
    }
    double sum = 0.0;
    for (SampleId v = id; v != root_; v = parent(v)) {
      if (parent(v) == kNoSample) return false;
      sum += store.distance(parent(v), v);
    }
    if (std::abs(sum - g(id)) > tol) return false;
  }
  return true;
}

}  // namespace fcit

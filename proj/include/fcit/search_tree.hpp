#ifndef FCIT_SEARCH_TREE_HPP
#define FCIT_SEARCH_TREE_HPP

#include <span>
#include <vector>

#include "fcit/sample_store.hpp"

namespace fcit {

/// The search tree over sample ids: parent, cost-to-come and child lists.
/// Vertices outside the tree report g = infinity and no parent. Cost changes
/// from a rewire are propagated through the whole descendant subtree, so
/// g(v) always equals the recomputed cost of the root-to-v parent chain.
class SearchTree {
 public:
  explicit SearchTree(SampleId root);

  SampleId root() const { return root_; }
  SampleId num_vertices() const { return num_vertices_; }

  /// Grows the id range (new samples start outside the tree).
  void ensure_capacity(SampleId count);

  bool contains(SampleId id) const {
    return id >= 0 && id < static_cast<SampleId>(g_.size()) && in_tree_[static_cast<std::size_t>(id)];
  }
  double g(SampleId id) const {
    return id >= 0 && id < static_cast<SampleId>(g_.size()) ? g_[static_cast<std::size_t>(id)] : kInf;
  }
  SampleId parent(SampleId id) const {
    return id >= 0 && id < static_cast<SampleId>(parent_.size()) ? parent_[static_cast<std::size_t>(id)]
                                                                 : kNoSample;
  }
  std::span<const SampleId> children(SampleId id) const;

  /// Adds a vertex that is not yet in the tree under an existing parent.
  void insert(SampleId child, SampleId parent, double edge_cost);

  /// Reparents child onto parent with the given true edge cost; requires a
  /// strict cost improvement. Returns every id whose cost-to-come changed
  /// (child plus its descendants) so open-queue entries can be re-keyed.
  std::vector<SampleId> rewire(SampleId parent, SampleId child, double edge_cost);

  /// True iff ancestor appears on the parent chain of id (id counts as its
  /// own ancestor).
  bool is_ancestor(SampleId ancestor, SampleId id) const;

  /// Recomputes every g from the parent chains and compares; test support.
  bool check_costs(const SampleStore& store, double tol = 1e-9) const;

 private:
  void propagate(SampleId from, std::vector<SampleId>& affected);

  SampleId root_;
  SampleId num_vertices_ = 0;
  std::vector<SampleId> parent_;
  std::vector<double> g_;
  std::vector<double> edge_cost_;
  std::vector<char> in_tree_;
  std::vector<std::vector<SampleId>> children_;
};

}  // namespace fcit

#endif  // FCIT_SEARCH_TREE_HPP

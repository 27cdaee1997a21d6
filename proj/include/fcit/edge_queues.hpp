#ifndef FCIT_EDGE_QUEUES_HPP
#define FCIT_EDGE_QUEUES_HPP

#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "fcit/sample_store.hpp"
#include "fcit/search_tree.hpp"

namespace fcit {

/// Symmetric set of sample-id pairs; backs the per-vertex invalid-edge
/// storage and the validated-edge record.
class PairSet {
 public:
  /// Records (a,b) and (b,a); idempotent. a == b is a contract violation.
  void insert(SampleId a, SampleId b);
  bool contains(SampleId a, SampleId b) const;
  const std::unordered_set<SampleId>& partners(SampleId a) const;
  std::size_t pair_count() const { return pairs_; }
  bool is_symmetric() const;

 private:
  std::vector<std::unordered_set<SampleId>> sets_;
  std::size_t pairs_ = 0;
  static const std::unordered_set<SampleId> kEmpty;
};

/// Records a proven-in-collision edge in both directions.
inline void mark_invalid(PairSet& cache, SampleId a, SampleId b) { cache.insert(a, b); }

struct LocalEntry {
  SampleId child;
  double key;   // chat(owner, child) + hhat(child)
  double chat;  // admissible edge cost estimate
};

/// Per-vertex sorted queue of candidate outgoing edges. Keys omit the
/// owner's cost-to-come: all entries share it, so the order equals the
/// f-ordering and survives later improvements of the owner. Entries are
/// consumed front to back and never revisited for one queue instance.
struct LocalQueue {
  SampleId owner = kNoSample;
  std::vector<LocalEntry> entries;
  std::size_t cursor = 0;

  bool exhausted() const { return cursor >= entries.size(); }
};

/// Builds the owner's queue over every other sample in the store, skipping
/// children already proven unreachable from the owner (cached invalid
/// edges). With a radius, candidates are limited to samples within it
/// (linear scan; the ablation mode needs no spatial index). hhat[i] must
/// hold the admissible cost-to-go of sample i.
LocalQueue build_local_queue(SampleId owner, const SampleStore& store,
                             std::span<const double> hhat, const PairSet& invalid,
                             std::optional<double> radius = std::nullopt);

struct Edge {
  SampleId parent;
  SampleId child;
  double key;   // f = g(parent) + chat + hhat at selection time
  double chat;
  double hhat;
};

/// Pops entries until one could improve the tree: either a strictly better
/// connection (g(owner) + chat < g(child)) or the owner's current tree edge,
/// whose pop re-expands the child. Consumed entries are never re-proposed
/// from this queue instance.
std::optional<Edge> next_best_edge(LocalQueue& queue, const SearchTree& tree,
                                   std::span<const double> hhat);

/// Ordered set of the best open edge per expanded vertex, keyed by the
/// admissible solution-cost estimate through the edge. At most one entry per
/// parent, so the queue never exceeds |V| entries. Stale keys (the parent's
/// cost-to-come improved after insertion) are repaired before a pop acts on
/// them; ties break by (cost-to-go, parent id, child id).
class OpenQueue {
 public:
  bool empty() const { return ordered_.empty(); }
  std::size_t size() const { return ordered_.size(); }
  void clear();
  bool has_parent(SampleId parent) const { return by_parent_.count(parent) != 0; }

  /// Inserts the edge, displacing any previous entry of the same parent.
  void insert_or_replace(const Edge& e);

  /// Removes and returns the entry with minimum current key, re-keying any
  /// stale minimum first.
  std::optional<Edge> pop_min(const SearchTree& tree);

  /// Re-keys entries whose parents' costs-to-come changed (after a rewire).
  void rekey(std::span<const SampleId> parents, const SearchTree& tree);

 private:
  struct Item {
    double key;
    double hhat;
    SampleId parent;
    SampleId child;
    double chat;

    friend bool operator<(const Item& a, const Item& b) {
      if (a.key != b.key) return a.key < b.key;
      if (a.hhat != b.hhat) return a.hhat < b.hhat;
      if (a.parent != b.parent) return a.parent < b.parent;
      return a.child < b.child;
    }
  };

  std::set<Item> ordered_;
  std::unordered_map<SampleId, std::set<Item>::iterator> by_parent_;
};

}  // namespace fcit

#endif  // FCIT_EDGE_QUEUES_HPP

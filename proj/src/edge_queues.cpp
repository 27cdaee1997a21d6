#include "fcit/edge_queues.hpp"

#include <algorithm>

namespace fcit {

const std::unordered_set<SampleId> PairSet::kEmpty{};

void PairSet::insert(SampleId a, SampleId b) {
  if (a == b) throw ContractViolation("pair set: a == b");
  if (a < 0 || b < 0) throw ContractViolation("pair set: negative id");
  const auto need = static_cast<std::size_t>(std::max(a, b)) + 1;
  if (sets_.size() < need) sets_.resize(need);
  const bool added = sets_[static_cast<std::size_t>(a)].insert(b).second;
  sets_[static_cast<std::size_t>(b)].insert(a);
  if (added) ++pairs_;
}

bool PairSet::contains(SampleId a, SampleId b) const {
  if (a < 0 || a >= static_cast<SampleId>(sets_.size())) return false;
  return sets_[static_cast<std::size_t>(a)].count(b) != 0;
}

const std::unordered_set<SampleId>& PairSet::partners(SampleId a) const {
  if (a < 0 || a >= static_cast<SampleId>(sets_.size())) return kEmpty;
  return sets_[static_cast<std::size_t>(a)];
}

bool PairSet::is_symmetric() const {
  for (SampleId a = 0; a < static_cast<SampleId>(sets_.size()); ++a) {
    for (SampleId b : sets_[static_cast<std::size_t>(a)]) {
      if (!contains(b, a)) return false;
    }
  }
  return true;
}

LocalQueue build_local_queue(SampleId owner, const SampleStore& store,
                             std::span<const double> hhat, const PairSet& invalid,
                             std::optional<double> radius) {
  if (owner < 0 || owner >= store.size()) throw ContractViolation("local queue: owner not in store");
  LocalQueue q;
  q.owner = owner;
  q.entries.reserve(static_cast<std::size_t>(store.size()) - 1);
  const auto& blocked = invalid.partners(owner);
  for (SampleId id = 0; id < store.size(); ++id) {
    if (id == owner) continue;
    if (!blocked.empty() && blocked.count(id) != 0) continue;
    const double chat = store.distance(owner, id);
    if (radius && chat > *radius) continue;
    q.entries.push_back({id, chat + hhat[static_cast<std::size_t>(id)], chat});
  }
  std::sort(q.entries.begin(), q.entries.end(), [](const LocalEntry& a, const LocalEntry& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.child < b.child;
  });
  return q;
}

std::optional<Edge> next_best_edge(LocalQueue& queue, const SearchTree& tree,
                                   std::span<const double> hhat) {
  const double g_owner = tree.g(queue.owner);
  while (queue.cursor < queue.entries.size()) {
    const LocalEntry entry = queue.entries[queue.cursor];
    ++queue.cursor;
    // A strictly improving connection, or the owner's own tree edge: the
    // latter can never improve (equal cost) but its pop re-expands the child
    // so the search walks the existing tree each batch.
    if (g_owner + entry.chat < tree.g(entry.child) || tree.parent(entry.child) == queue.owner) {
      return Edge{queue.owner, entry.child, g_owner + entry.key,
                  entry.chat, hhat[static_cast<std::size_t>(entry.child)]};
    }
  }
  return std::nullopt;
}

void OpenQueue::clear() {
  ordered_.clear();
  by_parent_.clear();
}

void OpenQueue::insert_or_replace(const Edge& e) {
  auto it = by_parent_.find(e.parent);
  if (it != by_parent_.end()) {
    ordered_.erase(it->second);
    by_parent_.erase(it);
  }
  auto [pos, inserted] = ordered_.insert(Item{e.key, e.hhat, e.parent, e.child, e.chat});
  by_parent_.emplace(e.parent, pos);
}

std::optional<Edge> OpenQueue::pop_min(const SearchTree& tree) {
  while (!ordered_.empty()) {
    const auto it = ordered_.begin();
    const double fresh = tree.g(it->parent) + it->chat + it->hhat;
    if (fresh != it->key) {
      Item item = *it;
      by_parent_.erase(item.parent);
      ordered_.erase(it);
      item.key = fresh;
      auto [pos, inserted] = ordered_.insert(item);
      by_parent_.emplace(item.parent, pos);
      continue;
    }
    const Edge e{it->parent, it->child, it->key, it->chat, it->hhat};
    by_parent_.erase(it->parent);
    ordered_.erase(it);
    return e;
  }
  return std::nullopt;
}

void OpenQueue::rekey(std::span<const SampleId> parents, const SearchTree& tree) {
  for (SampleId p : parents) {
    auto it = by_parent_.find(p);
    if (it == by_parent_.end()) continue;
    Item item = *it->second;
    const double fresh = tree.g(p) + item.chat + item.hhat;
    if (fresh == item.key) continue;
    ordered_.erase(it->second);
    item.key = fresh;
    auto [pos, inserted] = ordered_.insert(item);
    it->second = pos;
  }
}

}  // namespace fcit

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "berge/search.hpp"
#include "berge/vertex_set.hpp"

namespace berge::detail {

// Hook with no side constraint: every adjacent pair may be used.
struct FreePairs {
  bool push(Vertex, Vertex) { return true; }
  void pop() {}
};

// Exhaustive search for a cycle of fixed length over vertex sequences.
//
// The cycle is anchored at its minimum vertex s (only vertices > s may
// follow) and direction-canonicalized by requiring v2 < vl, so every cycle
// is visited exactly once. The hook sees each consecutive pair as it is
// appended (push) and removed (pop); a false push rejects the extension.
// On success the hook is left holding the state for the full cycle,
// including the closing pair (vl, s).
//
// Pruning, all sound:
//  - vertices reachable from the current end through unused vertices must
//    be able to supply the remaining length, and include a neighbor of s;
//  - when every unused vertex has to be consumed (hamiltonian-type calls),
//    each needs two usable neighbors, and a greedy independent set of the
//    remaining vertices cannot exceed what a path (or cycle) can hold.
template <class Hook>
class CycleDfs {
 public:
  // `order` lists the vertices in the order candidates are tried.
  CycleDfs(std::span<const VertexSet> adjacency, std::span<const Vertex> order, Hook& hook,
           std::uint64_t budget)
      : adj_(adjacency), order_(order), hook_(hook), budget_(budget) {
    natural_order_ = true;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (order_[i] != static_cast<Vertex>(i)) natural_order_ = false;
    }
  }

  SearchStatus run(int length) {
    const int n = static_cast<int>(adj_.size());
    length_ = length;
    path_.clear();
    for (Vertex s = 0; s + length <= n; ++s) {
      start_ = s;
      VertexSet avail = VertexSet::range(s + 1, n);
      path_.assign(1, s);
      if (extend(s, 1, avail)) return SearchStatus::Found;
      if (aborted_) return SearchStatus::Unknown;
    }
    path_.clear();
    return SearchStatus::Absent;
  }

  const std::vector<Vertex>& path() const { return path_; }
  std::uint64_t expanded() const { return expanded_; }

 private:
  bool extend(Vertex cur, int depth, VertexSet avail) {
    if (++expanded_ > budget_) {
      aborted_ = true;
      return false;
    }
    const VertexSet& start_nbrs = adj_[static_cast<std::size_t>(start_)];
    if (depth == length_) {
      if (!start_nbrs.test(cur)) return false;
      return hook_.push(cur, start_);
    }

    const int remaining = length_ - depth;
    if (!feasible(cur, remaining, avail)) return false;

    VertexSet candidates = adj_[static_cast<std::size_t>(cur)] & avail;
    if (remaining == 1) {
      candidates &= start_nbrs;
      candidates -= VertexSet::range(0, path_[1] + 1);
    } else if (depth == 1) {
      // v2 must stay below some other available neighbor of s.
      const VertexSet closers = start_nbrs & avail;
      Vertex top = -1;
      closers.for_each([&](Vertex v) { top = v; });
      if (top < 0) return false;
      candidates -= VertexSet::range(top, static_cast<Vertex>(adj_.size()));
    }
    if (candidates.empty()) return false;

    auto try_vertex = [&](Vertex next) {
      if (!hook_.push(cur, next)) return false;
      path_.push_back(next);
      VertexSet rest = avail;
      rest.reset(next);
      if (extend(next, depth + 1, rest)) return true;
      path_.pop_back();
      hook_.pop();
      return false;
    };

    if (natural_order_) {
      bool found = false;
      candidates.for_each([&](Vertex v) {
        if (found || aborted_) return;
        found = try_vertex(v);
      });
      return found;
    }
    for (Vertex v : order_) {
      if (!candidates.test(v)) continue;
      if (try_vertex(v)) return true;
      if (aborted_) return false;
    }
    return false;
  }

  bool feasible(Vertex cur, int remaining, const VertexSet& avail) const {
    VertexSet reach;
    VertexSet frontier = adj_[static_cast<std::size_t>(cur)] & avail;
    while (!frontier.empty()) {
      reach |= frontier;
      VertexSet next;
      frontier.for_each([&](Vertex v) { next |= adj_[static_cast<std::size_t>(v)]; });
      frontier = (next & avail) - reach;
    }
    if (reach.count() < remaining) return false;
    if (!reach.intersects(adj_[static_cast<std::size_t>(start_)])) return false;

    if (remaining != avail.count()) return true;

    // Every available vertex must be used.
    if (!(reach == avail)) return false;
    VertexSet pool = avail;
    pool.set(cur);
    pool.set(start_);
    bool ok = true;
    avail.for_each([&](Vertex v) {
      if (ok && (adj_[static_cast<std::size_t>(v)] & pool).count() < 2) ok = false;
    });
    if (!ok) return false;

    const int p = pool.count();
    const int capacity = (cur == start_) ? p / 2 : (p + 1) / 2;
    return greedy_independent(pool) <= capacity;
  }

  int greedy_independent(VertexSet pool) const {
    int size = 0;
    while (!pool.empty()) {
      Vertex best = -1;
      int best_deg = 1 << 30;
      pool.for_each([&](Vertex v) {
        const int d = (adj_[static_cast<std::size_t>(v)] & pool).count();
        if (d < best_deg) {
          best_deg = d;
          best = v;
        }
      });
      ++size;
      pool.reset(best);
      pool -= adj_[static_cast<std::size_t>(best)];
    }
    return size;
  }

  std::span<const VertexSet> adj_;
  std::span<const Vertex> order_;
  Hook& hook_;
  std::uint64_t budget_;
  bool natural_order_ = true;
  bool aborted_ = false;
  std::uint64_t expanded_ = 0;
  int length_ = 0;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
};

}  // namespace berge::detail

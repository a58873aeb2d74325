#pragma once

#include <vector>

#include "reconf/bitset.hpp"
#include "reconf/graph.hpp"
#include "reconf/rules.hpp"

namespace reconf::detail {

/// Configuration space over independent modules ("classes") of a graph.
///
/// A state is a set of classes; it stands for the independent set that fully
/// contains every chosen class. Two states are adjacent when they differ in
/// exactly one class, and only states of size at least the floor are allowed.
class ClassSpace {
 public:
  ClassSpace(const Graph& g, std::vector<Bitset> classes);

  std::size_t count() const { return classes_.size(); }
  const Bitset& vertices(std::size_t c) const { return classes_[c]; }

  /// Classes met by `set`.
  Bitset state_of(const Bitset& set) const;
  Bitset vertices_of(const Bitset& state) const;
  /// Moves that add the missing vertices of every class met by `set`.
  MovePath saturate(const Bitset& set) const;

  struct Search {
    bool found = false;
    Bitset state;
    MovePath path;  // from the start state to `state`
  };

  /// Largest state reachable from `from`; the first such state in BFS order.
  Search largest(const Bitset& from, int floor) const;
  /// Path from `from` to `to`, if any.
  Search reach(const Bitset& from, const Bitset& to, int floor) const;

 private:
  template <typename Stop>
  Search bfs(const Bitset& from, int floor, Stop&& stop, bool want_largest) const;
  MovePath expand(const std::vector<std::pair<std::size_t, bool>>& toggles) const;

  const Graph& g_;
  std::vector<Bitset> classes_;
  std::vector<Bitset> adj_;
  std::vector<int> sizes_;
};

}  // namespace reconf::detail

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reconf/bitset.hpp"

namespace reconf {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

/// An ordered set of external vertex IDs. Members are kept sorted and unique.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::vector<VertexId>(ids)) {}
  explicit VertexSet(std::vector<VertexId> ids);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(VertexId v) const;

  /// Inserts `v`; returns false if it was already present.
  bool insert(VertexId v);
  /// Erases `v`; returns false if it was absent.
  bool erase(VertexId v);

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  VertexId front() const { return ids_.front(); }
  const std::vector<VertexId>& ids() const { return ids_; }

  VertexSet united(const VertexSet& o) const;
  VertexSet intersected(const VertexSet& o) const;
  VertexSet minus(const VertexSet& o) const;
  VertexSet symmetric_difference(const VertexSet& o) const;

  bool operator==(const VertexSet&) const = default;

  std::string to_string() const;

 private:
  std::vector<VertexId> ids_;
};

/// Immutable simple undirected graph.
///
/// Vertices carry stable external IDs; internally they are numbered densely
/// in increasing ID order so that index order and ID order coincide. Each
/// vertex keeps its adjacency as a bitset over dense indices. Deleting or
/// restricting vertices produces a new graph that keeps the surviving IDs.
class Graph {
 public:
  using Index = std::size_t;

  Graph() = default;

  /// Builds a graph on `vertices` with the given edges. Duplicate edges are
  /// merged. Throws InputError on self-loops, duplicate vertex IDs or edges
  /// that mention unknown vertices.
  Graph(std::vector<VertexId> vertices, std::span<const Edge> edges);

  /// Graph on IDs 1..n.
  static Graph with_vertices(int n, std::span<const Edge> edges);

  std::size_t order() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return ids_.empty(); }

  const std::vector<VertexId>& vertex_ids() const { return ids_; }
  VertexSet vertices() const { return VertexSet(ids_); }
  VertexId id(Index i) const { return ids_[i]; }

  bool has_vertex(VertexId v) const { return find_index(v).has_value(); }
  std::optional<Index> find_index(VertexId v) const;
  /// Throws InputError for unknown IDs.
  Index index(VertexId v) const;

  bool adjacent(VertexId u, VertexId v) const;
  bool adjacent_at(Index a, Index b) const { return adj_[a].test(b); }
  const Bitset& row(Index i) const { return adj_[i]; }
  std::size_t degree_at(Index i) const { return adj_[i].count(); }
  std::vector<Edge> edges() const;

  /// Dense-index mask of `s`. Throws InputError on unknown IDs.
  Bitset mask(const VertexSet& s) const;
  VertexSet members(const Bitset& m) const;
  Bitset all() const { return Bitset::full(order()); }
  Bitset none() const { return Bitset(order()); }

  /// Open neighbourhood of a mask: union of rows minus the mask itself.
  Bitset neighborhood_mask(const Bitset& m) const;
  bool has_edge_inside(const Bitset& m) const;
  /// Induced subgraph on the vertices of `keep`, IDs preserved.
  Graph induced(const Bitset& keep) const;
  /// Connected components of G[within], ordered by smallest member.
  std::vector<Bitset> component_masks(const Bitset& within) const;

 private:
  std::vector<VertexId> ids_;
  std::vector<Bitset> adj_;
  std::size_t edge_count_ = 0;
};

Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph delete_vertices(const Graph& g, const VertexSet& s);
VertexSet neighborhood(const Graph& g, const VertexSet& s);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_independent(const Graph& g, const VertexSet& s);

/// Small named graphs on IDs 1..n, used by the generator, tests and docs.
namespace graphs {
Graph complete(int n);
Graph edgeless(int n);
Graph path(int n);
Graph cycle(int n);
/// Star with centre 1 and leaves 2..leaves+1.
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
/// Disjoint union; the vertices of `b` are renumbered after those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);
/// Join: disjoint union plus every edge between the two sides.
Graph join(const Graph& a, const Graph& b);
}  // namespace graphs

}  // namespace reconf

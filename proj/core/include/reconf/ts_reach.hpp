#pragma once

#include <optional>
#include <vector>

#include "reconf/graph.hpp"
#include "reconf/stats.hpp"

namespace reconf {

/// A token sliding instance where every top-level module is one vertex.
struct TsReduction {
  Graph h;
  VertexSet start;
  VertexSet target;
  /// Vertices standing for modules that the start configuration must be able
  /// to leave entirely; some configuration slide-reachable from `start` has
  /// to avoid each of them.
  std::vector<VertexId> must_vacate;
};

/// Result of collapsing one module to a single vertex.
struct TsShrink {
  Graph graph;
  VertexSet target;
  std::optional<VertexId> must_vacate;
};

/// Token sliding reachability between two independent sets.
bool reach_ts(const Graph& g, const VertexSet& s, const VertexSet& t, SolveStats* stats = nullptr);

/// For a module `m` holding at least two tokens of `s`: the tokens of `s`
/// can never enter N(m), so the instance lives in G - N(m). Returns that
/// graph, or nothing when `t` meets N(m) and the answer is no.
std::optional<Graph> ts_big_module(const Graph& g, const VertexSet& s, const VertexSet& t, const VertexSet& m);

/// Collapses a module holding at most one token of each side to one vertex,
/// rewriting the target token onto the start token when they differ.
TsShrink ts_shrink(const Graph& g, const VertexSet& s, const VertexSet& t, const VertexSet& m);

/// Breadth-first search over the slide configurations of the reduced graph.
bool ts_aux_decide(const TsReduction& red);

}  // namespace reconf

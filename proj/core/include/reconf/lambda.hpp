#pragma once

#include <span>
#include <vector>

#include "reconf/decomposition.hpp"
#include "reconf/graph.hpp"
#include "reconf/rules.hpp"
#include "reconf/stats.hpp"

namespace reconf {

struct EngineOptions {
  /// Re-check the working-state invariants after every rule application.
  /// Quadratic in the sequence length; meant for tests.
  bool check_invariants = false;
};

/// A largest independent set reachable from `start` under TAR(threshold),
/// with the moves that reach it.
struct LambdaResult {
  int size = 0;
  int threshold = 0;
  VertexSet start;
  VertexSet reached;
  MovePath path;

  ReconfSequence sequence() const { return {Rule::tar(threshold), start, path.materialize()}; }
};

/// Results for every threshold 0..|start|; entries[j] is for threshold j.
/// Threshold 0 always reaches a maximum independent set.
struct LambdaTable {
  VertexSet start;
  std::vector<LambdaResult> entries;

  const LambdaResult& at(int j) const { return entries.at(static_cast<std::size_t>(j)); }
};

/// Search over twin classes: clique classes shrink to one vertex, then a BFS
/// runs over unions of whole classes. Exponential in nd(G) only.
/// Throws InputError if |s| < k or `s` is not independent.
LambdaResult lambda_nd(const Graph& g, const VertexSet& s, int k);

/// Deletes `m \ a` from `g`. `m` must be a module, `a` a maximum independent
/// set of G[m] containing s ∩ m; the largest reachable size is unchanged
/// for every threshold.
Graph shrink_module(const Graph& g, const VertexSet& s, const VertexSet& m, const VertexSet& a);

/// One level of the dynamic programme: given a partition of V into modules
/// and, for each part V_i, the table of G[V_i] started from s ∩ V_i, computes
/// the largest set reachable from `s` under TAR(k) in `g`.
LambdaResult lambda_step(const Graph& g, int k, const VertexSet& s, const ModulePartition& parts,
                         std::span<const LambdaTable> tables, const EngineOptions& opts = {},
                         SolveStats* stats = nullptr);

/// Full table for `g` by recursion over the modular decomposition.
LambdaTable lambda_all(const Graph& g, const VertexSet& s, const EngineOptions& opts = {},
                       SolveStats* stats = nullptr);

/// Single-threshold variant of lambda_all. Throws InputError if k < 0,
/// k > |s| or `s` is not independent.
LambdaResult lambda(const Graph& g, const VertexSet& s, int k, const EngineOptions& opts = {},
                    SolveStats* stats = nullptr);

}  // namespace reconf

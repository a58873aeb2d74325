#pragma once

#include <optional>

#include "reconf/graph.hpp"
#include "reconf/lambda.hpp"
#include "reconf/rules.hpp"
#include "reconf/stats.hpp"

namespace reconf {

/// Decision for a TAR or TJ query. A yes-answer carries the moves from
/// `start` to `target`; they are valid under `rule`.
struct ReachAnswer {
  bool reachable = false;
  Rule rule;
  VertexSet start;
  VertexSet target;
  MovePath path;
  SolveStats stats;

  std::optional<ReconfSequence> certificate() const {
    if (!reachable) return std::nullopt;
    return ReconfSequence{rule, start, path.materialize()};
  }
};

/// A set avoiding the module, reachable from the input set.
struct EmptiedSet {
  VertexSet set;
  MovePath path;
};

/// Tries to move all tokens out of the module `m` under TAR(k). Returns the
/// emptied set with its moves, or nothing if no reachable set avoids `m`.
std::optional<EmptiedSet> empty_module(const Graph& g, const VertexSet& s, const VertexSet& m, int k,
                                       SolveStats* stats = nullptr);

/// Deletes M \ A for a maximum independent set A of G[m]. Neither `s` nor
/// `t` may meet `m`; reachability between them is unchanged for every k.
Graph reduce_empty_module(const Graph& g, const VertexSet& m, const VertexSet& s, const VertexSet& t);

/// TAR(k) reachability by search over twin classes.
ReachAnswer reach_nd(const Graph& g, int k, const VertexSet& s, const VertexSet& t);

/// TAR(k) reachability by recursion over the modular decomposition.
/// Throws InputError unless s and t are independent with |s|, |t| >= k >= 0.
ReachAnswer reach_tar(const Graph& g, int k, const VertexSet& s, const VertexSet& t);

/// TJ reachability. A yes-answer carries a TAR(|s|-1) sequence, which
/// describes the same transformation one token at a time.
ReachAnswer reach_tj(const Graph& g, const VertexSet& s, const VertexSet& t);

}  // namespace reconf

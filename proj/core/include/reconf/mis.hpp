#pragma once

#include <vector>

#include "reconf/bitset.hpp"
#include "reconf/decomposition.hpp"
#include "reconf/graph.hpp"

namespace reconf {

struct AlphaResult {
  int size = 0;
  VertexSet witness;
};

/// Maximum independent set by dynamic programming over the modular
/// decomposition: parallel nodes sum their children, series nodes keep the
/// best child, prime nodes solve a weighted problem on the quotient.
AlphaResult alpha(const Graph& g);

/// Per-node maximum independent sets of an MD tree of `g`.
class AlphaTable {
 public:
  AlphaTable(const Graph& g, const MDTree& tree);

  int size(std::size_t node) const { return static_cast<int>(witness_[node].count()); }
  const Bitset& witness(std::size_t node) const { return witness_[node]; }

 private:
  std::vector<Bitset> witness_;
};

/// A maximum independent set of G[within], as a mask of `g`.
Bitset alpha_mask(const Graph& g, const Bitset& within);

/// Maximum-weight independent set of a small graph given by adjacency rows.
/// Exact branch and bound; ties go to the first optimum found when branching
/// include-first on the lowest remaining vertex.
Bitset max_weight_independent(const std::vector<Bitset>& adjacency, const std::vector<int>& weights);

}  // namespace reconf

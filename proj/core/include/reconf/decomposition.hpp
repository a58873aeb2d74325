#pragma once

#include <cstddef>
#include <vector>

#include "reconf/bitset.hpp"
#include "reconf/graph.hpp"

namespace reconf {

enum class NodeKind { leaf, parallel, series, prime };

const char* to_string(NodeKind kind);

struct MDNode {
  NodeKind kind = NodeKind::leaf;
  VertexSet span;
  Bitset mask;  // dense indices of the decomposed graph
  std::vector<std::size_t> children;
};

/// Modular decomposition tree. Node 0 is the root; children of every node
/// are ordered by their smallest vertex ID.
class MDTree {
 public:
  MDTree() = default;
  explicit MDTree(std::vector<MDNode> nodes) : nodes_(std::move(nodes)) {}

  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  const MDNode& root() const { return nodes_.front(); }
  const MDNode& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<MDNode>& nodes() const { return nodes_; }

  std::size_t leaf_count() const;
  /// Max over prime nodes of their child count, 2 for any degenerate
  /// internal node, 1 for a single vertex.
  int width() const;

 private:
  std::vector<MDNode> nodes_;
};

enum class ClassKind { clique, independent };

/// A partition of the vertex set into modules, ordered by smallest ID.
struct ModulePartition {
  std::vector<VertexSet> parts;
  /// Only filled by nd_partition. Singleton classes are reported independent.
  std::vector<ClassKind> kinds;

  std::size_t size() const { return parts.size(); }
};

/// True iff every vertex of `m` has the same neighbours outside `m`.
/// Throws InputError for an empty `m` or unknown IDs.
bool is_module(const Graph& g, const VertexSet& m);
bool is_module_mask(const Graph& g, const Bitset& m);

/// Smallest module of G[within] containing `seed`.
Bitset module_closure(const Graph& g, const Bitset& within, Bitset seed);

MDTree md_tree(const Graph& g);

/// The children of the root of the modular decomposition as masks.
/// Requires at least two vertices.
std::vector<Bitset> top_partition_masks(const Graph& g);
ModulePartition top_partition(const Graph& g);

int modular_width(const Graph& g);

/// Twin classes (u ~ v iff N(u)-v = N(v)-u); the class count is nd(G).
ModulePartition nd_partition(const Graph& g);
/// Twin classes of G[within] as masks; `cliques[i]` tells whether class i has
/// at least two vertices and induces a clique.
std::vector<Bitset> twin_class_masks(const Graph& g, const Bitset& within, std::vector<bool>* cliques = nullptr);

}  // namespace reconf

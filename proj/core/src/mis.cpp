#include "reconf/mis.hpp"

namespace reconf {

namespace {

struct BranchState {
  const std::vector<Bitset>& adj;
  const std::vector<int>& weights;
  Bitset chosen;
  Bitset best;
  int best_weight = -1;
};

int weight_of(const std::vector<int>& weights, const Bitset& s) {
  int total = 0;
  s.for_each([&](std::size_t i) { total += weights[i]; });
  return total;
}

void branch(BranchState& st, Bitset cand, int current) {
  if (current + weight_of(st.weights, cand) <= st.best_weight) return;
  std::size_t v = cand.find_first();
  if (v == Bitset::npos) {
    st.best = st.chosen;
    st.best_weight = current;
    return;
  }
  cand.reset(v);
  const bool isolated = !st.adj[v].intersects(cand);
  st.chosen.set(v);
  branch(st, cand - st.adj[v], current + st.weights[v]);
  st.chosen.reset(v);
  // An isolated candidate with positive weight is always worth taking.
  if (!isolated || st.weights[v] <= 0) branch(st, std::move(cand), current);
}

}  // namespace

Bitset max_weight_independent(const std::vector<Bitset>& adjacency, const std::vector<int>& weights) {
  const std::size_t r = adjacency.size();
  BranchState st{adjacency, weights, Bitset(r), Bitset(r), -1};
  branch(st, Bitset::full(r), 0);
  return st.best;
}

AlphaTable::AlphaTable(const Graph& g, const MDTree& tree) : witness_(tree.size()) {
  // Children always carry larger indices than their parent.
  for (std::size_t i = tree.size(); i-- > 0;) {
    const MDNode& node = tree.node(i);
    switch (node.kind) {
      case NodeKind::leaf:
        witness_[i] = node.mask;
        break;
      case NodeKind::parallel: {
        Bitset all(g.order());
        for (std::size_t c : node.children) all |= witness_[c];
        witness_[i] = std::move(all);
        break;
      }
      case NodeKind::series: {
        std::size_t best = node.children.front();
        for (std::size_t c : node.children)
          if (witness_[c].count() > witness_[best].count()) best = c;
        witness_[i] = witness_[best];
        break;
      }
      case NodeKind::prime: {
        const std::size_t r = node.children.size();
        std::vector<Bitset> qadj(r, Bitset(r));
        std::vector<int> weights(r);
        for (std::size_t a = 0; a < r; ++a) {
          const MDNode& ca = tree.node(node.children[a]);
          weights[a] = static_cast<int>(witness_[node.children[a]].count());
          const Bitset& rep_row = g.row(ca.mask.find_first());
          for (std::size_t b = 0; b < r; ++b)
            if (a != b && rep_row.intersects(tree.node(node.children[b]).mask)) qadj[a].set(b);
        }
        Bitset pick = max_weight_independent(qadj, weights);
        Bitset all(g.order());
        pick.for_each([&](std::size_t a) { all |= witness_[node.children[a]]; });
        witness_[i] = std::move(all);
        break;
      }
    }
  }
}

AlphaResult alpha(const Graph& g) {
  if (g.empty()) return {};
  MDTree tree = md_tree(g);
  AlphaTable table(g, tree);
  return {table.size(0), g.members(table.witness(0))};
}

Bitset alpha_mask(const Graph& g, const Bitset& within) {
  Bitset out(g.order());
  if (within.none()) return out;
  Graph sub = g.induced(within);
  for (VertexId v : alpha(sub).witness) out.set(g.index(v));
  return out;
}

}  // namespace reconf

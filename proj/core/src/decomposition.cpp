#include "reconf/decomposition.hpp"

#include <algorithm>
#include <unordered_map>

#include "reconf/errors.hpp"

namespace reconf {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::leaf: return "leaf";
    case NodeKind::parallel: return "parallel";
    case NodeKind::series: return "series";
    case NodeKind::prime: return "prime";
  }
  return "?";
}

std::size_t MDTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const MDNode& n) { return n.kind == NodeKind::leaf; }));
}

int MDTree::width() const {
  if (nodes_.empty()) return 0;
  int w = 1;
  for (const auto& n : nodes_) {
    if (n.kind == NodeKind::prime) w = std::max(w, static_cast<int>(n.children.size()));
    else if (n.kind != NodeKind::leaf) w = std::max(w, 2);
  }
  return w;
}

namespace {

// Vertices of `within` adjacent to some but not all members of `m`.
Bitset splitters(const Graph& g, const Bitset& within, const Bitset& m) {
  Bitset any_adj(g.order());
  Bitset all_adj = within;
  m.for_each([&](std::size_t i) {
    any_adj |= g.row(i);
    all_adj &= g.row(i);
  });
  any_adj &= within;
  return any_adj.subtract(all_adj).subtract(m);
}

std::vector<Bitset> co_component_masks(const Graph& g, const Bitset& within) {
  std::vector<Bitset> out;
  Bitset unseen = within;
  for (std::size_t s = unseen.find_first(); s != Bitset::npos; s = unseen.find_first()) {
    Bitset comp(g.order());
    Bitset frontier(g.order());
    frontier.set(s);
    unseen.reset(s);
    while (frontier.any()) {
      comp |= frontier;
      Bitset next(g.order());
      frontier.for_each([&](std::size_t v) { next |= (unseen - g.row(v)); });
      unseen.subtract(next);
      frontier = std::move(next);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// Maximal modules of G[x] not containing v: split X-v by splitters until
// every part is a module.
std::vector<Bitset> modules_avoiding(const Graph& g, const Bitset& x, std::size_t v) {
  std::vector<Bitset> done;
  std::vector<Bitset> work;
  Bitset start = x;
  start.reset(v);
  if (start.any()) work.push_back(std::move(start));
  while (!work.empty()) {
    Bitset part = std::move(work.back());
    work.pop_back();
    Bitset spl = splitters(g, x, part);
    std::size_t s = spl.find_first();
    if (s == Bitset::npos) {
      done.push_back(std::move(part));
      continue;
    }
    Bitset inside = part & g.row(s);
    part.subtract(g.row(s));
    work.push_back(std::move(part));
    work.push_back(std::move(inside));
  }
  return done;
}

// Children of a prime node: the maximal proper modules of G[x].
std::vector<Bitset> prime_children(const Graph& g, const Bitset& x) {
  const std::size_t v = x.find_first();
  std::vector<Bitset> parts = modules_avoiding(g, x, v);
  std::sort(parts.begin(), parts.end(), [](const Bitset& a, const Bitset& b) { return a.find_first() < b.find_first(); });

  enum class Side { unknown, with_v, separate };
  std::vector<Side> side(parts.size(), Side::unknown);
  Bitset own(g.order());
  own.set(v);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (side[p] != Side::unknown) continue;
    Bitset seed(g.order());
    seed.set(v);
    seed.set(parts[p].find_first());
    Bitset closure = module_closure(g, x, std::move(seed));
    if (closure == x) {
      side[p] = Side::separate;
      continue;
    }
    for (std::size_t q = 0; q < parts.size(); ++q)
      if (parts[q].intersects(closure)) side[q] = Side::with_v;
  }

  std::vector<Bitset> children;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (side[p] == Side::with_v) own |= parts[p];
    else children.push_back(std::move(parts[p]));
  }
  children.push_back(std::move(own));
  std::sort(children.begin(), children.end(),
            [](const Bitset& a, const Bitset& b) { return a.find_first() < b.find_first(); });
  return children;
}

std::vector<Bitset> split_node(const Graph& g, const Bitset& x, NodeKind& kind) {
  if (x.count() == 1) {
    kind = NodeKind::leaf;
    return {};
  }
  auto comps = g.component_masks(x);
  if (comps.size() > 1) {
    kind = NodeKind::parallel;
    return comps;
  }
  auto cocomps = co_component_masks(g, x);
  if (cocomps.size() > 1) {
    kind = NodeKind::series;
    return cocomps;
  }
  kind = NodeKind::prime;
  return prime_children(g, x);
}

std::size_t build(const Graph& g, Bitset x, std::vector<MDNode>& nodes) {
  const std::size_t me = nodes.size();
  nodes.emplace_back();
  NodeKind kind{};
  auto kids = split_node(g, x, kind);
  nodes[me].kind = kind;
  nodes[me].span = g.members(x);
  nodes[me].mask = std::move(x);
  std::vector<std::size_t> child_ids;
  child_ids.reserve(kids.size());
  for (auto& k : kids) child_ids.push_back(build(g, std::move(k), nodes));
  nodes[me].children = std::move(child_ids);
  return me;
}

}  // namespace

bool is_module_mask(const Graph& g, const Bitset& m) { return splitters(g, g.all(), m).none(); }

bool is_module(const Graph& g, const VertexSet& m) {
  if (m.empty()) throw InputError("is_module: empty vertex set");
  return is_module_mask(g, g.mask(m));
}

Bitset module_closure(const Graph& g, const Bitset& within, Bitset seed) {
  if (seed.none()) return seed;
  Bitset any_adj(g.order());
  Bitset all_adj = within;
  seed.for_each([&](std::size_t i) {
    any_adj |= g.row(i);
    all_adj &= g.row(i);
  });
  while (true) {
    Bitset spl = (any_adj & within).subtract(all_adj).subtract(seed);
    if (spl.none()) return seed;
    spl.for_each([&](std::size_t i) {
      seed.set(i);
      any_adj |= g.row(i);
      all_adj &= g.row(i);
    });
  }
}

MDTree md_tree(const Graph& g) {
  if (g.empty()) return MDTree{};
  std::vector<MDNode> nodes;
  nodes.reserve(2 * g.order());
  build(g, g.all(), nodes);
  return MDTree(std::move(nodes));
}

std::vector<Bitset> top_partition_masks(const Graph& g) {
  if (g.order() < 2) throw InputError("top_partition needs at least two vertices");
  NodeKind kind{};
  return split_node(g, g.all(), kind);
}

ModulePartition top_partition(const Graph& g) {
  ModulePartition out;
  for (const auto& m : top_partition_masks(g)) out.parts.push_back(g.members(m));
  return out;
}

int modular_width(const Graph& g) {
  if (g.order() <= 2) return static_cast<int>(g.order());
  return md_tree(g).width();
}

std::vector<Bitset> twin_class_masks(const Graph& g, const Bitset& within, std::vector<bool>* cliques) {
  std::vector<Bitset> classes;
  std::vector<bool> is_clique;
  std::unordered_map<Bitset, std::size_t, BitsetHash> by_open;
  std::unordered_map<Bitset, std::size_t, BitsetHash> by_closed;
  within.for_each([&](std::size_t u) {
    Bitset open = g.row(u) & within;
    Bitset closed = open;
    closed.set(u);
    if (auto it = by_open.find(open); it != by_open.end() && !is_clique[it->second]) {
      classes[it->second].set(u);
      return;
    }
    if (auto it = by_closed.find(closed); it != by_closed.end() && (is_clique[it->second] || classes[it->second].count() == 1)) {
      classes[it->second].set(u);
      is_clique[it->second] = true;
      return;
    }
    Bitset c(g.order());
    c.set(u);
    by_open.emplace(std::move(open), classes.size());
    by_closed.emplace(std::move(closed), classes.size());
    classes.push_back(std::move(c));
    is_clique.push_back(false);
  });
  if (cliques) *cliques = std::move(is_clique);
  return classes;
}

ModulePartition nd_partition(const Graph& g) {
  ModulePartition out;
  std::vector<bool> cliques;
  auto classes = twin_class_masks(g, g.all(), &cliques);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out.parts.push_back(g.members(classes[i]));
    out.kinds.push_back(cliques[i] ? ClassKind::clique : ClassKind::independent);
  }
  return out;
}

}  // namespace reconf

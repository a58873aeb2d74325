#include "reconf/graph.hpp"

#include <algorithm>
#include <sstream>

#include "reconf/errors.hpp"

namespace reconf {

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(VertexId v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

bool VertexSet::insert(VertexId v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v) return false;
  ids_.insert(it, v);
  return true;
}

bool VertexSet::erase(VertexId v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return false;
  ids_.erase(it);
  return true;
}

VertexSet VertexSet::united(const VertexSet& o) const {
  VertexSet out;
  std::set_union(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::intersected(const VertexSet& o) const {
  VertexSet out;
  std::set_intersection(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& o) const {
  VertexSet out;
  std::set_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::symmetric_difference(const VertexSet& o) const {
  VertexSet out;
  std::set_symmetric_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                                std::back_inserter(out.ids_));
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ids_.size(); ++i) os << (i ? "," : "") << ids_[i];
  os << '}';
  return os.str();
}

Graph::Graph(std::vector<VertexId> vertices, std::span<const Edge> edges) : ids_(std::move(vertices)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) throw InputError("duplicate vertex id");
  adj_.assign(ids_.size(), Bitset(ids_.size()));
  for (auto [u, v] : edges) {
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
    Index a = index(u);
    Index b = index(v);
    if (!adj_[a].test(b)) {
      adj_[a].set(b);
      adj_[b].set(a);
      ++edge_count_;
    }
  }
}

Graph Graph::with_vertices(int n, std::span<const Edge> edges) {
  std::vector<VertexId> ids(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
  return Graph(std::move(ids), edges);
}

std::optional<Graph::Index> Graph::find_index(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return std::nullopt;
  return static_cast<Index>(it - ids_.begin());
}

Graph::Index Graph::index(VertexId v) const {
  auto i = find_index(v);
  if (!i) throw InputError("unknown vertex " + std::to_string(v));
  return *i;
}

bool Graph::adjacent(VertexId u, VertexId v) const { return adj_[index(u)].test(index(v)); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Index a = 0; a < order(); ++a)
    adj_[a].for_each([&](std::size_t b) {
      if (a < b) out.emplace_back(ids_[a], ids_[b]);
    });
  return out;
}

Bitset Graph::mask(const VertexSet& s) const {
  Bitset m(order());
  for (VertexId v : s) m.set(index(v));
  return m;
}

VertexSet Graph::members(const Bitset& m) const {
  std::vector<VertexId> out;
  out.reserve(m.count());
  m.for_each([&](std::size_t i) { out.push_back(ids_[i]); });
  return VertexSet(std::move(out));
}

Bitset Graph::neighborhood_mask(const Bitset& m) const {
  Bitset out(order());
  m.for_each([&](std::size_t i) { out |= adj_[i]; });
  return out.subtract(m);
}

bool Graph::has_edge_inside(const Bitset& m) const {
  bool found = false;
  m.for_each([&](std::size_t i) { found = found || adj_[i].intersects(m); });
  return found;
}

Graph Graph::induced(const Bitset& keep) const {
  Graph out;
  std::vector<Index> remap(order(), static_cast<Index>(-1));
  keep.for_each([&](std::size_t i) {
    remap[i] = out.ids_.size();
    out.ids_.push_back(ids_[i]);
  });
  out.adj_.assign(out.ids_.size(), Bitset(out.ids_.size()));
  keep.for_each([&](std::size_t i) {
    Index a = remap[i];
    (adj_[i] & keep).for_each([&](std::size_t j) {
      out.adj_[a].set(remap[j]);
      if (i < j) ++out.edge_count_;
    });
  });
  return out;
}

std::vector<Bitset> Graph::component_masks(const Bitset& within) const {
  std::vector<Bitset> out;
  Bitset unseen = within;
  for (std::size_t s = unseen.find_first(); s != Bitset::npos; s = unseen.find_first()) {
    Bitset comp(order());
    Bitset frontier(order());
    frontier.set(s);
    unseen.reset(s);
    while (frontier.any()) {
      comp |= frontier;
      Bitset next(order());
      frontier.for_each([&](std::size_t v) { next |= adj_[v]; });
      next &= unseen;
      unseen.subtract(next);
      frontier = std::move(next);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) { return g.induced(g.mask(s)); }

Graph delete_vertices(const Graph& g, const VertexSet& s) { return g.induced(g.all() - g.mask(s)); }

VertexSet neighborhood(const Graph& g, const VertexSet& s) { return g.members(g.neighborhood_mask(g.mask(s))); }

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  for (const auto& c : g.component_masks(g.all())) out.push_back(g.members(c));
  return out;
}

bool is_connected(const Graph& g) { return g.component_masks(g.all()).size() <= 1; }

bool is_independent(const Graph& g, const VertexSet& s) { return !g.has_edge_inside(g.mask(s)); }

namespace graphs {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph::with_vertices(n, e);
}

Graph edgeless(int n) { return Graph::with_vertices(n, {}); }

Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return Graph::with_vertices(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  if (n >= 3) e.emplace_back(n, 1);
  return Graph::with_vertices(n, e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int v = 2; v <= leaves + 1; ++v) e.emplace_back(1, v);
  return Graph::with_vertices(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 1; u <= a; ++u)
    for (int v = a + 1; v <= a + b; ++v) e.emplace_back(u, v);
  return Graph::with_vertices(a + b, e);
}

namespace {

Graph combine(const Graph& a, const Graph& b, bool joined) {
  const int na = static_cast<int>(a.order());
  const int nb = static_cast<int>(b.order());
  std::vector<Edge> e;
  for (auto [u, v] : a.edges()) e.emplace_back(static_cast<int>(a.index(u)) + 1, static_cast<int>(a.index(v)) + 1);
  for (auto [u, v] : b.edges())
    e.emplace_back(na + static_cast<int>(b.index(u)) + 1, na + static_cast<int>(b.index(v)) + 1);
  if (joined)
    for (int u = 1; u <= na; ++u)
      for (int v = na + 1; v <= na + nb; ++v) e.emplace_back(u, v);
  return Graph::with_vertices(na + nb, e);
}

}  // namespace

Graph disjoint_union(const Graph& a, const Graph& b) { return combine(a, b, false); }
Graph join(const Graph& a, const Graph& b) { return combine(a, b, true); }

}  // namespace graphs

}  // namespace reconf

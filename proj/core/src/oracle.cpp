#include "reconf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_set>

#include "reconf/decomposition.hpp"
#include "reconf/errors.hpp"

namespace reconf {

namespace {

using Mask = std::uint64_t;

struct SmallGraph {
  std::vector<Mask> adj;
};

SmallGraph small_graph(const Graph& g) {
  const int cap = oracle_cap();
  if (static_cast<int>(g.order()) > cap)
    throw OracleCapExceeded("oracle refuses " + std::to_string(g.order()) + " vertices (cap " + std::to_string(cap) + ")");
  SmallGraph out{std::vector<Mask>(g.order(), 0)};
  for (std::size_t i = 0; i < g.order(); ++i) g.row(i).for_each([&](std::size_t j) { out.adj[i] |= Mask{1} << j; });
  return out;
}

Mask to_mask(const Graph& g, const VertexSet& s) {
  Mask m = 0;
  for (VertexId v : s) m |= Mask{1} << g.index(v);
  return m;
}

bool independent(const SmallGraph& g, Mask m) {
  for (Mask rest = m; rest; rest &= rest - 1)
    if (g.adj[std::countr_zero(rest)] & m) return false;
  return true;
}

// Visits every configuration reachable from `from`; `visit` returns true to stop.
template <typename Visit>
void explore(const Rule& rule, const SmallGraph& g, Mask from, Visit&& visit) {
  const int n = static_cast<int>(g.adj.size());
  std::unordered_set<Mask> seen{from};
  std::deque<Mask> queue{from};
  auto push = [&](Mask next) {
    if (seen.insert(next).second) queue.push_back(next);
  };
  while (!queue.empty()) {
    const Mask st = queue.front();
    queue.pop_front();
    if (visit(st)) return;
    const int size = std::popcount(st);
    if (rule.kind == Rule::Kind::tar) {
      for (int v = 0; v < n; ++v) {
        const Mask bit = Mask{1} << v;
        if (st & bit) {
          if (size - 1 >= rule.k) push(st & ~bit);
        } else if (!(g.adj[v] & st)) {
          push(st | bit);
        }
      }
      continue;
    }
    for (Mask tokens = st; tokens; tokens &= tokens - 1) {
      const int u = std::countr_zero(tokens);
      const Mask rest = st & ~(Mask{1} << u);
      for (int w = 0; w < n; ++w) {
        const Mask bit = Mask{1} << w;
        if ((st & bit) || (g.adj[w] & rest)) continue;
        if (rule.kind == Rule::Kind::ts && !(g.adj[u] & bit)) continue;
        push(rest | bit);
      }
    }
  }
}

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size())
    throw InputError(std::string("bad integer for ") + what + ": '" + std::string(text) + "'");
  return value;
}

Graph random_graph(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const double p = 0.15 + 0.7 * coin(rng);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return Graph::with_vertices(n, edges);
}

Graph random_prime(std::mt19937_64& rng, int r) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < 500; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 1; u <= r; ++u)
      for (int v = u + 1; v <= r; ++v)
        if (coin(rng) < 0.5) edges.emplace_back(u, v);
    Graph q = Graph::with_vertices(r, edges);
    MDTree tree = md_tree(q);
    if (tree.root().kind == NodeKind::prime && static_cast<int>(tree.root().children.size()) == r) return q;
  }
  return graphs::path(r);
}

std::vector<int> random_composition(std::mt19937_64& rng, int n, int parts) {
  std::vector<int> cuts(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) cuts[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(static_cast<std::size_t>(parts - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> sizes;
  int prev = 0;
  for (int c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(n - prev);
  return sizes;
}

VertexSet random_maximal_independent(std::mt19937_64& rng, const Graph& g) {
  std::vector<std::size_t> order(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  Bitset chosen(g.order());
  Bitset blocked(g.order());
  for (std::size_t i : order) {
    if (blocked.test(i)) continue;
    chosen.set(i);
    blocked.set(i);
    blocked |= g.row(i);
  }
  return g.members(chosen);
}

VertexSet random_subset(std::mt19937_64& rng, const VertexSet& s, std::size_t size) {
  std::vector<VertexId> ids = s.ids();
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(size);
  return VertexSet(std::move(ids));
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

int oracle_cap() {
  constexpr int kDefault = 20;
  const char* env = std::getenv("RECONF_ORACLE_CAP");
  if (!env) return kDefault;
  std::string_view text(env);
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value < 1) return kDefault;
  return std::min(value, 64);
}

bool oracle_reach(const Rule& rule, const Graph& g, const VertexSet& s, const VertexSet& t) {
  SmallGraph sg = small_graph(g);
  const Mask from = to_mask(g, s);
  const Mask to = to_mask(g, t);
  if (!independent(sg, from) || !independent(sg, to)) throw InputError("oracle: sets must be independent");
  if (rule.kind == Rule::Kind::tar) {
    if (static_cast<int>(s.size()) < rule.k || static_cast<int>(t.size()) < rule.k)
      throw InputError("oracle: sets must hold at least k tokens");
  } else if (s.size() != t.size()) {
    return false;
  }
  bool found = false;
  explore(rule, sg, from, [&](Mask st) { return found = (st == to); });
  return found;
}

int oracle_lambda(const Graph& g, const VertexSet& s, int k) {
  SmallGraph sg = small_graph(g);
  const Mask from = to_mask(g, s);
  if (!independent(sg, from)) throw InputError("oracle: start set must be independent");
  if (k < 0 || static_cast<int>(s.size()) < k) throw InputError("oracle: threshold must lie in [0, |S|]");
  int best = 0;
  explore(Rule::tar(k), sg, from, [&](Mask st) {
    best = std::max(best, std::popcount(st));
    return false;
  });
  return best;
}

GenProfile parse_profile(std::string_view text) {
  GenProfile out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw InputError("profile entries look like key=value: '" + std::string(item) + "'");
    std::string_view key = item.substr(0, eq);
    std::string_view value = item.substr(eq + 1);
    if (key == "n") {
      out.n = parse_int(value, "n");
    } else if (key == "width") {
      out.width = parse_int(value, "width");
    } else if (key == "rule") {
      if (value == "tar") out.rule = Rule::Kind::tar;
      else if (value == "tj") out.rule = Rule::Kind::tj;
      else if (value == "ts") out.rule = Rule::Kind::ts;
      else throw InputError("unknown rule '" + std::string(value) + "'");
    } else {
      throw InputError("unknown profile key '" + std::string(key) + "'");
    }
  }
  return out;
}

Graph substitute(const Graph& quotient, std::span<const Graph> parts) {
  if (parts.size() != quotient.order()) throw InputError("substitute: one graph per quotient vertex required");
  std::vector<int> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw InputError("substitute: parts must be non-empty");
    offset[i + 1] = offset[i] + static_cast<int>(parts[i].order());
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& [u, v] : parts[i].edges())
      edges.emplace_back(offset[i] + 1 + static_cast<int>(parts[i].index(u)),
                         offset[i] + 1 + static_cast<int>(parts[i].index(v)));
    quotient.row(i).for_each([&](std::size_t j) {
      if (j < i) return;
      for (int a = offset[i]; a < offset[i + 1]; ++a)
        for (int b = offset[j]; b < offset[j + 1]; ++b) edges.emplace_back(a + 1, b + 1);
    });
  }
  return Graph::with_vertices(offset.back(), edges);
}

Graph random_bounded_width(std::mt19937_64& rng, int n, int width) {
  if (n <= 0) return Graph();
  if (n == 1) return graphs::edgeless(1);
  if (width < 2) throw InputError("modular width below 2 is only possible for a single vertex");
  if (n <= width) return random_graph(rng, n);

  const int top = std::min(width, n);
  Graph quotient;
  if (top < 4 || uniform(rng, 0, 2) == 0) {
    const int r = uniform(rng, 2, top);
    quotient = uniform(rng, 0, 1) ? graphs::complete(r) : graphs::edgeless(r);
  } else {
    const int r = uniform(rng, 0, 1) ? top : uniform(rng, 4, top);
    quotient = random_prime(rng, r);
  }
  std::vector<Graph> parts;
  for (int size : random_composition(rng, n, static_cast<int>(quotient.order())))
    parts.push_back(random_bounded_width(rng, size, width));
  return substitute(quotient, parts);
}

Instance gen_instance(std::uint64_t seed, const GenProfile& profile) {
  if (profile.n < 1) throw InputError("profile needs n >= 1");
  if (profile.width < 1 || (profile.width < 2 && profile.n > 1)) throw InputError("profile width too small for n");
  std::mt19937_64 rng(seed);
  Instance out;
  out.graph = random_bounded_width(rng, profile.n, profile.width);
  VertexSet s = random_maximal_independent(rng, out.graph);
  VertexSet t = random_maximal_independent(rng, out.graph);
  // Sets near maximal size and thresholds near the set sizes are where
  // tokens get stuck; uniform choices would make almost every pair reachable.
  auto near_full = [&](std::size_t size, int slack) {
    return static_cast<std::size_t>(static_cast<int>(size) - uniform(rng, 0, static_cast<int>(size) / slack));
  };
  if (profile.rule == Rule::Kind::tar) {
    out.start = random_subset(rng, s, near_full(s.size(), 4));
    out.target = random_subset(rng, t, near_full(t.size(), 4));
    const int floor = static_cast<int>(std::min(out.start.size(), out.target.size()));
    out.rule = Rule::tar(floor - uniform(rng, 0, floor / 3));
  } else {
    const std::size_t size = near_full(std::min(s.size(), t.size()), 4);
    out.start = random_subset(rng, s, size);
    out.target = random_subset(rng, t, size);
    out.rule = profile.rule == Rule::Kind::tj ? Rule::tj() : Rule::ts();
  }
  return out;
}

}  // namespace reconf

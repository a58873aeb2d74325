#include "reconf/tar_reach.hpp"

#include <string>

#include "class_search.hpp"
#include "reconf/decomposition.hpp"
#include "reconf/errors.hpp"
#include "reconf/mis.hpp"

namespace reconf {

namespace {

MovePath remove_all_add_all(const VertexSet& out, const VertexSet& in) {
  std::vector<Move> moves;
  for (VertexId v : out) moves.push_back(Move::remove(v));
  for (VertexId v : in) moves.push_back(Move::add(v));
  return MovePath(std::move(moves));
}

std::optional<EmptiedSet> try_empty(const Graph& g, const VertexSet& s, const Bitset& m, int k, SolveStats& st) {
  const Bitset sm = g.mask(s);
  if (!sm.intersects(m)) return EmptiedSet{s, MovePath()};
  // Every reachable set keeps a token in m until the module empties, so the
  // outside neighbours of m can never be used.
  Graph h = g.induced(g.all() - g.neighborhood_mask(m));
  LambdaResult best = lambda(h, s, k, {}, &st);
  const Bitset reached = g.mask(best.reached);
  const Bitset inside = reached & m;
  if (static_cast<int>(reached.count() - inside.count()) < k) return std::nullopt;
  std::vector<Move> drop;
  inside.for_each([&](std::size_t i) { drop.push_back(Move::remove(g.id(i))); });
  return EmptiedSet{g.members(reached - m), best.path.then(MovePath(std::move(drop)))};
}

class TarSolver {
 public:
  explicit TarSolver(SolveStats& stats) : st_(stats) {}

  std::optional<MovePath> solve(const Graph& g, int k, const VertexSet& s, const VertexSet& t) {
    if (s == t) return MovePath();
    if (k <= 0) return remove_all_add_all(s, t);
    auto comps = g.component_masks(g.all());
    if (comps.size() > 1) return disconnected(g, k, s, t, comps);
    return connected(g, k, s, t);
  }

  std::optional<MovePath> twins(const Graph& g, int k, const VertexSet& s, const VertexSet& t) {
    if (s == t) return MovePath();
    if (k <= 0) return remove_all_add_all(s, t);
    std::vector<bool> cliques;
    auto classes = twin_class_masks(g, g.all(), &cliques);
    st_.saw_width(static_cast<int>(classes.size()));
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (!cliques[c]) continue;
      auto from_s = try_empty(g, s, classes[c], k, st_);
      auto from_t = try_empty(g, t, classes[c], k, st_);
      ++st_.rule_applications;
      if (from_s.has_value() != from_t.has_value()) return std::nullopt;
      if (from_s) {
        // Both sides can leave the clique; one of its vertices suffices.
        Bitset drop = classes[c];
        drop.reset(drop.find_first());
        st_.nodes_deleted += static_cast<long long>(drop.count());
        auto sub = twins(g.induced(g.all() - drop), k, from_s->set, from_t->set);
        if (!sub) return std::nullopt;
        return from_s->path.then(*sub).then(from_t->path.reversed());
      }
      // Neither side can leave: the clique token is pinned for good.
      const Bitset pinned = g.mask(s) & classes[c];
      if (!(pinned == (g.mask(t) & classes[c]))) return std::nullopt;
      const Bitset closed = g.neighborhood_mask(classes[c]) | classes[c];
      st_.nodes_deleted += static_cast<long long>(closed.count());
      const VertexSet token = g.members(pinned);
      return twins(g.induced(g.all() - closed), k - 1, s.minus(token), t.minus(token));
    }

    detail::ClassSpace space(g, std::move(classes));
    const Bitset sm = g.mask(s);
    const Bitset tm = g.mask(t);
    auto found = space.reach(space.state_of(sm), space.state_of(tm), k);
    if (!found.found) return std::nullopt;
    return space.saturate(sm).then(found.path).then(space.saturate(tm).reversed());
  }

 private:
  std::optional<MovePath> connected(const Graph& g, int k, const VertexSet& s, const VertexSet& t) {
    auto parts = top_partition_masks(g);
    st_.saw_width(static_cast<int>(parts.size()));
    std::size_t i = 0;
    while (i < parts.size() && !g.has_edge_inside(parts[i])) ++i;
    if (i == parts.size()) return twins(g, k, s, t);

    const Bitset& m = parts[i];
    auto from_s = try_empty(g, s, m, k, st_);
    auto from_t = try_empty(g, t, m, k, st_);
    ++st_.rule_applications;
    if (from_s.has_value() != from_t.has_value()) return std::nullopt;
    if (from_s) {
      const Bitset drop = m - alpha_mask(g, m);
      st_.nodes_deleted += static_cast<long long>(drop.count());
      auto sub = solve(g.induced(g.all() - drop), k, from_s->set, from_t->set);
      if (!sub) return std::nullopt;
      return from_s->path.then(*sub).then(from_t->path.reversed());
    }
    // No reachable set leaves m, so none touches its neighbourhood.
    const Bitset drop = g.neighborhood_mask(m);
    st_.nodes_deleted += static_cast<long long>(drop.count());
    return solve(g.induced(g.all() - drop), k, s, t);
  }

  std::optional<MovePath> disconnected(const Graph& g, int k, const VertexSet& s, const VertexSet& t,
                                       const std::vector<Bitset>& comps) {
    LambdaResult top_s = lambda(g, s, k, {}, &st_);
    LambdaResult top_t = lambda(g, t, k, {}, &st_);
    if (top_s.size != top_t.size) return std::nullopt;
    const Bitset sm = g.mask(top_s.reached);
    const Bitset tm = g.mask(top_t.reached);
    for (const Bitset& c : comps)
      if (sm.count_and(c) != tm.count_and(c)) return std::nullopt;

    MovePath out = top_s.path;
    for (const Bitset& c : comps) {
      const int rest = static_cast<int>(sm.count() - sm.count_and(c));
      auto sub = solve(g.induced(c), k - rest, g.members(sm & c), g.members(tm & c));
      if (!sub) return std::nullopt;
      out = out.then(*sub);
    }
    return out.then(top_t.path.reversed());
  }

  SolveStats& st_;
};

void require_independent(const Graph& g, const VertexSet& s, const char* name) {
  if (!is_independent(g, s)) throw InputError(std::string(name) + " set is not independent");
}

void require_floor(const VertexSet& s, int k, const char* name) {
  if (k < 0) throw InputError("threshold must be non-negative");
  if (static_cast<int>(s.size()) < k)
    throw InputError(std::string(name) + " set has fewer than k = " + std::to_string(k) + " tokens");
}

template <typename Run>
ReachAnswer answer(Rule rule, const VertexSet& s, const VertexSet& t, Run&& run) {
  ReachAnswer out;
  out.rule = rule;
  out.start = s;
  out.target = t;
  if (auto path = run(out.stats)) {
    out.reachable = true;
    out.path = std::move(*path);
  }
  return out;
}

}  // namespace

std::optional<EmptiedSet> empty_module(const Graph& g, const VertexSet& s, const VertexSet& m, int k,
                                       SolveStats* stats) {
  require_independent(g, s, "start");
  require_floor(s, k, "start");
  if (m.empty() || !is_module(g, m)) throw InputError("empty_module: not a module");
  SolveStats local;
  return try_empty(g, s, g.mask(m), k, stats ? *stats : local);
}

Graph reduce_empty_module(const Graph& g, const VertexSet& m, const VertexSet& s, const VertexSet& t) {
  if (m.empty() || !is_module(g, m)) throw InputError("reduce_empty_module: not a module");
  if (!s.intersected(m).empty() || !t.intersected(m).empty())
    throw InputError("reduce_empty_module: start and target must avoid the module");
  const Bitset mm = g.mask(m);
  return g.induced(g.all() - (mm - alpha_mask(g, mm)));
}

ReachAnswer reach_nd(const Graph& g, int k, const VertexSet& s, const VertexSet& t) {
  require_independent(g, s, "start");
  require_independent(g, t, "target");
  require_floor(s, k, "start");
  require_floor(t, k, "target");
  return answer(Rule::tar(k), s, t, [&](SolveStats& st) { return TarSolver(st).twins(g, k, s, t); });
}

ReachAnswer reach_tar(const Graph& g, int k, const VertexSet& s, const VertexSet& t) {
  require_independent(g, s, "start");
  require_independent(g, t, "target");
  require_floor(s, k, "start");
  require_floor(t, k, "target");
  return answer(Rule::tar(k), s, t, [&](SolveStats& st) { return TarSolver(st).solve(g, k, s, t); });
}

ReachAnswer reach_tj(const Graph& g, const VertexSet& s, const VertexSet& t) {
  require_independent(g, s, "start");
  require_independent(g, t, "target");
  const int k = tj_threshold(s);
  if (s.size() != t.size()) return answer(Rule::tar(k), s, t, [](SolveStats&) { return std::optional<MovePath>(); });
  return answer(Rule::tar(k), s, t, [&](SolveStats& st) { return TarSolver(st).solve(g, k, s, t); });
}

}  // namespace reconf

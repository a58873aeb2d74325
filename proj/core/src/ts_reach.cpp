#include "reconf/ts_reach.hpp"

#include <deque>
#include <string>
#include <unordered_set>

#include "reconf/decomposition.hpp"
#include "reconf/errors.hpp"

namespace reconf {

namespace {

bool same_component(const Graph& g, const Bitset& within, std::size_t a, std::size_t b) {
  for (const Bitset& c : g.component_masks(within))
    if (c.test(a)) return c.test(b);
  return false;
}

TsShrink shrink(const Graph& g, const Bitset& sm, const Bitset& tm, const Bitset& m) {
  TsShrink out;
  Bitset target = tm;
  Bitset drop(g.order());
  const Bitset s_in = sm & m;
  const Bitset t_in = tm & m;
  if (s_in.any() && t_in.any() && !(s_in == t_in)) {
    const std::size_t u = s_in.find_first();
    const std::size_t v = t_in.find_first();
    if (!same_component(g, m, u, v)) out.must_vacate = g.id(u);
    target.reset(v);
    target.set(u);
    drop.set(v);
  }
  Bitset keep = (sm | target) & m;
  if (keep.none()) keep.set(m.find_first());
  drop |= m - keep;
  out.graph = g.induced(g.all() - drop);
  out.target = g.members(target);
  return out;
}

bool aux_decide(const TsReduction& red) {
  const Graph& h = red.h;
  const Bitset from = h.mask(red.start);
  const Bitset goal = h.mask(red.target);
  std::vector<std::size_t> vacate;
  for (VertexId v : red.must_vacate) vacate.push_back(h.index(v));
  std::vector<bool> vacated(vacate.size(), false);
  std::size_t open = vacate.size();
  bool found = false;

  std::unordered_set<Bitset, BitsetHash> seen{from};
  std::deque<Bitset> queue{from};
  while (!queue.empty()) {
    Bitset st = std::move(queue.front());
    queue.pop_front();
    found = found || st == goal;
    for (std::size_t i = 0; i < vacate.size(); ++i)
      if (!vacated[i] && !st.test(vacate[i])) {
        vacated[i] = true;
        --open;
      }
    if (found && open == 0) return true;
    st.for_each([&](std::size_t u) {
      Bitset rest = st;
      rest.reset(u);
      (h.row(u) - st).for_each([&](std::size_t w) {
        if (h.row(w).intersects(rest)) return;
        Bitset next = rest;
        next.set(w);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      });
    });
  }
  return false;
}

class TsSolver {
 public:
  explicit TsSolver(SolveStats& st) : st_(st) {}

  bool solve(const Graph& g, const VertexSet& s, const VertexSet& t) {
    if (s.size() != t.size()) return false;
    if (s == t) return true;
    auto comps = g.component_masks(g.all());
    if (comps.size() > 1) {
      for (const Bitset& c : comps) {
        Graph part = g.induced(c);
        if (!solve(part, s.intersected(part.vertices()), t.intersected(part.vertices()))) return false;
      }
      return true;
    }

    auto parts = top_partition_masks(g);
    st_.saw_width(static_cast<int>(parts.size()));
    const Bitset sm = g.mask(s);
    const Bitset tm = g.mask(t);
    for (const Bitset& m : parts) {
      if (sm.count_and(m) < 2) continue;
      ++st_.rule_applications;
      const Bitset nm = g.neighborhood_mask(m);
      if (tm.intersects(nm)) return false;
      st_.nodes_deleted += static_cast<long long>(nm.count());
      return solve(g.induced(g.all() - nm), s, t);
    }
    // Every module holds at most one start token, and that stays true.
    for (const Bitset& m : parts)
      if (tm.count_and(m) >= 2) return false;

    TsReduction red{g, s, t, {}};
    for (const Bitset& m : parts) {
      if (m.count() < 2) continue;
      ++st_.rule_applications;
      const Graph& cur = red.h;
      TsShrink step = shrink(cur, cur.mask(red.start), cur.mask(red.target), cur.mask(g.members(m)));
      st_.nodes_deleted += static_cast<long long>(cur.order() - step.graph.order());
      red.h = std::move(step.graph);
      red.target = std::move(step.target);
      if (step.must_vacate) red.must_vacate.push_back(*step.must_vacate);
    }
    return aux_decide(red);
  }

 private:
  SolveStats& st_;
};

void require_independent(const Graph& g, const VertexSet& s, const char* name) {
  if (!is_independent(g, s)) throw InputError(std::string(name) + " set is not independent");
}

}  // namespace

bool reach_ts(const Graph& g, const VertexSet& s, const VertexSet& t, SolveStats* stats) {
  require_independent(g, s, "start");
  require_independent(g, t, "target");
  SolveStats local;
  return TsSolver(stats ? *stats : local).solve(g, s, t);
}

std::optional<Graph> ts_big_module(const Graph& g, const VertexSet& s, const VertexSet& t, const VertexSet& m) {
  require_independent(g, s, "start");
  require_independent(g, t, "target");
  if (m.empty() || !is_module(g, m)) throw InputError("ts_big_module: not a module");
  if (s.intersected(m).size() < 2) throw InputError("ts_big_module: module holds fewer than two start tokens");
  const Bitset nm = g.neighborhood_mask(g.mask(m));
  if (g.mask(t).intersects(nm)) return std::nullopt;
  return g.induced(g.all() - nm);
}

TsShrink ts_shrink(const Graph& g, const VertexSet& s, const VertexSet& t, const VertexSet& m) {
  require_independent(g, s, "start");
  require_independent(g, t, "target");
  if (m.size() < 2 || !is_module(g, m)) throw InputError("ts_shrink: needs a module with at least two vertices");
  if (s.intersected(m).size() > 1 || t.intersected(m).size() > 1)
    throw InputError("ts_shrink: module holds more than one token");
  return shrink(g, g.mask(s), g.mask(t), g.mask(m));
}

bool ts_aux_decide(const TsReduction& red) {
  require_independent(red.h, red.start, "start");
  require_independent(red.h, red.target, "target");
  if (red.start.size() != red.target.size()) return false;
  for (VertexId v : red.must_vacate)
    if (!red.h.has_vertex(v)) throw InputError("ts_aux_decide: unknown vertex " + std::to_string(v));
  return aux_decide(red);
}

}  // namespace reconf

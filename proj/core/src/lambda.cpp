#include "reconf/lambda.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "class_search.hpp"
#include "reconf/errors.hpp"
#include "reconf/mis.hpp"

namespace reconf {

namespace {

struct Entry {
  Bitset reached;
  MovePath path;
};

/// One decomposition level: a partition of some vertex set into modules.
struct Level {
  std::vector<Bitset> parts;
  std::vector<Bitset> qadj;
  std::vector<Bitset> alpha_sets;
  /// Per part, entries for thresholds 0..|s ∩ part|; null for parts s misses.
  std::vector<const std::vector<Entry>*> tables;
};

std::vector<Bitset> quotient_adjacency(const Graph& g, const std::vector<Bitset>& parts) {
  const std::size_t r = parts.size();
  std::vector<Bitset> q(r, Bitset(r));
  for (std::size_t a = 0; a < r; ++a) {
    const Bitset& row = g.row(parts[a].find_first());
    for (std::size_t b = 0; b < r; ++b)
      if (a != b && row.intersects(parts[b])) q[a].set(b);
  }
  return q;
}

MovePath remove_then_add(const Graph& g, const Bitset& out, const Bitset& in) {
  std::vector<Move> moves;
  out.for_each([&](std::size_t i) { moves.push_back(Move::remove(g.id(i))); });
  in.for_each([&](std::size_t i) { moves.push_back(Move::add(g.id(i))); });
  return MovePath(std::move(moves));
}

void check_sequence(const Graph& g, const Bitset& start, const MovePath& path, int threshold, const Bitset& expected,
                    const Bitset* confined, const char* what) {
  ReconfSequence seq{Rule::tar(std::max(threshold, 0)), g.members(start), path.materialize()};
  if (confined)
    for (const Move& m : seq.moves)
      if (!confined->test(g.index(m.v))) throw InvariantError(std::string(what) + ": move leaves its module");
  auto out = verify_sequence(g, seq);
  if (!out) throw InvariantError(std::string(what) + ": move " + std::to_string(out.failed_move) + " " + out.violation);
  if (!(*out.final_set == g.members(expected))) throw InvariantError(std::string(what) + ": sequence ends elsewhere");
}

/// Working state of one run of the level procedure for a fixed threshold.
class StepEngine {
 public:
  StepEngine(const Graph& g, const Level& level, const Bitset& s, int k, const EngineOptions& opts, SolveStats& stats)
      : g_(g), lv_(level), s_(s), k_(k), opts_(opts), stats_(stats) {}

  Entry run() {
    preprocess();
    check();
    while (rule_irrelevant() || rule_improve_free() || rule_improve_module()) {
      ++stats_.rule_applications;
      check();
    }
    return {r_, path_};
  }

 private:
  std::size_t parts() const { return lv_.parts.size(); }
  int outside(std::size_t i) const { return static_cast<int>(r_.count() - r_.count_and(lv_.parts[i])); }
  int inside(std::size_t i) const { return static_cast<int>(r_.count_and(lv_.parts[i])); }

  void preprocess() {
    const std::size_t r = parts();
    alive_ = Bitset(g_.order());
    live_.assign(r, false);
    piece_.assign(r, Bitset(g_.order()));
    thresholds_.assign(r, 0);
    module_paths_.assign(r, MovePath());
    r_ = s_;
    for (std::size_t i = 0; i < r; ++i) {
      alive_ |= lv_.parts[i];
      if (!s_.intersects(lv_.parts[i])) {
        piece_[i] = lv_.alpha_sets[i];
        Bitset gone = lv_.parts[i] - lv_.alpha_sets[i];
        stats_.nodes_deleted += static_cast<long long>(gone.count());
        alive_.subtract(gone);
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      const int own = static_cast<int>(s_.count_and(lv_.parts[i]));
      if (own == 0) continue;
      const Entry& e = (*lv_.tables[i])[static_cast<std::size_t>(own)];
      live_[i] = true;
      thresholds_[i] = own;
      module_paths_[i] = e.path;
      path_ = path_.then(e.path);
      r_.subtract(lv_.parts[i]);
      r_ |= e.reached;
    }
  }

  // A live module already holding a maximum independent set of itself
  // contributes nothing but that set; the rest of it is irrelevant.
  bool rule_irrelevant() {
    for (std::size_t i = 0; i < parts(); ++i) {
      if (!live_[i] || inside(i) != static_cast<int>(lv_.alpha_sets[i].count())) continue;
      Bitset gone = lv_.parts[i] - r_;
      stats_.nodes_deleted += static_cast<long long>(gone.count());
      alive_.subtract(gone);
      piece_[i] = r_ & lv_.parts[i];
      live_[i] = false;
      thresholds_[i] = 0;
      module_paths_[i] = MovePath();
      return true;
    }
    return false;
  }

  // Improve the tokens on the processed part that sees no live module.
  bool rule_improve_free() {
    Bitset live_mask(parts());
    for (std::size_t i = 0; i < parts(); ++i)
      if (live_[i]) live_mask.set(i);

    std::vector<std::size_t> free_parts;
    for (std::size_t i = 0; i < parts(); ++i)
      if (!live_[i] && !lv_.qadj[i].intersects(live_mask)) free_parts.push_back(i);
    if (free_parts.empty()) return false;

    Bitset free_mask(parts());
    for (std::size_t i : free_parts) free_mask.set(i);
    // Pieces with identical neighbourhoods among free pieces and no edge
    // between them form one independent class.
    std::map<std::vector<Bitset::Word>, std::size_t> class_of;
    std::vector<Bitset> classes;
    Bitset f0(g_.order());
    for (std::size_t i : free_parts) {
      f0 |= piece_[i];
      Bitset key = lv_.qadj[i] & free_mask;
      std::vector<Bitset::Word> words(key.words().begin(), key.words().end());
      auto [it, fresh] = class_of.emplace(std::move(words), classes.size());
      if (fresh) classes.push_back(piece_[i]);
      else classes[it->second] |= piece_[i];
    }
    std::sort(classes.begin(), classes.end(),
              [](const Bitset& a, const Bitset& b) { return a.find_first() < b.find_first(); });

    const Bitset here = r_ & f0;
    const int floor = k_ - static_cast<int>(r_.count() - here.count());
    detail::ClassSpace space(g_, std::move(classes));
    auto best = space.largest(space.state_of(here), std::max(floor, 0));
    Bitset target = space.vertices_of(best.state);
    if (target.count() <= here.count()) return false;
    path_ = path_.then(space.saturate(here)).then(best.path);
    r_.subtract(f0);
    r_ |= target;
    return true;
  }

  // Improve one live module using its table, or with a maximum independent
  // set once the rest of the configuration alone meets the threshold.
  bool rule_improve_module() {
    for (std::size_t i = 0; i < parts(); ++i) {
      if (!live_[i]) continue;
      const int j = k_ - outside(i);
      const int have = inside(i);
      const Bitset current = r_ & lv_.parts[i];
      if (j <= 0) {
        if (static_cast<int>(lv_.alpha_sets[i].count()) <= have) continue;
        MovePath swap = remove_then_add(g_, current, lv_.alpha_sets[i]);
        path_ = path_.then(swap);
        module_paths_[i] = module_paths_[i].then(swap);
        thresholds_[i] = 0;
        r_.subtract(lv_.parts[i]);
        r_ |= lv_.alpha_sets[i];
        return true;
      }
      const Entry& e = (*lv_.tables[i])[static_cast<std::size_t>(j)];
      if (static_cast<int>(e.reached.count()) <= have) continue;
      path_ = path_.then(module_paths_[i].reversed()).then(e.path);
      module_paths_[i] = e.path;
      thresholds_[i] = j;
      r_.subtract(lv_.parts[i]);
      r_ |= e.reached;
      return true;
    }
    return false;
  }

  void check() const {
    if (!opts_.check_invariants) return;
    // (1) the live modules and the processed pieces partition the working graph
    Bitset cover(g_.order());
    Bitset m0(g_.order());
    int dead = 0;
    for (std::size_t i = 0; i < parts(); ++i) {
      if (live_[i]) {
        cover |= lv_.parts[i];
      } else {
        cover |= piece_[i];
        m0 |= piece_[i];
        ++dead;
      }
    }
    if (!(cover == alive_)) throw InvariantError("working graph is not partitioned by the modules");
    if (!r_.is_subset_of(alive_) || g_.has_edge_inside(r_)) throw InvariantError("working set is not independent");
    // (2) reachability from the start set
    check_sequence(g_, s_, path_, k_, r_, nullptr, "global sequence");
    // (4) nd of the processed part
    if (static_cast<int>(twin_class_masks(g_, m0).size()) > dead) throw InvariantError("processed part has too many twin classes");
    for (std::size_t i = 0; i < parts(); ++i) {
      if (!live_[i]) continue;
      // (5) live modules keep a token
      if (inside(i) == 0) throw InvariantError("live module without tokens");
      // (6) module threshold brackets
      if (k_ - outside(i) > thresholds_[i] || thresholds_[i] > inside(i)) throw InvariantError("module threshold out of range");
      // (7) module-local reachability
      check_sequence(g_, s_ & lv_.parts[i], module_paths_[i], thresholds_[i], r_ & lv_.parts[i], &lv_.parts[i],
                     "module sequence");
    }
  }

  const Graph& g_;
  const Level& lv_;
  const Bitset& s_;
  const int k_;
  const EngineOptions& opts_;
  SolveStats& stats_;

  Bitset alive_;
  Bitset r_;
  MovePath path_;
  std::vector<bool> live_;
  std::vector<Bitset> piece_;
  std::vector<int> thresholds_;
  std::vector<MovePath> module_paths_;
};

/// Threshold-0 entry: drop the tokens, place a maximum independent set.
Entry alpha_entry(const Graph& g, const Bitset& start, const Bitset& best) {
  return {best, remove_then_add(g, start, best)};
}

/// Bottom-up tables over a modular decomposition tree.
class TreeTables {
 public:
  TreeTables(const Graph& g, const MDTree& tree, const Bitset& s, const EngineOptions& opts, SolveStats& stats)
      : g_(g), tree_(tree), s_(s), opts_(opts), stats_(stats), alpha_(g, tree), memo_(tree.size()) {}

  const AlphaTable& alpha() const { return alpha_; }

  Level level(std::size_t node) {
    const MDNode& n = tree_.node(node);
    Level lv;
    for (std::size_t c : n.children) {
      lv.parts.push_back(tree_.node(c).mask);
      lv.alpha_sets.push_back(alpha_.witness(c));
      lv.tables.push_back(s_.intersects(tree_.node(c).mask) ? &table(c) : nullptr);
    }
    lv.qadj = quotient_adjacency(g_, lv.parts);
    stats_.saw_width(static_cast<int>(lv.parts.size()));
    return lv;
  }

  const std::vector<Entry>& table(std::size_t node) {
    if (memo_[node]) return *memo_[node];
    const MDNode& n = tree_.node(node);
    const Bitset start = s_ & n.mask;
    const std::size_t own = start.count();
    std::vector<Entry> entries;
    entries.push_back(alpha_entry(g_, start, alpha_.witness(node)));
    if (n.kind == NodeKind::leaf) {
      if (own == 1) entries.push_back({start, MovePath()});
    } else if (own > 0) {
      Level lv = level(node);
      for (std::size_t j = 1; j <= own; ++j)
        entries.push_back(StepEngine(g_, lv, start, static_cast<int>(j), opts_, stats_).run());
    }
    memo_[node] = std::move(entries);
    return *memo_[node];
  }

 private:
  const Graph& g_;
  const MDTree& tree_;
  const Bitset& s_;
  const EngineOptions& opts_;
  SolveStats& stats_;
  AlphaTable alpha_;
  std::vector<std::optional<std::vector<Entry>>> memo_;
};

LambdaResult to_result(const Graph& g, const VertexSet& s, int k, const Entry& e) {
  return {static_cast<int>(e.reached.count()), k, s, g.members(e.reached), e.path};
}

Bitset checked_start(const Graph& g, const VertexSet& s) {
  Bitset m = g.mask(s);
  if (g.has_edge_inside(m)) throw InputError("start set is not independent");
  return m;
}

}  // namespace

LambdaResult lambda_nd(const Graph& g, const VertexSet& s, int k) {
  Bitset start = checked_start(g, s);
  if (k < 0 || static_cast<std::size_t>(k) > s.size()) throw InputError("threshold must lie in [0, |S|]");
  if (g.empty()) return {0, k, s, {}, {}};
  std::vector<bool> cliques;
  auto classes = twin_class_masks(g, g.all(), &cliques);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (!cliques[c]) continue;
    // Keep the token of the clique if it has one, else its first vertex.
    Bitset token = classes[c] & start;
    std::size_t keep = token.any() ? token.find_first() : classes[c].find_first();
    classes[c] = Bitset(g.order());
    classes[c].set(keep);
  }
  detail::ClassSpace space(g, std::move(classes));
  auto best = space.largest(space.state_of(start), k);
  MovePath path = space.saturate(start).then(best.path);
  Bitset reached = space.vertices_of(best.state);
  return to_result(g, s, k, {reached, path});
}

Graph shrink_module(const Graph& g, const VertexSet& s, const VertexSet& m, const VertexSet& a) {
  if (m.empty() || !is_module(g, m)) throw InputError("shrink_module: not a module");
  if (!a.minus(m).empty() || !is_independent(g, a)) throw InputError("shrink_module: A must be an independent subset of M");
  if (!s.intersected(m).minus(a).empty()) throw InputError("shrink_module: S ∩ M must lie inside A");
  if (static_cast<int>(a.size()) != alpha(induced_subgraph(g, m)).size)
    throw InputError("shrink_module: A is not a maximum independent set of G[M]");
  return delete_vertices(g, m.minus(a));
}

LambdaResult lambda_step(const Graph& g, int k, const VertexSet& s, const ModulePartition& parts,
                         std::span<const LambdaTable> tables, const EngineOptions& opts, SolveStats* stats) {
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  Bitset start = checked_start(g, s);
  if (k < 0 || static_cast<std::size_t>(k) > s.size()) throw InputError("threshold must lie in [0, |S|]");
  if (tables.size() != parts.size()) throw InputError("lambda_step: one table per part required");

  Level lv;
  Bitset cover(g.order());
  std::vector<std::vector<Entry>> converted(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Bitset part = g.mask(parts.parts[i]);
    if (part.none() || part.intersects(cover) || !is_module_mask(g, part))
      throw InputError("lambda_step: parts must be disjoint non-empty modules");
    cover |= part;
    const Bitset own = start & part;
    if (!(tables[i].start == g.members(own)) || tables[i].entries.size() <= own.count())
      throw InputError("lambda_step: table " + std::to_string(i) + " does not match the part");
    for (const auto& r : tables[i].entries) {
      Bitset reached = g.mask(r.reached);
      if (!reached.is_subset_of(part)) throw InputError("lambda_step: table entry leaves its part");
      converted[i].push_back({std::move(reached), r.path});
    }
    lv.alpha_sets.push_back(alpha_mask(g, part));
    lv.parts.push_back(std::move(part));
  }
  if (!(cover == g.all())) throw InputError("lambda_step: parts must cover the vertex set");
  for (std::size_t i = 0; i < parts.size(); ++i) lv.tables.push_back(&converted[i]);
  lv.qadj = quotient_adjacency(g, lv.parts);
  st.saw_width(static_cast<int>(lv.parts.size()));
  return to_result(g, s, k, StepEngine(g, lv, start, k, opts, st).run());
}

LambdaTable lambda_all(const Graph& g, const VertexSet& s, const EngineOptions& opts, SolveStats* stats) {
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  Bitset start = checked_start(g, s);
  LambdaTable out{s, {}};
  if (g.empty()) {
    out.entries.push_back({0, 0, s, {}, {}});
    return out;
  }
  MDTree tree = md_tree(g);
  TreeTables tables(g, tree, start, opts, st);
  const auto& root = tables.table(0);
  for (std::size_t j = 0; j < root.size(); ++j) out.entries.push_back(to_result(g, s, static_cast<int>(j), root[j]));
  return out;
}

LambdaResult lambda(const Graph& g, const VertexSet& s, int k, const EngineOptions& opts, SolveStats* stats) {
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  Bitset start = checked_start(g, s);
  if (k < 0 || static_cast<std::size_t>(k) > s.size()) throw InputError("threshold must lie in [0, |S|]");
  if (g.empty()) return {0, k, s, {}, {}};
  MDTree tree = md_tree(g);
  TreeTables tables(g, tree, start, opts, st);
  if (k == 0) return to_result(g, s, 0, alpha_entry(g, start, tables.alpha().witness(0)));
  if (tree.root().kind == NodeKind::leaf) return to_result(g, s, k, {start, MovePath()});
  Level lv = tables.level(0);
  return to_result(g, s, k, StepEngine(g, lv, start, k, opts, st).run());
}

}  // namespace reconf

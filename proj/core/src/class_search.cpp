#include "class_search.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace reconf::detail {

ClassSpace::ClassSpace(const Graph& g, std::vector<Bitset> classes) : g_(g), classes_(std::move(classes)) {
  const std::size_t c = classes_.size();
  adj_.assign(c, Bitset(c));
  sizes_.resize(c);
  for (std::size_t a = 0; a < c; ++a) {
    sizes_[a] = static_cast<int>(classes_[a].count());
    const Bitset& rep_row = g_.row(classes_[a].find_first());
    for (std::size_t b = 0; b < c; ++b)
      if (a != b && rep_row.intersects(classes_[b])) adj_[a].set(b);
  }
}

Bitset ClassSpace::state_of(const Bitset& set) const {
  Bitset st(count());
  for (std::size_t c = 0; c < count(); ++c)
    if (classes_[c].intersects(set)) st.set(c);
  return st;
}

Bitset ClassSpace::vertices_of(const Bitset& state) const {
  Bitset out(g_.order());
  state.for_each([&](std::size_t c) { out |= classes_[c]; });
  return out;
}

MovePath ClassSpace::saturate(const Bitset& set) const {
  std::vector<Move> moves;
  (vertices_of(state_of(set)) - set).for_each([&](std::size_t i) { moves.push_back(Move::add(g_.id(i))); });
  return MovePath(std::move(moves));
}

MovePath ClassSpace::expand(const std::vector<std::pair<std::size_t, bool>>& toggles) const {
  std::vector<Move> moves;
  for (auto [c, added] : toggles)
    classes_[c].for_each([&](std::size_t i) { moves.push_back(added ? Move::add(g_.id(i)) : Move::remove(g_.id(i))); });
  return MovePath(std::move(moves));
}

template <typename Stop>
ClassSpace::Search ClassSpace::bfs(const Bitset& from, int floor, Stop&& stop, bool want_largest) const {
  struct Visit {
    Bitset parent;
    std::size_t toggled;
    int size;
  };
  auto size_of = [&](const Bitset& st) {
    int s = 0;
    st.for_each([&](std::size_t c) { s += sizes_[c]; });
    return s;
  };

  std::unordered_map<Bitset, Visit, BitsetHash> seen;
  std::deque<Bitset> queue;
  seen.emplace(from, Visit{Bitset(), static_cast<std::size_t>(-1), size_of(from)});
  queue.push_back(from);
  Bitset best = from;
  int best_size = seen.at(from).size;
  bool found = false;

  while (!queue.empty()) {
    Bitset st = std::move(queue.front());
    queue.pop_front();
    const int sz = seen.at(st).size;
    if (stop(st)) {
      best = st;
      found = true;
      break;
    }
    if (want_largest && sz > best_size) {
      best = st;
      best_size = sz;
    }
    for (std::size_t c = 0; c < count(); ++c) {
      int next_size;
      Bitset next = st;
      if (st.test(c)) {
        next_size = sz - sizes_[c];
        if (next_size < floor) continue;
        next.reset(c);
      } else {
        if (adj_[c].intersects(st)) continue;
        next_size = sz + sizes_[c];
        next.set(c);
      }
      if (seen.contains(next)) continue;
      seen.emplace(next, Visit{st, c, next_size});
      queue.push_back(std::move(next));
    }
  }

  Search out;
  out.found = found || want_largest;
  if (!out.found) return out;
  std::vector<std::pair<std::size_t, bool>> toggles;
  for (Bitset cur = best; !(cur == from);) {
    const Visit& v = seen.at(cur);
    toggles.emplace_back(v.toggled, cur.test(v.toggled));
    cur = v.parent;
  }
  std::reverse(toggles.begin(), toggles.end());
  out.state = std::move(best);
  out.path = expand(toggles);
  return out;
}

ClassSpace::Search ClassSpace::largest(const Bitset& from, int floor) const {
  return bfs(from, floor, [](const Bitset&) { return false; }, true);
}

ClassSpace::Search ClassSpace::reach(const Bitset& from, const Bitset& to, int floor) const {
  return bfs(from, floor, [&](const Bitset& st) { return st == to; }, false);
}

}  // namespace reconf::detail

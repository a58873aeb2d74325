#include "reconf/rules.hpp"

#include <utility>
#include <variant>

#include "reconf/errors.hpp"

namespace reconf {

Rule Rule::tar(int k) {
  if (k < 0) throw InputError("TAR threshold must be non-negative");
  return {Kind::tar, k};
}

std::string Rule::to_string() const {
  switch (kind) {
    case Kind::tar: return "TAR(" + std::to_string(k) + ")";
    case Kind::tj: return "TJ";
    case Kind::ts: return "TS";
  }
  return "?";
}

const char* to_string(Move::Op op) {
  switch (op) {
    case Move::Op::add: return "add";
    case Move::Op::remove: return "remove";
    case Move::Op::jump: return "jump";
    case Move::Op::slide: return "slide";
  }
  return "?";
}

Move Move::inverse() const {
  switch (op) {
    case Op::add: return remove(v);
    case Op::remove: return add(v);
    case Op::jump: return jump(v, u);
    case Op::slide: return slide(v, u);
  }
  return *this;
}

std::string Move::to_string() const {
  std::string s = reconf::to_string(op);
  if (op == Op::jump || op == Op::slide) return s + "(" + std::to_string(u) + "->" + std::to_string(v) + ")";
  return s + "(" + std::to_string(v) + ")";
}

struct MovePath::Node {
  struct Leaf {
    std::vector<Move> moves;
  };
  struct Concat {
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  struct Reverse {
    std::shared_ptr<const Node> inner;
  };

  std::variant<Leaf, Concat, Reverse> body;
  std::size_t length = 0;
};

MovePath::MovePath(std::vector<Move> moves) {
  if (moves.empty()) return;
  auto node = std::make_shared<Node>();
  node->length = moves.size();
  node->body = Node::Leaf{std::move(moves)};
  root_ = std::move(node);
}

std::size_t MovePath::size() const { return root_ ? root_->length : 0; }

MovePath MovePath::then(const MovePath& next) const {
  if (!root_) return next;
  if (!next.root_) return *this;
  auto node = std::make_shared<Node>();
  node->length = root_->length + next.root_->length;
  node->body = Node::Concat{root_, next.root_};
  return MovePath(std::shared_ptr<const Node>(std::move(node)));
}

MovePath MovePath::reversed() const {
  if (!root_) return *this;
  if (const auto* r = std::get_if<Node::Reverse>(&root_->body)) return MovePath(r->inner);
  auto node = std::make_shared<Node>();
  node->length = root_->length;
  node->body = Node::Reverse{root_};
  return MovePath(std::shared_ptr<const Node>(std::move(node)));
}

std::vector<Move> MovePath::materialize() const {
  std::vector<Move> out;
  if (!root_) return out;
  out.reserve(root_->length);
  // Explicit stack: concatenation chains can be much deeper than the call stack.
  std::vector<std::pair<const Node*, bool>> stack{{root_.get(), false}};
  while (!stack.empty()) {
    auto [node, flipped] = stack.back();
    stack.pop_back();
    if (const auto* leaf = std::get_if<Node::Leaf>(&node->body)) {
      if (!flipped) out.insert(out.end(), leaf->moves.begin(), leaf->moves.end());
      else
        for (auto it = leaf->moves.rbegin(); it != leaf->moves.rend(); ++it) out.push_back(it->inverse());
    } else if (const auto* cat = std::get_if<Node::Concat>(&node->body)) {
      if (!flipped) {
        stack.emplace_back(cat->right.get(), false);
        stack.emplace_back(cat->left.get(), false);
      } else {
        stack.emplace_back(cat->left.get(), true);
        stack.emplace_back(cat->right.get(), true);
      }
    } else {
      stack.emplace_back(std::get<Node::Reverse>(node->body).inner.get(), !flipped);
    }
  }
  return out;
}

namespace {

StepOutcome fail(std::string why) { return {std::nullopt, std::move(why)}; }

bool conflicts(const Graph& g, const VertexSet& s, VertexId v) {
  for (VertexId w : s)
    if (g.adjacent(v, w)) return true;
  return false;
}

}  // namespace

StepOutcome step_valid(const Rule& rule, const Graph& g, const VertexSet& s, const Move& m) {
  const bool swap_move = m.op == Move::Op::jump || m.op == Move::Op::slide;
  if (!g.has_vertex(m.v)) return fail("unknown vertex " + std::to_string(m.v));
  if (swap_move && !g.has_vertex(m.u)) return fail("unknown vertex " + std::to_string(m.u));

  switch (rule.kind) {
    case Rule::Kind::tar:
      if (swap_move) return fail(rule.to_string() + " allows only add and remove moves");
      break;
    case Rule::Kind::tj:
      if (!swap_move) return fail("TJ allows only jump moves");
      break;
    case Rule::Kind::ts:
      if (m.op != Move::Op::slide) return fail("TS allows only slide moves");
      break;
  }

  VertexSet next = s;
  if (m.op == Move::Op::add) {
    if (s.contains(m.v)) return fail("vertex " + std::to_string(m.v) + " already holds a token");
    if (conflicts(g, s, m.v)) return fail("adding " + std::to_string(m.v) + " breaks independence");
    next.insert(m.v);
  } else if (m.op == Move::Op::remove) {
    if (!next.erase(m.v)) return fail("vertex " + std::to_string(m.v) + " holds no token");
  } else {
    if (!s.contains(m.u)) return fail("vertex " + std::to_string(m.u) + " holds no token");
    if (s.contains(m.v)) return fail("vertex " + std::to_string(m.v) + " already holds a token");
    if (m.op == Move::Op::slide && !g.adjacent(m.u, m.v))
      return fail("slide endpoints " + std::to_string(m.u) + " and " + std::to_string(m.v) + " are not adjacent");
    next.erase(m.u);
    if (conflicts(g, next, m.v)) return fail("moving to " + std::to_string(m.v) + " breaks independence");
    next.insert(m.v);
  }

  if (rule.kind == Rule::Kind::tar && std::min(s.size(), next.size()) < static_cast<std::size_t>(rule.k))
    return fail("set size drops below threshold " + std::to_string(rule.k));
  return {std::move(next), {}};
}

VerifyOutcome verify_sequence(const Graph& g, const ReconfSequence& seq) {
  for (VertexId v : seq.start)
    if (!g.has_vertex(v)) throw InputError("start set mentions unknown vertex " + std::to_string(v));
  if (!is_independent(g, seq.start)) throw InputError("start set is not independent");
  VertexSet cur = seq.start;
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    auto step = step_valid(seq.rule, g, cur, seq.moves[i]);
    if (!step) return {std::nullopt, i + 1, std::move(step.violation)};
    cur = std::move(*step.next);
  }
  return {std::move(cur), 0, {}};
}

int tj_threshold(const VertexSet& s) { return s.empty() ? 0 : static_cast<int>(s.size()) - 1; }

}  // namespace reconf

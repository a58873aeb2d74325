#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reconf/graph.hpp"

namespace reconf {

/// Reconfiguration rule. Only TAR carries a threshold.
struct Rule {
  enum class Kind { tar, tj, ts };

  Kind kind = Kind::tar;
  int k = 0;

  static Rule tar(int k);
  static Rule tj() { return {Kind::tj, 0}; }
  static Rule ts() { return {Kind::ts, 0}; }

  bool operator==(const Rule&) const = default;
  std::string to_string() const;
};

/// One step. `v` is the vertex added or removed; for jumps and slides `u` is
/// the vertex the token leaves and `v` the vertex it arrives at.
struct Move {
  enum class Op { add, remove, jump, slide };

  Op op = Op::add;
  VertexId v = 0;
  VertexId u = 0;

  static Move add(VertexId v) { return {Op::add, v, 0}; }
  static Move remove(VertexId v) { return {Op::remove, v, 0}; }
  static Move jump(VertexId from, VertexId to) { return {Op::jump, to, from}; }
  static Move slide(VertexId from, VertexId to) { return {Op::slide, to, from}; }

  /// The move undoing this one.
  Move inverse() const;

  bool operator==(const Move&) const = default;
  std::string to_string() const;
};

const char* to_string(Move::Op op);

/// An immutable move list with O(1) concatenation and reversal.
///
/// Certificates are assembled from many sub-sequences (and their reversals);
/// this keeps the assembly cost independent of the sequence lengths. Use
/// materialize() to obtain the flat list.
class MovePath {
 public:
  MovePath() = default;
  explicit MovePath(std::vector<Move> moves);

  std::size_t size() const;
  bool empty() const { return size() == 0; }

  MovePath then(const MovePath& next) const;
  MovePath reversed() const;
  std::vector<Move> materialize() const;

 private:
  struct Node;
  explicit MovePath(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

struct ReconfSequence {
  Rule rule;
  VertexSet start;
  std::vector<Move> moves;
};

/// Outcome of checking a step or a whole sequence.
struct StepOutcome {
  std::optional<VertexSet> next;
  std::string violation;

  explicit operator bool() const { return next.has_value(); }
};

struct VerifyOutcome {
  std::optional<VertexSet> final_set;
  /// 1-based position of the first illegal move (0 when valid).
  std::size_t failed_move = 0;
  std::string violation;

  explicit operator bool() const { return final_set.has_value(); }
};

/// Applies `m` to the independent set `s` under `rule`.
StepOutcome step_valid(const Rule& rule, const Graph& g, const VertexSet& s, const Move& m);

/// Applies all moves left to right and reports the first illegal one.
/// Throws InputError if the start set is not an independent set of `g`.
VerifyOutcome verify_sequence(const Graph& g, const ReconfSequence& seq);

/// TAR threshold whose reachability coincides with TJ reachability.
int tj_threshold(const VertexSet& s);

}  // namespace reconf

#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "reconf/errors.hpp"
#include "reconf/rules.hpp"

namespace reconf {
namespace {

constexpr VertexId a = 1, b = 2, c = 3;

TEST(StepTest, TarAddAndRemove) {
  Graph p3 = graphs::path(3);
  auto add = step_valid(Rule::tar(1), p3, {a}, Move::add(c));
  ASSERT_TRUE(add);
  EXPECT_EQ(*add.next, (VertexSet{a, c}));

  auto below = step_valid(Rule::tar(1), p3, {a}, Move::remove(a));
  EXPECT_FALSE(below);
  EXPECT_NE(below.violation.find("threshold"), std::string::npos);

  EXPECT_FALSE(step_valid(Rule::tar(0), p3, {a}, Move::add(b)));
  EXPECT_FALSE(step_valid(Rule::tar(0), p3, {a}, Move::remove(c)));
  EXPECT_FALSE(step_valid(Rule::tar(0), p3, {a}, Move::jump(a, c)));
}

TEST(StepTest, SlideNeedsAnEdgeAndIndependence) {
  Graph c4 = graphs::cycle(4);
  EXPECT_FALSE(step_valid(Rule::ts(), c4, {1, 3}, Move::slide(1, 2)));
  Graph p3 = graphs::path(3);
  EXPECT_TRUE(step_valid(Rule::ts(), p3, {a}, Move::slide(a, b)));
  EXPECT_FALSE(step_valid(Rule::ts(), p3, {a}, Move::slide(a, c)));
  EXPECT_FALSE(step_valid(Rule::ts(), p3, {a}, Move::jump(a, b)));
  EXPECT_TRUE(step_valid(Rule::tj(), p3, {a}, Move::jump(a, c)));
  EXPECT_TRUE(step_valid(Rule::tj(), p3, {a}, Move::slide(a, b)));
  EXPECT_FALSE(step_valid(Rule::tj(), p3, {a}, Move::jump(b, c)));
}

TEST(VerifyTest, EmptyListEndsAtStart) {
  auto out = verify_sequence(graphs::path(3), {Rule::tar(1), {a}, {}});
  ASSERT_TRUE(out);
  EXPECT_EQ(*out.final_set, (VertexSet{a}));
}

TEST(VerifyTest, AddThenRemove) {
  auto out = verify_sequence(graphs::path(3), {Rule::tar(1), {a}, {Move::add(c), Move::remove(a)}});
  ASSERT_TRUE(out);
  EXPECT_EQ(*out.final_set, (VertexSet{c}));
}

// Under TAR(2) the one-token start already breaks the floor, so the first
// move is the one that fails.
TEST(VerifyTest, ReportsFirstIllegalMove) {
  auto out = verify_sequence(graphs::path(3), {Rule::tar(2), {a}, {Move::add(c), Move::remove(a)}});
  EXPECT_FALSE(out);
  EXPECT_EQ(out.failed_move, 1u);

  auto later = verify_sequence(graphs::path(3), {Rule::tar(1), {a}, {Move::add(c), Move::remove(a), Move::remove(c)}});
  EXPECT_FALSE(later);
  EXPECT_EQ(later.failed_move, 3u);
}

TEST(VerifyTest, RejectsDependentStart) {
  EXPECT_THROW(verify_sequence(graphs::path(3), {Rule::tar(0), {a, b}, {}}), InputError);
}

TEST(TjThresholdTest, Examples) {
  EXPECT_EQ(tj_threshold({1, 2, 3}), 2);
  EXPECT_EQ(tj_threshold({1}), 0);
  EXPECT_EQ(tj_threshold({}), 0);
}

TEST(MovePathTest, ConcatenationAndReversal) {
  MovePath p(std::vector<Move>{Move::add(1), Move::remove(2)});
  MovePath q(std::vector<Move>{Move::add(3)});
  EXPECT_EQ(p.then(q).materialize(), (std::vector<Move>{Move::add(1), Move::remove(2), Move::add(3)}));
  EXPECT_EQ(p.then(q).reversed().materialize(),
            (std::vector<Move>{Move::remove(3), Move::add(2), Move::remove(1)}));
  EXPECT_EQ(p.reversed().reversed().materialize(), p.materialize());
  EXPECT_EQ(p.then(q).size(), 3u);
  EXPECT_TRUE(MovePath().empty());
}

TEST(RuleTest, NegativeThresholdRejected) { EXPECT_THROW(Rule::tar(-1), InputError); }

// Random TAR walks: lowering the threshold keeps them valid, and the
// reversed walk leads back to the start.
TEST(RulesPropertyTest, MonotoneAndReversible) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_gnp(rng, 3 + static_cast<int>(rng() % 9), 0.3);
    VertexSet s = testing::random_independent(rng, g, 6);
    const int k = static_cast<int>(rng() % (s.size() + 1));
    VertexSet cur = s;
    std::vector<Move> moves;
    for (int step = 0; step < 30; ++step) {
      VertexId v = g.id(rng() % g.order());
      Move m = cur.contains(v) ? Move::remove(v) : Move::add(v);
      if (auto next = step_valid(Rule::tar(k), g, cur, m)) {
        cur = *next.next;
        moves.push_back(m);
      }
    }
    for (int lower = k; lower >= 0; --lower) {
      auto out = verify_sequence(g, {Rule::tar(lower), s, moves});
      ASSERT_TRUE(out);
      EXPECT_EQ(*out.final_set, cur);
    }
    std::vector<Move> back = MovePath(moves).reversed().materialize();
    auto out = verify_sequence(g, {Rule::tar(k), cur, back});
    ASSERT_TRUE(out);
    EXPECT_EQ(*out.final_set, s);
  }
}

}  // namespace
}  // namespace reconf

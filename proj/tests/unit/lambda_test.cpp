#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "reconf/decomposition.hpp"
#include "reconf/errors.hpp"
#include "reconf/lambda.hpp"
#include "reconf/mis.hpp"
#include "reconf/oracle.hpp"

namespace reconf {
namespace {

void expect_certified(const Graph& g, const LambdaResult& r) {
  auto out = verify_sequence(g, r.sequence());
  ASSERT_TRUE(out) << "move " << out.failed_move << ": " << out.violation;
  EXPECT_EQ(*out.final_set, r.reached);
  EXPECT_EQ(static_cast<int>(r.reached.size()), r.size);
}

std::vector<LambdaTable> tables_for(const Graph& g, const ModulePartition& parts, const VertexSet& s) {
  std::vector<LambdaTable> out;
  for (const auto& p : parts.parts) out.push_back(lambda_all(induced_subgraph(g, p), s.intersected(p)));
  return out;
}

TEST(LambdaNdTest, EdgelessGraphStartingFull) {
  Graph i5 = graphs::edgeless(5);
  for (int k = 0; k <= 5; ++k) {
    LambdaResult r = lambda_nd(i5, i5.vertices(), k);
    EXPECT_EQ(r.size, 5);
    EXPECT_TRUE(r.path.empty());
  }
}

TEST(LambdaNdTest, StarCentreIsFrozenAtOne) {
  Graph star = graphs::star(2);  // centre 1, leaves 2 and 3
  LambdaResult frozen = lambda_nd(star, {1}, 1);
  EXPECT_EQ(frozen.size, 1);
  EXPECT_EQ(frozen.reached, (VertexSet{1}));
  LambdaResult free = lambda_nd(star, {1}, 0);
  EXPECT_EQ(free.size, 2);
  EXPECT_EQ(free.reached, (VertexSet{2, 3}));
  expect_certified(star, free);
}

TEST(LambdaNdTest, RejectsThresholdAboveSetSize) {
  EXPECT_THROW(lambda_nd(graphs::path(3), {1}, 2), InputError);
  EXPECT_THROW(lambda_nd(graphs::path(3), {1, 2}, 0), InputError);
}

TEST(ShrinkModuleTest, NothingToDeleteWhenModuleIsIndependent) {
  Graph c4 = graphs::cycle(4);
  Graph same = shrink_module(c4, {}, {2, 4}, {2, 4});
  EXPECT_EQ(same.edges(), c4.edges());
}

TEST(ShrinkModuleTest, DeletesNonWitnessVerticesAndKeepsLambda) {
  // P3 a-b-c joined to d.
  Graph g = graphs::join(graphs::path(3), graphs::edgeless(1));
  Graph h = shrink_module(g, {1}, {1, 2, 3}, {1, 3});
  EXPECT_EQ(h.vertices(), (VertexSet{1, 3, 4}));
  for (int k = 0; k <= 1; ++k) EXPECT_EQ(oracle_lambda(g, {1}, k), oracle_lambda(h, {1}, k));
}

TEST(ShrinkModuleTest, RejectsBadArguments) {
  Graph p3 = graphs::path(3);
  EXPECT_THROW(shrink_module(p3, {}, {1, 2}, {1}), InputError);        // not a module
  EXPECT_THROW(shrink_module(p3, {}, {1, 3}, {1}), InputError);        // not maximum
  Graph g = graphs::join(graphs::path(3), graphs::edgeless(1));
  EXPECT_THROW(shrink_module(g, {2}, {1, 2, 3}, {1, 3}), InputError);  // start token outside A
}

TEST(LambdaStepTest, SingletonPartsMatchTwinSearch) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testing::random_gnp(rng, 2 + static_cast<int>(rng() % 8), 0.4);
    VertexSet s = testing::random_independent(rng, g, 5);
    ModulePartition singles;
    for (VertexId v : g.vertices()) singles.parts.push_back({v});
    for (int k = 0; k <= static_cast<int>(s.size()); ++k) {
      LambdaResult step = lambda_step(g, k, s, singles, tables_for(g, singles, s), EngineOptions{true});
      EXPECT_EQ(step.size, lambda_nd(g, s, k).size);
      expect_certified(g, step);
    }
  }
}

TEST(LambdaStepTest, FrozenSetAlreadyMaximum) {
  Graph c4 = graphs::cycle(4);
  ModulePartition parts{{{1, 3}, {2, 4}}, {}};
  LambdaResult r = lambda_step(c4, 1, {1, 3}, parts, tables_for(c4, parts, {1, 3}), EngineOptions{true});
  EXPECT_EQ(r.size, 2);
  EXPECT_EQ(r.reached, (VertexSet{1, 3}));
}

TEST(LambdaStepTest, StarCentreAtThresholdZero) {
  Graph star = graphs::star(3);
  ModulePartition parts{{{1}, {2, 3, 4}}, {}};
  LambdaResult r = lambda_step(star, 0, {1}, parts, tables_for(star, parts, {1}), EngineOptions{true});
  EXPECT_EQ(r.size, 3);
  EXPECT_EQ(r.reached, (VertexSet{2, 3, 4}));
  expect_certified(star, r);
}

TEST(LambdaStepTest, RejectsMalformedInput) {
  Graph c4 = graphs::cycle(4);
  ModulePartition good{{{1, 3}, {2, 4}}, {}};
  auto tables = tables_for(c4, good, {1, 3});
  ModulePartition not_modules{{{1, 2}, {3, 4}}, {}};
  EXPECT_THROW(lambda_step(c4, 1, {1, 3}, not_modules, tables), InputError);
  ModulePartition partial{{{1, 3}}, {}};
  EXPECT_THROW(lambda_step(c4, 1, {1, 3}, partial, std::span(tables).first(1)), InputError);
  EXPECT_THROW(lambda_step(c4, 1, {1, 3}, good, std::span(tables).first(1)), InputError);
  std::swap(tables[0], tables[1]);
  EXPECT_THROW(lambda_step(c4, 1, {1, 3}, good, tables), InputError);
  EXPECT_THROW(lambda_step(c4, 3, {1, 3}, good, tables_for(c4, good, {1, 3})), InputError);
}

TEST(LambdaAllTest, Examples) {
  Graph star = graphs::star(3);
  LambdaTable t = lambda_all(star, {1});
  ASSERT_EQ(t.entries.size(), 2u);
  EXPECT_EQ(t.at(0).size, 3);
  EXPECT_EQ(t.at(1).size, 1);

  Graph i4 = graphs::edgeless(4);
  LambdaTable e = lambda_all(i4, {1, 2});
  EXPECT_EQ(e.at(1).size, 4);
  EXPECT_EQ(e.at(2).size, 4);

  LambdaTable c4 = lambda_all(graphs::cycle(4), {1, 3});
  EXPECT_EQ(c4.at(1).size, 2);
  EXPECT_EQ(c4.at(2).size, 2);
}

TEST(LambdaTest, ThresholdZeroGivesAlpha) {
  Graph c5 = graphs::cycle(5);
  EXPECT_EQ(lambda(c5, {1}, 0).size, alpha(c5).size);
  EXPECT_THROW(lambda(c5, {1}, 2), InputError);
  EXPECT_THROW(lambda(c5, {1, 2}, 1), InputError);
}

class LambdaPropertyTest : public ::testing::TestWithParam<int> {};

// Checks the engine invariants after every rule application, compares each
// table entry with exhaustive search and verifies every sequence.
TEST_P(LambdaPropertyTest, AgreesWithExhaustiveSearch) {
  const auto seed = static_cast<std::uint64_t>(GetParam());
  for (int trial = 0; trial < 40; ++trial) {
    std::mt19937_64 rng(seed * 1000 + static_cast<std::uint64_t>(trial));
    Instance in = gen_instance(rng(), GenProfile{3 + static_cast<int>(rng() % 11), 2 + static_cast<int>(rng() % 6),
                                                 Rule::Kind::tar});
    const Graph& g = in.graph;
    SCOPED_TRACE(::testing::Message() << "seed " << seed << " trial " << trial << " S " << in.start.to_string());
    LambdaTable t = lambda_all(g, in.start, EngineOptions{true});
    ASSERT_EQ(t.entries.size(), in.start.size() + 1);
    EXPECT_EQ(t.at(0).size, alpha(g).size);
    for (int j = 0; j <= static_cast<int>(in.start.size()); ++j) {
      EXPECT_EQ(t.at(j).size, oracle_lambda(g, in.start, j)) << "threshold " << j;
      expect_certified(g, t.at(j));
      if (j > 0) EXPECT_LE(t.at(j).size, t.at(j - 1).size);
      EXPECT_EQ(lambda(g, in.start, j, EngineOptions{true}).size, t.at(j).size);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LambdaPropertyTest, ::testing::Range(1, 6));

}  // namespace
}  // namespace reconf

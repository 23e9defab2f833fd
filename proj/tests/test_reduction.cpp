#include <gtest/gtest.h>

#include "random_instances.hpp"
#include "wmc/bounds.hpp"
#include "wmc/oracle.hpp"
#include "wmc/reduction.hpp"

using namespace wmc;

namespace {

WeightedFormula worked_example() {
  WeightedFormula f(4);
  f.add_clause({-1, -2, -3});
  f.add_clause({2, 3});
  f.add_clause({-1, 3});
  f.add_clause({3, 4});
  return f;
}

}  // namespace

TEST(Reduction, WorkedExampleShape) {
  ReducedInstance r = reduce_to_2sat_pm(worked_example());
  const WeightedFormula& g = r.formula;
  EXPECT_EQ(g.variable_count(), 5u);
  EXPECT_EQ(g.clause_count(), 6u);
  EXPECT_EQ(g.weight(5), RingValue(-1));
  EXPECT_EQ(g.max_width(), 2u);
  EXPECT_EQ(r.map.original_variables, 4u);
  EXPECT_EQ(r.map.fresh_variables.at(0), 5u);
  // (x1 v -y), (x2 v -y), (x3 v -y) replace the wide clause.
  EXPECT_EQ(g.clause(0).literals[0].to_dimacs(), 1);
  EXPECT_EQ(g.clause(0).literals[1].to_dimacs(), -5);
  EXPECT_EQ(g.clause(2).literals[0].to_dimacs(), 3);
  EXPECT_EQ(r.map.reduced_clause_origin[1], (ClauseOrigin{0, 1}));
  EXPECT_EQ(r.map.reduced_clause_origin[3], (ClauseOrigin{1, std::nullopt}));
  EXPECT_EQ(brute_force_count(g), RingValue(7));
}

TEST(Reduction, NarrowFormulaUnchanged) {
  WeightedFormula f(3);
  f.add_clause({1, 2});
  f.add_clause({-3});
  ReducedInstance r = reduce_to_2sat_pm(f);
  EXPECT_EQ(r.formula, f);
  EXPECT_TRUE(r.map.fresh_variables.empty());
}

TEST(Reduction, RejectsWeightedInput) {
  WeightedFormula f(3);
  f.set_weight(1, RingValue(2));
  EXPECT_THROW(reduce_to_2sat_pm(f), UnsupportedInstance);
}

TEST(Reduction, PredictedSizeMatchesWorkedExample) {
  ReducedSize size = predict_reduced_size(instance_stats(worked_example()));
  EXPECT_EQ(size.variables, 5u);
  EXPECT_EQ(size.clauses, 6u);
  EXPECT_EQ(size.clause_bound, 9u);
}

TEST(Reduction, MapFormat) {
  std::string text = format_reduction_map(reduce_to_2sat_pm(worked_example()).map);
  EXPECT_NE(text.find("c map original_variables 4\n"), std::string::npos);
  EXPECT_NE(text.find("c map fresh 1 5\n"), std::string::npos);
  EXPECT_NE(text.find("c map origin 2 1 2\n"), std::string::npos);
  EXPECT_NE(text.find("c map origin 4 2\n"), std::string::npos);
}

TEST(ReductionProperty, SizesAndCountsMatch) {
  gen::Rng rng(21);
  for (int accepted = 0; accepted < 300;) {
    WeightedFormula f = normalize(gen::random_cnf(rng, {3, 10, 6, 0.2, 3.0}));
    ReducedInstance r = reduce_to_2sat_pm(f);
    if (r.formula.variable_count() > 20) continue;
    ++accepted;
    InstanceStats stats = instance_stats(f);
    ReducedSize size = predict_reduced_size(stats);
    EXPECT_EQ(r.formula.variable_count(), size.variables);
    EXPECT_EQ(r.formula.clause_count(), size.clauses);
    EXPECT_LE(size.clauses, size.clause_bound);
    EXPECT_LE(r.formula.max_width(), 2u);
    EXPECT_EQ(r.map.reduced_clause_origin.size(), r.formula.clause_count());
    EXPECT_EQ(brute_force_count(r.formula), brute_force_count(f));
  }
}

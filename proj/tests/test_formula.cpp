#include <gtest/gtest.h>

#include "wmc/formula.hpp"

using namespace wmc;

TEST(Literal, DimacsRoundTrip) {
  EXPECT_EQ(Literal::from_dimacs(-3).variable, 3u);
  EXPECT_TRUE(Literal::from_dimacs(-3).negated);
  EXPECT_EQ(Literal::from_dimacs(5).to_dimacs(), 5);
  EXPECT_EQ((~Literal::from_dimacs(5)).to_dimacs(), -5);
  EXPECT_THROW(Literal::from_dimacs(0), MalformedInstance);
}

TEST(Formula, AddClauseValidatesRange) {
  WeightedFormula f(2);
  EXPECT_THROW(f.add_clause({1, 3}), MalformedInstance);
  f.add_clause({1, -2});
  EXPECT_EQ(f.clause_count(), 1u);
}

TEST(Formula, AddVariable) {
  WeightedFormula f(2);
  Var y = f.add_variable(RingValue(-1));
  EXPECT_EQ(y, 3u);
  EXPECT_EQ(f.weight(3), RingValue(-1));
  EXPECT_TRUE(f.is_signed());
  EXPECT_FALSE(f.is_plain());
  EXPECT_EQ(f.negative_variables(), std::vector<Var>{3});
}

TEST(Formula, ZeroWeightRejected) {
  WeightedFormula f(1);
  EXPECT_THROW(f.set_weight(1, RingValue(0)), MalformedInstance);
}

TEST(Formula, RingKind) {
  WeightedFormula f(2);
  EXPECT_EQ(f.ring_kind(), RingKind::Integer);
  f.set_weight(1, RingValue(Rational(1, 2)));
  EXPECT_EQ(f.ring_kind(), RingKind::Rational);
  f.add_clause({1}, RingValue(Complex(0.0, 1.0)));
  EXPECT_EQ(f.ring_kind(), RingKind::Complex);
  EXPECT_FALSE(f.all_hard());
}

TEST(Formula, NormalizeDropsTautologiesAndDuplicates) {
  WeightedFormula f(3);
  f.add_clause({1, -1, 2});
  f.add_clause({2, 2, 3});
  f.add_clause({3, 2});
  f.add_clause({1}, RingValue(2));
  f.add_clause({1}, RingValue(2));
  WeightedFormula g = normalize(f);
  ASSERT_EQ(g.clause_count(), 3u);
  EXPECT_EQ(g.clause(0).width(), 2u);
  EXPECT_EQ(g.clause(1).label, RingValue(2));
  EXPECT_EQ(g.clause(2).label, RingValue(2));
}

TEST(Formula, EvaluateWeightedSummand) {
  WeightedFormula f(2);
  f.set_weight(1, RingValue(3));
  f.add_clause({-1, -2}, RingValue(Rational(1, 2)));
  EXPECT_EQ(evaluate(f, Assignment::from_bits(2, 0b01)), RingValue(3));
  EXPECT_EQ(evaluate(f, Assignment::from_bits(2, 0b11)), RingValue(Rational(3, 2)));
  EXPECT_EQ(evaluate(f, Assignment::from_bits(2, 0b10)), RingValue(1));
}

TEST(Formula, EvaluateRejectsPartialAssignment) {
  WeightedFormula f(2);
  Assignment a(2);
  a.set(1, true);
  EXPECT_FALSE(a.is_total());
  EXPECT_THROW(evaluate(f, a), std::exception);
}

TEST(Formula, WithUnitWeights) {
  WeightedFormula f(2);
  f.set_weight(2, RingValue(-1));
  f.add_clause({1, 2});
  WeightedFormula g = with_unit_weights(f);
  EXPECT_TRUE(g.is_plain());
  EXPECT_EQ(g.clauses(), f.clauses());
}

#include "support.hpp"

#include "gaut/error.hpp"
#include "gaut/relation.hpp"

#include <gtest/gtest.h>

namespace gaut {
namespace {

using namespace gaut::test;

StateRelation rel(Rank rank, std::size_t q, std::vector<StatePair> pairs) {
  return StateRelation(rank, q, std::move(pairs));
}

TEST(StateRelation, ValidatesAndNormalises) {
  StateRelation r = rel({1, 1}, 2, {{{1}, {0}}, {{0}, {1}}, {{1}, {0}}});
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(r.pairs().front(), (StatePair{{0}, {1}}));
  EXPECT_THROW(rel({1, 1}, 2, {{{0, 0}, {1}}}), Error);
  EXPECT_THROW(rel({1, 1}, 2, {{{2}, {1}}}), Error);
}

TEST(Compose, Examples) {
  const DSet d = tsrel_dset(2);
  EXPECT_EQ(compose(d.s, d.s), unit_e(2, 2));
  for (std::size_t q = 1; q <= 3; ++q) {
    const DSet dq = tsrel_dset(q);
    EXPECT_EQ(compose(dq.d12, dq.d21), unit_e(q, 1));
  }
  std::mt19937 rng(1);
  for (int i = 0; i < 20; ++i) {
    StateRelation r = random_relation(rng, 3, {1, 2});
    EXPECT_EQ(compose(unit_e(3, 1), r), r);
    EXPECT_EQ(compose(r, unit_e(3, 2)), r);
  }
  EXPECT_THROW(compose(unit_e(2, 1), unit_e(2, 2)), RankMismatch);
  EXPECT_THROW(compose(unit_e(2, 1), unit_e(3, 1)), Error);
}

TEST(SumRel, Examples) {
  std::mt19937 rng(2);
  StateRelation r = random_relation(rng, 2, {2, 1});
  EXPECT_EQ(sum_rel(unit_e(2, 0), r), r);
  EXPECT_EQ(unit_e(2, 0), rel({0, 0}, 2, {{{}, {}}}));
  EXPECT_EQ(sum_rel(unit_e(2, 1), unit_e(2, 1)), unit_e(2, 2));

  // Enumerated: every pair (ε, g1 g2).
  const DSet d = tsrel_dset(2);
  std::vector<StatePair> expected;
  for (State g1 = 0; g1 < 2; ++g1)
    for (State g2 = 0; g2 < 2; ++g2)
      expected.push_back({{}, {g1, g2}});
  EXPECT_EQ(sum_rel(d.d01, d.d01), rel({0, 2}, 2, expected));
  EXPECT_EQ(sum_rel(d.d01, d.d01).size(), 4u);
}

TEST(UnitE, Examples) {
  EXPECT_EQ(unit_e(3, 0).pairs(), (std::vector<StatePair>{{{}, {}}}));
  EXPECT_EQ(unit_e(2, 1), rel({1, 1}, 2, {{{0}, {0}}, {{1}, {1}}}));
  EXPECT_EQ(unit_e(2, 2), sum_rel(unit_e(2, 1), unit_e(2, 1)));
}

TEST(Budget, RefusesLargeRanks) {
  EXPECT_NO_THROW(check_budget(10, {3, 4}));
  EXPECT_THROW(check_budget(10, {4, 4}), BudgetExceeded);
  EXPECT_THROW(unit_e(2, 24), BudgetExceeded);
  EXPECT_THROW(unit_e(10, 4), BudgetExceeded);
}

TEST(TsrelDset, Values) {
  const DSet d = tsrel_dset(2);
  EXPECT_EQ(d.s, rel({2, 2}, 2,
                     {{{0, 0}, {0, 0}}, {{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}, {{1, 1}, {1, 1}}}));
  EXPECT_EQ(d.d21, rel({2, 1}, 2, {{{0, 0}, {0}}, {{1, 1}, {1}}}));
  EXPECT_EQ(d.d12, rel({1, 2}, 2, {{{0}, {0, 0}}, {{1}, {1, 1}}}));
  EXPECT_EQ(d.d01, rel({0, 1}, 2, {{{}, {0}}, {{}, {1}}}));
  EXPECT_EQ(d.d10, rel({1, 0}, 2, {{{0}, {}}, {{1}, {}}}));

  // One state: every D-relation is its single total diagonal.
  const DSet one = tsrel_dset(1);
  EXPECT_EQ(one.s, unit_e(1, 2));
  EXPECT_EQ(one.d21.size(), 1u);
  EXPECT_EQ(one.d01.size(), 1u);
  EXPECT_THROW(tsrel_dset(0), EmptyStateSet);
}

TEST(Diagonal, MatchesDesignatedComposites) {
  for (std::size_t q = 1; q <= 3; ++q) {
    const DSet d = tsrel_dset(q);
    EXPECT_EQ(diagonal(q, 1, 3), compose(d.d12, sum_rel(unit_e(q, 1), d.d12)));
    EXPECT_EQ(diagonal(q, 3, 1), compose(sum_rel(unit_e(q, 1), d.d21), d.d21));
    EXPECT_EQ(diagonal(q, 1, 1), unit_e(q, 1));
    EXPECT_EQ(diagonal(q, 0, 0), unit_e(q, 0));
  }
}

TEST(Laws, AssociativityAndDistributivity) {
  std::mt19937 rng(3);
  auto rank_pick = [&] { return static_cast<std::size_t>(rng() % 3); };
  for (int i = 0; i < 200; ++i) {
    const std::size_t q = 1 + rng() % 3;
    const std::size_t a = rank_pick(), b = rank_pick(), c = rank_pick(), e = rank_pick();
    StateRelation r = random_relation(rng, q, {a, b});
    StateRelation s = random_relation(rng, q, {b, c});
    StateRelation t = random_relation(rng, q, {c, e});
    EXPECT_EQ(compose(compose(r, s), t), compose(r, compose(s, t)));
    EXPECT_EQ(sum_rel(sum_rel(r, s), t), sum_rel(r, sum_rel(s, t)));

    const std::size_t a2 = rank_pick(), b2 = rank_pick(), c2 = rank_pick();
    StateRelation r2 = random_relation(rng, q, {a2, b2});
    StateRelation s2 = random_relation(rng, q, {b2, c2});
    if (a + a2 + c + c2 > 6 || b + b2 > 3)
      continue;
    EXPECT_EQ(sum_rel(compose(r, s), compose(r2, s2)), compose(sum_rel(r, r2), sum_rel(s, s2)));
  }
}

TEST(Laws, EvaluationRankMatchesTermRank) {
  std::mt19937 rng(4);
  const auto alphabet = small_alphabet();
  for (int i = 0; i < 200; ++i) {
    const std::size_t q = 1 + rng() % 3;
    AtomValues atoms;
    for (const AtomSymbol& s : alphabet)
      atoms.emplace(s.name, random_relation(rng, q, s.rank));
    Term t = random_small_term(rng, 3, 4, alphabet);
    EXPECT_EQ(evaluate_bottom_up(t, tsrel_dset(q), atoms).rank(), rank_of(t));
  }
}

TEST(Axioms, HoldForTsrel) {
  for (std::size_t q = 1; q <= 3; ++q) {
    const DSet d = tsrel_dset(q);
    const std::vector<StateRelation> gens{make_color_automaton(q).delta().at("a"), d.d21, d.d12,
                                          d.s};
    const AxiomReport report = check_axioms(d, gens);
    EXPECT_TRUE(report.all_hold()) << "q=" << q;
    EXPECT_EQ(report.results.size(), 14u + gens.size());
  }
}

TEST(Axioms, CorruptedMergeBreaksSwapAbsorption) {
  // d21 replaced by {(g1 g2, g1)}: the swap is no longer absorbed.
  DSet d = tsrel_dset(2);
  std::vector<StatePair> keep_first;
  for (State g1 = 0; g1 < 2; ++g1)
    for (State g2 = 0; g2 < 2; ++g2)
      keep_first.push_back({{g1, g2}, {g1}});
  d.d21 = rel({2, 1}, 2, keep_first);

  const AxiomReport report = check_axioms(d, std::vector<StateRelation>{});
  EXPECT_FALSE(report.all_hold());
  const auto e7 = std::find_if(report.results.begin(), report.results.end(),
                               [](const AxiomResult& r) { return r.equation == "E7"; });
  ASSERT_NE(e7, report.results.end());
  EXPECT_FALSE(e7->holds);
  ASSERT_TRUE(e7->counterexample);

  // Independent check of the counterexample: exactly one side contains it.
  const StateRelation lhs = compose(d.s, d.d21);
  EXPECT_NE(lhs.contains(e7->counterexample->in, e7->counterexample->out),
            d.d21.contains(e7->counterexample->in, e7->counterexample->out));
}

TEST(Axioms, EquationListShape) {
  const auto eqs = graphoid_equations();
  ASSERT_EQ(eqs.size(), 14u);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    EXPECT_EQ(eqs[i].name, "E" + std::to_string(i + 3));
    EXPECT_EQ(rank_of(eqs[i].lhs), rank_of(eqs[i].rhs)) << eqs[i].name;
  }
  // E7 is s then d21 = d21.
  EXPECT_EQ(eqs[4].lhs, Term::prod(Term::pi(), I(2, 1)));
  EXPECT_EQ(eqs[4].rhs, I(2, 1));
}

TEST(StateSet, Names) {
  const StateSet q = StateSet::numbered(3);
  EXPECT_EQ(q.names, (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_EQ(q.index_of("2"), 1u);
}

} // namespace
} // namespace gaut

#include "gaut/graphoid.hpp"

#include "gaut/error.hpp"
#include "gaut/hypergraph.hpp"

#include <algorithm>

namespace gaut {

DSet tsrel_dset(std::size_t num_states) {
  if (num_states == 0)
    throw EmptyStateSet("TSRel needs a nonempty state set");
  std::vector<StatePair> swap;
  for (State a = 0; a < num_states; ++a)
    for (State b = 0; b < num_states; ++b)
      swap.push_back(StatePair{{a, b}, {b, a}});
  return DSet{
      StateRelation(Rank{2, 2}, num_states, std::move(swap)),
      diagonal(num_states, 0, 1),
      diagonal(num_states, 2, 1),
      diagonal(num_states, 1, 0),
      diagonal(num_states, 1, 2),
  };
}

namespace {

const StateRelation* designated(const DSet& d, std::size_t p, std::size_t q) {
  if (p == 0 && q == 1)
    return &d.d01;
  if (p == 2 && q == 1)
    return &d.d21;
  if (p == 1 && q == 0)
    return &d.d10;
  if (p == 1 && q == 2)
    return &d.d12;
  return nullptr;
}

StateRelation eval_rel(const Term& t, const DSet& d, const AtomValues& atoms) {
  switch (t.kind()) {
  case Term::Kind::Atom: {
    auto it = atoms.find(t.symbol().name);
    if (it == atoms.end())
      throw UnknownSymbol("no value for symbol '" + t.symbol().name + "'");
    if (it->second.rank() != t.symbol().rank)
      throw RankMismatch("value of '" + t.symbol().name + "' has the wrong rank");
    return it->second;
  }
  case Term::Kind::Unit:
    return unit_e(d.num_states(), t.width());
  case Term::Kind::Pi:
    return d.s;
  case Term::Kind::IConst:
    if (const StateRelation* r = designated(d, t.p(), t.q()))
      return *r;
    return diagonal(d.num_states(), t.p(), t.q());
  case Term::Kind::Prod:
    return compose(eval_rel(t.left(), d, atoms), eval_rel(t.right(), d, atoms));
  case Term::Kind::Box:
    return sum_rel(eval_rel(t.left(), d, atoms), eval_rel(t.right(), d, atoms));
  }
  throw Error("unreachable term kind");
}

Term e() { return Term::unit(1); }
Term s() { return Term::pi(); }
Term d(std::size_t p, std::size_t q) { return Term::iconst(p, q); }
Term box(Term a, Term b) { return Term::box(std::move(a), std::move(b)); }
Term prod(std::initializer_list<Term> fs) {
  return Term::prod_all(std::vector<Term>(fs));
}

} // namespace

StateRelation evaluate_bottom_up(const Term& t, const DSet& d, const AtomValues& atoms) {
  rank_of(t);
  return eval_rel(t, d, atoms);
}

std::vector<Equation> graphoid_equations() {
  return {
      {"E3", prod({s(), s()}), Term::unit(2)},
      {"E4", prod({box(s(), e()), box(e(), s()), box(s(), e())}),
       prod({box(e(), s()), box(s(), e()), box(e(), s())})},
      {"E5", prod({box(e(), d(2, 1)), d(2, 1)}), prod({box(d(2, 1), e()), d(2, 1)})},
      {"E6", prod({box(e(), d(0, 1)), d(2, 1)}), e()},
      {"E7", prod({s(), d(2, 1)}), d(2, 1)},
      {"E8", prod({box(e(), d(0, 1)), s()}), box(d(0, 1), e())},
      {"E9", prod({box(s(), e()), box(e(), s()), box(d(2, 1), e())}),
       prod({box(e(), d(2, 1)), s()})},
      {"E10", prod({d(1, 2), box(e(), d(1, 2))}), prod({d(1, 2), box(d(1, 2), e())})},
      {"E11", prod({d(1, 2), box(e(), d(1, 0))}), e()},
      {"E12", prod({d(1, 2), s()}), d(1, 2)},
      {"E13", prod({s(), box(e(), d(1, 0))}), box(d(1, 0), e())},
      {"E14", prod({box(d(1, 2), e()), box(e(), s()), box(s(), e())}),
       prod({s(), box(e(), d(1, 2))})},
      {"E15", prod({d(1, 2), d(2, 1)}), e()},
      {"E16", prod({box(d(1, 2), e()), box(e(), d(2, 1))}), prod({d(2, 1), d(1, 2)})},
  };
}

Equation block_equation(const AtomSymbol& p) {
  Term atom = Term::atom(p);
  return Equation{"E17", Term::prod(s_m1_term(p.rank.m), box(atom, e())),
                  Term::prod(box(e(), atom), s_m1_term(p.rank.n))};
}

bool AxiomReport::all_hold() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.holds; });
}

namespace {

AxiomResult compare_relations(const std::string& name, const StateRelation& lhs,
                              const StateRelation& rhs) {
  AxiomResult r{name, lhs == rhs, std::nullopt, std::nullopt};
  if (!r.holds)
    r.counterexample = first_difference(lhs, rhs);
  return r;
}

} // namespace

AxiomReport check_axioms(const DSet& d, std::span<const StateRelation> generators) {
  AxiomReport report;
  const AtomValues none;
  for (const Equation& eq : graphoid_equations())
    report.results.push_back(compare_relations(eq.name, evaluate_bottom_up(eq.lhs, d, none),
                                               evaluate_bottom_up(eq.rhs, d, none)));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const AtomSymbol p{"p", generators[i].rank()};
    const Equation eq = block_equation(p);
    const AtomValues atoms{{"p", generators[i]}};
    AxiomResult r = compare_relations(eq.name, evaluate_bottom_up(eq.lhs, d, atoms),
                                      evaluate_bottom_up(eq.rhs, d, atoms));
    r.generator = i;
    report.results.push_back(std::move(r));
  }
  return report;
}

AxiomReport check_graph_axioms(std::span<const AtomSymbol> generators) {
  AxiomReport report;
  auto check = [&](const Equation& eq) {
    return AxiomResult{eq.name,
                       isomorphic(eval_graph(eq.lhs), eval_graph(eq.rhs)).has_value(),
                       std::nullopt, std::nullopt};
  };
  for (const Equation& eq : graphoid_equations())
    report.results.push_back(check(eq));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    AxiomResult r = check(block_equation(generators[i]));
    r.generator = i;
    report.results.push_back(std::move(r));
  }
  return report;
}

} // namespace gaut

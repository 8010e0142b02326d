#ifndef GAUT_GRAPHOID_HPP
#define GAUT_GRAPHOID_HPP

#include "gaut/relation.hpp"
#include "gaut/term.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gaut {

/// Designated elements of a relational graphoid.
struct DSet {
  StateRelation s;
  StateRelation d01;
  StateRelation d21;
  StateRelation d10;
  StateRelation d12;

  std::size_t num_states() const noexcept { return s.num_states(); }
};

/**
 * The D-set of TSRel(Q) for Q = {0 .. num_states-1}: s swaps two states and
 * each d relation creates, copies, merges or deletes equal states.
 * Throws EmptyStateSet when num_states is 0.
 */
DSet tsrel_dset(std::size_t num_states);

/// Atom values by symbol name.
using AtomValues = std::map<std::string, StateRelation>;

/**
 * Evaluates a term literally as a Rel(Q) expression: atoms from `atoms`, pi
 * to d.s, the four designated constants to their d relations, other I_{p,q}
 * to diagonal(p, q), products by compose() and sums by sum_rel().
 * Every intermediate relation is materialised, so the budget applies to
 * each subterm.
 */
StateRelation evaluate_bottom_up(const Term& t, const DSet& d, const AtomValues& atoms);

/// A graphoid equation lhs = rhs, named E3 .. E17.
struct Equation {
  std::string name;
  Term lhs;
  Term rhs;
};

/// The fourteen fixed equations E3 .. E16 written over pi, e and I_{p,q}.
std::vector<Equation> graphoid_equations();

/// The block-permutation equation E17 instantiated at a generator p.
Equation block_equation(const AtomSymbol& p);

struct AxiomResult {
  std::string equation;
  bool holds = false;
  /// Set for E17 entries: index into the generator list.
  std::optional<std::size_t> generator;
  /// A pair in exactly one of the two sides.
  std::optional<StatePair> counterexample;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool all_hold() const;
};

/**
 * Checks E3 .. E16 as exact relation equalities for the given D-set, then
 * E17 for every generator. Failures are entries in the report.
 */
AxiomReport check_axioms(const DSet& d, std::span<const StateRelation> generators);

/// Same equations in GR(Sigma), each side evaluated by eval_graph and
/// compared up to isomorphism. E17 is checked for every generator symbol.
AxiomReport check_graph_axioms(std::span<const AtomSymbol> generators);

} // namespace gaut

#endif

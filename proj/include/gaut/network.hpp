#ifndef GAUT_NETWORK_HPP
#define GAUT_NETWORK_HPP

#include "gaut/graphoid.hpp"
#include "gaut/relation.hpp"
#include "gaut/term.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace gaut {

/**
 * A Rel(Q) expression unfolded into wire variables and table constraints.
 *
 * Every wire between two leaves of the term is a variable over Q. Each leaf
 * other than a unit contributes one constraint: its relation, read as the
 * set of admissible values of (input wires, output wires). Units pass their
 * wires through. The value of the term is the projection of all solutions
 * onto the boundary wires, which is the relation the term denotes.
 *
 * Solving uses generalized arc consistency and smallest-domain-first
 * branching, so the intermediate relations of the expression are never
 * materialised. At most 64 states are supported.
 */
class WireNetwork {
public:
  using Var = std::uint32_t;
  using Domain = std::uint64_t;

  WireNetwork(const Term& t, const DSet& d, const AtomValues& atoms);

  Rank rank() const noexcept { return rank_; }
  std::size_t num_states() const noexcept { return num_states_; }
  std::size_t variable_count() const noexcept { return var_count_; }
  std::size_t constraint_count() const noexcept { return constraints_.size(); }

  /// The denoted relation. Subject to the materialisation budget.
  StateRelation relation() const;

  bool contains(const StateWord& in, const StateWord& out) const;

  /// True when some solution agrees with every fixed boundary value.
  bool satisfiable(std::span<const std::optional<State>> in,
                   std::span<const std::optional<State>> out) const;

private:
  struct Table {
    std::vector<std::vector<State>> rows;
  };
  struct Constraint {
    std::vector<Var> scope;
    std::shared_ptr<const Table> table;
  };

  std::vector<Var> compile(const Term& t, std::vector<Var> inputs, const DSet& d,
                           const AtomValues& atoms);
  std::shared_ptr<const Table> table_for(const StateRelation& r);
  void add_constraint(std::vector<Var> scope, std::shared_ptr<const Table> table);

  bool propagate(std::vector<Domain>& dom, std::vector<std::size_t> queue) const;
  bool search(std::vector<Domain>& dom) const;
  bool fix(std::vector<Domain>& dom, Var v, State g) const;
  std::vector<Domain> initial_domains() const;
  void enumerate(std::vector<Domain>& dom, const std::vector<Var>& boundary, std::size_t depth,
                 std::vector<StatePair>& out) const;

  Rank rank_;
  std::size_t num_states_;
  Var var_count_ = 0;
  std::vector<Var> inputs_;
  std::vector<Var> outputs_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> watchers_;
  std::map<const StateRelation*, std::shared_ptr<const Table>> table_cache_;
  std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const Table>> diagonal_cache_;
};

} // namespace gaut

#endif

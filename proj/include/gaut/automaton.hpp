#ifndef GAUT_AUTOMATON_HPP
#define GAUT_AUTOMATON_HPP

#include "gaut/graphoid.hpp"
#include "gaut/hypergraph.hpp"
#include "gaut/relation.hpp"
#include "gaut/term.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gaut {

/// Initial or final words: an explicit finite set, or all of Q*.
class WordSet {
public:
  static WordSet universal() { return WordSet(true, {}); }
  static WordSet of(std::vector<StateWord> words) { return WordSet(false, std::move(words)); }

  bool is_universal() const noexcept { return universal_; }
  const std::vector<StateWord>& words() const noexcept { return words_; }
  bool contains(const StateWord& w) const;

  friend bool operator==(const WordSet&, const WordSet&) = default;

private:
  WordSet(bool universal, std::vector<StateWord> words);

  bool universal_;
  std::vector<StateWord> words_;
};

/**
 * Nondeterministic relational graph automaton (Sigma, Q, Rel(Q), delta, I, T).
 * The relational graphoid defaults to TSRel(Q).
 */
class GraphAutomaton {
public:
  /// Throws gaut::Error unless every symbol has a transition of its own rank
  /// over `states`, and every initial/final word ranges over `states`.
  GraphAutomaton(std::vector<AtomSymbol> alphabet, StateSet states, AtomValues delta,
                 WordSet initial, WordSet final_words);
  GraphAutomaton(std::vector<AtomSymbol> alphabet, StateSet states, AtomValues delta,
                 WordSet initial, WordSet final_words, DSet dset);

  const std::vector<AtomSymbol>& alphabet() const noexcept { return alphabet_; }
  const StateSet& states() const noexcept { return states_; }
  const AtomValues& delta() const noexcept { return delta_; }
  const WordSet& initial() const noexcept { return initial_; }
  const WordSet& final_words() const noexcept { return final_; }
  const DSet& dset() const noexcept { return dset_; }
  bool uses_tsrel() const noexcept { return tsrel_; }

  /// Throws UnknownSymbol for a name outside the alphabet.
  const AtomSymbol& symbol(const std::string& name) const;

private:
  std::vector<AtomSymbol> alphabet_;
  StateSet states_;
  AtomValues delta_;
  WordSet initial_;
  WordSet final_;
  DSet dset_;
  bool tsrel_;
};

/**
 * The graphoid morphism extending delta, applied to a term. Computed on the
 * term's wire network (see WireNetwork); agrees with evaluate_bottom_up.
 */
StateRelation extend_delta(const GraphAutomaton& a, const Term& t);

/// Whether extend_delta(a, t) meets (I ∩ Q^m) x (T ∩ Q^n).
bool accepts(const GraphAutomaton& a, const Term& t);

/// A state for every node of the witnessed graph, indexed by node id.
struct RunWitness {
  std::vector<State> assignment;

  friend bool operator==(const RunWitness&, const RunWitness&) = default;
};

/**
 * Node order used by run_search: descending degree (edge endpoint
 * occurrences), ties broken by the larger node id.
 */
std::vector<NodeId> search_order(const Hypergraph& g);

/**
 * First assignment of states to nodes such that every edge's endpoint words
 * lie in its transition relation and the boundary words lie in I x T.
 * Nodes are visited in search_order(), states tried in ascending order, with
 * forward checking along incident edges. Requires a TSRel automaton.
 */
std::optional<RunWitness> run_search(const GraphAutomaton& a, const Hypergraph& g);

/// Calls `visit` on every run in search order until it returns false.
/// Returns the number of runs visited.
std::size_t for_each_run(const GraphAutomaton& a, const Hypergraph& g,
                         const std::function<bool(const RunWitness&)>& visit);

/// Membership in the behaviour: accepts(a, encode_graph(g)).
bool behavior_member(const GraphAutomaton& a, const Hypergraph& g);

} // namespace gaut

#endif

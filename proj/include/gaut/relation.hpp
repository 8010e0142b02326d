#ifndef GAUT_RELATION_HPP
#define GAUT_RELATION_HPP

#include "gaut/term.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gaut {

/// Index of a state in its state set, 0-based.
using State = std::uint32_t;
using StateWord = std::vector<State>;

struct StatePair {
  StateWord in;
  StateWord out;

  friend auto operator<=>(const StatePair&, const StatePair&) = default;
};

/// Largest |Q|^(m+n) for which a relation is materialised.
inline constexpr std::uint64_t kRelationBudget = 10'000'000;

/// Throws BudgetExceeded if |Q|^(m+n) exceeds kRelationBudget.
void check_budget(std::size_t num_states, Rank rank);

/// A relation between Q^m and Q^n, stored as a sorted set of pairs.
class StateRelation {
public:
  StateRelation(Rank rank, std::size_t num_states);
  /// Sorts and deduplicates; throws gaut::Error on a word of the wrong
  /// length or a state out of range.
  StateRelation(Rank rank, std::size_t num_states, std::vector<StatePair> pairs);

  Rank rank() const noexcept { return rank_; }
  std::size_t num_states() const noexcept { return num_states_; }
  const std::vector<StatePair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  bool contains(const StateWord& in, const StateWord& out) const;

  friend bool operator==(const StateRelation&, const StateRelation&) = default;

private:
  Rank rank_;
  std::size_t num_states_;
  std::vector<StatePair> pairs_;
};

/// Relation composition: first r, then s.
StateRelation compose(const StateRelation& r, const StateRelation& s);

/// Parallel pairing: (u1 u2, v1 v2) for (u1,v1) in r and (u2,v2) in s.
StateRelation sum_rel(const StateRelation& r, const StateRelation& s);

/// Identity relation on Q^n.
StateRelation unit_e(std::size_t num_states, std::size_t n);

/// {(g^p, g^q) | g in Q}.
StateRelation diagonal(std::size_t num_states, std::size_t p, std::size_t q);

/// Every word of length `length` over num_states letters, in lexicographic order.
std::vector<StateWord> all_words(std::size_t num_states, std::size_t length);

/// First pair of the symmetric difference, if any.
std::optional<StatePair> first_difference(const StateRelation& a, const StateRelation& b);

/// Names of the states of Q; state i is printed as names[i].
struct StateSet {
  std::vector<std::string> names;

  /// Q = {1, .., k}.
  static StateSet numbered(std::size_t k);

  std::size_t size() const noexcept { return names.size(); }
  /// Index of a name; throws gaut::Error for an unknown name.
  State index_of(const std::string& name) const;

  friend bool operator==(const StateSet&, const StateSet&) = default;
};

} // namespace gaut

#endif

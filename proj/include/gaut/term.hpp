#ifndef GAUT_TERM_HPP
#define GAUT_TERM_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gaut {

/// Input/output arity of an element of a doubly ranked set.
struct Rank {
  std::size_t m = 0;
  std::size_t n = 0;

  friend bool operator==(const Rank&, const Rank&) = default;
};

std::ostream& operator<<(std::ostream& os, const Rank& r);

/// A hyperedge label: a name with a fixed rank.
struct AtomSymbol {
  std::string name;
  Rank rank;

  friend bool operator==(const AtomSymbol&, const AtomSymbol&) = default;
};

/**
 * Magmoid expression over atoms and the elementary constants.
 *
 * A Term is an immutable value sharing its subterms. Ill-ranked products can
 * be built; rank_of() reports them. Product is diagrammatic: in prod(f, g)
 * the outputs of f feed the inputs of g. In box(top, bottom) the wires of
 * `top` come first.
 */
class Term {
public:
  enum class Kind { Atom, Unit, Pi, IConst, Prod, Box };

  static Term atom(AtomSymbol symbol);
  static Term unit(std::size_t n);
  static Term pi();
  static Term iconst(std::size_t p, std::size_t q);
  static Term prod(Term left, Term right);
  static Term box(Term top, Term bottom);

  /// Right fold of prod over a non-empty list.
  static Term prod_all(std::span<const Term> factors);
  /// Right fold of box; the empty list gives unit(0).
  static Term box_all(std::span<const Term> parts);

  Kind kind() const noexcept;
  const AtomSymbol& symbol() const;   // Atom
  std::size_t width() const;          // Unit
  std::size_t p() const;              // IConst
  std::size_t q() const;              // IConst
  const Term& left() const;           // Prod: left, Box: top
  const Term& right() const;          // Prod: right, Box: bottom

  /// Rank if the whole term is well ranked.
  const std::optional<Rank>& checked_rank() const noexcept;

  /// Number of nodes in the expression tree.
  std::size_t size() const noexcept;

  friend bool operator==(const Term& a, const Term& b);

private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Rank of a well-ranked term; throws RankMismatch otherwise.
Rank rank_of(const Term& t);

Term parse_term(std::string_view text);
std::string print_term(const Term& t);

/// Number of Atom leaves.
std::size_t count_atoms(const Term& t);

/// True when the term mentions no Atom and no IConst.
bool is_wiring_only(const Term& t);

/**
 * A permutation of {1..n} given by images: wire i is routed to output
 * position perm[i-1].
 */
using Permutation = std::vector<std::size_t>;

/// Throws InvalidPermutation unless perm is a bijection on {1..n}.
void check_permutation(std::span<const std::size_t> perm);

/// Wires i then the result of `first` feed `second`: i -> second(first(i)).
Permutation then(std::span<const std::size_t> first, std::span<const std::size_t> second);

/**
 * Wiring term routing input i to output perm(i), built from pi and units by
 * adjacent transpositions in bubble-sort order. The identity gives unit(n).
 */
Term perm_term(std::span<const std::size_t> perm);

/// Adjacent transposition of wires i and i+1 (1-based) among n.
Term adjacent_swap(std::size_t i, std::size_t n);

/**
 * The block permutation s_{m,1} of rank (m+1, m+1): moves the first wire
 * past the remaining m, so g1 g2 .. g(m+1) becomes g2 .. g(m+1) g1.
 */
Term s_m1_term(std::size_t m);

} // namespace gaut

#endif

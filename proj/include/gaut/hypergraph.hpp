#ifndef GAUT_HYPERGRAPH_HPP
#define GAUT_HYPERGRAPH_HPP

#include "gaut/term.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gaut {

/// Nodes of a Hypergraph are the dense ids 0 .. node_count-1.
using NodeId = std::size_t;

struct Edge {
  std::vector<NodeId> sources;
  std::vector<NodeId> targets;
  AtomSymbol label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * An (m,n)-hypergraph: labeled hyperedges plus begin and end sequences.
 * Node ids may repeat in begin/end and in edge endpoint sequences. Equality
 * of record is isomorphic(); operator== is plain structural identity.
 */
struct Hypergraph {
  std::size_t node_count = 0;
  std::vector<Edge> edges;
  std::vector<NodeId> begin;
  std::vector<NodeId> end;

  Rank rank() const { return Rank{begin.size(), end.size()}; }

  /// Throws gaut::Error when an id is out of range or an edge disagrees
  /// with its label's rank.
  void validate() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

/// G then H, gluing the i-th end node of G to the i-th begin node of H.
Hypergraph graph_product(const Hypergraph& g, const Hypergraph& h);

/// Disjoint union with begin and end sequences concatenated.
Hypergraph graph_sum(const Hypergraph& g, const Hypergraph& h);

/// E_n: n nodes, begin = end = x1 .. xn.
Hypergraph discrete_graph(std::size_t n);
/// Pi: nodes x y, begin x y, end y x.
Hypergraph pi_graph();
/// I_{p,q}: one node, repeated p times in begin and q times in end.
Hypergraph iconst_graph(std::size_t p, std::size_t q);
/// One edge labeled sigma; begin = its sources, end = its targets.
Hypergraph atom_graph(const AtomSymbol& sigma);

/// Evaluates a term in GR(Sigma). Throws RankMismatch on ill-ranked terms.
Hypergraph eval_graph(const Term& t);

/**
 * Searches for a node bijection g -> h carrying edges (as label, source and
 * target sequences, counted with multiplicity), begin and end onto h.
 * Backtracking with signature pruning; meant for small graphs.
 */
std::optional<std::vector<NodeId>> isomorphic(const Hypergraph& g, const Hypergraph& h);

/// Renames node i to perm[i]; perm must be a bijection on the node ids.
Hypergraph relabel(const Hypergraph& g, const std::vector<NodeId>& perm);

} // namespace gaut

#endif

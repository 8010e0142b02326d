#ifndef GAUT_ENCODER_HPP
#define GAUT_ENCODER_HPP

#include "gaut/hypergraph.hpp"
#include "gaut/term.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gaut {

/// An ordinary directed graph on nodes 1..n; loops and parallel arcs allowed.
struct SimpleDigraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;

  friend bool operator==(const SimpleDigraph&, const SimpleDigraph&) = default;
};

/// The unary label "a" of rank (1,1).
AtomSymbol arc_label();

/// The (0,0)-hypergraph with one `label` edge per arc; node i becomes id i-1.
/// Throws RankMismatch unless label has rank (1,1).
Hypergraph digraph_to_hypergraph(const SimpleDigraph& d, const AtomSymbol& label);

/**
 * A term whose graph evaluation is isomorphic to g, built in stages:
 * merge repeated begin nodes and create the others; fan each node out to
 * one wire per source occurrence plus a carry wire; route the copies to the
 * edge layer; apply the edges; route targets next to their carry wire; fan
 * in; then copy, route or drop wires to form the end sequence.
 * Throws gaut::Error if g is malformed.
 */
Term encode_graph(const Hypergraph& g);

/// encode_graph of digraph_to_hypergraph(d, label).
Term encode_digraph(const SimpleDigraph& d, const AtomSymbol& label);

enum class GraphFormat { EdgeList, Json, Dot };

/// A parsed graph together with the names its nodes had in the input.
struct ParsedGraph {
  Hypergraph graph;
  std::vector<std::string> node_names;
};

/**
 * Reads a graph. Edge lists ("n" then "i j" per arc, 1-based) and the DOT
 * subset yield (0,0)-digraphs over arc_label(). Throws SyntaxError with a
 * line and column.
 */
ParsedGraph parse_graph_input(std::string_view text, GraphFormat format);

/// The arcs of a (0,0)-graph whose edges all carry rank-(1,1) labels.
/// Throws gaut::Error otherwise.
SimpleDigraph as_digraph(const Hypergraph& g);

} // namespace gaut

#endif

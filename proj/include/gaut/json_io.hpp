#ifndef GAUT_JSON_IO_HPP
#define GAUT_JSON_IO_HPP

#include "gaut/automaton.hpp"
#include "gaut/encoder.hpp"
#include "gaut/graphoid.hpp"
#include "gaut/hypergraph.hpp"
#include "gaut/relation.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace gaut {

using Json = nlohmann::json;

/// {"nodes":[ids], "edges":[{"label":name,"src":[ids],"tgt":[ids]}],
///  "begin":[ids], "end":[ids]}. Ids are `names` when given, else 0..n-1.
Json hypergraph_to_json(const Hypergraph& g, const std::vector<std::string>* names = nullptr);

/// Inverse of hypergraph_to_json; node ids may be integers or strings.
/// Label ranks come from the endpoint counts. Throws SyntaxError.
ParsedGraph hypergraph_from_json(const Json& j);

/// A word as an array of state names.
Json word_to_json(const StateWord& w, const StateSet& q);

/**
 * A word from an array of state names, or from a string of
 * whitespace-separated names. A string naming no single state is split into
 * characters when every state name is one character long.
 */
StateWord word_from_json(const Json& j, const StateSet& q);

/// {"rank":[m,n], "pairs":[[in, out], ...]} with pairs in sorted order.
Json relation_to_json(const StateRelation& r, const StateSet& q);

/// One object per equation: {"equation", "holds", "counterexample"} plus
/// "generator" for E17 entries.
Json axiom_report_to_json(const AxiomReport& report, const StateSet& q);

/**
 * {"states":[...], "alphabet":{"a":[1,1]}, "delta":{"a":[[w,w],...]},
 *  "initial":{"kind":"explicit","words":[...]} | {"kind":"universal"},
 *  "final": ...}. "alphabet" is optional when every transition relation
 * has at least one pair to infer the rank from.
 */
GraphAutomaton automaton_from_json(const Json& j);
Json automaton_to_json(const GraphAutomaton& a);

} // namespace gaut

#endif

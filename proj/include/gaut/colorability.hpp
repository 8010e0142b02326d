#ifndef GAUT_COLORABILITY_HPP
#define GAUT_COLORABILITY_HPP

#include "gaut/automaton.hpp"
#include "gaut/encoder.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gaut {

/// colors[i] in 1..k is the color of node i+1.
struct Coloring {
  std::vector<unsigned> colors;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/**
 * The k-coloring automaton: one symbol a:(1,1), states 1..k, a relating
 * every pair of distinct states, I = T = {ε}. Throws InvalidK for k = 0.
 */
GraphAutomaton make_color_automaton(std::size_t k);

struct ColorabilityResult {
  bool colorable = false;
  std::optional<Coloring> witness;
};

/**
 * Decides k-colorability with the coloring automaton's run search. The
 * witness has its colors renumbered in order of first use by node id (node
 * 1 always gets color 1) and is checked proper before it is returned.
 */
ColorabilityResult is_k_colorable(const SimpleDigraph& g, std::size_t k);

/// Reading of a run of the coloring automaton as a coloring (state i is color i+1).
Coloring coloring_from_run(const RunWitness& run);

/// Renumbers colors in order of first appearance.
Coloring canonical_colors(const Coloring& c);

/// Largest k^n the oracle enumerates.
inline constexpr std::uint64_t kOracleBudget = 100'000'000;

/**
 * Exhaustive check over all k^n assignments, split across `workers` threads
 * (0 picks the hardware concurrency). Throws BudgetExceeded when k^n exceeds
 * kOracleBudget, InvalidK for k = 0.
 */
bool oracle_k_colorable(const SimpleDigraph& g, std::size_t k, unsigned workers = 1);

/// Whether every arc joins differently colored nodes. Throws
/// IncompleteColoring unless c colors exactly the nodes of g.
bool verify_coloring(const SimpleDigraph& g, const Coloring& c);

} // namespace gaut

#endif

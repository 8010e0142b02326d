// Fixtures and generators shared by the unit and acceptance tests.
#ifndef GAUT_TESTS_SUPPORT_HPP
#define GAUT_TESTS_SUPPORT_HPP

#include "gaut/automaton.hpp"
#include "gaut/colorability.hpp"
#include "gaut/encoder.hpp"
#include "gaut/graphoid.hpp"
#include "gaut/hypergraph.hpp"
#include "gaut/term.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace gaut::test {

inline Term a() { return Term::atom(arc_label()); }
inline Term e() { return Term::unit(1); }
inline Term I(std::size_t p, std::size_t q) { return Term::iconst(p, q); }
inline Term prod(std::vector<Term> fs) { return Term::prod_all(fs); }
inline Term box(std::vector<Term> ps) { return Term::box_all(ps); }
inline Term repeat_box(const Term& t, std::size_t times) {
  return Term::box_all(std::vector<Term>(times, t));
}

// The example graphs; nodes numbered left = 1, center = 2, top = 3, bottom = 4.
inline SimpleDigraph graph_G() { return {4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}}}; }
inline SimpleDigraph graph_F() { return {4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}, {1, 3}, {1, 4}}}; }
inline SimpleDigraph graph_K33() {
  SimpleDigraph d{6, {}};
  for (std::size_t l = 1; l <= 3; ++l)
    for (std::size_t r = 4; r <= 6; ++r)
      d.arcs.emplace_back(l, r);
  return d;
}

inline const char* kGExpression =
    "(prod (i 0 1) (sym a 1 1) (i 1 2) (box (sym a 1 1) (sym a 1 1))"
    " (box (sym a 1 1) e) (i 2 1) (i 1 0))";

inline std::vector<Term> g_factors() {
  return {I(0, 1), a(), I(1, 2), box({a(), a()}), box({a(), e()}), I(2, 1), I(1, 0)};
}

inline std::vector<Term> f_factors() {
  return {I(0, 1),          I(1, 3),          box({a(), a(), a()}), box({e(), I(1, 2), e()}),
          box({e(), a(), a(), e()}), box({I(2, 1), I(2, 1)}), box({a(), e()}), I(2, 1),
          I(1, 0)};
}

// Position i of the 9 wires goes to K33_PERM[i].
inline const Permutation kK33Perm{1, 4, 7, 2, 5, 8, 3, 6, 9};

inline std::vector<Term> k33_factors() {
  return {repeat_box(I(0, 1), 3), repeat_box(I(1, 3), 3), repeat_box(a(), 9),
          perm_term(kK33Perm),   repeat_box(I(3, 1), 3), repeat_box(I(1, 0), 3)};
}

inline Term prefix(const std::vector<Term>& factors, std::size_t length) {
  return Term::prod_all(std::span<const Term>(factors.data(), length));
}

// States of the coloring automaton: color c is state c-1.
inline StateWord colors(std::initializer_list<State> cs) {
  StateWord w;
  for (State c : cs)
    w.push_back(c - 1);
  return w;
}

// ---------------------------------------------------------------------------
// Digraphs

/// Smallest arc list over all relabelings; equal for isomorphic digraphs.
inline std::vector<std::pair<std::size_t, std::size_t>> canonical_arcs(const SimpleDigraph& d) {
  std::vector<std::size_t> perm(d.n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::pair<std::size_t, std::size_t>> best;
  bool first = true;
  do {
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (auto [u, v] : d.arcs)
      arcs.emplace_back(perm[u - 1], perm[v - 1]);
    std::sort(arcs.begin(), arcs.end());
    if (first || arcs < best) {
      best = std::move(arcs);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline SimpleDigraph random_digraph(std::mt19937& rng, std::size_t n, double density,
                                    double loop_chance) {
  SimpleDigraph d{n, {}};
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) {
        if (u(rng) < loop_chance)
          d.arcs.emplace_back(i, i);
      } else if (u(rng) < density) {
        d.arcs.emplace_back(i, j);
      }
    }
  std::shuffle(d.arcs.begin(), d.arcs.end(), rng);
  return d;
}

/// Pairwise non-isomorphic digraphs on 1..max_n nodes from a fixed seed.
inline std::vector<SimpleDigraph> digraph_corpus(std::size_t count, std::size_t max_n,
                                                 unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<SimpleDigraph> out;
  std::set<std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>> seen;
  std::size_t attempts = 0;
  while (out.size() < count && attempts < count * 200) {
    ++attempts;
    const std::size_t n = 1 + rng() % max_n;
    const double density = std::uniform_real_distribution<double>(0.05, 0.7)(rng);
    const double loops = (rng() % 10 == 0) ? 0.2 : 0.0;
    SimpleDigraph d = random_digraph(rng, n, density, loops);
    if (seen.emplace(n, canonical_arcs(d)).second)
      out.push_back(std::move(d));
  }
  return out;
}

/// Renames node i to perm[i-1] (1-based).
inline SimpleDigraph relabel_digraph(const SimpleDigraph& d, const std::vector<std::size_t>& perm) {
  SimpleDigraph out{d.n, {}};
  for (auto [u, v] : d.arcs)
    out.arcs.emplace_back(perm[u - 1], perm[v - 1]);
  return out;
}

inline std::vector<std::size_t> random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// ---------------------------------------------------------------------------
// Hypergraphs

inline std::vector<AtomSymbol> small_alphabet() {
  return {{"a", {1, 1}}, {"b", {2, 1}}, {"c", {1, 2}}, {"d", {2, 2}},
          {"f", {0, 1}}, {"g", {1, 0}}, {"h", {0, 2}}, {"z", {0, 0}}};
}

inline Hypergraph random_hypergraph(std::mt19937& rng, std::size_t max_nodes,
                                    std::size_t max_edges, std::size_t max_boundary) {
  const auto alphabet = small_alphabet();
  Hypergraph g;
  g.node_count = rng() % (max_nodes + 1);
  auto node = [&] { return static_cast<NodeId>(rng() % g.node_count); };
  if (g.node_count == 0) {
    // Only endpoint-free edges fit.
    const std::size_t k = rng() % 2;
    for (std::size_t i = 0; i < k; ++i)
      g.edges.push_back(Edge{{}, {}, alphabet.back()});
    return g;
  }
  const std::size_t edges = rng() % (max_edges + 1);
  for (std::size_t i = 0; i < edges; ++i) {
    const AtomSymbol& s = alphabet[rng() % alphabet.size()];
    Edge e{{}, {}, s};
    for (std::size_t j = 0; j < s.rank.m; ++j)
      e.sources.push_back(node());
    for (std::size_t j = 0; j < s.rank.n; ++j)
      e.targets.push_back(node());
    g.edges.push_back(std::move(e));
  }
  const std::size_t nb = rng() % (max_boundary + 1), ne = rng() % (max_boundary + 1);
  for (std::size_t i = 0; i < nb; ++i)
    g.begin.push_back(node());
  for (std::size_t i = 0; i < ne; ++i)
    g.end.push_back(node());
  return g;
}

// ---------------------------------------------------------------------------
// Relations and automata

inline StateRelation random_relation(std::mt19937& rng, std::size_t q, Rank rank) {
  std::vector<StatePair> pairs;
  const unsigned keep = 1 + rng() % 3;  // density 1/2 .. 1/4
  for (const StateWord& u : all_words(q, rank.m))
    for (const StateWord& v : all_words(q, rank.n))
      if (rng() % (keep + 1) == 0)
        pairs.push_back({u, v});
  return StateRelation(rank, q, std::move(pairs));
}

inline WordSet random_word_set(std::mt19937& rng, std::size_t q, std::size_t length) {
  if (rng() % 3 == 0)
    return WordSet::universal();
  std::vector<StateWord> words;
  for (const StateWord& w : all_words(q, length))
    if (rng() % 2 == 0)
      words.push_back(w);
  return WordSet::of(std::move(words));
}

/// Random TSRel automaton over small_alphabet(); I and T cover words of the
/// given lengths.
inline GraphAutomaton random_automaton(std::mt19937& rng, std::size_t q, std::size_t m,
                                       std::size_t n) {
  const auto alphabet = small_alphabet();
  AtomValues delta;
  for (const AtomSymbol& s : alphabet)
    delta.emplace(s.name, random_relation(rng, q, s.rank));
  return GraphAutomaton(alphabet, StateSet::numbered(q), std::move(delta),
                        random_word_set(rng, q, m), random_word_set(rng, q, n));
}

// ---------------------------------------------------------------------------
// Terms

/// Random well-ranked term with `inputs` inputs; leaves come from the
/// elementary constants and the given alphabet.
inline Term random_term(std::mt19937& rng, std::size_t inputs, int depth,
                        const std::vector<AtomSymbol>& alphabet) {
  const unsigned pick = rng() % 10;
  if (depth <= 0 || pick < 3) {
    std::vector<Term> leaves{Term::unit(inputs)};
    for (const AtomSymbol& s : alphabet)
      if (s.rank.m == inputs)
        leaves.push_back(Term::atom(s));
    if (inputs == 2) {
      leaves.push_back(Term::pi());
      leaves.push_back(I(2, 1));
    }
    if (inputs == 1) {
      leaves.push_back(I(1, 0));
      leaves.push_back(I(1, 2));
    }
    if (inputs == 0)
      leaves.push_back(I(0, 1));
    if (inputs == 3)
      leaves.push_back(I(3, 1));
    return leaves[rng() % leaves.size()];
  }
  if (pick < 6 || inputs == 0) {
    Term left = random_term(rng, inputs, depth - 1, alphabet);
    const std::size_t mid = rank_of(left).n;
    if (mid > 3)
      return left;
    return Term::prod(left, random_term(rng, mid, depth - 1, alphabet));
  }
  const std::size_t split = rng() % (inputs + 1);
  return Term::box(random_term(rng, split, depth - 1, alphabet),
                   random_term(rng, inputs - split, depth - 1, alphabet));
}

/// Random term with rank bounded by (max_width, max_width).
inline Term random_small_term(std::mt19937& rng, std::size_t max_width, int depth,
                              const std::vector<AtomSymbol>& alphabet) {
  while (true) {
    Term t = random_term(rng, rng() % (max_width + 1), depth, alphabet);
    const Rank r = rank_of(t);
    if (r.m <= max_width && r.n <= max_width)
      return t;
  }
}

} // namespace gaut::test

#endif

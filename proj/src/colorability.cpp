#include "gaut/colorability.hpp"

#include "gaut/error.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace gaut {

GraphAutomaton make_color_automaton(std::size_t k) {
  if (k == 0)
    throw InvalidK("the coloring automaton needs k >= 1");
  std::vector<StatePair> different;
  for (State i = 0; i < k; ++i)
    for (State j = 0; j < k; ++j)
      if (i != j)
        different.push_back(StatePair{{i}, {j}});
  const AtomSymbol a = arc_label();
  AtomValues delta;
  delta.emplace(a.name, StateRelation(a.rank, k, std::move(different)));
  return GraphAutomaton({a}, StateSet::numbered(k), std::move(delta), WordSet::of({StateWord{}}),
                        WordSet::of({StateWord{}}));
}

Coloring coloring_from_run(const RunWitness& run) {
  Coloring c;
  for (State s : run.assignment)
    c.colors.push_back(s + 1);
  return c;
}

Coloring canonical_colors(const Coloring& c) {
  std::vector<unsigned> rename;
  Coloring out;
  for (unsigned color : c.colors) {
    if (color >= rename.size())
      rename.resize(color + 1, 0);
    if (rename[color] == 0)
      rename[color] = static_cast<unsigned>(
          1 + std::count_if(rename.begin(), rename.end(), [](unsigned r) { return r != 0; }));
    out.colors.push_back(rename[color]);
  }
  return out;
}

ColorabilityResult is_k_colorable(const SimpleDigraph& g, std::size_t k) {
  const GraphAutomaton a = make_color_automaton(k);
  std::optional<RunWitness> run = run_search(a, digraph_to_hypergraph(g, arc_label()));
  if (!run)
    return {};
  Coloring c = canonical_colors(coloring_from_run(*run));
  if (!verify_coloring(g, c))
    throw Error("run search produced an improper coloring");
  return {true, std::move(c)};
}

bool verify_coloring(const SimpleDigraph& g, const Coloring& c) {
  if (c.colors.size() != g.n)
    throw IncompleteColoring("coloring covers " + std::to_string(c.colors.size()) + " of " +
                             std::to_string(g.n) + " nodes");
  for (auto [u, v] : g.arcs)
    if (c.colors.at(u - 1) == c.colors.at(v - 1))
      return false;
  return true;
}

bool oracle_k_colorable(const SimpleDigraph& g, std::size_t k, unsigned workers) {
  if (k == 0)
    throw InvalidK("colorability needs k >= 1");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < g.n; ++i) {
    total *= k;
    if (total > kOracleBudget)
      throw BudgetExceeded("k^n exceeds the oracle budget");
  }
  for (auto [u, v] : g.arcs)
    if (u < 1 || u > g.n || v < 1 || v > g.n)
      throw Error("arc out of range");

  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  std::atomic<bool> found{false};
  auto scan = [&](std::uint64_t first, std::uint64_t last) {
    // Odometer over assignments, least significant digit = node 1.
    std::vector<std::size_t> color(g.n);
    std::uint64_t x = first;
    for (std::size_t i = 0; i < g.n; ++i) {
      color[i] = x % k;
      x /= k;
    }
    for (std::uint64_t idx = first; idx < last; ++idx) {
      if ((idx & 0xfff) == 0 && found.load(std::memory_order_relaxed))
        return;
      bool proper = true;
      for (auto [u, v] : g.arcs) {
        if (color[u - 1] == color[v - 1]) {
          proper = false;
          break;
        }
      }
      if (proper) {
        found.store(true);
        return;
      }
      for (std::size_t i = 0; i < g.n; ++i) {
        if (++color[i] < k)
          break;
        color[i] = 0;
      }
    }
  };

  if (workers <= 1) {
    scan(0, total);
    return found.load();
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t first = w * chunk;
    const std::uint64_t last = std::min(total, first + chunk);
    if (first < last)
      pool.emplace_back(scan, first, last);
  }
  for (std::thread& t : pool)
    t.join();
  return found.load();
}

} // namespace gaut

#include "gaut/relation.hpp"

#include "gaut/error.hpp"

#include <algorithm>
#include <sstream>

namespace gaut {

void check_budget(std::size_t num_states, Rank rank) {
  std::uint64_t size = 1;
  const std::size_t width = rank.m + rank.n;
  for (std::size_t i = 0; i < width && num_states > 1; ++i) {
    size *= num_states;
    if (size > kRelationBudget) {
      std::ostringstream os;
      os << "relation of rank " << rank << " over " << num_states
         << " states exceeds the materialisation budget";
      throw BudgetExceeded(os.str());
    }
  }
}

StateRelation::StateRelation(Rank rank, std::size_t num_states)
    : rank_(rank), num_states_(num_states) {}

StateRelation::StateRelation(Rank rank, std::size_t num_states, std::vector<StatePair> pairs)
    : rank_(rank), num_states_(num_states), pairs_(std::move(pairs)) {
  for (const StatePair& p : pairs_) {
    if (p.in.size() != rank.m || p.out.size() != rank.n) {
      std::ostringstream os;
      os << "pair of lengths (" << p.in.size() << ',' << p.out.size()
         << ") in a relation of rank " << rank;
      throw RankMismatch(os.str());
    }
    for (const StateWord* w : {&p.in, &p.out})
      for (State g : *w)
        if (g >= num_states)
          throw Error("state index " + std::to_string(g) + " out of range");
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool StateRelation::contains(const StateWord& in, const StateWord& out) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), StatePair{in, out});
}

namespace {

void require_same_states(const StateRelation& r, const StateRelation& s) {
  if (r.num_states() != s.num_states())
    throw Error("relations over different state sets");
}

} // namespace

StateRelation compose(const StateRelation& r, const StateRelation& s) {
  require_same_states(r, s);
  if (r.rank().n != s.rank().m) {
    std::ostringstream os;
    os << "cannot compose rank " << r.rank() << " with rank " << s.rank();
    throw RankMismatch(os.str());
  }
  const Rank rank{r.rank().m, s.rank().n};
  check_budget(r.num_states(), rank);

  std::vector<StatePair> out;
  const auto& sp = s.pairs();
  for (const StatePair& p : r.pairs()) {
    auto lo = std::lower_bound(sp.begin(), sp.end(), p.out,
                               [](const StatePair& x, const StateWord& w) { return x.in < w; });
    for (auto it = lo; it != sp.end() && it->in == p.out; ++it)
      out.push_back(StatePair{p.in, it->out});
  }
  return StateRelation(rank, r.num_states(), std::move(out));
}

StateRelation sum_rel(const StateRelation& r, const StateRelation& s) {
  require_same_states(r, s);
  const Rank rank{r.rank().m + s.rank().m, r.rank().n + s.rank().n};
  check_budget(r.num_states(), rank);

  std::vector<StatePair> out;
  out.reserve(r.size() * s.size());
  for (const StatePair& a : r.pairs()) {
    for (const StatePair& b : s.pairs()) {
      StatePair p{a.in, a.out};
      p.in.insert(p.in.end(), b.in.begin(), b.in.end());
      p.out.insert(p.out.end(), b.out.begin(), b.out.end());
      out.push_back(std::move(p));
    }
  }
  return StateRelation(rank, r.num_states(), std::move(out));
}

std::vector<StateWord> all_words(std::size_t num_states, std::size_t length) {
  check_budget(num_states, Rank{length, 0});
  std::vector<StateWord> words;
  if (num_states == 0)
    return length == 0 ? std::vector<StateWord>{StateWord{}} : words;
  StateWord w(length, 0);
  while (true) {
    words.push_back(w);
    std::size_t i = length;
    while (i > 0 && w[i - 1] + 1 == num_states)
      w[--i] = 0;
    if (i == 0)
      break;
    ++w[i - 1];
  }
  return words;
}

StateRelation unit_e(std::size_t num_states, std::size_t n) {
  check_budget(num_states, Rank{n, n});
  std::vector<StatePair> pairs;
  for (StateWord& w : all_words(num_states, n))
    pairs.push_back(StatePair{w, w});
  return StateRelation(Rank{n, n}, num_states, std::move(pairs));
}

StateRelation diagonal(std::size_t num_states, std::size_t p, std::size_t q) {
  std::vector<StatePair> pairs;
  for (State g = 0; g < num_states; ++g)
    pairs.push_back(StatePair{StateWord(p, g), StateWord(q, g)});
  return StateRelation(Rank{p, q}, num_states, std::move(pairs));
}

std::optional<StatePair> first_difference(const StateRelation& a, const StateRelation& b) {
  std::vector<StatePair> diff;
  std::set_symmetric_difference(a.pairs().begin(), a.pairs().end(), b.pairs().begin(),
                                b.pairs().end(), std::back_inserter(diff));
  if (diff.empty())
    return std::nullopt;
  return diff.front();
}

StateSet StateSet::numbered(std::size_t k) {
  StateSet q;
  for (std::size_t i = 1; i <= k; ++i)
    q.names.push_back(std::to_string(i));
  return q;
}

State StateSet::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    throw Error("unknown state '" + name + "'");
  return static_cast<State>(it - names.begin());
}

} // namespace gaut

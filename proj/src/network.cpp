#include "gaut/network.hpp"

#include "gaut/error.hpp"

#include <bit>

namespace gaut {

namespace {

WireNetwork::Domain bit(State g) { return WireNetwork::Domain{1} << g; }

State lowest(WireNetwork::Domain d) { return static_cast<State>(std::countr_zero(d)); }

} // namespace

WireNetwork::WireNetwork(const Term& t, const DSet& d, const AtomValues& atoms)
    : rank_(rank_of(t)), num_states_(d.num_states()) {
  if (num_states_ == 0)
    throw EmptyStateSet("wire network over an empty state set");
  if (num_states_ > 64)
    throw BudgetExceeded("wire networks support at most 64 states");
  for (std::size_t i = 0; i < rank_.m; ++i)
    inputs_.push_back(var_count_++);
  outputs_ = compile(t, inputs_, d, atoms);
  watchers_.assign(var_count_, {});
  for (std::size_t c = 0; c < constraints_.size(); ++c)
    for (Var v : constraints_[c].scope)
      watchers_[v].push_back(c);
  table_cache_.clear();
  diagonal_cache_.clear();
}

std::shared_ptr<const WireNetwork::Table> WireNetwork::table_for(const StateRelation& r) {
  if (r.num_states() != num_states_)
    throw Error("relation over a different state set");
  auto it = table_cache_.find(&r);
  if (it != table_cache_.end())
    return it->second;
  auto table = std::make_shared<Table>();
  for (const StatePair& p : r.pairs()) {
    std::vector<State> row(p.in);
    row.insert(row.end(), p.out.begin(), p.out.end());
    table->rows.push_back(std::move(row));
  }
  table_cache_.emplace(&r, table);
  return table;
}

void WireNetwork::add_constraint(std::vector<Var> scope, std::shared_ptr<const Table> table) {
  // A variable listed twice forces equal values at both positions.
  bool repeats = false;
  for (std::size_t i = 0; i < scope.size() && !repeats; ++i)
    for (std::size_t j = i + 1; j < scope.size(); ++j)
      if (scope[i] == scope[j])
        repeats = true;
  if (repeats) {
    auto filtered = std::make_shared<Table>();
    for (const auto& row : table->rows) {
      bool ok = true;
      for (std::size_t i = 0; i < scope.size() && ok; ++i)
        for (std::size_t j = i + 1; j < scope.size(); ++j)
          if (scope[i] == scope[j] && row[i] != row[j])
            ok = false;
      if (ok)
        filtered->rows.push_back(row);
    }
    table = std::move(filtered);
  }
  constraints_.push_back(Constraint{std::move(scope), std::move(table)});
}

std::vector<WireNetwork::Var> WireNetwork::compile(const Term& t, std::vector<Var> inputs,
                                                   const DSet& d, const AtomValues& atoms) {
  auto leaf = [&](std::shared_ptr<const Table> table, std::size_t n_out) {
    std::vector<Var> outputs;
    for (std::size_t i = 0; i < n_out; ++i)
      outputs.push_back(var_count_++);
    std::vector<Var> scope(inputs);
    scope.insert(scope.end(), outputs.begin(), outputs.end());
    add_constraint(std::move(scope), std::move(table));
    return outputs;
  };

  switch (t.kind()) {
  case Term::Kind::Unit:
    return inputs;
  case Term::Kind::Atom: {
    auto it = atoms.find(t.symbol().name);
    if (it == atoms.end())
      throw UnknownSymbol("no value for symbol '" + t.symbol().name + "'");
    if (it->second.rank() != t.symbol().rank)
      throw RankMismatch("value of '" + t.symbol().name + "' has the wrong rank");
    return leaf(table_for(it->second), t.symbol().rank.n);
  }
  case Term::Kind::Pi:
    return leaf(table_for(d.s), 2);
  case Term::Kind::IConst: {
    const std::size_t p = t.p(), q = t.q();
    const StateRelation* designated = nullptr;
    if (p == 0 && q == 1)
      designated = &d.d01;
    else if (p == 2 && q == 1)
      designated = &d.d21;
    else if (p == 1 && q == 0)
      designated = &d.d10;
    else if (p == 1 && q == 2)
      designated = &d.d12;
    if (designated)
      return leaf(table_for(*designated), q);
    auto& cached = diagonal_cache_[{p, q}];
    if (!cached) {
      auto table = std::make_shared<Table>();
      for (State g = 0; g < num_states_; ++g) {
        table->rows.emplace_back(p + q, g);
      }
      cached = std::move(table);
    }
    return leaf(cached, q);
  }
  case Term::Kind::Prod: {
    std::vector<Var> mid = compile(t.left(), std::move(inputs), d, atoms);
    return compile(t.right(), std::move(mid), d, atoms);
  }
  case Term::Kind::Box: {
    const std::size_t split = t.left().checked_rank()->m;
    std::vector<Var> top(inputs.begin(), inputs.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<Var> bottom(inputs.begin() + static_cast<std::ptrdiff_t>(split), inputs.end());
    std::vector<Var> out = compile(t.left(), std::move(top), d, atoms);
    std::vector<Var> rest = compile(t.right(), std::move(bottom), d, atoms);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  }
  throw Error("unreachable term kind");
}

std::vector<WireNetwork::Domain> WireNetwork::initial_domains() const {
  const Domain full = num_states_ == 64 ? ~Domain{0} : (Domain{1} << num_states_) - 1;
  return std::vector<Domain>(var_count_, full);
}

bool WireNetwork::propagate(std::vector<Domain>& dom, std::vector<std::size_t> queue) const {
  std::vector<char> queued(constraints_.size(), 0);
  for (std::size_t c : queue)
    queued[c] = 1;
  std::vector<Domain> support;
  while (!queue.empty()) {
    const std::size_t c = queue.back();
    queue.pop_back();
    queued[c] = 0;
    const Constraint& con = constraints_[c];
    const std::size_t width = con.scope.size();
    support.assign(width, 0);
    bool any = false;
    for (const auto& row : con.table->rows) {
      bool ok = true;
      for (std::size_t i = 0; i < width; ++i) {
        if (!(dom[con.scope[i]] & bit(row[i]))) {
          ok = false;
          break;
        }
      }
      if (!ok)
        continue;
      any = true;
      for (std::size_t i = 0; i < width; ++i)
        support[i] |= bit(row[i]);
    }
    if (!any)
      return false;
    for (std::size_t i = 0; i < width; ++i) {
      const Var v = con.scope[i];
      const Domain narrowed = dom[v] & support[i];
      if (narrowed == dom[v])
        continue;
      dom[v] = narrowed;
      for (std::size_t other : watchers_[v]) {
        if (other != c && !queued[other]) {
          queued[other] = 1;
          queue.push_back(other);
        }
      }
    }
  }
  return true;
}

bool WireNetwork::fix(std::vector<Domain>& dom, Var v, State g) const {
  if (!(dom[v] & bit(g)))
    return false;
  dom[v] = bit(g);
  return propagate(dom, watchers_[v]);
}

bool WireNetwork::search(std::vector<Domain>& dom) const {
  Var best = var_count_;
  int best_size = 65;
  for (Var v = 0; v < var_count_; ++v) {
    const int size = std::popcount(dom[v]);
    if (size > 1 && size < best_size) {
      best = v;
      best_size = size;
      if (size == 2)
        break;
    }
  }
  if (best == var_count_)
    return true;
  for (Domain rest = dom[best]; rest; rest &= rest - 1) {
    std::vector<Domain> trial(dom);
    if (fix(trial, best, lowest(rest)) && search(trial)) {
      dom = std::move(trial);
      return true;
    }
  }
  return false;
}

void WireNetwork::enumerate(std::vector<Domain>& dom, const std::vector<Var>& boundary,
                            std::size_t depth, std::vector<StatePair>& out) const {
  if (depth == boundary.size()) {
    std::vector<Domain> trial(dom);
    if (!search(trial))
      return;
    StatePair p;
    for (Var v : inputs_)
      p.in.push_back(lowest(dom[v]));
    for (Var v : outputs_)
      p.out.push_back(lowest(dom[v]));
    out.push_back(std::move(p));
    return;
  }
  const Var v = boundary[depth];
  for (Domain rest = dom[v]; rest; rest &= rest - 1) {
    std::vector<Domain> trial(dom);
    if (fix(trial, v, lowest(rest)))
      enumerate(trial, boundary, depth + 1, out);
  }
}

StateRelation WireNetwork::relation() const {
  check_budget(num_states_, rank_);
  std::vector<Domain> dom = initial_domains();
  std::vector<StatePair> pairs;
  std::vector<std::size_t> all(constraints_.size());
  for (std::size_t c = 0; c < all.size(); ++c)
    all[c] = c;
  if (propagate(dom, std::move(all))) {
    std::vector<Var> boundary;
    std::vector<char> seen(var_count_, 0);
    for (const auto* side : {&inputs_, &outputs_})
      for (Var v : *side)
        if (!seen[v]) {
          seen[v] = 1;
          boundary.push_back(v);
        }
    enumerate(dom, boundary, 0, pairs);
  }
  return StateRelation(rank_, num_states_, std::move(pairs));
}

bool WireNetwork::satisfiable(std::span<const std::optional<State>> in,
                              std::span<const std::optional<State>> out) const {
  if (in.size() != rank_.m || out.size() != rank_.n)
    throw RankMismatch("boundary assignment does not match the network rank");
  std::vector<Domain> dom = initial_domains();
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i] && (*in[i] >= num_states_ || !(dom[inputs_[i]] &= bit(*in[i]))))
      return false;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] && (*out[i] >= num_states_ || !(dom[outputs_[i]] &= bit(*out[i]))))
      return false;
  std::vector<std::size_t> all(constraints_.size());
  for (std::size_t c = 0; c < all.size(); ++c)
    all[c] = c;
  return propagate(dom, std::move(all)) && search(dom);
}

bool WireNetwork::contains(const StateWord& in, const StateWord& out) const {
  if (in.size() != rank_.m || out.size() != rank_.n)
    return false;
  std::vector<std::optional<State>> fin(in.begin(), in.end());
  std::vector<std::optional<State>> fout(out.begin(), out.end());
  return satisfiable(fin, fout);
}

} // namespace gaut

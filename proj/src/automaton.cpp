#include "gaut/automaton.hpp"

#include "gaut/encoder.hpp"
#include "gaut/error.hpp"
#include "gaut/network.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace gaut {

WordSet::WordSet(bool universal, std::vector<StateWord> words)
    : universal_(universal), words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool WordSet::contains(const StateWord& w) const {
  return universal_ || std::binary_search(words_.begin(), words_.end(), w);
}

GraphAutomaton::GraphAutomaton(std::vector<AtomSymbol> alphabet, StateSet states,
                               AtomValues delta, WordSet initial, WordSet final_words)
    : GraphAutomaton(std::move(alphabet), states, std::move(delta), std::move(initial),
                     std::move(final_words), tsrel_dset(states.size())) {}

GraphAutomaton::GraphAutomaton(std::vector<AtomSymbol> alphabet, StateSet states,
                               AtomValues delta, WordSet initial, WordSet final_words, DSet dset)
    : alphabet_(std::move(alphabet)), states_(std::move(states)), delta_(std::move(delta)),
      initial_(std::move(initial)), final_(std::move(final_words)), dset_(std::move(dset)),
      tsrel_(false) {
  const std::size_t q = states_.size();
  if (q == 0)
    throw EmptyStateSet("automaton without states");
  if (dset_.num_states() != q)
    throw Error("D-set over a different state set");
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    for (std::size_t j = i + 1; j < alphabet_.size(); ++j)
      if (alphabet_[i].name == alphabet_[j].name)
        throw Error("symbol '" + alphabet_[i].name + "' declared twice");
  for (const AtomSymbol& sigma : alphabet_) {
    auto it = delta_.find(sigma.name);
    if (it == delta_.end())
      throw Error("no transition for symbol '" + sigma.name + "'");
    if (it->second.rank() != sigma.rank)
      throw RankMismatch("transition of '" + sigma.name + "' has the wrong rank");
    if (it->second.num_states() != q)
      throw Error("transition of '" + sigma.name + "' is over a different state set");
  }
  if (delta_.size() != alphabet_.size())
    throw UnknownSymbol("transition given for a symbol outside the alphabet");
  for (const WordSet* ws : {&initial_, &final_})
    for (const StateWord& w : ws->words())
      for (State g : w)
        if (g >= q)
          throw Error("initial or final word uses an unknown state");
  const DSet ts = tsrel_dset(q);
  tsrel_ = dset_.s == ts.s && dset_.d01 == ts.d01 && dset_.d21 == ts.d21 &&
           dset_.d10 == ts.d10 && dset_.d12 == ts.d12;
}

const AtomSymbol& GraphAutomaton::symbol(const std::string& name) const {
  for (const AtomSymbol& s : alphabet_)
    if (s.name == name)
      return s;
  throw UnknownSymbol("symbol '" + name + "' is not in the alphabet");
}

namespace {

void check_symbols(const GraphAutomaton& a, const Term& t) {
  switch (t.kind()) {
  case Term::Kind::Atom:
    if (a.symbol(t.symbol().name).rank != t.symbol().rank)
      throw RankMismatch("symbol '" + t.symbol().name + "' used with a different rank");
    return;
  case Term::Kind::Prod:
  case Term::Kind::Box:
    check_symbols(a, t.left());
    check_symbols(a, t.right());
    return;
  default:
    return;
  }
}

std::vector<std::vector<std::optional<State>>> boundary_choices(const WordSet& ws,
                                                                std::size_t length) {
  std::vector<std::vector<std::optional<State>>> out;
  if (ws.is_universal()) {
    out.emplace_back(length, std::nullopt);
    return out;
  }
  for (const StateWord& w : ws.words())
    if (w.size() == length)
      out.emplace_back(w.begin(), w.end());
  return out;
}

} // namespace

StateRelation extend_delta(const GraphAutomaton& a, const Term& t) {
  rank_of(t);
  check_symbols(a, t);
  return WireNetwork(t, a.dset(), a.delta()).relation();
}

bool accepts(const GraphAutomaton& a, const Term& t) {
  const Rank r = rank_of(t);
  check_symbols(a, t);
  const auto ins = boundary_choices(a.initial(), r.m);
  const auto outs = boundary_choices(a.final_words(), r.n);
  if (ins.empty() || outs.empty())
    return false;
  const WireNetwork net(t, a.dset(), a.delta());
  for (const auto& in : ins)
    for (const auto& out : outs)
      if (net.satisfiable(in, out))
        return true;
  return false;
}

std::vector<NodeId> search_order(const Hypergraph& g) {
  std::vector<std::size_t> degree(g.node_count, 0);
  for (const Edge& e : g.edges) {
    for (NodeId v : e.sources)
      ++degree[v];
    for (NodeId v : e.targets)
      ++degree[v];
  }
  std::vector<NodeId> order(g.node_count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeId x, NodeId y) {
    if (degree[x] != degree[y])
      return degree[x] > degree[y];
    return x > y;
  });
  return order;
}

namespace {

using Domain = std::uint64_t;

Domain bit(State g) { return Domain{1} << g; }

class RunSearch {
public:
  RunSearch(const GraphAutomaton& a, const Hypergraph& g,
            const std::function<bool(const RunWitness&)>& visit)
      : a_(a), g_(g), visit_(visit) {
    if (!a.uses_tsrel())
      throw Error("run search needs the TSRel graphoid");
    if (a.states().size() > 64)
      throw BudgetExceeded("run search supports at most 64 states");
    g.validate();

    const std::size_t n = g.node_count;
    order_ = search_order(g);
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i)
      pos[order_[i]] = i;

    incident_.assign(n, {});
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
      const Edge& e = g.edges[ei];
      if (a.symbol(e.label.name).rank != e.label.rank)
        throw RankMismatch("edge label '" + e.label.name + "' used with a different rank");
      std::vector<NodeId> scope(e.sources);
      scope.insert(scope.end(), e.targets.begin(), e.targets.end());
      for (NodeId v : scope)
        if (incident_[v].empty() || incident_[v].back() != ei)
          incident_[v].push_back(ei);
      scopes_.push_back(std::move(scope));
      const StateRelation& rel = a.delta().at(e.label.name);
      std::vector<std::vector<State>> rows;
      for (const StatePair& p : rel.pairs()) {
        std::vector<State> row(p.in);
        row.insert(row.end(), p.out.begin(), p.out.end());
        rows.push_back(std::move(row));
      }
      rows_.push_back(std::move(rows));
    }

    // The boundary is checked once its last node has been assigned.
    boundary_at_ = 0;
    for (NodeId v : g.begin)
      boundary_at_ = std::max(boundary_at_, pos[v] + 1);
    for (NodeId v : g.end)
      boundary_at_ = std::max(boundary_at_, pos[v] + 1);
  }

  std::size_t run() {
    const std::size_t q = a_.states().size();
    const Domain full = q == 64 ? ~Domain{0} : (Domain{1} << q) - 1;
    std::vector<Domain> dom(g_.node_count, full);
    for (std::size_t ei = 0; ei < scopes_.size(); ++ei)
      if (scopes_[ei].empty() && !edge_supported(ei, dom))
        return 0;
    assignment_.assign(g_.node_count, 0);
    if (boundary_at_ == 0 && !boundary_ok())
      return 0;
    extend(0, dom);
    return count_;
  }

private:
  bool edge_supported(std::size_t ei, const std::vector<Domain>& dom) const {
    const auto& scope = scopes_[ei];
    for (const auto& row : rows_[ei]) {
      if (row_fits(scope, row, dom))
        return true;
    }
    return false;
  }

  static bool row_fits(const std::vector<NodeId>& scope, const std::vector<State>& row,
                       const std::vector<Domain>& dom) {
    for (std::size_t i = 0; i < scope.size(); ++i) {
      if (!(dom[scope[i]] & bit(row[i])))
        return false;
      for (std::size_t j = 0; j < i; ++j)
        if (scope[j] == scope[i] && row[j] != row[i])
          return false;
    }
    return true;
  }

  // Narrows the domains of the nodes of every edge incident to v.
  bool forward_check(NodeId v, std::vector<Domain>& dom) const {
    for (std::size_t ei : incident_[v]) {
      const auto& scope = scopes_[ei];
      std::vector<Domain> support(scope.size(), 0);
      bool any = false;
      for (const auto& row : rows_[ei]) {
        if (!row_fits(scope, row, dom))
          continue;
        any = true;
        for (std::size_t i = 0; i < scope.size(); ++i)
          support[i] |= bit(row[i]);
      }
      if (!any)
        return false;
      for (std::size_t i = 0; i < scope.size(); ++i)
        dom[scope[i]] &= support[i];
    }
    return true;
  }

  bool boundary_ok() const {
    StateWord in, out;
    for (NodeId v : g_.begin)
      in.push_back(assignment_[v]);
    for (NodeId v : g_.end)
      out.push_back(assignment_[v]);
    return a_.initial().contains(in) && a_.final_words().contains(out);
  }

  // Returns false once the visitor asks to stop.
  bool extend(std::size_t depth, const std::vector<Domain>& dom) {
    if (depth == order_.size()) {
      ++count_;
      return visit_(RunWitness{assignment_});
    }
    const NodeId v = order_[depth];
    for (Domain rest = dom[v]; rest; rest &= rest - 1) {
      const State g = static_cast<State>(std::countr_zero(rest));
      std::vector<Domain> trial(dom);
      trial[v] = bit(g);
      assignment_[v] = g;
      if (!forward_check(v, trial))
        continue;
      if (depth + 1 == boundary_at_ && !boundary_ok())
        continue;
      if (!extend(depth + 1, trial))
        return false;
    }
    return true;
  }

  const GraphAutomaton& a_;
  const Hypergraph& g_;
  const std::function<bool(const RunWitness&)>& visit_;
  std::vector<NodeId> order_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::vector<NodeId>> scopes_;
  std::vector<std::vector<std::vector<State>>> rows_;
  std::size_t boundary_at_ = 0;
  std::vector<State> assignment_;
  std::size_t count_ = 0;
};

} // namespace

std::size_t for_each_run(const GraphAutomaton& a, const Hypergraph& g,
                         const std::function<bool(const RunWitness&)>& visit) {
  return RunSearch(a, g, visit).run();
}

std::optional<RunWitness> run_search(const GraphAutomaton& a, const Hypergraph& g) {
  std::optional<RunWitness> found;
  for_each_run(a, g, [&](const RunWitness& w) {
    found = w;
    return false;
  });
  return found;
}

bool behavior_member(const GraphAutomaton& a, const Hypergraph& g) {
  return accepts(a, encode_graph(g));
}

} // namespace gaut

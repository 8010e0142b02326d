#include "gaut/encoder.hpp"

#include "gaut/error.hpp"

#include <algorithm>
#include <map>

namespace gaut {

AtomSymbol arc_label() { return AtomSymbol{"a", Rank{1, 1}}; }

Hypergraph digraph_to_hypergraph(const SimpleDigraph& d, const AtomSymbol& label) {
  if (label.rank != Rank{1, 1})
    throw RankMismatch("digraph arcs need a label of rank (1,1)");
  Hypergraph g;
  g.node_count = d.n;
  for (auto [from, to] : d.arcs) {
    if (from < 1 || from > d.n || to < 1 || to > d.n)
      throw Error("arc (" + std::to_string(from) + "," + std::to_string(to) +
                  ") out of range 1.." + std::to_string(d.n));
    g.edges.push_back(Edge{{from - 1}, {to - 1}, label});
  }
  return g;
}

SimpleDigraph as_digraph(const Hypergraph& g) {
  if (g.rank() != Rank{0, 0})
    throw RankMismatch("expected a (0,0)-graph");
  SimpleDigraph d;
  d.n = g.node_count;
  for (const Edge& e : g.edges) {
    if (e.label != arc_label())
      throw UnknownSymbol("edge label '" + e.label.name + "' is not the arc label a:(1,1)");
    d.arcs.emplace_back(e.sources[0] + 1, e.targets[0] + 1);
  }
  return d;
}

namespace {

// Builds one layer of the encoding; adjacent units merge and empty units
// vanish, so an all-unit layer is recognisable as an identity.
class Layer {
public:
  void add(Term t) {
    if (t.kind() == Term::Kind::Unit) {
      if (t.width() == 0)
        return;
      if (!parts_.empty() && parts_.back().kind() == Term::Kind::Unit) {
        parts_.back() = Term::unit(parts_.back().width() + t.width());
        return;
      }
    }
    parts_.push_back(std::move(t));
  }

  Term term() const { return Term::box_all(parts_); }

private:
  std::vector<Term> parts_;
};

// Splits I_{p,q} into its obvious cases.
Term node_const(std::size_t p, std::size_t q) {
  if (p == 1 && q == 1)
    return Term::unit(1);
  return Term::iconst(p, q);
}

class Chain {
public:
  void then(Term t) {
    if (t.kind() == Term::Kind::Unit)
      return;
    factors_.push_back(std::move(t));
  }
  void then(const Layer& layer) { then(layer.term()); }

  Term term(std::size_t width) const {
    if (factors_.empty())
      return Term::unit(width);
    return Term::prod_all(factors_);
  }

private:
  std::vector<Term> factors_;
};

// Wires are identified by keys; routes `from` onto `to` (same multiset).
template <class Key>
Permutation route(const std::vector<Key>& from, const std::vector<Key>& to) {
  std::map<Key, std::size_t> where;
  for (std::size_t j = 0; j < to.size(); ++j)
    where.emplace(to[j], j + 1);
  Permutation p;
  p.reserve(from.size());
  for (const Key& k : from)
    p.push_back(where.at(k));
  return p;
}

} // namespace

Term encode_graph(const Hypergraph& g) {
  g.validate();
  const std::size_t n = g.node_count;

  std::vector<std::size_t> in_begin(n, 0), in_end(n, 0), src_occ(n, 0), tgt_occ(n, 0);
  for (NodeId v : g.begin)
    ++in_begin[v];
  for (NodeId v : g.end)
    ++in_end[v];
  for (const Edge& e : g.edges) {
    for (NodeId v : e.sources)
      ++src_occ[v];
    for (NodeId v : e.targets)
      ++tgt_occ[v];
  }
  std::vector<bool> carry(n);
  for (NodeId v = 0; v < n; ++v)
    carry[v] = tgt_occ[v] > 0 || in_end[v] > 0;

  Chain chain;

  // Input boundary: group repeated begin nodes, merge them, create the rest,
  // and bring every node onto its own wire in id order.
  {
    // Key: (node, occurrence index).
    using Key = std::pair<NodeId, std::size_t>;
    std::vector<Key> from, grouped;
    std::vector<std::size_t> seen(n, 0);
    for (NodeId v : g.begin)
      from.emplace_back(v, seen[v]++);
    grouped = from;
    std::sort(grouped.begin(), grouped.end());
    chain.then(perm_term(route(from, grouped)));

    Layer create;
    std::vector<NodeId> after;
    for (NodeId v = 0; v < n; ++v)
      if (in_begin[v] > 0) {
        create.add(node_const(in_begin[v], 1));
        after.push_back(v);
      }
    for (NodeId v = 0; v < n; ++v)
      if (in_begin[v] == 0) {
        create.add(Term::iconst(0, 1));
        after.push_back(v);
      }
    chain.then(create);

    std::vector<NodeId> ordered(after);
    std::sort(ordered.begin(), ordered.end());
    chain.then(perm_term(route(after, ordered)));
  }

  // Wire keys after fan-out: (node, slot) where slots 0..src_occ-1 feed edge
  // sources in edge order and slot src_occ is the carry wire.
  using Wire = std::pair<NodeId, std::size_t>;
  std::vector<Wire> fanned;
  {
    Layer fan;
    for (NodeId v = 0; v < n; ++v) {
      const std::size_t copies = src_occ[v] + (carry[v] ? 1 : 0);
      fan.add(node_const(1, copies));
      for (std::size_t s = 0; s < copies; ++s)
        fanned.emplace_back(v, s);
    }
    chain.then(fan);
  }

  // Route copies to the edge layer: all edge sources in edge order, then the
  // carry wires.
  {
    std::vector<Wire> layer_in;
    std::vector<std::size_t> used(n, 0);
    for (const Edge& e : g.edges)
      for (NodeId v : e.sources)
        layer_in.emplace_back(v, used[v]++);
    for (NodeId v = 0; v < n; ++v)
      if (carry[v])
        layer_in.emplace_back(v, src_occ[v]);
    chain.then(perm_term(route(fanned, layer_in)));
  }

  // Edge layer.
  std::size_t carries = 0;
  for (NodeId v = 0; v < n; ++v)
    carries += carry[v] ? 1 : 0;
  {
    Layer edges;
    for (const Edge& e : g.edges)
      edges.add(Term::atom(e.label));
    edges.add(Term::unit(carries));
    chain.then(edges);
  }

  // Route each node's target occurrences next to its carry wire. Keys are
  // (node, slot) with slot 0 the carry and 1.. the targets in edge order.
  {
    std::vector<Wire> layer_out, merged;
    std::vector<std::size_t> used(n, 0);
    for (const Edge& e : g.edges)
      for (NodeId v : e.targets)
        layer_out.emplace_back(v, 1 + used[v]++);
    for (NodeId v = 0; v < n; ++v)
      if (carry[v])
        layer_out.emplace_back(v, 0);
    merged = layer_out;
    std::sort(merged.begin(), merged.end());
    chain.then(perm_term(route(layer_out, merged)));
  }

  // Fan in, then shape the output boundary.
  {
    Layer fan_in;
    for (NodeId v = 0; v < n; ++v)
      if (carry[v])
        fan_in.add(node_const(1 + tgt_occ[v], 1));
    chain.then(fan_in);

    Layer copies;
    std::vector<Wire> made;
    for (NodeId v = 0; v < n; ++v) {
      if (!carry[v])
        continue;
      copies.add(node_const(1, in_end[v]));
      for (std::size_t k = 0; k < in_end[v]; ++k)
        made.emplace_back(v, k);
    }
    chain.then(copies);

    std::vector<Wire> wanted;
    std::vector<std::size_t> used(n, 0);
    for (NodeId v : g.end)
      wanted.emplace_back(v, used[v]++);
    chain.then(perm_term(route(made, wanted)));
  }

  return chain.term(g.begin.size());
}

Term encode_digraph(const SimpleDigraph& d, const AtomSymbol& label) {
  return encode_graph(digraph_to_hypergraph(d, label));
}

} // namespace gaut

#include "gaut/hypergraph.hpp"

#include "gaut/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace gaut {

void Hypergraph::validate() const {
  auto check = [this](const std::vector<NodeId>& seq, const char* what) {
    for (NodeId v : seq)
      if (v >= node_count)
        throw Error(std::string("node id ") + std::to_string(v) + " in " + what +
                    " is out of range");
  };
  check(begin, "begin");
  check(end, "end");
  for (const Edge& e : edges) {
    check(e.sources, "edge sources");
    check(e.targets, "edge targets");
    if (e.sources.size() != e.label.rank.m || e.targets.size() != e.label.rank.n)
      throw RankMismatch("edge labeled '" + e.label.name + "' does not match its label rank");
  }
}

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

std::vector<NodeId> shifted(const std::vector<NodeId>& seq, std::size_t offset) {
  std::vector<NodeId> out(seq);
  for (NodeId& v : out)
    v += offset;
  return out;
}

} // namespace

Hypergraph graph_product(const Hypergraph& g, const Hypergraph& h) {
  if (g.end.size() != h.begin.size())
    throw RankMismatch("graph product: " + std::to_string(g.end.size()) + " end nodes against " +
                       std::to_string(h.begin.size()) + " begin nodes");
  const std::size_t offset = g.node_count;
  const std::size_t total = g.node_count + h.node_count;

  UnionFind uf(total);
  for (std::size_t i = 0; i < g.end.size(); ++i)
    uf.unite(g.end[i], h.begin[i] + offset);

  std::vector<NodeId> dense(total, total);
  std::size_t next = 0;
  for (std::size_t v = 0; v < total; ++v) {
    std::size_t r = uf.find(v);
    if (dense[r] == total)
      dense[r] = next++;
    dense[v] = dense[r];
  }
  auto remap = [&](const std::vector<NodeId>& seq, std::size_t off) {
    std::vector<NodeId> out;
    out.reserve(seq.size());
    for (NodeId v : seq)
      out.push_back(dense[v + off]);
    return out;
  };

  Hypergraph out;
  out.node_count = next;
  out.edges.reserve(g.edges.size() + h.edges.size());
  for (const Edge& e : g.edges)
    out.edges.push_back(Edge{remap(e.sources, 0), remap(e.targets, 0), e.label});
  for (const Edge& e : h.edges)
    out.edges.push_back(Edge{remap(e.sources, offset), remap(e.targets, offset), e.label});
  out.begin = remap(g.begin, 0);
  out.end = remap(h.end, offset);
  return out;
}

Hypergraph graph_sum(const Hypergraph& g, const Hypergraph& h) {
  const std::size_t offset = g.node_count;
  Hypergraph out;
  out.node_count = g.node_count + h.node_count;
  out.edges = g.edges;
  for (const Edge& e : h.edges)
    out.edges.push_back(Edge{shifted(e.sources, offset), shifted(e.targets, offset), e.label});
  out.begin = g.begin;
  for (NodeId v : h.begin)
    out.begin.push_back(v + offset);
  out.end = g.end;
  for (NodeId v : h.end)
    out.end.push_back(v + offset);
  return out;
}

Hypergraph discrete_graph(std::size_t n) {
  Hypergraph g;
  g.node_count = n;
  g.begin.resize(n);
  std::iota(g.begin.begin(), g.begin.end(), 0);
  g.end = g.begin;
  return g;
}

Hypergraph pi_graph() {
  Hypergraph g;
  g.node_count = 2;
  g.begin = {0, 1};
  g.end = {1, 0};
  return g;
}

Hypergraph iconst_graph(std::size_t p, std::size_t q) {
  Hypergraph g;
  g.node_count = 1;
  g.begin.assign(p, 0);
  g.end.assign(q, 0);
  return g;
}

Hypergraph atom_graph(const AtomSymbol& sigma) {
  Hypergraph g;
  g.node_count = sigma.rank.m + sigma.rank.n;
  Edge e{{}, {}, sigma};
  for (std::size_t i = 0; i < sigma.rank.m; ++i)
    e.sources.push_back(i);
  for (std::size_t j = 0; j < sigma.rank.n; ++j)
    e.targets.push_back(sigma.rank.m + j);
  g.begin = e.sources;
  g.end = e.targets;
  g.edges.push_back(std::move(e));
  return g;
}

namespace {

Hypergraph eval_checked(const Term& t) {
  switch (t.kind()) {
  case Term::Kind::Atom:
    return atom_graph(t.symbol());
  case Term::Kind::Unit:
    return discrete_graph(t.width());
  case Term::Kind::Pi:
    return pi_graph();
  case Term::Kind::IConst:
    return iconst_graph(t.p(), t.q());
  case Term::Kind::Prod:
    return graph_product(eval_checked(t.left()), eval_checked(t.right()));
  case Term::Kind::Box:
    return graph_sum(eval_checked(t.left()), eval_checked(t.right()));
  }
  throw Error("unreachable term kind");
}

} // namespace

Hypergraph eval_graph(const Term& t) {
  rank_of(t);
  return eval_checked(t);
}

Hypergraph relabel(const Hypergraph& g, const std::vector<NodeId>& perm) {
  if (perm.size() != g.node_count)
    throw Error("relabel: permutation size differs from node count");
  auto map = [&](const std::vector<NodeId>& seq) {
    std::vector<NodeId> out;
    out.reserve(seq.size());
    for (NodeId v : seq)
      out.push_back(perm[v]);
    return out;
  };
  Hypergraph out;
  out.node_count = g.node_count;
  for (const Edge& e : g.edges)
    out.edges.push_back(Edge{map(e.sources), map(e.targets), e.label});
  out.begin = map(g.begin);
  out.end = map(g.end);
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

using EdgeKey = std::tuple<std::string, std::size_t, std::size_t, std::vector<NodeId>,
                           std::vector<NodeId>>;

// Occurrence of a node: (role, label, label rank, position). Roles: 0 begin,
// 1 end, 2 edge source, 3 edge target.
using Occurrence = std::tuple<int, std::string, std::size_t, std::size_t, std::size_t>;
using Signature = std::vector<Occurrence>;

std::vector<Signature> signatures(const Hypergraph& g) {
  std::vector<Signature> sig(g.node_count);
  for (std::size_t i = 0; i < g.begin.size(); ++i)
    sig[g.begin[i]].emplace_back(0, std::string(), 0, 0, i);
  for (std::size_t i = 0; i < g.end.size(); ++i)
    sig[g.end[i]].emplace_back(1, std::string(), 0, 0, i);
  for (const Edge& e : g.edges) {
    for (std::size_t i = 0; i < e.sources.size(); ++i)
      sig[e.sources[i]].emplace_back(2, e.label.name, e.label.rank.m, e.label.rank.n, i);
    for (std::size_t i = 0; i < e.targets.size(); ++i)
      sig[e.targets[i]].emplace_back(3, e.label.name, e.label.rank.m, e.label.rank.n, i);
  }
  for (Signature& s : sig)
    std::sort(s.begin(), s.end());
  return sig;
}

class IsoSearch {
public:
  IsoSearch(const Hypergraph& g, const Hypergraph& h) : g_(g), h_(h) {}

  std::optional<std::vector<NodeId>> run() {
    if (g_.node_count != h_.node_count || g_.edges.size() != h_.edges.size() ||
        g_.begin.size() != h_.begin.size() || g_.end.size() != h_.end.size())
      return std::nullopt;

    gsig_ = signatures(g_);
    hsig_ = signatures(h_);
    {
      auto a = gsig_, b = hsig_;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b)
        return std::nullopt;
    }

    const std::size_t n = g_.node_count;
    forced_.assign(n, kNone);
    auto force = [&](const std::vector<NodeId>& gs, const std::vector<NodeId>& hs) {
      for (std::size_t i = 0; i < gs.size(); ++i) {
        if (forced_[gs[i]] != kNone && forced_[gs[i]] != hs[i])
          return false;
        forced_[gs[i]] = hs[i];
      }
      return true;
    };
    if (!force(g_.begin, h_.begin) || !force(g_.end, h_.end))
      return std::nullopt;

    for (const Edge& e : h_.edges)
      ++remaining_[key_of(e.label, e.sources, e.targets)];

    build_order();

    // Edges with no endpoints are matched up front.
    for (std::size_t ei : edges_at_[n]) {
      const Edge& e = g_.edges[ei];
      if (--remaining_[key_of(e.label, {}, {})] < 0)
        return std::nullopt;
    }

    image_.assign(n, kNone);
    used_.assign(n, false);
    if (!extend(0))
      return std::nullopt;
    return image_;
  }

private:
  static constexpr NodeId kNone = static_cast<NodeId>(-1);

  static EdgeKey key_of(const AtomSymbol& label, std::vector<NodeId> src,
                        std::vector<NodeId> tgt) {
    return EdgeKey{label.name, label.rank.m, label.rank.n, std::move(src), std::move(tgt)};
  }

  // Forced nodes first, then breadth-first along edges so that edges close
  // early and prune.
  void build_order() {
    const std::size_t n = g_.node_count;
    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t ei = 0; ei < g_.edges.size(); ++ei) {
      const Edge& e = g_.edges[ei];
      for (NodeId v : e.sources)
        incident[v].push_back(ei);
      for (NodeId v : e.targets)
        incident[v].push_back(ei);
    }
    std::vector<bool> placed(n, false);
    auto place = [&](NodeId v) {
      if (!placed[v]) {
        placed[v] = true;
        order_.push_back(v);
      }
    };
    for (NodeId v : g_.begin)
      place(v);
    for (NodeId v : g_.end)
      place(v);
    std::size_t head = 0;
    for (NodeId seed = 0; seed < n || head < order_.size();) {
      if (head == order_.size()) {
        while (seed < n && placed[seed])
          ++seed;
        if (seed == n)
          break;
        place(seed);
      }
      NodeId v = order_[head++];
      for (std::size_t ei : incident[v]) {
        for (NodeId w : g_.edges[ei].sources)
          place(w);
        for (NodeId w : g_.edges[ei].targets)
          place(w);
      }
    }

    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i)
      pos[order_[i]] = i;
    // edges_at_[i]: edges whose last endpoint in the order is order_[i];
    // edges_at_[n]: edges without endpoints.
    edges_at_.assign(n + 1, {});
    for (std::size_t ei = 0; ei < g_.edges.size(); ++ei) {
      const Edge& e = g_.edges[ei];
      std::size_t last = n;
      bool any = false;
      for (NodeId v : e.sources) {
        last = any ? std::max(last, pos[v]) : pos[v];
        any = true;
      }
      for (NodeId v : e.targets) {
        last = any ? std::max(last, pos[v]) : pos[v];
        any = true;
      }
      edges_at_[last].push_back(ei);
    }
  }

  EdgeKey image_key(const Edge& e) const {
    std::vector<NodeId> src, tgt;
    for (NodeId v : e.sources)
      src.push_back(image_[v]);
    for (NodeId v : e.targets)
      tgt.push_back(image_[v]);
    return key_of(e.label, std::move(src), std::move(tgt));
  }

  bool try_assign(std::size_t depth, NodeId v, NodeId w) {
    image_[v] = w;
    used_[w] = true;
    std::vector<EdgeKey> taken;
    bool ok = true;
    for (std::size_t ei : edges_at_[depth]) {
      EdgeKey k = image_key(g_.edges[ei]);
      auto it = remaining_.find(k);
      if (it == remaining_.end() || it->second == 0) {
        ok = false;
        break;
      }
      --it->second;
      taken.push_back(std::move(k));
    }
    if (ok && extend(depth + 1))
      return true;
    for (const EdgeKey& k : taken)
      ++remaining_[k];
    used_[w] = false;
    image_[v] = kNone;
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size())
      return true;
    NodeId v = order_[depth];
    if (forced_[v] != kNone) {
      NodeId w = forced_[v];
      if (used_[w] || gsig_[v] != hsig_[w])
        return false;
      return try_assign(depth, v, w);
    }
    for (NodeId w = 0; w < h_.node_count; ++w) {
      if (used_[w] || gsig_[v] != hsig_[w])
        continue;
      if (try_assign(depth, v, w))
        return true;
    }
    return false;
  }

  const Hypergraph& g_;
  const Hypergraph& h_;
  std::vector<Signature> gsig_, hsig_;
  std::vector<NodeId> forced_;
  std::vector<NodeId> order_;
  std::vector<std::vector<std::size_t>> edges_at_;
  std::map<EdgeKey, long> remaining_;
  std::vector<NodeId> image_;
  std::vector<bool> used_;
};

} // namespace

std::optional<std::vector<NodeId>> isomorphic(const Hypergraph& g, const Hypergraph& h) {
  return IsoSearch(g, h).run();
}

} // namespace gaut

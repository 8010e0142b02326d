#include "gaut/json_io.hpp"

#include "gaut/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gaut {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw SyntaxError(what, 0, 0); }

std::string id_key(const Json& id) {
  if (id.is_string())
    return id.get<std::string>();
  if (id.is_number_integer())
    return std::to_string(id.get<long long>());
  schema_error("node ids must be integers or strings, got " + id.dump());
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    schema_error(std::string("missing field \"") + name + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* name) {
  const Json& f = field(j, name);
  if (!f.is_array())
    schema_error(std::string("field \"") + name + "\" must be an array");
  return f;
}

} // namespace

Json hypergraph_to_json(const Hypergraph& g, const std::vector<std::string>* names) {
  auto id = [&](NodeId v) -> Json {
    if (names)
      return names->at(v);
    return v;
  };
  auto seq = [&](const std::vector<NodeId>& s) {
    Json a = Json::array();
    for (NodeId v : s)
      a.push_back(id(v));
    return a;
  };
  Json nodes = Json::array();
  for (NodeId v = 0; v < g.node_count; ++v)
    nodes.push_back(id(v));
  Json edges = Json::array();
  for (const Edge& e : g.edges)
    edges.push_back(Json{{"label", e.label.name}, {"src", seq(e.sources)}, {"tgt", seq(e.targets)}});
  return Json{{"nodes", nodes}, {"edges", edges}, {"begin", seq(g.begin)}, {"end", seq(g.end)}};
}

ParsedGraph hypergraph_from_json(const Json& j) {
  if (!j.is_object())
    schema_error("hypergraph must be a JSON object");
  ParsedGraph out;
  std::map<std::string, NodeId> index;
  for (const Json& id : array_field(j, "nodes")) {
    std::string key = id_key(id);
    if (!index.emplace(key, out.node_names.size()).second)
      schema_error("duplicate node id " + id.dump());
    out.node_names.push_back(std::move(key));
  }
  out.graph.node_count = out.node_names.size();

  auto seq = [&](const Json& a, const char* what) {
    if (!a.is_array())
      schema_error(std::string(what) + " must be an array");
    std::vector<NodeId> s;
    for (const Json& id : a) {
      auto it = index.find(id_key(id));
      if (it == index.end())
        schema_error(std::string("unknown node ") + id.dump() + " in " + what);
      s.push_back(it->second);
    }
    return s;
  };

  std::map<std::string, Rank> ranks;
  for (const Json& e : array_field(j, "edges")) {
    if (!e.is_object())
      schema_error("edges must be objects");
    const Json& label = field(e, "label");
    if (!label.is_string())
      schema_error("edge label must be a string");
    Edge edge{seq(field(e, "src"), "src"), seq(field(e, "tgt"), "tgt"),
              AtomSymbol{label.get<std::string>(), Rank{}}};
    edge.label.rank = Rank{edge.sources.size(), edge.targets.size()};
    auto [it, fresh] = ranks.emplace(edge.label.name, edge.label.rank);
    if (!fresh && it->second != edge.label.rank)
      schema_error("label '" + edge.label.name + "' used with two different ranks");
    out.graph.edges.push_back(std::move(edge));
  }
  out.graph.begin = j.contains("begin") ? seq(j["begin"], "begin") : std::vector<NodeId>{};
  out.graph.end = j.contains("end") ? seq(j["end"], "end") : std::vector<NodeId>{};
  return out;
}

Json word_to_json(const StateWord& w, const StateSet& q) {
  Json a = Json::array();
  for (State g : w)
    a.push_back(q.names.at(g));
  return a;
}

StateWord word_from_json(const Json& j, const StateSet& q) {
  StateWord w;
  if (j.is_array()) {
    for (const Json& s : j) {
      if (s.is_string())
        w.push_back(q.index_of(s.get<std::string>()));
      else if (s.is_number_integer())
        w.push_back(q.index_of(std::to_string(s.get<long long>())));
      else
        schema_error("state names must be strings, got " + s.dump());
    }
    return w;
  }
  if (!j.is_string())
    schema_error("a word is an array of state names or a string, got " + j.dump());
  std::istringstream in(j.get<std::string>());
  std::vector<std::string> tokens;
  for (std::string t; in >> t;)
    tokens.push_back(t);
  const bool single_chars = std::all_of(q.names.begin(), q.names.end(),
                                        [](const std::string& s) { return s.size() == 1; });
  const bool known = tokens.size() == 1 &&
                     std::find(q.names.begin(), q.names.end(), tokens[0]) != q.names.end();
  if (tokens.size() == 1 && !known && single_chars) {
    for (char c : tokens[0])
      w.push_back(q.index_of(std::string(1, c)));
    return w;
  }
  for (const std::string& t : tokens)
    w.push_back(q.index_of(t));
  return w;
}

Json relation_to_json(const StateRelation& r, const StateSet& q) {
  Json pairs = Json::array();
  for (const StatePair& p : r.pairs())
    pairs.push_back(Json::array({word_to_json(p.in, q), word_to_json(p.out, q)}));
  return Json{{"rank", {r.rank().m, r.rank().n}}, {"pairs", pairs}};
}

Json axiom_report_to_json(const AxiomReport& report, const StateSet& q) {
  Json out = Json::array();
  for (const AxiomResult& r : report.results) {
    Json entry{{"equation", r.equation}, {"holds", r.holds}};
    entry["counterexample"] =
        r.counterexample
            ? Json::array({word_to_json(r.counterexample->in, q), word_to_json(r.counterexample->out, q)})
            : Json(nullptr);
    if (r.generator)
      entry["generator"] = *r.generator;
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

WordSet word_set_from_json(const Json& j, const StateSet& q) {
  if (!j.is_object())
    schema_error("initial/final must be objects");
  const Json& kind = field(j, "kind");
  if (kind == "universal")
    return WordSet::universal();
  if (kind != "explicit")
    schema_error("word set kind must be \"explicit\" or \"universal\"");
  std::vector<StateWord> words;
  for (const Json& w : array_field(j, "words"))
    words.push_back(word_from_json(w, q));
  return WordSet::of(std::move(words));
}

Json word_set_to_json(const WordSet& ws, const StateSet& q) {
  if (ws.is_universal())
    return Json{{"kind", "universal"}};
  Json words = Json::array();
  for (const StateWord& w : ws.words())
    words.push_back(word_to_json(w, q));
  return Json{{"kind", "explicit"}, {"words", words}};
}

} // namespace

GraphAutomaton automaton_from_json(const Json& j) {
  if (!j.is_object())
    schema_error("automaton must be a JSON object");
  StateSet q;
  for (const Json& s : array_field(j, "states")) {
    std::string name = s.is_string() ? s.get<std::string>() : id_key(s);
    if (std::find(q.names.begin(), q.names.end(), name) != q.names.end())
      schema_error("duplicate state '" + name + "'");
    q.names.push_back(std::move(name));
  }

  std::map<std::string, Rank> declared;
  if (j.contains("alphabet")) {
    const Json& alpha = j["alphabet"];
    if (!alpha.is_object())
      schema_error("alphabet must map names to [m, n]");
    for (auto it = alpha.begin(); it != alpha.end(); ++it) {
      const Json& r = it.value();
      if (!r.is_array() || r.size() != 2 || !r[0].is_number_unsigned() || !r[1].is_number_unsigned())
        schema_error("rank of '" + it.key() + "' must be [m, n]");
      declared[it.key()] = Rank{r[0].get<std::size_t>(), r[1].get<std::size_t>()};
    }
  }

  const Json& delta = field(j, "delta");
  if (!delta.is_object())
    schema_error("delta must map symbol names to pair lists");
  std::vector<AtomSymbol> alphabet;
  AtomValues values;
  for (auto it = delta.begin(); it != delta.end(); ++it) {
    if (!it.value().is_array())
      schema_error("transitions of '" + it.key() + "' must be an array of pairs");
    std::vector<StatePair> pairs;
    for (const Json& p : it.value()) {
      if (!p.is_array() || p.size() != 2)
        schema_error("each transition of '" + it.key() + "' must be a pair of words");
      pairs.push_back(StatePair{word_from_json(p[0], q), word_from_json(p[1], q)});
    }
    Rank rank;
    if (auto d = declared.find(it.key()); d != declared.end())
      rank = d->second;
    else if (!pairs.empty())
      rank = Rank{pairs.front().in.size(), pairs.front().out.size()};
    else
      schema_error("rank of '" + it.key() + "' cannot be inferred; declare it in \"alphabet\"");
    alphabet.push_back(AtomSymbol{it.key(), rank});
    values.emplace(it.key(), StateRelation(rank, q.size(), std::move(pairs)));
  }
  for (const auto& [name, rank] : declared)
    if (!delta.contains(name))
      schema_error("no transitions given for '" + name + "'");

  return GraphAutomaton(std::move(alphabet), q, std::move(values),
                        word_set_from_json(field(j, "initial"), q),
                        word_set_from_json(field(j, "final"), q));
}

Json automaton_to_json(const GraphAutomaton& a) {
  Json alphabet = Json::object();
  Json delta = Json::object();
  for (const AtomSymbol& s : a.alphabet()) {
    alphabet[s.name] = {s.rank.m, s.rank.n};
    delta[s.name] = relation_to_json(a.delta().at(s.name), a.states())["pairs"];
  }
  return Json{{"states", a.states().names},
              {"alphabet", alphabet},
              {"delta", delta},
              {"initial", word_set_to_json(a.initial(), a.states())},
              {"final", word_set_to_json(a.final_words(), a.states())}};
}

} // namespace gaut

// gaut: graph automata over TSRel(Q) from the command line.
//
// Exit codes: 0 accepted / pass, 1 rejected / fail, 2 usage, parse or
// evaluation error. Payloads go to stdout as JSON (terms as text);
// diagnostics go to stderr.

#include "gaut/automaton.hpp"
#include "gaut/colorability.hpp"
#include "gaut/encoder.hpp"
#include "gaut/error.hpp"
#include "gaut/graphoid.hpp"
#include "gaut/hypergraph.hpp"
#include "gaut/json_io.hpp"
#include "gaut/term.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

constexpr int kAccepted = 0;
constexpr int kRejected = 1;
constexpr int kError = 2;

struct Options {
  bool quiet = false;

  std::string graph_file;
  std::string format = "edgelist";
  std::size_t k = 0;
  bool witness = false;

  std::string term_file;
  std::string semantics = "graph";
  std::size_t states = 0;
  std::string delta_file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw gaut::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

gaut::GraphFormat graph_format(const std::string& name) {
  static const std::map<std::string, gaut::GraphFormat> formats{
      {"edgelist", gaut::GraphFormat::EdgeList},
      {"json", gaut::GraphFormat::Json},
      {"dot", gaut::GraphFormat::Dot},
  };
  return formats.at(name);
}

void emit(const Options& opt, const std::string& payload) {
  if (!opt.quiet)
    std::cout << payload << '\n';
}

int cmd_recognize(const Options& opt) {
  const gaut::ParsedGraph parsed =
      gaut::parse_graph_input(read_file(opt.graph_file), graph_format(opt.format));
  const gaut::SimpleDigraph d = gaut::as_digraph(parsed.graph);
  const gaut::ColorabilityResult result = gaut::is_k_colorable(d, opt.k);

  gaut::Json out{{"status", result.colorable ? "accepted" : "rejected"},
                 {"colorable", result.colorable},
                 {"k", opt.k}};
  if (opt.witness && result.witness) {
    gaut::Json coloring = gaut::Json::object();
    for (std::size_t v = 0; v < d.n; ++v)
      coloring[parsed.node_names[v]] = result.witness->colors[v];
    out["coloring"] = coloring;
  }
  emit(opt, out.dump());
  return result.colorable ? kAccepted : kRejected;
}

int cmd_encode(const Options& opt) {
  const gaut::ParsedGraph parsed =
      gaut::parse_graph_input(read_file(opt.graph_file), graph_format(opt.format));
  emit(opt, gaut::print_term(gaut::encode_graph(parsed.graph)));
  return kAccepted;
}

int cmd_eval(const Options& opt) {
  const gaut::Term t = gaut::parse_term(read_file(opt.term_file));
  gaut::rank_of(t);
  if (opt.semantics == "graph") {
    emit(opt, gaut::hypergraph_to_json(gaut::eval_graph(t)).dump());
    return kAccepted;
  }
  std::optional<gaut::GraphAutomaton> a;
  if (!opt.delta_file.empty()) {
    a = gaut::automaton_from_json(gaut::Json::parse(read_file(opt.delta_file)));
    if (opt.states != 0 && opt.states != a->states().size())
      throw gaut::Error("--states disagrees with the automaton file");
  } else {
    if (opt.states == 0)
      throw gaut::Error("relation semantics needs --states or --delta-file");
    a = gaut::make_color_automaton(opt.states);
  }
  emit(opt, gaut::relation_to_json(gaut::extend_delta(*a, t), a->states()).dump());
  return kAccepted;
}

int cmd_axioms(const Options& opt) {
  const gaut::DSet d = gaut::tsrel_dset(opt.states);
  const gaut::GraphAutomaton clr = gaut::make_color_automaton(opt.states);
  const gaut::StateRelation& delta_a = clr.delta().at("a");
  const std::vector<gaut::StateRelation> generators{
      delta_a,
      d.d21,
      d.d12,
      d.s,
      d.d01,
      d.d10,
      gaut::sum_rel(d.d21, gaut::unit_e(opt.states, 1)),
      gaut::sum_rel(d.d12, gaut::unit_e(opt.states, 1)),
      gaut::sum_rel(delta_a, gaut::sum_rel(delta_a, delta_a)),
  };
  const gaut::AxiomReport report = gaut::check_axioms(d, generators);
  const bool pass = report.all_hold();
  gaut::Json out{{"status", pass ? "pass" : "fail"},
                 {"states", opt.states},
                 {"equations", gaut::axiom_report_to_json(report, clr.states())}};
  emit(opt, out.dump());
  return pass ? kAccepted : kRejected;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph automata over the relational graphoid TSRel(Q)"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--quiet", opt.quiet, "Suppress the payload; report through the exit code only");

  const std::vector<std::string> formats{"edgelist", "json", "dot"};

  auto* recognize = app.add_subcommand("recognize", "Decide k-colorability of a graph");
  recognize->add_option("graph-file", opt.graph_file, "Graph to read")->required();
  recognize->add_option("--k", opt.k, "Number of colors")->required()->check(CLI::PositiveNumber);
  recognize->add_option("--format", opt.format, "Input format")->check(CLI::IsMember(formats));
  recognize->add_flag("--witness", opt.witness, "Print a proper coloring when accepted");

  auto* encode = app.add_subcommand("encode", "Print a magmoid term whose graph is the input");
  encode->add_option("graph-file", opt.graph_file, "Graph to read")->required();
  encode->add_option("--format", opt.format, "Input format")->check(CLI::IsMember(formats));

  auto* eval = app.add_subcommand("eval", "Evaluate a term as a hypergraph or a state relation");
  eval->add_option("term-file", opt.term_file, "Term to read (.mterm)")->required();
  eval->add_option("--semantics", opt.semantics, "graph or relation")
      ->check(CLI::IsMember({"graph", "relation"}));
  eval->add_option("--states", opt.states, "Use the k-coloring automaton with this many states");
  eval->add_option("--delta-file", opt.delta_file, "Automaton JSON supplying the transitions");

  auto* axioms = app.add_subcommand("axioms", "Check the graphoid equations in TSRel({1..N})");
  axioms->add_option("--states", opt.states, "Number of states")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*recognize)
      return cmd_recognize(opt);
    if (*encode)
      return cmd_encode(opt);
    if (*eval)
      return cmd_eval(opt);
    return cmd_axioms(opt);
  } catch (const std::exception& e) {
    std::cerr << "gaut: " << e.what() << '\n';
    return kError;
  }
}

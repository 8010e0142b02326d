// Runs the gaut binary and checks exit codes and JSON payloads.

#include "support.hpp"

#include "gaut/json_io.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace gaut {
namespace {

using namespace gaut::test;
namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gaut_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  // stderr goes to a file so stdout carries only the payload.
  Outcome run(const std::string& args) {
    const std::string err = (dir_ / "stderr.txt").string();
    const std::string cmd = std::string(GAUT_BINARY) + " " + args + " 2>" + err;
    Outcome o;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
      return o;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
      o.out.append(buf.data(), n);
    const int status = pclose(pipe);
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(err);
    stderr_.assign(std::istreambuf_iterator<char>(in), {});
    return o;
  }

  fs::path dir_;
  std::string stderr_;
};

const char* kGEdges = "4\n1 2\n2 3\n2 4\n3 4\n";
const char* kFEdges = "4\n1 2\n2 3\n2 4\n3 4\n1 3\n1 4\n";
const char* kK33Edges = "6\n1 4\n1 5\n1 6\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n";

TEST_F(Cli, RecognizeAcceptsWithWitness) {
  const Outcome o = run("recognize " + file("g.txt", kGEdges) + " --k 3 --witness");
  ASSERT_EQ(o.code, 0) << stderr_;
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["status"], "accepted");
  EXPECT_EQ(j["colorable"], true);
  EXPECT_EQ(j["k"], 3);
  Coloring c;
  for (int v = 1; v <= 4; ++v)
    c.colors.push_back(j["coloring"][std::to_string(v)].get<unsigned>());
  EXPECT_TRUE(verify_coloring(graph_G(), c));
  EXPECT_EQ(c.colors, (std::vector<unsigned>{1, 2, 3, 1}));
}

TEST_F(Cli, RecognizeRejects) {
  const Outcome o = run("recognize " + file("f.txt", kFEdges) + " --k 3");
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(Json::parse(o.out)["status"], "rejected");
  EXPECT_EQ(run("recognize " + file("f.txt", kFEdges) + " --k 4").code, 0);
}

TEST_F(Cli, RecognizeEmptyGraphAndFormats) {
  EXPECT_EQ(run("recognize " + file("empty.txt", "0\n") + " --k 1").code, 0);
  EXPECT_EQ(run("recognize " + file("t.dot", "digraph { a -> b; b -> c; c -> a }") +
                " --format dot --k 2")
                .code,
            1);
  const Outcome dot = run("recognize " + file("e.dot", "digraph { \"u\" -> \"v\" }") +
                          " --format dot --k 2 --witness");
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(Json::parse(dot.out)["coloring"], Json::parse(R"({"u":1,"v":2})"));

  const std::string json = hypergraph_to_json(digraph_to_hypergraph(graph_K33(), arc_label())).dump();
  EXPECT_EQ(run("recognize " + file("k.json", json) + " --format json --k 2").code, 0);
}

TEST_F(Cli, QuietSuppressesPayload) {
  const Outcome o = run("--quiet recognize " + file("g.txt", kGEdges) + " --k 2");
  EXPECT_EQ(o.code, 1);
  EXPECT_TRUE(o.out.empty());
}

TEST_F(Cli, ErrorsExitTwo) {
  const Outcome bad = run("recognize " + file("bad.txt", "3\n1 x\n") + " --k 3");
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(stderr_.find("2:3"), std::string::npos) << stderr_;
  EXPECT_EQ(run("recognize " + (dir_ / "missing.txt").string() + " --k 3").code, 2);
  EXPECT_EQ(run("recognize " + file("g.txt", kGEdges)).code, 2);
  EXPECT_EQ(run("recognize " + file("g.txt", kGEdges) + " --k 0").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("eval " + file("bad.mterm", "(prod pi") + " --semantics graph").code, 2);
  EXPECT_EQ(run("eval " + file("rank.mterm", "(prod (i 0 2) (sym a 1 1))")).code, 2);
}

TEST_F(Cli, EncodeThenEval) {
  const Outcome enc = run("encode " + file("k.txt", kK33Edges));
  ASSERT_EQ(enc.code, 0) << stderr_;
  std::size_t leaves = 0;
  for (std::size_t at = enc.out.find("(sym a 1 1)"); at != std::string::npos;
       at = enc.out.find("(sym a 1 1)", at + 1))
    ++leaves;
  EXPECT_EQ(leaves, 9u);

  const Outcome ev = run("eval " + file("k.mterm", enc.out) + " --semantics graph");
  ASSERT_EQ(ev.code, 0) << stderr_;
  const ParsedGraph back = hypergraph_from_json(Json::parse(ev.out));
  EXPECT_TRUE(isomorphic(back.graph, digraph_to_hypergraph(graph_K33(), arc_label())));

  const Outcome empty = run("encode " + file("empty.txt", "0\n"));
  EXPECT_EQ(empty.out, "(en 0)\n");
}

TEST_F(Cli, EvalGraphAndRelation) {
  const Outcome g = run("eval " + file("g.mterm", kGExpression));
  ASSERT_EQ(g.code, 0) << stderr_;
  const Json j = Json::parse(g.out);
  EXPECT_EQ(j["nodes"].size(), 4u);
  EXPECT_EQ(j["edges"].size(), 4u);

  const Outcome pi = run("eval " + file("pi.mterm", "pi") + " --semantics relation --states 2");
  ASSERT_EQ(pi.code, 0) << stderr_;
  EXPECT_EQ(Json::parse(pi.out),
            Json::parse(R"({"rank":[2,2],"pairs":[[["1","1"],["1","1"]],[["1","2"],["2","1"]],)"
                        R"([["2","1"],["1","2"]],[["2","2"],["2","2"]]]})"));

  const Outcome e0 = run("eval " + file("e0.mterm", "(en 0)"));
  const Json empty = Json::parse(e0.out);
  EXPECT_TRUE(empty["nodes"].empty());
  EXPECT_TRUE(empty["edges"].empty());

  const std::string delta = automaton_to_json(make_color_automaton(3)).dump();
  const Outcome rel = run("eval " + file("g2.mterm", kGExpression) +
                          " --semantics relation --delta-file " + file("a3.json", delta));
  ASSERT_EQ(rel.code, 0) << stderr_;
  EXPECT_EQ(Json::parse(rel.out), Json::parse(R"({"rank":[0,0],"pairs":[[[],[]]]})"));
  EXPECT_EQ(run("eval " + file("pi.mterm", "pi") + " --semantics relation").code, 2);
}

TEST_F(Cli, Axioms) {
  for (int n = 1; n <= 3; ++n) {
    const Outcome o = run("axioms --states " + std::to_string(n));
    ASSERT_EQ(o.code, 0) << stderr_;
    const Json j = Json::parse(o.out);
    EXPECT_EQ(j["status"], "pass");
    for (const Json& eq : j["equations"])
      EXPECT_EQ(eq["holds"], true) << eq.dump();
  }
  EXPECT_EQ(run("axioms").code, 2);
}

} // namespace
} // namespace gaut

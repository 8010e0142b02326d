#include "gaut/encoder.hpp"
#include "gaut/error.hpp"
#include "gaut/json_io.hpp"

#include <cctype>
#include <map>

namespace gaut {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  std::pair<std::size_t, std::size_t> where(std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    auto [line, col] = where(at);
    throw SyntaxError(what, line, col);
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
};

ParsedGraph parse_edge_list(std::string_view text) {
  Cursor cur{text};
  ParsedGraph out;
  bool have_count = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos)
      line_end = text.size();

    std::vector<std::pair<std::size_t, std::size_t>> numbers;  // value, offset
    std::size_t i = line_start;
    while (i < line_end) {
      char c = text[i];
      if (c == '#')
        break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c)))
        cur.fail_at(i, std::string("unexpected character '") + c + "'");
      std::size_t start = i, value = 0;
      while (i < line_end && std::isdigit(static_cast<unsigned char>(text[i])))
        value = value * 10 + static_cast<std::size_t>(text[i++] - '0');
      numbers.emplace_back(value, start);
    }

    if (!numbers.empty()) {
      if (!have_count) {
        if (numbers.size() != 1)
          cur.fail_at(numbers[1].second, "first line must hold only the node count");
        out.graph.node_count = numbers[0].first;
        have_count = true;
      } else {
        if (numbers.size() != 2)
          cur.fail_at(numbers[0].second, "an arc line must hold exactly two node numbers");
        for (auto [value, offset] : numbers)
          if (value < 1 || value > out.graph.node_count)
            cur.fail_at(offset, "node " + std::to_string(value) + " out of range 1.." +
                                    std::to_string(out.graph.node_count));
        out.graph.edges.push_back(
            Edge{{numbers[0].first - 1}, {numbers[1].first - 1}, arc_label()});
      }
    }
    line_start = line_end + 1;
  }
  if (!have_count)
    cur.fail_at(text.size(), "missing node count");
  for (std::size_t v = 1; v <= out.graph.node_count; ++v)
    out.node_names.push_back(std::to_string(v));
  return out;
}

class DotParser {
public:
  explicit DotParser(std::string_view text) : cur_{text} {}

  ParsedGraph parse() {
    skip();
    std::string kw = identifier();
    if (kw == "strict") {
      skip();
      kw = identifier();
    }
    if (kw != "digraph")
      cur_.fail("expected 'digraph'");
    skip();
    if (cur_.peek() != '{')
      id();  // graph name
    skip();
    expect('{');
    while (true) {
      skip();
      if (cur_.done())
        cur_.fail("unterminated graph body");
      if (cur_.peek() == '}') {
        ++cur_.pos;
        break;
      }
      if (cur_.peek() == ';') {
        ++cur_.pos;
        continue;
      }
      statement();
    }
    skip();
    if (!cur_.done())
      cur_.fail("trailing input after graph");
    return std::move(out_);
  }

private:
  void skip() {
    while (!cur_.done()) {
      char c = cur_.peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++cur_.pos;
      } else if (c == '#' || cur_.text.substr(cur_.pos, 2) == "//") {
        while (!cur_.done() && cur_.peek() != '\n')
          ++cur_.pos;
      } else if (cur_.text.substr(cur_.pos, 2) == "/*") {
        std::size_t close = cur_.text.find("*/", cur_.pos + 2);
        if (close == std::string_view::npos)
          cur_.fail("unterminated comment");
        cur_.pos = close + 2;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip();
    if (cur_.peek() != c)
      cur_.fail(std::string("expected '") + c + "'");
    ++cur_.pos;
  }

  std::string identifier() {
    std::size_t start = cur_.pos;
    while (!cur_.done() && (std::isalnum(static_cast<unsigned char>(cur_.peek())) ||
                            cur_.peek() == '_' || cur_.peek() == '.'))
      ++cur_.pos;
    if (start == cur_.pos)
      cur_.fail("expected an identifier");
    return std::string(cur_.text.substr(start, cur_.pos - start));
  }

  std::string id() {
    skip();
    if (cur_.peek() == '"') {
      std::string s;
      ++cur_.pos;
      while (!cur_.done() && cur_.peek() != '"') {
        if (cur_.peek() == '\\' && cur_.pos + 1 < cur_.text.size())
          ++cur_.pos;
        s += cur_.text[cur_.pos++];
      }
      if (cur_.done())
        cur_.fail("unterminated string");
      ++cur_.pos;
      return s;
    }
    return identifier();
  }

  void attributes() {
    skip();
    while (cur_.peek() == '[') {
      std::size_t close = cur_.text.find(']', cur_.pos);
      if (close == std::string_view::npos)
        cur_.fail("unterminated attribute list");
      cur_.pos = close + 1;
      skip();
    }
  }

  NodeId node(const std::string& name) {
    auto [it, fresh] = index_.emplace(name, out_.node_names.size());
    if (fresh) {
      out_.node_names.push_back(name);
      ++out_.graph.node_count;
    }
    return it->second;
  }

  void statement() {
    std::string first = id();
    skip();
    if (first == "graph" || first == "node" || first == "edge") {
      if (cur_.peek() == '[') {
        attributes();
        return;
      }
    }
    if (cur_.peek() == '=') {
      ++cur_.pos;
      id();
      return;
    }
    std::vector<std::string> chain{first};
    while (cur_.text.substr(cur_.pos, 2) == "->") {
      cur_.pos += 2;
      chain.push_back(id());
      skip();
    }
    if (cur_.text.substr(cur_.pos, 2) == "--")
      cur_.fail("undirected edges are not supported; use '->'");
    attributes();
    std::vector<NodeId> ids;
    for (const std::string& name : chain)
      ids.push_back(node(name));
    for (std::size_t i = 0; i + 1 < ids.size(); ++i)
      out_.graph.edges.push_back(Edge{{ids[i]}, {ids[i + 1]}, arc_label()});
  }

  Cursor cur_;
  ParsedGraph out_;
  std::map<std::string, NodeId> index_;
};

ParsedGraph parse_json_graph(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    Cursor cur{text};
    auto [line, col] = cur.where(e.byte > 0 ? e.byte - 1 : 0);
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), line, col);
  }
  ParsedGraph g = hypergraph_from_json(j);
  try {
    g.graph.validate();
  } catch (const Error& e) {
    throw SyntaxError(e.what(), 0, 0);
  }
  return g;
}

} // namespace

ParsedGraph parse_graph_input(std::string_view text, GraphFormat format) {
  switch (format) {
  case GraphFormat::EdgeList:
    return parse_edge_list(text);
  case GraphFormat::Dot:
    return DotParser(text).parse();
  case GraphFormat::Json:
    return parse_json_graph(text);
  }
  throw Error("unknown graph format");
}

} // namespace gaut

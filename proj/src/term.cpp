#include "gaut/term.hpp"

#include "gaut/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace gaut {

std::ostream& operator<<(std::ostream& os, const Rank& r) {
  return os << '(' << r.m << ',' << r.n << ')';
}

struct Term::Node {
  Kind kind;
  AtomSymbol symbol;         // Atom
  std::size_t a = 0, b = 0;  // Unit: a = width; IConst: (a, b) = (p, q)
  std::optional<Term> left, right;
  std::optional<Rank> rank;
  std::size_t size = 1;
};

namespace {

std::optional<Rank> combine_rank(Term::Kind kind, const Term& l, const Term& r) {
  const auto& lr = l.checked_rank();
  const auto& rr = r.checked_rank();
  if (!lr || !rr)
    return std::nullopt;
  if (kind == Term::Kind::Prod) {
    if (lr->n != rr->m)
      return std::nullopt;
    return Rank{lr->m, rr->n};
  }
  return Rank{lr->m + rr->m, lr->n + rr->n};
}

} // namespace

Term Term::atom(AtomSymbol symbol) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->rank = symbol.rank;
  n->symbol = std::move(symbol);
  return Term(std::move(n));
}

Term Term::unit(std::size_t width) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Unit;
  n->a = width;
  n->rank = Rank{width, width};
  return Term(std::move(n));
}

Term Term::pi() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pi;
  n->rank = Rank{2, 2};
  return Term(std::move(n));
}

Term Term::iconst(std::size_t p, std::size_t q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::IConst;
  n->a = p;
  n->b = q;
  n->rank = Rank{p, q};
  return Term(std::move(n));
}

Term Term::prod(Term left, Term right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prod;
  n->rank = combine_rank(Kind::Prod, left, right);
  n->size = 1 + left.size() + right.size();
  n->left = std::move(left);
  n->right = std::move(right);
  return Term(std::move(n));
}

Term Term::box(Term top, Term bottom) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Box;
  n->rank = combine_rank(Kind::Box, top, bottom);
  n->size = 1 + top.size() + bottom.size();
  n->left = std::move(top);
  n->right = std::move(bottom);
  return Term(std::move(n));
}

Term Term::prod_all(std::span<const Term> factors) {
  if (factors.empty())
    throw RankMismatch("empty product has no rank");
  Term acc = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;)
    acc = prod(factors[i], std::move(acc));
  return acc;
}

Term Term::box_all(std::span<const Term> parts) {
  if (parts.empty())
    return unit(0);
  Term acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;)
    acc = box(parts[i], std::move(acc));
  return acc;
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
const AtomSymbol& Term::symbol() const { return node_->symbol; }
std::size_t Term::width() const { return node_->a; }
std::size_t Term::p() const { return node_->a; }
std::size_t Term::q() const { return node_->b; }
const Term& Term::left() const { return *node_->left; }
const Term& Term::right() const { return *node_->right; }
const std::optional<Rank>& Term::checked_rank() const noexcept { return node_->rank; }
std::size_t Term::size() const noexcept { return node_->size; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_)
    return true;
  if (a.kind() != b.kind() || a.size() != b.size())
    return false;
  switch (a.kind()) {
  case Term::Kind::Atom:
    return a.symbol() == b.symbol();
  case Term::Kind::Unit:
    return a.width() == b.width();
  case Term::Kind::Pi:
    return true;
  case Term::Kind::IConst:
    return a.p() == b.p() && a.q() == b.q();
  case Term::Kind::Prod:
  case Term::Kind::Box:
    return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

// Locates the innermost offending product for a useful message.
void find_mismatch(const Term& t) {
  if (t.kind() != Term::Kind::Prod && t.kind() != Term::Kind::Box)
    return;
  if (!t.left().checked_rank())
    find_mismatch(t.left());
  if (!t.right().checked_rank())
    find_mismatch(t.right());
  std::ostringstream os;
  os << "product of rank " << *t.left().checked_rank() << " with rank "
     << *t.right().checked_rank();
  throw RankMismatch(os.str());
}

} // namespace

Rank rank_of(const Term& t) {
  if (!t.checked_rank())
    find_mismatch(t);
  return *t.checked_rank();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TermParser {
public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = term();
    skip_space();
    if (pos_ != text_.size())
      fail("trailing input");
    return t;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(what, line, col);
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n')
          ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c)))
        break;
      ++pos_;
    }
    if (start == pos_)
      fail(pos_ == text_.size() ? "unexpected end of input" : "expected a word");
    return text_.substr(start, pos_ - start);
  }

  std::size_t natural() {
    std::size_t start = pos_;
    std::string_view w = word();
    std::size_t value = 0;
    for (char c : w) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        pos_ = start;
        skip_space();
        fail("expected a natural number, got '" + std::string(w) + "'");
      }
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
  }

  void expect_close() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ')')
      fail("expected ')'");
    ++pos_;
  }

  bool at_close() {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == ')';
  }

  Term term() {
    skip_space();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    if (text_[pos_] == ')')
      fail("unexpected ')'");
    if (text_[pos_] != '(') {
      std::size_t start = pos_;
      std::string_view w = word();
      if (w == "e")
        return Term::unit(1);
      if (w == "pi")
        return Term::pi();
      pos_ = start;
      fail("unknown constant '" + std::string(w) + "'");
    }
    ++pos_;
    std::size_t head_pos = pos_;
    std::string_view head = word();
    if (head == "en") {
      std::size_t n = natural();
      expect_close();
      return Term::unit(n);
    }
    if (head == "i") {
      std::size_t p = natural();
      std::size_t q = natural();
      expect_close();
      return Term::iconst(p, q);
    }
    if (head == "sym") {
      std::string name(word());
      std::size_t m = natural();
      std::size_t n = natural();
      expect_close();
      return Term::atom(AtomSymbol{std::move(name), Rank{m, n}});
    }
    if (head == "prod" || head == "box") {
      std::vector<Term> args;
      args.push_back(term());
      do {
        args.push_back(term());
      } while (!at_close());
      expect_close();
      return head == "prod" ? Term::prod_all(args) : Term::box_all(args);
    }
    pos_ = head_pos;
    fail("unknown operator '" + std::string(head) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_into(const Term& t, std::string& out) {
  switch (t.kind()) {
  case Term::Kind::Atom:
    out += "(sym " + t.symbol().name + ' ' + std::to_string(t.symbol().rank.m) + ' ' +
           std::to_string(t.symbol().rank.n) + ')';
    return;
  case Term::Kind::Unit:
    out += t.width() == 1 ? std::string("e") : "(en " + std::to_string(t.width()) + ')';
    return;
  case Term::Kind::Pi:
    out += "pi";
    return;
  case Term::Kind::IConst:
    out += "(i " + std::to_string(t.p()) + ' ' + std::to_string(t.q()) + ')';
    return;
  case Term::Kind::Prod:
  case Term::Kind::Box: {
    // Right-nested chains of the same operator print as one n-ary form.
    const Term::Kind k = t.kind();
    out += k == Term::Kind::Prod ? "(prod" : "(box";
    const Term* cur = &t;
    while (cur->kind() == k) {
      out += ' ';
      print_into(cur->left(), out);
      cur = &cur->right();
    }
    out += ' ';
    print_into(*cur, out);
    out += ')';
    return;
  }
  }
}

} // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

std::size_t count_atoms(const Term& t) {
  switch (t.kind()) {
  case Term::Kind::Atom:
    return 1;
  case Term::Kind::Prod:
  case Term::Kind::Box:
    return count_atoms(t.left()) + count_atoms(t.right());
  default:
    return 0;
  }
}

bool is_wiring_only(const Term& t) {
  switch (t.kind()) {
  case Term::Kind::Atom:
  case Term::Kind::IConst:
    return false;
  case Term::Kind::Prod:
  case Term::Kind::Box:
    return is_wiring_only(t.left()) && is_wiring_only(t.right());
  default:
    return true;
  }
}

// ---------------------------------------------------------------------------
// Permutations

void check_permutation(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size() + 1, false);
  for (std::size_t image : perm) {
    if (image < 1 || image > perm.size())
      throw InvalidPermutation("image " + std::to_string(image) + " out of range 1.." +
                               std::to_string(perm.size()));
    if (seen[image])
      throw InvalidPermutation("image " + std::to_string(image) + " repeated");
    seen[image] = true;
  }
}

Permutation then(std::span<const std::size_t> first, std::span<const std::size_t> second) {
  check_permutation(first);
  check_permutation(second);
  if (first.size() != second.size())
    throw InvalidPermutation("permutations of different sizes");
  Permutation out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i)
    out[i] = second[first[i] - 1];
  return out;
}

Term adjacent_swap(std::size_t i, std::size_t n) {
  if (i < 1 || i + 1 > n)
    throw InvalidPermutation("swap position out of range");
  std::vector<Term> parts;
  if (i > 1)
    parts.push_back(Term::unit(i - 1));
  parts.push_back(Term::pi());
  if (n - i - 1 > 0)
    parts.push_back(Term::unit(n - i - 1));
  return Term::box_all(parts);
}

Term perm_term(std::span<const std::size_t> perm) {
  check_permutation(perm);
  const std::size_t n = perm.size();
  // dest[pos] is where the wire currently at pos must end up. Bubble-sorting
  // dest yields the adjacent swaps in the order they are applied.
  std::vector<std::size_t> dest(perm.begin(), perm.end());
  std::vector<Term> swaps;
  for (std::size_t pass = 0; pass < n; ++pass) {
    bool moved = false;
    for (std::size_t j = 0; j + 1 < n - pass; ++j) {
      if (dest[j] > dest[j + 1]) {
        std::swap(dest[j], dest[j + 1]);
        swaps.push_back(adjacent_swap(j + 1, n));
        moved = true;
      }
    }
    if (!moved)
      break;
  }
  if (swaps.empty())
    return Term::unit(n);
  return Term::prod_all(swaps);
}

Term s_m1_term(std::size_t m) {
  if (m == 0)
    return Term::unit(1);
  Term acc = Term::pi();
  for (std::size_t k = 1; k < m; ++k)
    acc = Term::prod(Term::box(acc, Term::unit(1)), Term::box(Term::unit(k), Term::pi()));
  return acc;
}

} // namespace gaut

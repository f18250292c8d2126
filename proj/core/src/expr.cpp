#include "detset/expr.hpp"

#include <cctype>
#include <map>

#include "detset/errors.hpp"
#include "detset/structure.hpp"
#include "detset/triangular.hpp"

namespace detset {

namespace {

const std::map<std::string, std::size_t, std::less<>>& atom_arity() {
  static const std::map<std::string, std::size_t, std::less<>> arity{
      {"Z", 1}, {"D", 1}, {"S", 1}, {"A", 1}, {"Q", 1},
      {"EA", 2}, {"U", 2}, {"ST", 2}, {"T", 2}};
  return arity;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  GroupExpr parse() {
    GroupExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (v > 1000000000) {
        pos_ = start;
        fail("integer too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    if (v == 0) {
      pos_ = start;
      fail("parameters must be positive");
    }
    return v;
  }

  GroupExpr expr() {
    GroupExpr first = factor();
    if (!peek('x')) return first;
    GroupExpr prod;
    prod.kind = GroupExpr::Kind::product;
    prod.children.push_back(std::move(first));
    while (peek('x')) {
      ++pos_;
      prod.children.push_back(factor());
    }
    return prod;
  }

  GroupExpr factor() {
    GroupExpr a = atom();
    if (!peek('^')) return a;
    ++pos_;
    GroupExpr pw;
    pw.kind = GroupExpr::Kind::power;
    pw.exponent = integer();
    pw.children.push_back(std::move(a));
    return pw;
  }

  GroupExpr atom() {
    skip_ws();
    if (peek('(')) {
      ++pos_;
      GroupExpr inner = expr();
      expect(')');
      return inner;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isupper(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected group name or '('");
    GroupExpr e;
    e.name = std::string(s_.substr(start, pos_ - start));
    const auto it = atom_arity().find(e.name);
    if (it == atom_arity().end()) {
      pos_ = start;
      fail("unknown group '" + e.name + "'");
    }
    expect('(');
    e.params.push_back(integer());
    while (peek(',')) {
      ++pos_;
      e.params.push_back(integer());
    }
    if (e.params.size() != it->second) {
      pos_ = start;
      fail(e.name + " takes " + std::to_string(it->second) + " parameter(s)");
    }
    expect(')');
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void flatten(const GroupExpr& e, const Caps& caps, std::vector<GroupPtr>& out);

GroupPtr atom_group(const GroupExpr& e, const Caps& caps) {
  const auto& n = e.name;
  const auto& p = e.params;
  FiniteGroup g = [&]() -> FiniteGroup {
    if (n == "Z") return cyclic(p[0], caps);
    if (n == "D") return dihedral(p[0], caps);
    if (n == "S") return symmetric(p[0], caps);
    if (n == "A") return alternating(p[0], caps);
    if (n == "Q") return dicyclic(p[0], caps);
    if (n == "EA") return elementary_abelian(p[0], p[1], caps);
    if (n == "U") return unitriangular(p[0], p[1], caps);
    const TriangularSpec spec{p[0], static_cast<std::uint32_t>(p[1]), n == "ST"};
    return *st_group(spec, caps).group;
  }();
  return share(g.renamed(print_group_expr(e)));
}

void flatten(const GroupExpr& e, const Caps& caps, std::vector<GroupPtr>& out) {
  switch (e.kind) {
    case GroupExpr::Kind::atom:
      out.push_back(atom_group(e, caps));
      return;
    case GroupExpr::Kind::product:
      for (const auto& c : e.children) flatten(c, caps, out);
      return;
    case GroupExpr::Kind::power: {
      std::vector<GroupPtr> one;
      flatten(e.children.front(), caps, one);
      for (std::size_t k = 0; k < e.exponent; ++k) out.insert(out.end(), one.begin(), one.end());
      return;
    }
  }
}

}  // namespace

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_group_expr(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::atom: {
      std::string s = e.name + "(";
      for (std::size_t i = 0; i < e.params.size(); ++i) s += (i ? "," : "") + std::to_string(e.params[i]);
      return s + ")";
    }
    case GroupExpr::Kind::product: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const auto& c = e.children[i];
        // Left-associative: a product child needs parentheses to stay a single factor.
        const bool wrap = c.kind == GroupExpr::Kind::product;
        s += (i ? " x " : "") + (wrap ? "(" + print_group_expr(c) + ")" : print_group_expr(c));
      }
      return s;
    }
    case GroupExpr::Kind::power: {
      const auto& c = e.children.front();
      const bool wrap = c.kind != GroupExpr::Kind::atom;
      return (wrap ? "(" + print_group_expr(c) + ")" : print_group_expr(c)) + "^" +
             std::to_string(e.exponent);
    }
  }
  return {};
}

EvaluatedGroup evaluate(const GroupExpr& e, const Caps& caps) {
  std::vector<GroupPtr> factors;
  flatten(e, caps, factors);
  const std::string descriptor = print_group_expr(e);
  if (factors.size() == 1) return {share(factors.front()->renamed(descriptor)), nullptr};
  auto dp = std::make_shared<const DirectProduct>(std::move(factors), caps, descriptor);
  return {dp->group(), dp};
}

EvaluatedGroup evaluate(std::string_view text, const Caps& caps) {
  return evaluate(parse_group_expr(text), caps);
}

}  // namespace detset

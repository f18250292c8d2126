#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "detset/caps.hpp"
#include "detset/families.hpp"
#include "detset/group.hpp"

namespace detset {

// Group expressions:
//   expr   := factor ('x' factor)*
//   factor := atom ('^' INT)?
//   atom   := NAME '(' INT (',' INT)* ')' | '(' expr ')'
// with NAME one of Z D S A Q EA U ST T.
struct GroupExpr {
  enum class Kind { atom, product, power };
  Kind kind = Kind::atom;
  std::string name;                  // atom
  std::vector<std::size_t> params;   // atom
  std::vector<GroupExpr> children;   // product: two or more; power: exactly one
  std::size_t exponent = 1;          // power

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

// Throws ParseError (with byte offset) on bad syntax, unknown atoms, wrong
// parameter counts and zero parameters.
GroupExpr parse_group_expr(std::string_view text);

// Canonical text; parse_group_expr(print_group_expr(e)) == e.
std::string print_group_expr(const GroupExpr& e);

struct EvaluatedGroup {
  GroupPtr group;
  std::shared_ptr<const DirectProduct> product;  // set when there are two or more factors
};

// Products and powers are flattened into one direct product of atoms. The
// group's descriptor is the canonical text of the expression.
EvaluatedGroup evaluate(const GroupExpr& e, const Caps& caps = {});
EvaluatedGroup evaluate(std::string_view text, const Caps& caps = {});

}  // namespace detset

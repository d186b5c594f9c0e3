#pragma once

#include <array>
#include <string>
#include <vector>

namespace bihom {

struct Expr;

// One factor of a term. Calls with one argument are map applications (and may
// carry a power); calls with more arguments are operation applications.
struct Node {
  enum class Kind { var, map, op, cyc };
  Kind kind = Kind::var;
  std::string name;               // variable, map or operation name
  int power = 1;                  // maps only
  std::vector<std::string> vars;  // cyc only: the cycled variables, in order
  std::vector<Expr> args;         // map: {child}; op: arguments; cyc: {body}
};

struct Term {
  long coeff = 1;
  Node node;
};

// Integer linear combination of terms.
struct Expr {
  std::vector<Term> terms;
};

bool operator==(const Node& a, const Node& b);
bool operator==(const Term& a, const Term& b);
bool operator==(const Expr& a, const Expr& b);

struct IdentityAst {
  std::vector<std::string> vars;
  Expr expr;  // the identity reads "expr = 0"
  friend bool operator==(const IdentityAst& a, const IdentityAst& b) {
    return a.vars == b.vars && a.expr == b.expr;
  }
};

// Parses "forall x,y: expr = 0" and validates linearity.
IdentityAst parse_identity(const std::string& text);
std::string print_identity(const IdentityAst& ast);
std::string print_expr(const Expr& e);

// Replaces every cyc node by the sum over cyclic shifts of its variable list.
Expr expand_cyc(const Expr& e);

// Every variable must occur exactly once in each fully expanded monomial.
// Throws LinearityViolation(variable, top-level term index).
void validate_linearity(const IdentityAst& ast);

// Exponents of the two-parameter family of identities, in the order m, n, l, s, p, q, k, t.
struct ExponentTuple {
  int m = 0, n = 0, l = 0, s = 0, p = 0, q = 0, k = 0, t = 0;
  std::array<int, 8> values() const { return {m, n, l, s, p, q, k, t}; }
  static ExponentTuple from_values(const std::array<int, 8>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
  }
  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
};

// Fills "^{expr}" exponent placeholders (expr := int | name [("+"|"-") int]) from named values.
std::string fill_placeholders(const std::string& text, const std::vector<std::string>& names,
                              const std::vector<int>& values);

}  // namespace bihom

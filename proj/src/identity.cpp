#include "bihom/identity.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "bihom/errors.hpp"

namespace bihom {

bool operator==(const Node& a, const Node& b) {
  return a.kind == b.kind && a.name == b.name && a.power == b.power && a.vars == b.vars && a.args == b.args;
}
bool operator==(const Term& a, const Term& b) { return a.coeff == b.coeff && a.node == b.node; }
bool operator==(const Expr& a, const Expr& b) { return a.terms == b.terms; }

namespace {

Expr single(long c, Node n) { return Expr{{Term{c, std::move(n)}}}; }

Expr scale(Expr e, long c) {
  for (auto& t : e.terms) t.coeff *= c;
  return e;
}

// Canonical map application: a^0(E) = E, a^p(a^q(E)) = a^(p+q)(E), and a
// scalar factor of a single-term child moves outside.
Expr make_map(const std::string& name, int power, Expr child) {
  if (power == 0) return child;
  if (child.terms.size() == 1) {
    long c = child.terms[0].coeff;
    Node inner = std::move(child.terms[0].node);
    if (inner.kind == Node::Kind::map && inner.name == name)
      return scale(make_map(name, power + inner.power, std::move(inner.args[0])), c);
    Node n{Node::Kind::map, name, power, {}, {single(1, std::move(inner))}};
    return single(c, std::move(n));
  }
  Node n{Node::Kind::map, name, power, {}, {std::move(child)}};
  return single(1, std::move(n));
}

Expr make_op(const std::string& name, std::vector<Expr> args) {
  long c = 1;
  for (auto& a : args)
    if (a.terms.size() == 1) {
      c *= a.terms[0].coeff;
      a.terms[0].coeff = 1;
    }
  Node n{Node::Kind::op, name, 1, {}, std::move(args)};
  return single(c, std::move(n));
}

Expr make_cyc(std::vector<std::string> vars, Expr body) {
  long c = 1;
  if (body.terms.size() == 1) {
    c = body.terms[0].coeff;
    body.terms[0].coeff = 1;
  }
  Node n{Node::Kind::cyc, "cyc", 1, std::move(vars), {std::move(body)}};
  return single(c, std::move(n));
}

class DslParser {
 public:
  explicit DslParser(const std::string& s) : s_(s) {}

  IdentityAst identity() {
    IdentityAst ast;
    expect_word("forall");
    ast.vars.push_back(ident());
    while (eat(',')) ast.vars.push_back(ident());
    std::set<std::string> seen;
    for (const auto& v : ast.vars) {
      if (v == "forall" || v == "cyc") throw SyntaxError("reserved name used as variable", i_);
      if (!seen.insert(v).second) throw SyntaxError("variable '" + v + "' declared twice", i_);
    }
    declared_ = ast.vars;
    expect(':');
    ast.expr = expr();
    expect('=');
    skip();
    if (i_ >= s_.size() || s_[i_] != '0') throw SyntaxError("expected '0' after '='", i_);
    ++i_;
    skip();
    if (i_ != s_.size()) throw SyntaxError("unexpected trailing text", i_);
    return ast;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", i_);
  }
  bool at_ident() {
    skip();
    return i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_');
  }
  std::string ident() {
    if (!at_ident()) throw SyntaxError("expected identifier", i_);
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    return s_.substr(start, i_ - start);
  }
  void expect_word(const std::string& w) {
    std::size_t at = i_;
    if (ident() != w) throw SyntaxError("expected '" + w + "'", at);
  }
  long nat() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw SyntaxError("expected number", i_);
    if (i_ - start > 9) throw SyntaxError("number too large", start);
    return std::stol(s_.substr(start, i_ - start));
  }

  Expr expr() {
    Expr e;
    long sign = eat('-') ? -1 : 1;
    for (;;) {
      Expr t = term();
      for (auto& x : t.terms) {
        x.coeff *= sign;
        e.terms.push_back(std::move(x));
      }
      if (eat('+'))
        sign = 1;
      else if (eat('-'))
        sign = -1;
      else
        return e;
    }
  }

  Expr term() {
    skip();
    long c = 1;
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      c = nat();
      expect('*');
    }
    return scale(factor(), c);
  }

  Expr factor() {
    if (eat('(')) {
      Expr e = expr();
      expect(')');
      return e;
    }
    std::size_t at = (skip(), i_);
    std::string name = ident();
    if (name == "forall") throw SyntaxError("'forall' is reserved", at);
    if (name == "cyc") {
      expect('(');
      std::vector<std::string> vars{ident()};
      while (eat(',')) vars.push_back(ident());
      for (const auto& v : vars) check_declared(v, at);
      std::set<std::string> distinct(vars.begin(), vars.end());
      if (distinct.size() != vars.size()) throw SyntaxError("repeated variable in cyc", at);
      expect(')');
      expect('{');
      Expr body = expr();
      expect('}');
      return make_cyc(std::move(vars), std::move(body));
    }
    bool has_power = false;
    int power = 1;
    if (eat('^')) {
      has_power = true;
      long sign = eat('-') ? -1 : 1;
      power = static_cast<int>(sign * nat());
    }
    if (eat('(')) {
      std::vector<Expr> args{expr()};
      while (eat(',')) args.push_back(expr());
      expect(')');
      if (args.size() == 1) return make_map(name, power, std::move(args[0]));
      if (has_power) throw SyntaxError("power suffix on operation '" + name + "'", at);
      return make_op(name, std::move(args));
    }
    if (has_power) throw SyntaxError("power suffix without argument list", at);
    check_declared(name, at);
    return single(1, Node{Node::Kind::var, name, 1, {}, {}});
  }

  void check_declared(const std::string& v, std::size_t at) {
    if (std::find(declared_.begin(), declared_.end(), v) == declared_.end())
      throw SyntaxError("undeclared variable '" + v + "'", at);
  }

  const std::string& s_;
  std::size_t i_ = 0;
  std::vector<std::string> declared_;
};

std::string print_node(const Node& n) {
  switch (n.kind) {
    case Node::Kind::var:
      return n.name;
    case Node::Kind::map: {
      std::string p = n.power == 1 ? "" : "^" + std::to_string(n.power);
      return n.name + p + "(" + print_expr(n.args[0]) + ")";
    }
    case Node::Kind::op: {
      std::string out = n.name + "(";
      for (std::size_t i = 0; i < n.args.size(); ++i) out += (i ? ", " : "") + print_expr(n.args[i]);
      return out + ")";
    }
    case Node::Kind::cyc: {
      std::string out = "cyc(";
      for (std::size_t i = 0; i < n.vars.size(); ++i) out += (i ? "," : "") + n.vars[i];
      return out + "){ " + print_expr(n.args[0]) + " }";
    }
  }
  return {};
}

Node rename(const Node& n, const std::vector<std::string>& from, const std::vector<std::string>& to);

Expr rename(const Expr& e, const std::vector<std::string>& from, const std::vector<std::string>& to) {
  Expr r;
  for (const auto& t : e.terms) r.terms.push_back({t.coeff, rename(t.node, from, to)});
  return r;
}

Node rename(const Node& n, const std::vector<std::string>& from, const std::vector<std::string>& to) {
  Node r = n;
  if (n.kind == Node::Kind::var) {
    auto it = std::find(from.begin(), from.end(), n.name);
    if (it != from.end()) r.name = to[static_cast<std::size_t>(it - from.begin())];
    return r;
  }
  if (n.kind == Node::Kind::cyc)
    for (auto& v : r.vars) {
      auto it = std::find(from.begin(), from.end(), v);
      if (it != from.end()) v = to[static_cast<std::size_t>(it - from.begin())];
    }
  for (auto& a : r.args) a = rename(a, from, to);
  return r;
}

Node expand_node(const Node& n);

Expr expand_expr(const Expr& e) {
  Expr out;
  for (const auto& t : e.terms) {
    if (t.node.kind == Node::Kind::cyc) {
      Expr body = expand_expr(t.node.args[0]);
      std::vector<std::string> from = t.node.vars, to = t.node.vars;
      for (std::size_t shift = 0; shift < from.size(); ++shift) {
        // x -> y -> z -> x, applied `shift` times
        for (std::size_t i = 0; i < from.size(); ++i) to[i] = from[(i + shift) % from.size()];
        for (auto& s : rename(body, from, to).terms) out.terms.push_back({s.coeff * t.coeff, std::move(s.node)});
      }
    } else {
      out.terms.push_back({t.coeff, expand_node(t.node)});
    }
  }
  return out;
}

Node expand_node(const Node& n) {
  Node r = n;
  for (auto& a : r.args) a = expand_expr(a);
  return r;
}

using VarSet = std::vector<bool>;

std::size_t var_index(const std::vector<std::string>& vars, const std::string& v) {
  return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin());
}

VarSet vars_of(const Expr& e, const std::vector<std::string>& vars, std::size_t term);

VarSet vars_of(const Node& n, const std::vector<std::string>& vars, std::size_t term) {
  VarSet s(vars.size(), false);
  switch (n.kind) {
    case Node::Kind::var:
      s[var_index(vars, n.name)] = true;
      return s;
    case Node::Kind::map:
    case Node::Kind::cyc:
      return vars_of(n.args[0], vars, term);
    case Node::Kind::op:
      for (const auto& a : n.args) {
        VarSet t = vars_of(a, vars, term);
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (s[i] && t[i]) throw LinearityViolation(vars[i], term);
          s[i] = s[i] || t[i];
        }
      }
      return s;
  }
  return s;
}

VarSet vars_of(const Expr& e, const std::vector<std::string>& vars, std::size_t term) {
  VarSet first;
  for (const auto& t : e.terms) {
    VarSet s = vars_of(t.node, vars, term);
    if (first.empty()) {
      first = s;
      continue;
    }
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != first[i]) throw LinearityViolation(vars[i], term);
  }
  return first;
}

}  // namespace

IdentityAst parse_identity(const std::string& text) {
  IdentityAst ast = DslParser(text).identity();
  validate_linearity(ast);
  return ast;
}

std::string print_expr(const Expr& e) {
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const Term& t = e.terms[i];
    long c = t.coeff;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    long a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a) + "*";
    std::string body = print_node(t.node);
    out += body;
  }
  return out;
}

std::string print_identity(const IdentityAst& ast) {
  std::string out = "forall ";
  for (std::size_t i = 0; i < ast.vars.size(); ++i) out += (i ? "," : "") + ast.vars[i];
  return out + ": " + print_expr(ast.expr) + " = 0";
}

Expr expand_cyc(const Expr& e) { return expand_expr(e); }

void validate_linearity(const IdentityAst& ast) {
  for (std::size_t t = 0; t < ast.expr.terms.size(); ++t) {
    Expr one{{ast.expr.terms[t]}};
    VarSet s = vars_of(expand_expr(one), ast.vars, t);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!s[i]) throw LinearityViolation(ast.vars[i], t);
  }
}

std::string fill_placeholders(const std::string& text, const std::vector<std::string>& names,
                              const std::vector<int>& values) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '{' || i == 0 || text[i - 1] != '^') {
      out += text[i++];
      continue;
    }
    std::size_t close = text.find('}', i);
    if (close == std::string::npos) throw SyntaxError("unterminated placeholder", i);
    std::string inner;
    for (char c : text.substr(i + 1, close - i - 1))
      if (!std::isspace(static_cast<unsigned char>(c))) inner += c;
    std::size_t j = 0;
    long value = 0;
    if (j < inner.size() && std::isalpha(static_cast<unsigned char>(inner[j]))) {
      std::size_t start = j;
      while (j < inner.size() && (std::isalnum(static_cast<unsigned char>(inner[j])) || inner[j] == '_')) ++j;
      std::string name = inner.substr(start, j - start);
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw SyntaxError("unknown placeholder '" + name + "'", i);
      value = values.at(static_cast<std::size_t>(it - names.begin()));
    }
    if (j < inner.size()) {
      long sign = 1;
      if (inner[j] == '+' || inner[j] == '-') sign = inner[j++] == '-' ? -1 : 1;
      else if (j != 0) throw SyntaxError("bad placeholder '" + inner + "'", i);
      std::size_t start = j;
      while (j < inner.size() && std::isdigit(static_cast<unsigned char>(inner[j]))) ++j;
      if (start == j || j != inner.size()) throw SyntaxError("bad placeholder '" + inner + "'", i);
      value += sign * std::stol(inner.substr(start, j - start));
    }
    out += std::to_string(value);
    i = close + 1;
  }
  return out;
}

}  // namespace bihom

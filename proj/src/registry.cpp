#include "bihom/registry.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "bihom/embedded.hpp"
#include "bihom/errors.hpp"
#include "bihom/rng.hpp"

namespace bihom {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
void push_unique(std::vector<T>& v, const T& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

void merge_into(StructureDef& dst, const StructureDef& src) {
  for (const auto& o : src.ops) push_unique(dst.ops, o);
  for (const auto& m : src.maps) push_unique(dst.maps, m);
  for (const auto& p : src.predicates) push_unique(dst.predicates, p);
  for (const auto& id : src.identities)
    if (!dst.find(id.id)) dst.identities.push_back(id);
  for (const auto& t : src.templates) {
    bool seen = std::any_of(dst.templates.begin(), dst.templates.end(), [&](const TemplateDef& d) { return d.id == t.id; });
    if (!seen) dst.templates.push_back(t);
  }
  for (const auto& n : src.notes) push_unique(dst.notes, n);
}

struct Raw {
  StructureDef def;
  std::vector<std::string> includes;
};

std::vector<Raw> parse_raw(const std::string& text) {
  // join continuation lines, remembering where each statement began
  std::vector<std::pair<std::size_t, std::string>> stmts;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    if ((line[0] == ' ' || line[0] == '\t') && !stmts.empty())
      stmts.back().second += " " + trim(line);
    else
      stmts.emplace_back(lineno, trim(line));
  }

  std::vector<Raw> out;
  auto current = [&]() -> Raw& {
    if (out.empty()) {
      // files of bare identities need no header
      out.push_back({});
      out.back().def.name = "anonymous";
    }
    return out.back();
  };
  for (const auto& [ln, s] : stmts) {
    auto sp = s.find(' ');
    std::string kw = s.substr(0, sp);
    std::string rest = sp == std::string::npos ? std::string() : trim(s.substr(sp + 1));
    try {
      if (kw == "structure") {
        if (rest.empty()) throw ParseError("structure needs a name", ln);
        out.push_back({});
        out.back().def.name = rest;
      } else if (kw == "include") {
        current().includes.push_back(rest);
      } else if (kw == "ops") {
        for (auto& o : split_list(rest)) push_unique(current().def.ops, o);
      } else if (kw == "maps") {
        for (auto& m : split_list(rest)) push_unique(current().def.maps, m);
      } else if (kw == "predicate") {
        current().def.predicates.push_back(Predicate::parse(rest));
      } else if (kw == "note") {
        current().def.notes.push_back(rest);
      } else if (kw == "identity" || kw == "template") {
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw ParseError("missing ':' after identity name", ln);
        std::string head = trim(rest.substr(0, colon));
        std::string body = trim(rest.substr(colon + 1));
        bool regular = false;
        auto paren = head.find('(');
        if (paren != std::string::npos) {
          if (trim(head.substr(paren)) != "(regular)") throw ParseError("unknown identity flag " + head.substr(paren), ln);
          regular = true;
          head = trim(head.substr(0, paren));
        }
        if (kw == "template") {
          current().def.templates.push_back({head, body});
        } else {
          current().def.identities.push_back({head, body, parse_identity(body), regular});
        }
      } else if (kw == "forall") {
        current().def.identities.push_back({"line " + std::to_string(ln), s, parse_identity(s), false});
      } else {
        throw ParseError("unknown statement '" + kw + "'", ln);
      }
    } catch (const SyntaxError& e) {
      throw ParseError(e.what(), ln);
    } catch (const LinearityViolation& e) {
      throw ParseError(e.what(), ln);
    }
  }
  return out;
}

void check_names(const StructureDef& d) {
  std::function<void(const Expr&)> walk_expr;
  std::function<void(const Node&)> walk = [&](const Node& n) {
    if (n.kind == Node::Kind::map && std::find(d.maps.begin(), d.maps.end(), n.name) == d.maps.end())
      throw UnknownName("structure '" + d.name + "' uses undeclared map '" + n.name + "'");
    if (n.kind == Node::Kind::op && std::find(d.ops.begin(), d.ops.end(), n.name) == d.ops.end())
      throw UnknownName("structure '" + d.name + "' uses undeclared operation '" + n.name + "'");
    for (const auto& a : n.args) walk_expr(a);
  };
  walk_expr = [&](const Expr& e) {
    for (const auto& t : e.terms) walk(t.node);
  };
  for (const auto& id : d.identities) walk_expr(id.ast.expr);
}

}  // namespace

std::string Predicate::id() const {
  switch (kind) {
    case Kind::commute:
      return "commute(" + first + "," + second + ")";
    case Kind::multiplicative:
      return "multiplicative(" + first + "," + second + ")";
    case Kind::regular:
      return "regular(" + first + ")";
  }
  return {};
}

Predicate Predicate::parse(const std::string& text) {
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw SyntaxError("malformed predicate '" + text + "'", 0);
  std::string kind = trim(text.substr(0, open));
  auto args = split_list(text.substr(open + 1, close - open - 1));
  Predicate p;
  if (kind == "commute" && args.size() == 2) {
    p.kind = Kind::commute;
  } else if (kind == "multiplicative" && args.size() == 2) {
    p.kind = Kind::multiplicative;
  } else if (kind == "regular" && args.size() == 1) {
    p.kind = Kind::regular;
  } else {
    throw SyntaxError("unknown predicate '" + text + "'", 0);
  }
  p.first = args[0];
  if (args.size() > 1) p.second = args[1];
  return p;
}

const IdentityDef* StructureDef::find(const std::string& identity_id) const {
  for (const auto& i : identities)
    if (i.id == identity_id) return &i;
  return nullptr;
}

std::vector<StructureDef> parse_idl(const std::string& text) {
  std::vector<StructureDef> out;
  for (auto& r : parse_raw(text)) {
    // includes refer to the built-in structures
    StructureDef def;
    def.name = r.def.name;
    for (const auto& inc : r.includes) merge_into(def, Registry::builtin().get(inc));
    merge_into(def, r.def);
    if (def.name != "anonymous") check_names(def);
    out.push_back(std::move(def));
  }
  return out;
}

Registry Registry::from_sources(const std::map<std::string, std::string>& sources) {
  std::map<std::string, Raw> raw;
  for (const auto& [file, text] : sources)
    for (auto& r : parse_raw(text)) {
      std::string name = r.def.name;
      if (!raw.emplace(name, std::move(r)).second) throw SchemaError("structure '" + name + "' defined twice");
    }

  Registry reg;
  std::set<std::string> visiting;
  std::function<const StructureDef&(const std::string&)> resolve = [&](const std::string& name) -> const StructureDef& {
    auto done = reg.defs_.find(name);
    if (done != reg.defs_.end()) return done->second;
    auto it = raw.find(name);
    if (it == raw.end()) throw UnknownName("unknown structure '" + name + "'");
    if (!visiting.insert(name).second) throw SchemaError("include cycle through '" + name + "'");
    StructureDef def;
    def.name = name;
    for (const auto& inc : it->second.includes) merge_into(def, resolve(inc));
    merge_into(def, it->second.def);
    check_names(def);
    visiting.erase(name);
    return reg.defs_.emplace(name, std::move(def)).first->second;
  };
  for (const auto& [name, r] : raw) resolve(name);
  return reg;
}

const Registry& Registry::builtin() {
  static const Registry reg = [] {
    std::map<std::string, std::string> src;
    for (const auto& f : embedded_registry()) src.emplace(f.name, f.text);
    return from_sources(src);
  }();
  return reg;
}

StructureDef Registry::get(const std::string& name) const {
  if (name.rfind("tbp-nlie:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(9));
    } catch (const std::exception&) {
      throw UnknownName("bad arity in '" + name + "'");
    }
    return tbp_nlie(n);
  }
  auto it = defs_.find(name);
  if (it == defs_.end()) throw UnknownName("unknown structure '" + name + "'");
  return it->second;
}

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  for (const auto& [n, d] : defs_) out.push_back(n);
  return out;
}

const IdentityDef& Registry::identity(const std::string& id) const {
  for (const auto& [n, d] : defs_)
    if (const IdentityDef* i = d.find(id)) return *i;
  throw UnknownName("unknown identity '" + id + "'");
}

StructureDef tbp_nlie(int n) {
  if (n < 2) throw ArityMismatch("n-ary bracket needs n >= 2");
  StructureDef d;
  d.name = "tbp-nlie:" + std::to_string(n);
  d.ops = {"mul", "nbr"};
  d.maps = {"a", "b"};
  d.predicates = {Predicate::parse("commute(a, b)"), Predicate::parse("multiplicative(a, nbr)"),
                  Predicate::parse("multiplicative(b, nbr)")};
  std::vector<std::string> x;
  for (int i = 1; i <= n; ++i) x.push_back("x" + std::to_string(i));
  std::string header = "forall u";
  for (const auto& v : x) header += "," + v;

  auto call = [](const std::vector<std::string>& args) {
    std::string s = "nbr(";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + args[i];
    return s + ")";
  };
  std::string compat = header + ": " + std::to_string(n) + "*mul(a(b(u)), " + call(x) + ")";
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> args;
    for (int j = 0; j < n; ++j) {
      if (j != i)
        args.push_back("b(" + x[j] + ")");
      else
        args.push_back(std::string("mul(") + (i == n - 1 ? "a(u)" : "b(u)") + ", " + x[j] + ")");
    }
    compat += " - " + call(args);
  }
  compat += " = 0";
  d.identities.push_back({"nlie-compat", compat, parse_identity(compat), false});

  // skew under each adjacent swap of nbr(b(x1), ..., b(x_{n-1}), a(x_n))
  std::string xheader = "forall " + x[0];
  for (int i = 1; i < n; ++i) xheader += "," + x[i];
  auto slot = [&](const std::vector<std::string>& order) {
    std::vector<std::string> args;
    for (int j = 0; j < n; ++j) args.push_back((j == n - 1 ? "a(" : "b(") + order[j] + ")");
    return call(args);
  };
  for (int i = 0; i + 1 < n; ++i) {
    auto swapped = x;
    std::swap(swapped[i], swapped[i + 1]);
    std::string text = xheader + ": " + slot(x) + " + " + slot(swapped) + " = 0";
    std::string id = "nlie-skew-" + std::to_string(i + 1) + std::to_string(i + 2);
    d.identities.push_back({id, text, parse_identity(text), false});
  }
  d.notes.push_back("n-ary Jacobi identity not checked (external definition)");
  return d;
}

const char* shift_identity_id(ShiftIdentity which) {
  switch (which) {
    case ShiftIdentity::bracket_products:
      return "shift-bracket-products";
    case ShiftIdentity::product_brackets:
      return "shift-product-brackets";
    case ShiftIdentity::fixed:
      return "shift-fixed";
  }
  return "";
}

IdentityAst instantiate_shift(ShiftIdentity which, const ExponentTuple& e) {
  StructureDef fam = Registry::builtin().get("shift-family");
  if (which == ShiftIdentity::fixed) return fam.find("shift-fixed")->ast;
  for (const auto& t : fam.templates)
    if (t.id == shift_identity_id(which)) {
      auto v = e.values();
      return parse_identity(fill_placeholders(t.text, {"m", "n", "l", "s", "p", "q", "k", "t"},
                                              std::vector<int>(v.begin(), v.end())));
    }
  throw UnknownName(std::string("missing template ") + shift_identity_id(which));
}

ExponentTuple shift_fixed_tuple() {
  ExponentTuple e;
  e.m = -2;
  e.n = 0;
  e.l = -1;
  e.s = -1;
  e.p = -2;
  e.q = 0;
  e.k = -1;
  e.t = -1;
  return e;
}

std::vector<ExponentTuple> default_exponent_grid(std::uint64_t seed, std::size_t extra) {
  std::vector<ExponentTuple> grid{ExponentTuple{}, shift_fixed_tuple()};
  Rng rng(seed, 0x5eed);
  for (std::size_t i = 0; i < extra; ++i) {
    std::array<int, 8> v{};
    for (auto& x : v) x = static_cast<int>(rng.uniform(-2, 2));
    grid.push_back(ExponentTuple::from_values(v));
  }
  return grid;
}

}  // namespace bihom

#include "bihom/evaluator.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <unordered_map>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

struct CNode {
  enum class Kind { var, map, op, sum };
  Kind kind = Kind::var;
  std::size_t var = 0;
  std::string chain;  // folded map chain, e.g. "a^2 b^-1"
  LinMap matrix;
  const MultiOp* op = nullptr;
  std::vector<std::size_t> children;
  std::vector<long> coeffs;
  std::vector<std::size_t> vars;  // ascending variable indices this node depends on
};

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

struct CompiledIdentity::Impl {
  const AlgebraBundle* bundle = nullptr;
  std::vector<std::string> var_names;
  std::vector<CNode> nodes;
  std::unordered_map<std::string, std::size_t> interned;
  std::map<std::string, LinMap> powers;
  std::size_t root = 0;

  std::size_t intern(const std::string& key, CNode n) {
    auto it = interned.find(key);
    if (it != interned.end()) return it->second;
    nodes.push_back(std::move(n));
    interned.emplace(key, nodes.size() - 1);
    return nodes.size() - 1;
  }

  const LinMap& power(const std::string& name, int k) {
    std::string key = name + "^" + std::to_string(k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    const LinMap& m = bundle->map(name);
    LinMap p;
    try {
      p = m.power(k);
    } catch (const NotInvertible&) {
      throw NotInvertible("map '" + name + "' is not invertible, needed for power " + std::to_string(k));
    }
    return powers.emplace(key, std::move(p)).first->second;
  }

  std::size_t compile_expr(const Expr& e) {
    if (e.terms.size() == 1 && e.terms[0].coeff == 1) return compile_node(e.terms[0].node);
    std::map<std::size_t, long> acc;
    std::vector<std::size_t> order;
    for (const auto& t : e.terms) {
      std::size_t c = compile_node(t.node);
      if (!acc.count(c)) order.push_back(c);
      acc[c] += t.coeff;
    }
    CNode s;
    s.kind = CNode::Kind::sum;
    s.vars = nodes[order.front()].vars;
    std::string key = "s:";
    for (auto c : order) {
      if (acc[c] == 0) continue;
      s.children.push_back(c);
      s.coeffs.push_back(acc[c]);
      key += std::to_string(acc[c]) + "*" + std::to_string(c) + ",";
    }
    if (s.children.size() == 1 && s.coeffs[0] == 1) return s.children[0];
    key += "|";
    for (auto v : s.vars) key += std::to_string(v) + ",";
    return intern(key, std::move(s));
  }

  std::size_t compile_node(const Node& n) {
    switch (n.kind) {
      case Node::Kind::var: {
        std::size_t v = 0;
        while (v < var_names.size() && var_names[v] != n.name) ++v;
        if (v == var_names.size()) throw UnknownName("undeclared variable '" + n.name + "'");
        CNode c;
        c.kind = CNode::Kind::var;
        c.var = v;
        c.vars = {v};
        return intern("v:" + std::to_string(v), std::move(c));
      }
      case Node::Kind::map: {
        if (!bundle->has_map(n.name)) {
          if (bundle->has_op(n.name))
            throw ArityMismatch("operation '" + n.name + "' called with one argument");
          throw UnknownName("bundle has no map '" + n.name + "'");
        }
        std::size_t child = compile_expr(n.args[0]);
        CNode c;
        c.kind = CNode::Kind::map;
        c.chain = n.name + "^" + std::to_string(n.power);
        c.matrix = power(n.name, n.power);
        if (nodes[child].kind == CNode::Kind::map) {
          const CNode& inner = nodes[child];
          c.chain += " " + inner.chain;
          c.matrix = c.matrix * inner.matrix;
          child = inner.children[0];
        }
        c.children = {child};
        c.vars = nodes[child].vars;
        std::string key = "m:" + c.chain + ":" + std::to_string(child);
        return intern(key, std::move(c));
      }
      case Node::Kind::op: {
        if (!bundle->has_op(n.name)) throw UnknownName("bundle has no operation '" + n.name + "'");
        const MultiOp& op = bundle->op(n.name);
        if (op.arity() != n.args.size())
          throw ArityMismatch("operation '" + n.name + "' has arity " + std::to_string(op.arity()) + ", called with " +
                              std::to_string(n.args.size()));
        CNode c;
        c.kind = CNode::Kind::op;
        c.op = &op;
        std::string key = "o:" + n.name + ":";
        for (const auto& a : n.args) {
          std::size_t ch = compile_expr(a);
          c.children.push_back(ch);
          key += std::to_string(ch) + ",";
          for (auto v : nodes[ch].vars) c.vars.push_back(v);
        }
        std::sort(c.vars.begin(), c.vars.end());
        return intern(key, std::move(c));
      }
      case Node::Kind::cyc:
        throw UnknownName("cyc node survived expansion");
    }
    return 0;
  }

  std::vector<std::vector<Vector>> run(const EvalOptions& opt) const {
    const std::size_t d = bundle->dim();
    std::vector<std::vector<Vector>> tables(nodes.size());
    for (std::size_t id = 0; id < nodes.size(); ++id) {
      const CNode& n = nodes[id];
      const std::size_t width = n.vars.size();
      const std::size_t size = ipow(d, width);
      std::vector<Vector>& table = tables[id];
      table.assign(size, Vector(d));

      // stride[c][p]: weight of the node's p-th variable digit in child c's index
      std::vector<std::vector<std::size_t>> stride(n.children.size(), std::vector<std::size_t>(width, 0));
      for (std::size_t c = 0; c < n.children.size(); ++c) {
        const auto& cv = nodes[n.children[c]].vars;
        for (std::size_t p = 0; p < width; ++p)
          for (std::size_t q = 0; q < cv.size(); ++q)
            if (cv[q] == n.vars[p]) stride[c][p] = ipow(d, cv.size() - 1 - q);
      }

      std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8) if (opt.parallel && size > 1)
      for (long long ii = 0; ii < static_cast<long long>(size); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        try {
          switch (n.kind) {
            case CNode::Kind::var:
              table[i][i] = Scalar(1);
              break;
            case CNode::Kind::map:
              table[i] = n.matrix.apply(tables[n.children[0]][i]);
              break;
            case CNode::Kind::sum: {
              Vector acc(d);
              for (std::size_t c = 0; c < n.children.size(); ++c)
                axpy(acc, Scalar(n.coeffs[c]), tables[n.children[c]][i]);
              table[i] = std::move(acc);
              break;
            }
            case CNode::Kind::op: {
              std::vector<std::size_t> child_index(n.children.size(), 0);
              std::size_t rest = i;
              for (std::size_t p = width; p-- > 0;) {
                std::size_t digit = rest % d;
                rest /= d;
                for (std::size_t c = 0; c < n.children.size(); ++c) child_index[c] += digit * stride[c][p];
              }
              std::vector<const Vector*> args;
              for (std::size_t c = 0; c < n.children.size(); ++c)
                args.push_back(&tables[n.children[c]][child_index[c]]);
              table[i] = n.op->apply(args);
              break;
            }
          }
        } catch (...) {
#pragma omp critical(bihom_eval_failure)
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);
    }
    return tables;
  }
};

CompiledIdentity::CompiledIdentity(const IdentityAst& ast, const AlgebraBundle& bundle) : impl_(new Impl) {
  impl_->bundle = &bundle;
  impl_->var_names = ast.vars;
  impl_->root = impl_->compile_expr(expand_cyc(ast.expr));
  if (impl_->nodes[impl_->root].vars.size() != ast.vars.size())
    throw LinearityViolation(ast.vars.front(), 0);
}

CompiledIdentity::~CompiledIdentity() = default;
CompiledIdentity::CompiledIdentity(CompiledIdentity&&) noexcept = default;

std::vector<Vector> CompiledIdentity::tabulate(const EvalOptions& opt) const {
  auto tables = impl_->run(opt);
  return std::move(tables[impl_->root]);
}

std::size_t CompiledIdentity::node_count() const { return impl_->nodes.size(); }
std::size_t CompiledIdentity::var_count() const { return impl_->var_names.size(); }
std::size_t CompiledIdentity::dim() const { return impl_->bundle->dim(); }

namespace {

std::vector<std::size_t> decode(std::size_t i, std::size_t d, std::size_t width) {
  std::vector<std::size_t> t(width);
  for (std::size_t p = width; p-- > 0;) {
    t[p] = i % d;
    i /= d;
  }
  return t;
}

struct Reference {
  const AlgebraBundle& bundle;
  const std::vector<std::string>& vars;
  const std::vector<Vector>& env;
  std::map<std::pair<std::string, int>, LinMap> powers;

  Vector expr(const Expr& e) {
    Vector out(bundle.dim());
    for (const auto& t : e.terms) axpy(out, Scalar(t.coeff), node(t.node));
    return out;
  }

  Vector node(const Node& n) {
    switch (n.kind) {
      case Node::Kind::var:
        for (std::size_t v = 0; v < vars.size(); ++v)
          if (vars[v] == n.name) return env[v];
        throw UnknownName("undeclared variable '" + n.name + "'");
      case Node::Kind::map: {
        auto key = std::make_pair(n.name, n.power);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, bundle.map(n.name).power(n.power)).first;
        return it->second.apply(expr(n.args[0]));
      }
      case Node::Kind::op: {
        std::vector<Vector> args;
        for (const auto& a : n.args) args.push_back(expr(a));
        return bundle.op(n.name).apply(args);
      }
      case Node::Kind::cyc:
        throw UnknownName("cyc node survived expansion");
    }
    return {};
  }
};

}  // namespace

Verdict check_identity(const IdentityAst& ast, const AlgebraBundle& bundle, const std::string& id,
                       const EvalOptions& opt) {
  CompiledIdentity c(ast, bundle);
  std::vector<Vector> table = c.tabulate(opt);
  for (std::size_t i = 0; i < table.size(); ++i)
    if (!is_zero(table[i])) {
      Counterexample cx{decode(i, bundle.dim(), ast.vars.size()), std::nullopt, {}, table[i]};
      return Verdict{id, Status::fail, {}, cx};
    }
  return Verdict::passed(id);
}

Vector evaluate_at(const IdentityAst& ast, const AlgebraBundle& bundle, const std::vector<Vector>& assignment) {
  if (assignment.size() != ast.vars.size()) throw ArityMismatch("one vector per variable required");
  Expr e = expand_cyc(ast.expr);
  Reference r{bundle, ast.vars, assignment, {}};
  return r.expr(e);
}

Verdict check_identity_reference(const IdentityAst& ast, const AlgebraBundle& bundle, const std::string& id) {
  Expr e = expand_cyc(ast.expr);
  const std::size_t d = bundle.dim();
  std::vector<Vector> env(ast.vars.size());
  Reference r{bundle, ast.vars, env, {}};
  std::optional<Verdict> failed;
  for_each_tuple(d, ast.vars.size(), [&](const MultiOp::Index& idx) {
    if (failed) return;
    for (std::size_t v = 0; v < idx.size(); ++v) env[v] = basis_vector(d, idx[v]);
    Vector val = r.expr(e);
    if (!is_zero(val)) failed = Verdict{id, Status::fail, {}, Counterexample{idx, std::nullopt, {}, val}};
  });
  return failed ? *failed : Verdict::passed(id);
}

Verdict check_identity_sampled(const IdentityAst& ast, const AlgebraBundle& bundle,
                               const std::vector<std::vector<Rational>>& points, const std::string& id,
                               const EvalOptions& opt) {
  for (const auto& pt : points)
    if (!constraints_hold(bundle, pt)) throw ConstraintViolated("sample point violates the bundle constraints");
  for (const auto& pt : points) {
    Verdict v = check_identity(ast, specialize(bundle, pt), id, opt);
    if (v.status == Status::fail) {
      v.counterexample->point = make_point(bundle.ring.params, pt);
      return v;
    }
  }
  return Verdict::passed(id);
}

MultiOp tabulate_op(const IdentityAst& ast, const AlgebraBundle& bundle, const EvalOptions& opt) {
  CompiledIdentity c(ast, bundle);
  std::vector<Vector> table = c.tabulate(opt);
  MultiOp op(bundle.dim(), ast.vars.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    if (!is_zero(table[i])) op.set(decode(i, bundle.dim(), ast.vars.size()), std::move(table[i]));
  return op;
}

}  // namespace bihom

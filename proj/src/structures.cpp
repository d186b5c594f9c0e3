#include "bihom/structures.hpp"

#include <algorithm>
#include <set>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

void collect_maps(const Expr& e, std::set<std::string>& out) {
  for (const auto& t : e.terms) {
    if (t.node.kind == Node::Kind::map) out.insert(t.node.name);
    for (const auto& a : t.node.args) collect_maps(a, out);
  }
}

std::string var_list(const std::string& prefix, std::size_t n) {
  std::string s;
  for (std::size_t i = 1; i <= n; ++i) s += (i > 1 ? "," : "") + prefix + std::to_string(i);
  return s;
}

void require(const StructureDef& def, const AlgebraBundle& b) {
  for (const auto& o : def.ops) (void)b.op(o);
  for (const auto& m : def.maps) (void)b.map(m);
}

std::string tuple_label(const ExponentTuple& e) {
  std::string s = "[";
  auto v = e.values();
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

void Report::finalize() {
  std::stable_sort(verdicts.begin(), verdicts.end(), [](const Verdict& a, const Verdict& b) { return a.id < b.id; });
  overall = Status::pass;
  for (const auto& v : verdicts) overall = combine(overall, v.status);
}

const Verdict* Report::find(const std::string& id) const {
  for (const auto& v : verdicts)
    if (v.id == id) return &v;
  return nullptr;
}

Verdict check_across(const AlgebraBundle& b, const CheckMode& mode, const std::vector<std::vector<Rational>>& points,
                     const std::function<Verdict(const AlgebraBundle&)>& fn) {
  auto guarded = [&](const AlgebraBundle& x) -> Verdict {
    try {
      return fn(x);
    } catch (const NotInvertible& e) {
      return Verdict::inapplicable({}, e.what());
    }
  };
  std::optional<Verdict> skipped;
  if (mode.kind == CheckMode::Kind::sampled) {
    for (const auto& pt : points) {
      Verdict v = guarded(specialize(b, pt));
      if (v.status == Status::fail) {
        if (v.counterexample) v.counterexample->point = make_point(b.ring.params, pt);
        return v;
      }
      if (v.status == Status::inapplicable && !skipped) skipped = v;
    }
  } else if (b.catalog && !b.catalog->branches.empty()) {
    for (const auto& br : b.catalog->branches) {
      Verdict v = guarded(apply_branch(b, br));
      if (v.status == Status::fail) {
        if (v.counterexample) v.counterexample->branch = br.str(b.ring.params);
        return v;
      }
      if (v.status == Status::inapplicable && !skipped) skipped = v;
    }
  } else {
    Verdict v = guarded(b);
    if (v.status != Status::pass) return v;
  }
  if (skipped) return *skipped;
  return Verdict::passed({});
}

Verdict check_predicate(const Predicate& p, const AlgebraBundle& b, const EvalOptions& opt) {
  switch (p.kind) {
    case Predicate::Kind::commute:
      return check_commute(b.map(p.first), b.map(p.second), p.id());
    case Predicate::Kind::multiplicative: {
      const MultiOp& op = b.op(p.second);
      std::string vars = var_list("x", op.arity());
      std::string images;
      for (std::size_t i = 1; i <= op.arity(); ++i)
        images += (i > 1 ? "," : "") + p.first + "(x" + std::to_string(i) + ")";
      IdentityAst ast = parse_identity("forall " + vars + ": " + p.first + "(" + p.second + "(" + vars + ")) - " +
                                       p.second + "(" + images + ") = 0");
      return check_identity(ast, b, p.id(), opt);
    }
    case Predicate::Kind::regular: {
      Scalar d = b.map(p.first).determinant();
      if (d.is_zero()) return Verdict{p.id(), Status::fail, "determinant is zero", std::nullopt};
      return Verdict::passed(p.id());
    }
  }
  return Verdict::passed(p.id());
}

Verdict check_identity_def(const IdentityDef& def, const AlgebraBundle& b, const EvalOptions& opt) {
  if (def.regular_only) {
    std::set<std::string> maps;
    collect_maps(def.ast.expr, maps);
    for (const auto& m : maps)
      if (b.map(m).determinant().is_zero())
        return Verdict::inapplicable(def.id, "map '" + m + "' is not invertible");
  }
  try {
    return check_identity(def.ast, b, def.id, opt);
  } catch (const NotInvertible& e) {
    return Verdict::inapplicable(def.id, e.what());
  }
}

Report check_structure(const StructureDef& def, const AlgebraBundle& b, const CheckMode& mode) {
  require(def, b);
  Report r;
  r.bundle_id = b.id;
  r.structure = def.name;
  r.mode = mode;
  r.params = b.ring.params;
  if (mode.kind == CheckMode::Kind::sampled) {
    r.points = sample_points(b, mode.samples, mode.seed);
  } else if (!b.ring.constraints.empty()) {
    if (b.catalog && !b.catalog->branches.empty())
      r.notes.push_back("checked on every constraint branch");
    else
      r.notes.push_back("constraints not imposed: checked over the generic parameter ring");
  }

  auto run = [&](const std::string& id, const std::function<Verdict(const AlgebraBundle&)>& fn) {
    Verdict v = check_across(b, mode, r.points, fn);
    v.id = id;
    r.verdicts.push_back(std::move(v));
  };
  for (const auto& p : def.predicates)
    run(p.id(), [&](const AlgebraBundle& x) { return check_predicate(p, x, mode.eval); });
  for (const auto& id : def.identities)
    run(id.id, [&](const AlgebraBundle& x) { return check_identity_def(id, x, mode.eval); });

  if (!def.templates.empty()) {
    std::vector<ExponentTuple> grid = mode.exponents.empty() ? default_exponent_grid(mode.seed) : mode.exponents;
    for (const auto& t : def.templates) {
      for (const auto& e : grid) {
        auto v = e.values();
        IdentityAst ast = parse_identity(
            fill_placeholders(t.text, {"m", "n", "l", "s", "p", "q", "k", "t"}, std::vector<int>(v.begin(), v.end())));
        IdentityDef inst{t.id + tuple_label(e), {}, std::move(ast), false};
        run(inst.id, [&](const AlgebraBundle& x) { return check_identity_def(inst, x, mode.eval); });
      }
    }
  }
  for (const auto& n : def.notes) r.notes.push_back(n);
  r.finalize();
  return r;
}

Report check_structure(const std::string& name, const AlgebraBundle& b, const CheckMode& mode) {
  return check_structure(Registry::builtin().get(name), b, mode);
}

Report check_tbp_consequences(const AlgebraBundle& b, const CheckMode& mode) {
  return check_structure("tbp-consequences", b, mode);
}

Report check_overlap_tbp_bp(const AlgebraBundle& b, const CheckMode& mode) {
  return check_structure("tbp-bp-overlap", b, mode);
}

Report check_ternary_overlap(const AlgebraBundle& b, const CheckMode& mode) {
  return check_structure("ternary-overlap", b, mode);
}

Report check_shift_family(const AlgebraBundle& b, const CheckMode& mode) {
  return check_structure("shift-family", b, mode);
}

Report check_derivation(const AlgebraBundle& b, const std::string& map, const std::vector<std::string>& ops,
                        bool with_commute, const CheckMode& mode) {
  StructureDef def;
  def.name = "derivation(" + map + ")";
  def.maps = {map};
  for (const auto& name : ops) {
    const MultiOp& op = b.op(name);
    std::string vars = var_list("x", op.arity());
    std::string text = "forall " + vars + ": " + map + "(" + name + "(" + vars + "))";
    for (std::size_t i = 1; i <= op.arity(); ++i) {
      std::string args;
      for (std::size_t j = 1; j <= op.arity(); ++j) {
        std::string x = "x" + std::to_string(j);
        args += (j > 1 ? "," : "") + (i == j ? map + "(" + x + ")" : x);
      }
      text += " - " + name + "(" + args + ")";
    }
    text += " = 0";
    def.ops.push_back(name);
    def.identities.push_back({"derivation(" + map + "," + name + ")", text, parse_identity(text), false});
  }
  if (with_commute)
    for (const char* other : {"a", "b"})
      if (b.has_map(other)) def.predicates.push_back(Predicate::parse("commute(" + map + "," + other + ")"));
  return check_structure(def, b, mode);
}

Report check_involution(const AlgebraBundle& b, const std::string& map, const CheckMode& mode) {
  StructureDef def;
  def.name = "involution(" + map + ")";
  def.ops = {"br"};
  def.maps = {map};
  std::string text = "forall x,y: " + map + "(br(x,y)) + br(" + map + "(x), " + map + "(y)) = 0";
  def.identities.push_back({"anti-bracket(" + map + ",br)", text, parse_identity(text), false});
  for (const char* other : {"a", "b"})
    if (b.has_map(other)) def.predicates.push_back(Predicate::parse("commute(" + map + "," + other + ")"));
  Report r = check_structure(def, b, mode);

  std::string id = "square-is-identity(" + map + ")";
  Verdict sq = check_across(b, mode, r.points, [&](const AlgebraBundle& x) {
    const LinMap& f = x.map(map);
    LinMap diff = f * f - LinMap::identity(x.dim());
    for (std::size_t j = 0; j < x.dim(); ++j) {
      Vector col = diff.column(j);
      if (!is_zero(col)) return Verdict{id, Status::fail, {}, Counterexample{{j}, std::nullopt, {}, col}};
    }
    return Verdict::passed(id);
  });
  sq.id = id;
  r.verdicts.push_back(std::move(sq));
  r.finalize();
  return r;
}

Report check_novikov_compat_equivalence(const AlgebraBundle& b, const CheckMode& mode) {
  for (const char* m : {"a", "b"})
    if (b.map(m).determinant().is_zero())
      throw NotInvertible(std::string("map '") + m + "' is singular; the two forms are only compared for invertible maps");
  Report r = check_structure("np-compat-equivalence", b, mode);
  Report comm = check_structure("bihom-comm", b, mode);
  const Verdict* right = r.find("np-compat-right");
  const Verdict* alt = r.find("np-compat-right-alt");
  Verdict agree{"agreement", Status::pass, {}, std::nullopt};
  if (comm.overall != Status::pass) {
    agree = Verdict::inapplicable("agreement", "hypothesis fails: product is not BiHom-commutative");
    r.notes.push_back("agreement not asserted: bihom-commutativity does not hold");
  } else if (right->status != alt->status) {
    agree.status = Status::fail;
    agree.reason = std::string("np-compat-right ") + status_name(right->status) + ", np-compat-right-alt " +
                   status_name(alt->status);
  }
  r.verdicts.push_back(std::move(agree));
  r.finalize();
  return r;
}

}  // namespace bihom

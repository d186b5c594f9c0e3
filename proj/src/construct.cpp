#include "bihom/construct.hpp"

#include <algorithm>

#include "bihom/errors.hpp"
#include "bihom/structures.hpp"

namespace bihom {

namespace {

// Collects failed hypotheses; strict mode turns them into PredicateFailed.
class Hypotheses {
 public:
  Hypotheses(std::string construction, const ConstructOptions& opt) : name_(std::move(construction)), opt_(opt) {}

  void require(const Verdict& v, const std::string& what) {
    if (v.status == Status::pass) return;
    std::string msg = what + " (" + v.id + " " + status_name(v.status) + ")";
    if (v.counterexample) {
      msg += " at tuple (";
      for (std::size_t i = 0; i < v.counterexample->tuple.size(); ++i)
        msg += (i ? "," : "") + std::to_string(v.counterexample->tuple[i]);
      msg += ")";
    }
    if (!v.reason.empty()) msg += ": " + v.reason;
    failures_.push_back(msg);
  }
  void require(const Report& r, const std::string& what) {
    for (const auto& v : r.verdicts) require(v, what);
  }
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }

  // Throws in strict mode, otherwise returns the warnings to record.
  std::vector<std::string> settle() const {
    if (opt_.strict && !failures_.empty()) throw PredicateFailed(name_ + ": " + failures_.front());
    return failures_;
  }

 private:
  std::string name_;
  const ConstructOptions& opt_;
  std::vector<std::string> failures_;
};

Verdict identity_holds(const AlgebraBundle& b, const std::string& id, const std::string& text,
                       const ConstructOptions& opt) {
  return check_identity(parse_identity(text), b, id, opt.eval);
}

// Input with a and b defaulting to the identity.
AlgebraBundle with_default_maps(const AlgebraBundle& b) {
  AlgebraBundle r = b;
  for (const char* m : {"a", "b"})
    if (!r.has_map(m)) r.maps.emplace(m, LinMap::identity(b.dim()));
  return r;
}

void commutative_algebra_hypotheses(const AlgebraBundle& b, const std::string& D, Hypotheses& h,
                                    const ConstructOptions& opt) {
  h.require(identity_holds(b, "commutative(mul)", "forall x,y: mul(x,y) - mul(y,x) = 0", opt),
            "product must be commutative");
  h.require(identity_holds(b, "associative(mul)", "forall x,y,z: mul(x, mul(y,z)) - mul(mul(x,y), z) = 0", opt),
            "product must be associative");
  for (const char* m : {"a", "b"})
    h.require(check_predicate(Predicate::parse(std::string("multiplicative(") + m + ", mul)"), b, opt.eval),
              std::string(m) + " must be an algebra map");
  h.require(check_commute(b.map("a"), b.map("b"), "commute(a,b)"), "a and b must commute");
  h.require(check_commute(b.map(D), b.map("a"), "commute(" + D + ",a)"), D + " must commute with a");
  h.require(check_commute(b.map(D), b.map("b"), "commute(" + D + ",b)"), D + " must commute with b");
  h.require(check_derivation(b, D, {"mul"}, false, CheckMode{}), D + " must be a derivation of the product");
}

void invertible(const AlgebraBundle& b, const std::string& construction) {
  for (const char* m : {"a", "b"})
    if (b.map(m).determinant().is_zero())
      throw NotInvertible(construction + ": map '" + m + "' is not invertible");
}

Provenance provenance(const std::string& construction, std::vector<std::string> inputs,
                      std::vector<std::pair<std::string, std::string>> params, std::vector<std::string> warnings) {
  return Provenance{construction, std::move(inputs), std::move(params), std::move(warnings)};
}

MultiOp tabulate(const AlgebraBundle& b, const std::string& text, const ConstructOptions& opt) {
  return tabulate_op(parse_identity(text), b, opt.eval);
}

const char* kTernaryD =
    "forall x,y,z: mul(D(x), br(b^-1(y), b^-1(z))) + mul(D(y), br(a^-1(z), a(b^-2(x))))"
    " + mul(D(a^-1(b(z))), br(b^-1(x), a(b^-2(y)))) = 0";

std::string substitute_map(std::string text, const std::string& name) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'D' && i + 1 < text.size() && text[i + 1] == '(') {
      out += name;
    } else {
      out += text[i];
    }
  }
  return out;
}

}  // namespace

AlgebraBundle yau_twist(const AlgebraBundle& b, const std::vector<TwistSpec>& specs, const ConstructOptions& opt) {
  Hypotheses h("yau-twist", opt);
  AlgebraBundle r = b;
  std::vector<std::string> used;
  std::vector<std::pair<std::string, std::string>> params;
  for (const auto& spec : specs) {
    const MultiOp& op = b.op(spec.op);
    if (spec.slots.size() != op.arity())
      throw ArityMismatch("twist of '" + spec.op + "' needs " + std::to_string(op.arity()) + " slots");
    std::vector<LinMap> maps;
    std::string desc;
    for (const auto& s : spec.slots) {
      if (s.map == "id") {
        maps.push_back(LinMap::identity(b.dim()));
        desc += "id ";
        continue;
      }
      maps.push_back(b.map(s.map).power(s.power));
      desc += s.map + "^" + std::to_string(s.power) + " ";
      if (std::find(used.begin(), used.end(), s.map) == used.end()) used.push_back(s.map);
    }
    params.emplace_back(spec.op, desc.substr(0, desc.size() - 1));
    r.ops[spec.op] = twist_op(op, maps);
  }
  // the twisting maps must commute pairwise and respect every twisted op
  for (std::size_t i = 0; i < used.size(); ++i)
    for (std::size_t j = i + 1; j < used.size(); ++j)
      h.require(check_commute(b.map(used[i]), b.map(used[j]), "commute(" + used[i] + "," + used[j] + ")"),
                "twisting maps must commute");
  for (const auto& spec : specs)
    for (const auto& m : used)
      h.require(check_predicate(Predicate::parse("multiplicative(" + m + ", " + spec.op + ")"), b, opt.eval),
                m + " must be multiplicative for " + spec.op);
  r.id = "twist(" + b.id + ")";
  r.provenance = provenance("yau-twist", {b.id}, params, h.settle());
  r.catalog.reset();
  return r;
}

AlgebraBundle derivation_tbp(const AlgebraBundle& input, const ConstructOptions& opt) {
  AlgebraBundle b = with_default_maps(input);
  Hypotheses h("derivation-tbp", opt);
  commutative_algebra_hypotheses(b, "D", h, opt);
  AlgebraBundle r = b;
  r.ops["br"] = tabulate(b, "forall x,y: mul(a(x), D(b(y))) - mul(b(y), D(a(x))) = 0", opt);
  r.ops["mul"] = twist_op(b.op("mul"), {b.map("a"), b.map("b")});
  r.id = "derivation-tbp(" + b.id + ")";
  r.provenance = provenance("derivation-tbp", {b.id}, {{"derivation", "D"}}, h.settle());
  r.catalog.reset();
  return r;
}

AlgebraBundle pre_lie_from_derivation(const AlgebraBundle& input, const ConstructOptions& opt) {
  AlgebraBundle b = with_default_maps(input);
  Hypotheses h("pre-lie", opt);
  commutative_algebra_hypotheses(b, "D", h, opt);
  AlgebraBundle r = b;
  r.ops["star"] = tabulate(b, "forall x,y: mul(a(x), D(b(y))) = 0", opt);
  r.ops["mul"] = twist_op(b.op("mul"), {b.map("a"), b.map("b")});
  r.id = "pre-lie(" + b.id + ")";
  r.provenance = provenance("pre-lie", {b.id}, {{"derivation", "D"}}, h.settle());
  r.catalog.reset();
  return r;
}

AlgebraBundle np_commutator(const AlgebraBundle& b, const ConstructOptions& opt) {
  invertible(b, "np-commutator");
  Hypotheses h("np-commutator", opt);
  h.require(check_structure("pre-lie-poisson", b, CheckMode{}), "input must be a BiHom-pre-Lie Poisson algebra");
  AlgebraBundle r = b;
  r.ops["br"] = tabulate(b, "forall x,y: star(x,y) - star(a^-1(b(y)), a(b^-1(x))) = 0", opt);
  r.id = "np-commutator(" + b.id + ")";
  r.provenance = provenance("np-commutator", {b.id}, {}, h.settle());
  r.catalog.reset();
  return r;
}

namespace {

// (x⊗y, x'⊗y') -> A(x,x') ⊗ B(y,y')
MultiOp tensor_op(const MultiOp& A, const MultiOp& B) {
  const std::size_t da = A.dim(), db = B.dim();
  MultiOp out(da * db, 2);
  for (const auto& [ia, va] : A.entries())
    for (const auto& [ib, vb] : B.entries()) {
      Vector v = tensor_vector(va, vb);
      MultiOp::Index idx{ia[0] * db + ib[0], ia[1] * db + ib[1]};
      Vector cur = out.get(idx);
      out.set(idx, cur + v);
    }
  return out;
}

MultiOp sum_ops(const MultiOp& x, const MultiOp& y) {
  MultiOp out = x;
  for (const auto& [idx, v] : y.entries()) out.set(idx, out.get(idx) + v);
  return out;
}

}  // namespace

AlgebraBundle tensor_bundle(const AlgebraBundle& A, const AlgebraBundle& B, TensorKind kind,
                            const ConstructOptions& opt) {
  if (A.ring.params != B.ring.params)
    throw RingMismatch("tensor factors must share a parameter list; extend_ring them first");
  // regularity only backs the preservation claim, so it is a warning even in strict mode
  ConstructOptions warn = opt;
  warn.strict = false;
  Hypotheses h("tensor", warn);
  for (const auto* x : {&A, &B})
    for (const char* m : {"a", "b"})
      h.require(!x->map(m).determinant().is_zero(), x->id + ": map " + m + " is not invertible");

  const char* second = kind == TensorKind::bp_tbp ? "br" : "star";
  AlgebraBundle r;
  r.id = A.id + "⊗" + B.id;
  r.space = tensor_space(A.space, B.space);
  r.ring.params = A.ring.params;
  r.ring.constraints = A.ring.constraints;
  for (const auto& c : B.ring.constraints) r.ring.constraints.push_back(c);
  const MultiOp& mA = A.op("mul");
  const MultiOp& mB = B.op("mul");
  r.ops["mul"] = tensor_op(mA, mB);
  r.ops[second] = sum_ops(tensor_op(A.op(second), mB), tensor_op(mA, B.op(second)));
  r.maps["a"] = tensor_map(A.map("a"), B.map("a"));
  r.maps["b"] = tensor_map(A.map("b"), B.map("b"));
  r.provenance = provenance("tensor", {A.id, B.id}, {{"kind", kind == TensorKind::bp_tbp ? "bp-tbp" : "pre-lie-poisson"}},
                            h.settle());
  return r;
}

AlgebraBundle ternary_from_derivation(const AlgebraBundle& b, const std::string& D, const ConstructOptions& opt) {
  invertible(b, "ternary-d");
  Hypotheses h("ternary-d", opt);
  h.require(check_structure("tbp", b, CheckMode{}), "input must be a transposed BiHom-Poisson algebra");
  h.require(check_derivation(b, D, {"mul", "br"}, true, CheckMode{}),
            D + " must be a derivation of mul and br commuting with a and b");
  AlgebraBundle r = b;
  r.ops["tbr"] = tabulate(b, substitute_map(kTernaryD, D), opt);
  r.id = "ternary-d(" + b.id + ")";
  r.provenance = provenance("ternary-d", {b.id}, {{"derivation", D}}, h.settle());
  r.catalog.reset();
  return r;
}

AlgebraBundle ternary_from_involution(const AlgebraBundle& b, const std::string& f, const ConstructOptions& opt) {
  invertible(b, "ternary-f");
  const LinMap& fm = b.map(f);
  // an f that is not an involution is always refused
  if (!(fm * fm).is_identity()) throw PredicateFailed("ternary-f: " + f + " squared is not the identity");
  Hypotheses h("ternary-f", opt);
  h.require(check_structure("tbp", b, CheckMode{}), "input must be a transposed BiHom-Poisson algebra");
  h.require(check_involution(b, f, CheckMode{}), f + " must anti-commute with br and commute with a and b");
  AlgebraBundle r = b;
  r.ops["tbr"] = tabulate(b, substitute_map(kTernaryD, f), opt);
  r.id = "ternary-f(" + b.id + ")";
  r.provenance = provenance("ternary-f", {b.id}, {{"involution", f}}, h.settle());
  r.catalog.reset();
  return r;
}

AlgebraBundle ternary_from_product(const AlgebraBundle& b, const ConstructOptions& opt) {
  invertible(b, "ternary-m");
  Hypotheses h("ternary-m", opt);
  h.require(check_structure("strong-bp", b, CheckMode{}), "input must be a strong BP algebra");
  AlgebraBundle r = b;
  r.ops["tbr"] = tabulate(b,
                          "forall x,y,z: mul(x, br(b^-1(y), b^-1(z))) + mul(y, br(a^-1(z), a(b^-2(x))))"
                          " + mul(a^-1(b(z)), br(b^-1(x), a(b^-2(y)))) = 0",
                          opt);
  r.id = "ternary-m(" + b.id + ")";
  r.provenance = provenance("ternary-m", {b.id}, {}, h.settle());
  r.catalog.reset();
  return r;
}

}  // namespace bihom

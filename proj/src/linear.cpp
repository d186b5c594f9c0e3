#include "bihom/linear.hpp"

#include <set>

#include "bihom/errors.hpp"

namespace bihom {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inapplicable: return "inapplicable";
  }
  return "?";
}

Status combine(Status a, Status b) {
  if (a == Status::fail || b == Status::fail) return Status::fail;
  if (a == Status::inapplicable || b == Status::inapplicable) return Status::inapplicable;
  return Status::pass;
}

BasisSpace::BasisSpace(std::vector<std::string> l) : labels(std::move(l)) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw SchemaError("basis labels must be distinct");
}

BasisSpace BasisSpace::standard(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < dim; ++i) l.push_back(prefix + std::to_string(i + 1));
  return BasisSpace(std::move(l));
}

Vector zero_vector(std::size_t dim) { return Vector(dim); }

Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = Scalar(1);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

bool vectors_equal(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw SpaceMismatch("vector length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a.is_one() ? x[i] : a * x[i];
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, Scalar(1), b);
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, Scalar(-1), b);
  return r;
}

Vector scaled(const Vector& v, const Scalar& c) {
  Vector r(v.size());
  axpy(r, c, v);
  return r;
}

std::string vector_str(const Vector& v, const std::vector<std::string>& labels,
                       const std::vector<std::string>& params) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].str(params);
    std::string term;
    if (c == "1")
      term = labels.at(i);
    else if (c == "-1")
      term = "-" + labels.at(i);
    else if (c.find_first_of("+-", 1) != std::string::npos || c.find('/') != std::string::npos)
      term = "(" + c + ")*" + labels.at(i);
    else
      term = c + "*" + labels.at(i);
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

LinMap LinMap::identity(std::size_t dim) {
  LinMap m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Scalar(1);
  return m;
}

LinMap LinMap::from_columns(const std::vector<Vector>& cols) {
  LinMap m(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != cols.size()) throw SpaceMismatch("matrix is not square");
    for (std::size_t i = 0; i < cols.size(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

LinMap LinMap::diagonal(const Vector& d) {
  LinMap m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Vector LinMap::column(std::size_t j) const {
  return Vector(m_.begin() + static_cast<long>(j * n_), m_.begin() + static_cast<long>((j + 1) * n_));
}

Vector LinMap::apply(const Vector& x) const {
  if (x.size() != n_) throw SpaceMismatch("vector length does not match map dimension");
  Vector y(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < n_; ++i)
      if (!at(i, j).is_zero()) y[i] += x[j] * at(i, j);
  }
  return y;
}

LinMap operator*(const LinMap& a, const LinMap& b) {
  if (a.n_ != b.n_) throw SpaceMismatch("composing maps of different dimension");
  LinMap r(a.n_);
  for (std::size_t j = 0; j < a.n_; ++j) {
    Vector c = a.apply(b.column(j));
    for (std::size_t i = 0; i < a.n_; ++i) r.at(i, j) = std::move(c[i]);
  }
  return r;
}

LinMap operator+(const LinMap& a, const LinMap& b) {
  if (a.n_ != b.n_) throw SpaceMismatch("adding maps of different dimension");
  LinMap r(a.n_);
  for (std::size_t k = 0; k < a.m_.size(); ++k) r.m_[k] = a.m_[k] + b.m_[k];
  return r;
}

LinMap operator-(const LinMap& a, const LinMap& b) { return a + b.scaled(Scalar(-1)); }

LinMap LinMap::scaled(const Scalar& c) const {
  LinMap r(n_);
  for (std::size_t k = 0; k < m_.size(); ++k) r.m_[k] = m_[k] * c;
  return r;
}

bool LinMap::is_zero() const {
  for (const auto& c : m_)
    if (!c.is_zero()) return false;
  return true;
}

bool LinMap::is_identity() const { return *this == identity(n_); }

bool operator==(const LinMap& a, const LinMap& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t k = 0; k < a.m_.size(); ++k)
    if (!(a.m_[k] == b.m_[k])) return false;
  return true;
}

namespace {

// Fraction-free Gauss-Jordan on [M | I]. Every division by the previous pivot
// is exact (Sylvester), so polynomial inputs stay polynomial. At the end the
// left block is d*I and the right block is d*M^-1, with det(M) = sign*d.
struct Elimination {
  Scalar d;
  int sign = 1;
  std::vector<std::vector<Scalar>> rows;
  bool singular = false;
};

Elimination eliminate(const LinMap& m, bool augment) {
  const std::size_t n = m.dim();
  const std::size_t w = augment ? 2 * n : n;
  Elimination e;
  e.rows.assign(n, std::vector<Scalar>(w));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e.rows[i][j] = m.at(i, j);
    if (augment) e.rows[i][n + i] = Scalar(1);
  }
  Scalar prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && e.rows[p][k].is_zero()) ++p;
    if (p == n) {
      e.singular = true;
      e.d = Scalar(0);
      return e;
    }
    if (p != k) {
      std::swap(e.rows[p], e.rows[k]);
      e.sign = -e.sign;
    }
    const Scalar piv = e.rows[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Scalar f = e.rows[i][k];
      for (std::size_t j = 0; j < w; ++j) {
        if (j == k) continue;
        Scalar v = piv * e.rows[i][j] - f * e.rows[k][j];
        e.rows[i][j] = prev.is_one() ? v : v / prev;
      }
      e.rows[i][k] = Scalar(0);
    }
    prev = piv;
  }
  e.d = prev;
  return e;
}

}  // namespace

Scalar LinMap::determinant() const {
  if (n_ == 0) return Scalar(1);
  Elimination e = eliminate(*this, false);
  if (e.singular) return Scalar(0);
  return e.sign < 0 ? -e.d : e.d;
}

LinMap LinMap::inverse() const {
  Elimination e = eliminate(*this, true);
  if (e.singular) throw NotInvertible("map is not invertible (determinant 0)");
  LinMap r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.at(i, j) = e.rows[i][n_ + j] / e.d;
  return r;
}

LinMap LinMap::power(int k) const {
  LinMap base = k < 0 ? inverse() : *this;
  unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
  LinMap result = identity(n_);
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

void MultiOp::check_index(const Index& idx) const {
  if (idx.size() != arity_) throw ArityMismatch("index tuple length differs from arity");
  for (auto i : idx)
    if (i >= dim_) throw IndexOutOfRange("basis index " + std::to_string(i) + " out of range");
}

void MultiOp::set(const Index& idx, Vector value) {
  check_index(idx);
  if (value.size() != dim_) throw SpaceMismatch("structure constant vector has wrong length");
  if (bihom::is_zero(value))
    entries_.erase(idx);
  else
    entries_[idx] = std::move(value);
}

void MultiOp::add(const Index& idx, std::size_t k, const Scalar& c) {
  check_index(idx);
  if (k >= dim_) throw IndexOutOfRange("result index " + std::to_string(k) + " out of range");
  Vector v = get(idx);
  v[k] += c;
  set(idx, std::move(v));
}

Vector MultiOp::get(const Index& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? Vector(dim_) : it->second;
}

Vector MultiOp::apply(const std::vector<const Vector*>& args) const {
  if (args.size() != arity_) throw ArityMismatch("expected " + std::to_string(arity_) + " arguments");
  for (const auto* a : args)
    if (a->size() != dim_) throw SpaceMismatch("argument length does not match operation dimension");
  Vector out(dim_);
  for (const auto& [idx, val] : entries_) {
    Scalar c(1);
    bool zero = false;
    for (std::size_t s = 0; s < arity_ && !zero; ++s) {
      const Scalar& x = (*args[s])[idx[s]];
      if (x.is_zero())
        zero = true;
      else if (!x.is_one())
        c = c * x;
    }
    if (!zero) axpy(out, c, val);
  }
  return out;
}

Vector MultiOp::apply(const std::vector<Vector>& args) const {
  std::vector<const Vector*> p;
  for (const auto& a : args) p.push_back(&a);
  return apply(p);
}

bool operator==(const MultiOp& a, const MultiOp& b) {
  if (a.dim_ != b.dim_ || a.arity_ != b.arity_) return false;
  for (const auto& [idx, v] : a.entries_)
    if (!vectors_equal(v, b.get(idx))) return false;
  for (const auto& [idx, v] : b.entries_)
    if (!a.entries_.count(idx) && !bihom::is_zero(v)) return false;
  return true;
}

MultiOp twist_op(const MultiOp& op, const std::vector<const LinMap*>& maps) {
  if (maps.size() != op.arity()) throw ArityMismatch("one map per slot required");
  for (const auto* m : maps)
    if (m->dim() != op.dim()) throw SpaceMismatch("twist map dimension differs from operation");
  std::vector<std::vector<Vector>> cols(maps.size());
  for (std::size_t s = 0; s < maps.size(); ++s)
    for (std::size_t j = 0; j < op.dim(); ++j) cols[s].push_back(maps[s]->column(j));
  MultiOp out(op.dim(), op.arity());
  for_each_tuple(op.dim(), op.arity(), [&](const MultiOp::Index& idx) {
    std::vector<const Vector*> args;
    for (std::size_t s = 0; s < idx.size(); ++s) args.push_back(&cols[s][idx[s]]);
    out.set(idx, op.apply(args));
  });
  return out;
}

MultiOp twist_op(const MultiOp& op, const std::vector<LinMap>& maps) {
  std::vector<const LinMap*> p;
  for (const auto& m : maps) p.push_back(&m);
  return twist_op(op, p);
}

Verdict check_commute(const LinMap& m1, const LinMap& m2, const std::string& id) {
  if (m1.dim() != m2.dim()) throw SpaceMismatch("maps on different spaces");
  LinMap d = m1 * m2 - m2 * m1;
  for (std::size_t j = 0; j < d.dim(); ++j) {
    Vector c = d.column(j);
    if (!is_zero(c)) {
      Verdict v{id, Status::fail, {}, Counterexample{{j}, std::nullopt, {}, c}};
      return v;
    }
  }
  return Verdict::passed(id);
}

BasisSpace tensor_space(const BasisSpace& a, const BasisSpace& b) {
  std::vector<std::string> l;
  for (const auto& x : a.labels)
    for (const auto& y : b.labels) l.push_back(x + "⊗" + y);
  return BasisSpace(std::move(l));
}

Vector tensor_vector(const Vector& a, const Vector& b) {
  Vector r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

LinMap tensor_map(const LinMap& ma, const LinMap& mb) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < ma.dim(); ++i)
    for (std::size_t j = 0; j < mb.dim(); ++j) cols.push_back(tensor_vector(ma.column(i), mb.column(j)));
  return LinMap::from_columns(cols);
}

}  // namespace bihom

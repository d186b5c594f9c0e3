#pragma once

#include <map>
#include <string>
#include <vector>

#include "bihom/scalar.hpp"
#include "bihom/verdict.hpp"

namespace bihom {

struct BasisSpace {
  std::vector<std::string> labels;

  BasisSpace() = default;
  explicit BasisSpace(std::vector<std::string> l);
  static BasisSpace standard(std::size_t dim, const std::string& prefix = "e");
  std::size_t dim() const { return labels.size(); }
  friend bool operator==(const BasisSpace&, const BasisSpace&) = default;
};

Vector zero_vector(std::size_t dim);
Vector basis_vector(std::size_t dim, std::size_t i);
bool is_zero(const Vector& v);
bool vectors_equal(const Vector& a, const Vector& b);
void axpy(Vector& y, const Scalar& a, const Vector& x);  // y += a*x
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Scalar& c);
// Human form such as "2*k1*e2 + e1"; "0" for the zero vector.
std::string vector_str(const Vector& v, const std::vector<std::string>& labels,
                       const std::vector<std::string>& params);

// Square matrix; column j is the image of basis vector j.
class LinMap {
 public:
  LinMap() = default;
  explicit LinMap(std::size_t dim) : n_(dim), m_(dim * dim) {}
  static LinMap identity(std::size_t dim);
  static LinMap from_columns(const std::vector<Vector>& cols);
  static LinMap diagonal(const Vector& d);

  std::size_t dim() const { return n_; }
  const Scalar& at(std::size_t row, std::size_t col) const { return m_[col * n_ + row]; }
  Scalar& at(std::size_t row, std::size_t col) { return m_[col * n_ + row]; }
  Vector column(std::size_t j) const;
  Vector apply(const Vector& x) const;

  // Composition: (a * b)(x) = a(b(x)).
  friend LinMap operator*(const LinMap& a, const LinMap& b);
  friend LinMap operator+(const LinMap& a, const LinMap& b);
  friend LinMap operator-(const LinMap& a, const LinMap& b);
  LinMap scaled(const Scalar& c) const;

  bool is_zero() const;
  bool is_identity() const;
  Scalar determinant() const;
  LinMap inverse() const;     // NotInvertible when the determinant is zero
  LinMap power(int k) const;  // negative k uses the inverse

  friend bool operator==(const LinMap& a, const LinMap& b);

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> m_;
};

// r-ary multilinear operation stored as structure constants: op(e_i1..e_ir) = entries[(i1..ir)].
// Absent tuples are zero.
class MultiOp {
 public:
  using Index = std::vector<std::size_t>;

  MultiOp() = default;
  MultiOp(std::size_t dim, std::size_t arity) : dim_(dim), arity_(arity) {}

  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return arity_; }
  const std::map<Index, Vector>& entries() const { return entries_; }

  void set(const Index& idx, Vector value);
  void add(const Index& idx, std::size_t k, const Scalar& c);
  Vector get(const Index& idx) const;

  Vector apply(const std::vector<const Vector*>& args) const;
  Vector apply(const std::vector<Vector>& args) const;

  bool is_zero() const { return entries_.empty(); }
  friend bool operator==(const MultiOp& a, const MultiOp& b);

 private:
  void check_index(const Index& idx) const;

  std::size_t dim_ = 0, arity_ = 0;
  std::map<Index, Vector> entries_;
};

// Visits every index tuple of the given length over [0, dim) in lexicographic order.
template <class F>
void for_each_tuple(std::size_t dim, std::size_t len, F&& f) {
  MultiOp::Index idx(len, 0);
  if (dim == 0 && len > 0) return;
  for (;;) {
    f(static_cast<const MultiOp::Index&>(idx));
    std::size_t k = len;
    while (k > 0) {
      if (++idx[k - 1] < dim) break;
      idx[k - 1] = 0;
      --k;
    }
    if (k == 0) return;
  }
}

MultiOp twist_op(const MultiOp& op, const std::vector<const LinMap*>& maps);
MultiOp twist_op(const MultiOp& op, const std::vector<LinMap>& maps);

// pass iff m1∘m2 = m2∘m1; on failure reports the first basis index and the residual column.
Verdict check_commute(const LinMap& m1, const LinMap& m2, const std::string& id = "commute");

BasisSpace tensor_space(const BasisSpace& a, const BasisSpace& b);
LinMap tensor_map(const LinMap& ma, const LinMap& mb);
Vector tensor_vector(const Vector& a, const Vector& b);

}  // namespace bihom

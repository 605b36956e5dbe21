#pragma once

#include <string>
#include <vector>

#include "mlc/rational.hpp"

namespace mlc {

// Dense square matrix with exact entries.  Symmetry is checked where it
// matters (SymMatrix::from_rows, signature) rather than enforced on writes.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int dimension) : n_(dimension), a_(static_cast<std::size_t>(dimension) * dimension) {}
  // Throws kNotSymmetric / kInvalidParameters.
  static SymMatrix from_rows(const std::vector<RationalVector>& rows);
  static SymMatrix identity(int dimension);
  static SymMatrix diagonal(const RationalVector& d);

  int dimension() const { return n_; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  // Writes both (i,j) and (j,i).
  void set(int i, int j, const Rational& v);

  bool is_symmetric() const;
  RationalVector multiply(const RationalVector& x) const;
  // x^T A y
  Rational bilinear(const RationalVector& x, const RationalVector& y) const;
  std::vector<double> to_double() const;
  double norm_inf() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator*(const SymMatrix& a, const Rational& c);
// Plain matrix product (not necessarily symmetric).
SymMatrix product(const SymMatrix& a, const SymMatrix& b);
SymMatrix transpose(const SymMatrix& a);
// L^T A L for square L given by rows.
SymMatrix congruence(const SymMatrix& a, const std::vector<RationalVector>& l);
// v v^T
SymMatrix outer(const RationalVector& v);

}  // namespace mlc

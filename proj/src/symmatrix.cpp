#include "mlc/symmatrix.hpp"

#include <cmath>

#include "mlc/error.hpp"

namespace mlc {

SymMatrix SymMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const int n = static_cast<int>(rows.size());
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw Error(ErrorCode::kInvalidParameters, "matrix is not square");
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  if (!m.is_symmetric()) throw Error(ErrorCode::kNotSymmetric, "matrix differs from its transpose");
  return m;
}

SymMatrix SymMatrix::identity(int dimension) {
  SymMatrix m(dimension);
  for (int i = 0; i < dimension; ++i) m(i, i) = 1;
  return m;
}

SymMatrix SymMatrix::diagonal(const RationalVector& d) {
  SymMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dimension(); ++i) m(i, i) = d[i];
  return m;
}

void SymMatrix::set(int i, int j, const Rational& v) {
  (*this)(i, j) = v;
  (*this)(j, i) = v;
}

bool SymMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RationalVector SymMatrix::multiply(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != n_) throw Error(ErrorCode::kArityMismatch, "vector length differs from dimension");
  RationalVector y(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
    }
  }
  return y;
}

Rational SymMatrix::bilinear(const RationalVector& x, const RationalVector& y) const { return dot(x, multiply(y)); }

std::vector<double> SymMatrix::to_double() const {
  std::vector<double> out(a_.size());
  for (std::size_t k = 0; k < a_.size(); ++k) out[k] = a_[k].get_d();
  return out;
}

double SymMatrix::norm_inf() const {
  double best = 0;
  for (int i = 0; i < n_; ++i) {
    double row = 0;
    for (int j = 0; j < n_; ++j) row += std::fabs((*this)(i, j).get_d());
    best = std::max(best, row);
  }
  return best;
}

namespace {

void check_same(const SymMatrix& a, const SymMatrix& b) {
  if (a.dimension() != b.dimension()) throw Error(ErrorCode::kArityMismatch, "matrix dimensions differ");
}

}  // namespace

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  check_same(a, b);
  SymMatrix out = a;
  for (int i = 0; i < a.dimension(); ++i) {
    for (int j = 0; j < a.dimension(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  check_same(a, b);
  SymMatrix out = a;
  for (int i = 0; i < a.dimension(); ++i) {
    for (int j = 0; j < a.dimension(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

SymMatrix operator*(const SymMatrix& a, const Rational& c) {
  SymMatrix out = a;
  for (int i = 0; i < a.dimension(); ++i) {
    for (int j = 0; j < a.dimension(); ++j) out(i, j) *= c;
  }
  return out;
}

SymMatrix product(const SymMatrix& a, const SymMatrix& b) {
  check_same(a, b);
  const int n = a.dimension();
  SymMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

SymMatrix transpose(const SymMatrix& a) {
  SymMatrix out(a.dimension());
  for (int i = 0; i < a.dimension(); ++i) {
    for (int j = 0; j < a.dimension(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

SymMatrix congruence(const SymMatrix& a, const std::vector<RationalVector>& l) {
  const int n = a.dimension();
  SymMatrix lm(n);
  if (static_cast<int>(l.size()) != n) throw Error(ErrorCode::kArityMismatch, "congruence matrix has wrong size");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(l[i].size()) != n) throw Error(ErrorCode::kArityMismatch, "congruence matrix is not square");
    for (int j = 0; j < n; ++j) lm(i, j) = l[i][j];
  }
  return product(transpose(lm), product(a, lm));
}

SymMatrix outer(const RationalVector& v) {
  const int n = static_cast<int>(v.size());
  SymMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = v[i] * v[j];
  }
  return out;
}

}  // namespace mlc

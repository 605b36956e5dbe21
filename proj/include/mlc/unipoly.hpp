#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mlc/rational.hpp"

namespace mlc {

// Dense univariate polynomial over Q, coefficients in ascending degree.
// The zero polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> ascending);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  // x - root
  static UniPoly linear_root(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  // Positive rational multiple with coprime integer coefficients.
  UniPoly primitive() const;
  // p(-x)
  UniPoly reflect() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator-(const UniPoly& a) { return a * Rational(-1); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  UniPoly pow(int e) const;

  // "q^4 - 5q^3 + 8q^2 - 4q"; rationals print as p/q.
  std::string to_string(char var = 'q') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Euclidean division; throws kNotDivisible when the divisor is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Number of sign changes in the coefficient sequence, zeros skipped.
int sign_variations(const std::vector<Rational>& seq);

// Sturm chain of a square-free polynomial, content-normalised by positive
// factors only.
std::vector<UniPoly> sturm_chain(const UniPoly& p);
// Distinct real roots of p in (lo, hi].
int count_roots(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi);
int count_distinct_real_roots(const UniPoly& p);

UniPoly square_free_part(const UniPoly& p);
// Yun decomposition: p = c * prod_k factors[k-1]^k with square-free factors.
std::vector<UniPoly> square_free_decomposition(const UniPoly& p);
// Real roots counted with multiplicity.
int count_real_roots_with_multiplicity(const UniPoly& p);

// Bound B with every complex root |z| < B.
Rational root_bound(const UniPoly& p);

struct RootBracket {
  Rational lo;  // exclusive
  Rational hi;  // inclusive
};
// Brackets the largest real root (p must have one) to width <= tol.
RootBracket largest_real_root(const UniPoly& p, const Rational& tol);
// Multiplicity of the largest real root of p.
int largest_root_multiplicity(const UniPoly& p);

}  // namespace mlc

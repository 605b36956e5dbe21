#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlc/rational.hpp"
#include "mlc/symmatrix.hpp"

namespace mlc {

// A monomial is the sorted list of its variable indices, with repetition:
// x0^2 x3 is {0, 0, 3}.
using Monomial = std::vector<int>;

// Sparse polynomial over Q in a fixed number of variables.  Zero
// coefficients are never stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int arity) : arity_(arity) {}
  static MultiPoly constant(int arity, const Rational& c);
  static MultiPoly variable(int arity, int index);

  int arity() const { return arity_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * m; `m` need not be sorted.
  void add_term(Monomial m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  // -1 for the zero polynomial.
  int degree() const;
  // Common degree of all terms; nullopt when mixed (zero counts as homogeneous
  // of every degree and reports nullopt too).
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous(int d) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  // Human form "1/2*x0^2 - x1*x2"; variable names x<i> unless given.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_arity(const MultiPoly& o) const;

  int arity_ = 0;
  std::map<Monomial, Rational> terms_;
};

// Dense rows x cols matrix; as a substitution, variable k of the polynomial
// becomes sum_j A[k][j] y_j, so rows = arity of f, cols = new arity.
struct LinearMap {
  int rows = 0;
  int cols = 0;
  std::vector<RationalVector> a;

  LinearMap() = default;
  LinearMap(int r, int c) : rows(r), cols(c), a(r, RationalVector(c)) {}
  static LinearMap identity(int n);

  RationalVector apply(const RationalVector& x) const;
  friend LinearMap compose(const LinearMap& outer, const LinearMap& inner);
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

// Sparse image of one variable: list of (new variable, coefficient).
using LinearForm = std::vector<std::pair<int, Rational>>;

MultiPoly differentiate(const MultiPoly& f, int index);
// sum_i d_i * df/dx_i; throws kArityMismatch.
MultiPoly directional_derivative(const MultiPoly& f, const RationalVector& d);

Rational evaluate(const MultiPoly& f, const RationalVector& x);
double evaluate(const MultiPoly& f, const std::vector<double>& x);
RationalVector gradient_at(const MultiPoly& f, const RationalVector& x);
SymMatrix hessian_at(const MultiPoly& f, const RationalVector& x);

// f composed with the linear map; throws kArityMismatch when rows != arity.
MultiPoly substitute_linear(const MultiPoly& f, const LinearMap& a);
// Same with one sparse form per variable of f, new arity `arity`.
MultiPoly substitute_forms(const MultiPoly& f, const std::vector<LinearForm>& images, int arity);
// Renames variable k to map[k] (-1 forbidden when the variable occurs).
MultiPoly rename_variables(const MultiPoly& f, const std::vector<int>& map, int arity);

}  // namespace mlc

#pragma once

#include <vector>

#include "mlc/matroid.hpp"
#include "mlc/multipoly.hpp"
#include "mlc/rational.hpp"

namespace mlc {

// Coordinates t_F over the proper flats, indexed by proper index.
using ClassVector = RationalVector;

// Which element of a nonempty difference set stands in for alpha/beta.
enum class Representative { kSmallest, kLargest };

ClassVector zero_class(const Matroid& m);
ClassVector delta_vector(const Matroid& m, int flat_id);
// Throws kElementOutOfRange for elements outside E or loops.
ClassVector alpha_vector(const Matroid& m, int element);
ClassVector beta_vector(const Matroid& m, int element);
// Smallest (or largest) non-loop element; throws kLoopyMatroid if none.
int default_element(const Matroid& m, Representative rep = Representative::kSmallest);

// W_M = span{alpha_i - alpha_j} in echelon form.
class QuotientBasis {
 public:
  explicit QuotientBasis(const Matroid& m);

  int ambient_dimension() const { return ambient_; }
  int w_dimension() const { return static_cast<int>(rows_.size()); }
  int l_dimension() const { return ambient_ - w_dimension(); }
  const std::vector<RationalVector>& rows() const { return rows_; }
  // Generators alpha_i - alpha_{i0} before elimination.
  const std::vector<ClassVector>& generators() const { return generators_; }

  // Normal form of v modulo W_M.
  ClassVector reduce(ClassVector v) const;
  bool in_w(const ClassVector& v) const;
  bool same_class(const ClassVector& a, const ClassVector& b) const;

 private:
  int ambient_ = 0;
  std::vector<RationalVector> rows_;
  std::vector<int> pivots_;
  std::vector<ClassVector> generators_;
};

// pi^F into the proper flats of M^F, pi_F into those of M_F, and pi_F^G into
// those of M_F^G; rows follow the minor's canonical proper order.  Throws
// kImproperFlat / kNotComparable.
LinearMap projection_up(const Matroid& m, int flat, Representative rep = Representative::kSmallest);
LinearMap projection_down(const Matroid& m, int flat, Representative rep = Representative::kSmallest);
LinearMap projection_between(const Matroid& m, int lower, int upper, Representative rep = Representative::kSmallest);

// V_M in proper-index variables; throws kLoopyMatroid.
MultiPoly volume_polynomial(const Matroid& m, Representative rep = Representative::kSmallest);

// D_alpha^{r-k} D_beta^k V_M with r = rank - 1; throws kRankOutOfRange.
Rational mixed_degree(const Matroid& m, int k, Representative rep = Representative::kSmallest);
Rational mixed_degree(const Matroid& m, const MultiPoly& volume, int k, int element);

// Interior flats F_1 < ... < F_l of a chain from bottom to top.  Throws
// kImproperFlat / kNotComparable.
void validate_chain(const Matroid& m, const std::vector<int>& chain);

// Representative of the class of u vanishing on every chain flat.
ClassVector flat_avoiding_representative(const Matroid& m, const ClassVector& u, const std::vector<int>& chain);

struct ChainProduct {
  // Interval minors M_{F_{j-1}}^{F_j}, j = 1..l+1.
  std::vector<IntervalMinor> blocks;
  // First variable of each block; block j uses proper flats of blocks[j].
  std::vector<int> offsets;
  MultiPoly f;   // product of block volume polynomials
  LinearMap pi;  // R^{P(M)} -> R^F
};

ChainProduct chain_product(const Matroid& m, const std::vector<int>& chain);
// D_{F_1} ... D_{F_l} V_M.
MultiPoly chain_derivative(const Matroid& m, const MultiPoly& volume, const std::vector<int>& chain);

}  // namespace mlc

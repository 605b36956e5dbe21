#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mlc/cone.hpp"
#include "mlc/matroid.hpp"
#include "mlc/multipoly.hpp"
#include "mlc/symmatrix.hpp"
#include "mlc/unipoly.hpp"
#include "mlc/volume.hpp"

namespace mlc {

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

// det(x I - A) by Hessenberg reduction over Q.
UniPoly characteristic_polynomial(const SymMatrix& a);
// Descartes counts on the exact characteristic polynomial; throws kNotSymmetric.
Signature signature(const SymMatrix& a);
// Symmetric elimination with 2x2 fix-ups for zero pivots.
Signature signature_ldlt(const SymMatrix& a);

// x^T A x / x^T x; throws kZeroVector.
Rational rayleigh(const SymMatrix& a, const RationalVector& x);

// Connectivity of the graph with an edge ij whenever A_ij != 0, i != j.
bool is_irreducible(const SymMatrix& a);
bool is_weakly_nonnegative(const SymMatrix& a);

struct PerronOptions {
  int max_iterations = 100'000;
  double tolerance = 1e-10;  // relative to the infinity norm of A
};

struct PerronResult {
  double lambda = 0;
  std::vector<double> vector;  // unit 2-norm, positive
  bool simple = false;
  int iterations = 0;
  RootBracket exact;  // bracket of the largest exact eigenvalue
};

// Throws kNotWeaklyNonnegative, kNotIrreducible, kNoConvergence.
PerronResult perron(const SymMatrix& a, const PerronOptions& options = {});

// signature(A - v v^T).positive <= 1; throws kPreconditionViolated when A
// itself has more than one positive eigenvalue.
bool downdate_check(const SymMatrix& a, const RationalVector& v);

struct Certificate {
  std::string kind;
  std::uint64_t matroid_hash = 0;
  std::vector<int> chain;
  RationalVector point;
  std::vector<RationalVector> directions;
  SymMatrix hessian;
  Signature signature;
  Rational value;  // the derivative evaluated at the point
  bool pass = false;
  std::string witness;
  // Chain certificates: whether the Hessian's incidence graph equals the join
  // of the interval flat graphs.
  bool graph_matches = true;
};

// Checks the three bootstrap hypotheses at x > 0 and then the conclusion.
// Throws kInvalidParameters (degree < 3 or non-homogeneous), kArityMismatch,
// kNonPositiveRepresentative, kHypothesisFailed, kConclusionFailed.
Certificate bootstrap_check(const MultiPoly& f, const RationalVector& x);

// H_u(D_{u_1} ... D_{u_k} V_M) in the delta basis.  Throws kRankTooSmall when
// k > rank - 3 and kNonPositiveRepresentative for non-positive inputs.
Certificate certify_lorentzian(const Matroid& m, const AmplePoint& u, const std::vector<AmplePoint>& dirs);
Certificate certify_lorentzian(const Matroid& m, const MultiPoly& volume, const AmplePoint& u,
                               const std::vector<AmplePoint>& dirs);

// Blockwise sampled ample point of R^F (concatenated block coordinates).
RationalVector sample_chain_point(const Matroid& m, const std::vector<int>& chain, std::uint64_t seed);

// Same certificate for f_F at u in R^F with directions in R^F.
Certificate certify_chain(const Matroid& m, const std::vector<int>& chain, const RationalVector& u,
                          const std::vector<RationalVector>& dirs);

struct HodgeResult {
  SymMatrix matrix;
  Rational determinant;
  bool holds = false;
};

// Throws kRankTooSmall unless |dirs| = rank - 3, kPreconditionViolated when
// D_x^2 g <= 0.
HodgeResult hodge_2x2(const Matroid& m, const ClassVector& x, const ClassVector& y, const std::vector<AmplePoint>& dirs);
HodgeResult hodge_2x2(const Matroid& m, const MultiPoly& volume, const ClassVector& x, const ClassVector& y,
                      const std::vector<AmplePoint>& dirs);

struct RhwReport {
  std::vector<Integer> mu;          // characteristic, i = 0..rank
  std::vector<Integer> mu_reduced;  // reduced, i = 0..rank-1
  std::vector<Rational> mixed;      // mixed_degree for k = 0..rank-1
  bool mu_log_concave = false;
  bool reduced_log_concave = false;
  bool mixed_matches = false;
  bool sum_matches = false;  // chi_M equals the reduced polynomial of M + U_{1,1}
  bool pass = false;
};

// Throws kLoopyMatroid.
RhwReport verify_rhw(const Matroid& m);

}  // namespace mlc

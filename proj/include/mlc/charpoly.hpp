#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "mlc/graph.hpp"
#include "mlc/matroid.hpp"
#include "mlc/rational.hpp"
#include "mlc/unipoly.hpp"

namespace mlc {

// Element of the incidence algebra of a lattice of flats: a finite formal sum
// of intervals [F, G] (flat ids, F a subset of G).
struct IncidenceElement {
  std::map<std::pair<int, int>, Rational> coeffs;

  Rational at(int f, int g) const;
  friend bool operator==(const IncidenceElement&, const IncidenceElement&) = default;
};

IncidenceElement incidence_delta(const Matroid& m);
IncidenceElement incidence_zeta(const Matroid& m);
// Throws kInvalidParameters for a key that is not an interval.
IncidenceElement incidence_multiply(const Matroid& m, const IncidenceElement& a, const IncidenceElement& b);
// Throws kNotInvertible naming a flat with zero diagonal coefficient.
IncidenceElement incidence_invert(const Matroid& m, const IncidenceElement& a);

// mu(F, G) for every interval, from the inverse of zeta.
class MobiusTable {
 public:
  explicit MobiusTable(const Matroid& m);
  // Zero off the intervals.
  Integer operator()(int f, int g) const;
  const std::map<std::pair<int, int>, Integer>& values() const { return values_; }

 private:
  std::map<std::pair<int, int>, Integer> values_;
};

MobiusTable mobius_invariants(const Matroid& m);

struct CharPoly {
  UniPoly poly;
  // mu[i] = (-1)^i [q^{rank-i}] chi, i = 0..rank.
  std::vector<Integer> mu;
};

// The two independent constructions; both are zero for matroids with loops.
UniPoly characteristic_by_recursion(const Matroid& m);
UniPoly characteristic_by_mobius(const Matroid& m);
// Runs both and throws kInternalMismatch if they differ.
CharPoly characteristic_polynomial(const Matroid& m);

struct ReducedCharPoly {
  UniPoly poly;
  std::vector<Integer> mu;  // i = 0..rank-1
};

// chi / (q - 1); throws kNotDivisible for rank 0 or loops.
ReducedCharPoly reduced_characteristic_polynomial(const Matroid& m);

// Signed magnitudes (-1)^i [q^{deg-i}] p as integers; throws kInternalMismatch
// for non-integer coefficients.
std::vector<Integer> signed_magnitudes(const UniPoly& p);

bool chromatic_relation_check(const Graph& g);

// Linear forms over F_p: `rows` holds n+1 forms in `dimension` = r+1
// variables, entries reduced into [0, p).
struct Arrangement {
  int p = 2;
  int dimension = 0;
  std::vector<std::vector<int>> rows;
};

// "p r+1 n+1" header, then n+1 rows; throws kParseError.
Arrangement parse_arrangement(std::string_view text);
// Throws kNotPrime, kInvalidParameters (zero form, >20 forms).
Matroid arrangement_matroid(const Arrangement& a);

inline constexpr std::uint64_t kDefaultPointBudget = 10'000'000;

struct FiniteFieldCount {
  Matroid matroid;
  int kappa = 0;
  Integer count;     // points of F_{p^b}^{r+1} off every hyperplane
  Integer expected;  // p^{b kappa} chi_M(p^b)
};

// Throws kNotPrime; kBudgetExceeded when p^{b(r+1)} exceeds `budget`.
FiniteFieldCount finite_field_count(const Arrangement& a, int b, std::uint64_t budget = kDefaultPointBudget);

bool is_prime(int p);

struct SequenceShape {
  bool log_concave = false;
  bool ultra_log_concave = false;
  bool unimodal = false;
  bool real_rooted = false;
};

bool is_log_concave(const std::vector<Rational>& a);
// a_k / C(n, k) log-concave with n = a.size() - 1.
bool is_ultra_log_concave(const std::vector<Rational>& a);
bool is_unimodal(const std::vector<Rational>& a);
// sum a_k x^k has only real roots (the zero and constant polynomials count).
bool is_real_rooted(const std::vector<Rational>& a);
SequenceShape sequence_checks(const std::vector<Rational>& a);

std::vector<Rational> to_rationals(const std::vector<Integer>& a);

}  // namespace mlc

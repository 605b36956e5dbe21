#pragma once

#include <cstdint>
#include <vector>

#include "mlc/matroid.hpp"
#include "mlc/rational.hpp"
#include "mlc/subset.hpp"
#include "mlc/volume.hpp"

namespace mlc {

inline constexpr int kMaxSetFunctionGround = 20;
// Above this ground size strict submodularity is checked on the local
// squares c(S+i) + c(S+j) > c(S) + c(S+i+j) instead of all pairs.
inline constexpr int kExhaustiveSubmodularLimit = 12;

// Rational value per subset of {0..n-1}, indexed by bitmask.
class SetFunction {
 public:
  SetFunction() = default;
  // Zero function; throws kSizeCapExceeded beyond 20 elements.
  explicit SetFunction(int ground_size);
  static SetFunction from_values(int ground_size, std::vector<Rational> values);

  int ground_size() const { return n_; }
  const Rational& operator()(Subset s) const { return values_[s]; }
  Rational& operator()(Subset s) { return values_[s]; }
  const std::vector<Rational>& values() const { return values_; }

  SetFunction& operator+=(const SetFunction& o);
  SetFunction& operator-=(const SetFunction& o);
  SetFunction& operator*=(const Rational& c);
  friend SetFunction operator+(SetFunction a, const SetFunction& b) { return a += b; }
  friend SetFunction operator-(SetFunction a, const SetFunction& b) { return a -= b; }
  friend SetFunction operator*(SetFunction a, const Rational& c) { return a *= c; }
  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> values_;
};

// Throws kBoundaryViolation unless c(empty) = c(E) = 0.
void check_boundary(const SetFunction& c);
bool is_submodular(const SetFunction& c);
bool is_strictly_submodular(const SetFunction& c);
// Exhaustive pair check regardless of size; used to cross-check the local one.
bool is_strictly_submodular_exhaustive(const SetFunction& c);
bool is_submodular_exhaustive(const SetFunction& c);

// c_+(I) = |I| (|E| - |I|)
SetFunction plus_function(int ground_size);
// [i in I], set to 0 on E so the boundary conditions hold.
SetFunction indicator_function(int ground_size, int element);
// [I nonempty and i not in I]
SetFunction beta_function(int ground_size, int element);

// y_c: c(F) on each proper flat.
ClassVector induced_class(const Matroid& m, const SetFunction& c);

struct AmplePoint {
  ClassVector coords;
  SetFunction provenance;
  bool positive = false;
};

AmplePoint make_ample(const Matroid& m, SetFunction c);
AmplePoint canonical_ample(const Matroid& m);
// lambda c_+ + sum_i a_i c_i with lambda in 1..8 and a_i in 0..8.
AmplePoint sample_ample(const Matroid& m, std::uint64_t seed);
AmplePoint add(const Matroid& m, const AmplePoint& a, const AmplePoint& b);
AmplePoint scale(const Matroid& m, const AmplePoint& a, const Rational& s);

// Nonnegative representative of the class with at least one positive entry.
ClassVector effective_representative(const Matroid& m, const AmplePoint& u);
// The set function behind effective_representative.
SetFunction effective_function(const SetFunction& c);

// y_{c_i + eps c_+} and its beta analogue; throws kInvalidParameters for
// eps <= 0 and kCertificationFailed if the limit class does not match.
AmplePoint approach_alpha(const Matroid& m, int element, const Rational& eps);
AmplePoint approach_beta(const Matroid& m, int element, const Rational& eps);

enum class ProjectionSide { kUp, kDown };

struct ProjectedAmple {
  ClassVector coords;      // in the minor's proper-flat coordinates
  SetFunction provenance;  // on the minor's ground set
};

// Throws kImproperFlat, kCertificationFailed.
ProjectedAmple project_ample(const Matroid& m, const AmplePoint& u, int flat, ProjectionSide side);

}  // namespace mlc

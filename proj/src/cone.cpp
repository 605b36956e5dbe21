#include "mlc/cone.hpp"

#include <algorithm>
#include <random>

#include "mlc/error.hpp"

namespace mlc {

SetFunction::SetFunction(int ground_size) : n_(ground_size) {
  if (ground_size < 0 || ground_size > kMaxSetFunctionGround) {
    throw Error(ErrorCode::kSizeCapExceeded, "set functions are limited to 20 elements");
  }
  values_.assign(std::size_t{1} << ground_size, Rational(0));
}

SetFunction SetFunction::from_values(int ground_size, std::vector<Rational> values) {
  SetFunction c(ground_size);
  if (values.size() != c.values_.size()) {
    throw Error(ErrorCode::kInvalidParameters, "expected " + std::to_string(c.values_.size()) + " values");
  }
  c.values_ = std::move(values);
  return c;
}

SetFunction& SetFunction::operator+=(const SetFunction& o) {
  if (o.n_ != n_) throw Error(ErrorCode::kArityMismatch, "set functions on different ground sets");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
  return *this;
}

SetFunction& SetFunction::operator-=(const SetFunction& o) {
  if (o.n_ != n_) throw Error(ErrorCode::kArityMismatch, "set functions on different ground sets");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
  return *this;
}

SetFunction& SetFunction::operator*=(const Rational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

void check_boundary(const SetFunction& c) {
  const Subset e = full_set(c.ground_size());
  if (c(0) != 0 || c(e) != 0) {
    throw Error(ErrorCode::kBoundaryViolation,
                "c(empty) = " + to_string(c(0)) + ", c(E) = " + to_string(c(e)) + "; both must vanish");
  }
}

namespace {

// Violations of c(A) + c(B) >(=) c(A & B) + c(A | B) over incomparable pairs.
bool exhaustive(const SetFunction& c, bool strict) {
  check_boundary(c);
  const Subset top = full_set(c.ground_size());
  for (Subset a = 1; a < top; ++a) {
    for (Subset b = a + 1; b < top; ++b) {
      const Subset meet = a & b;
      if (meet == a || meet == b) continue;
      const Rational lhs = c(a) + c(b);
      const Rational rhs = c(meet) + c(a | b);
      if (strict ? !(lhs > rhs) : lhs < rhs) return false;
    }
  }
  return true;
}

// Same condition on the squares S+i, S+j; equivalent by telescoping.
bool local(const SetFunction& c, bool strict) {
  check_boundary(c);
  const int n = c.ground_size();
  const Subset top = full_set(n);
  for (Subset s = 0; s <= top; ++s) {
    for (int i = 0; i < n; ++i) {
      if (contains(s, i)) continue;
      const Subset si = s | (Subset{1} << i);
      for (int j = i + 1; j < n; ++j) {
        if (contains(s, j)) continue;
        const Subset sj = s | (Subset{1} << j);
        const Rational lhs = c(si) + c(sj);
        const Rational rhs = c(s) + c(si | sj);
        if (strict ? !(lhs > rhs) : lhs < rhs) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_submodular_exhaustive(const SetFunction& c) { return exhaustive(c, false); }
bool is_strictly_submodular_exhaustive(const SetFunction& c) { return exhaustive(c, true); }

bool is_submodular(const SetFunction& c) {
  return c.ground_size() <= kExhaustiveSubmodularLimit ? exhaustive(c, false) : local(c, false);
}

bool is_strictly_submodular(const SetFunction& c) {
  return c.ground_size() <= kExhaustiveSubmodularLimit ? exhaustive(c, true) : local(c, true);
}

SetFunction plus_function(int ground_size) {
  SetFunction c(ground_size);
  const Subset top = full_set(ground_size);
  for (Subset s = 0; s <= top; ++s) c(s) = cardinality(s) * (ground_size - cardinality(s));
  return c;
}

namespace {

SetFunction raw_indicator(int ground_size, int element) {
  SetFunction c(ground_size);
  const Subset top = full_set(ground_size);
  for (Subset s = 0; s <= top; ++s) c(s) = contains(s, element) ? 1 : 0;
  return c;
}

void check_element_index(int ground_size, int element) {
  if (element < 0 || element >= ground_size) {
    throw Error(ErrorCode::kElementOutOfRange, "element " + std::to_string(element) + " is outside the ground set");
  }
}

}  // namespace

SetFunction indicator_function(int ground_size, int element) {
  check_element_index(ground_size, element);
  SetFunction c = raw_indicator(ground_size, element);
  c(full_set(ground_size)) = 0;
  return c;
}

SetFunction beta_function(int ground_size, int element) {
  check_element_index(ground_size, element);
  SetFunction c(ground_size);
  const Subset top = full_set(ground_size);
  for (Subset s = 1; s <= top; ++s) c(s) = contains(s, element) ? 0 : 1;
  return c;
}

ClassVector induced_class(const Matroid& m, const SetFunction& c) {
  if (c.ground_size() != m.ground_size()) throw Error(ErrorCode::kArityMismatch, "set function ground differs from matroid");
  ClassVector v = zero_class(m);
  for (int p = 0; p < m.proper_count(); ++p) v[p] = c(m.flat(m.proper_flat_id(p)));
  return v;
}

AmplePoint make_ample(const Matroid& m, SetFunction c) {
  if (!is_strictly_submodular(c)) throw Error(ErrorCode::kCertificationFailed, "set function is not strictly submodular");
  AmplePoint u;
  u.coords = induced_class(m, c);
  u.provenance = std::move(c);
  u.positive = std::all_of(u.coords.begin(), u.coords.end(), [](const Rational& x) { return x > 0; });
  return u;
}

AmplePoint canonical_ample(const Matroid& m) { return make_ample(m, plus_function(m.ground_size())); }

AmplePoint sample_ample(const Matroid& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const long lambda = 1 + static_cast<long>(rng() % 8);
  SetFunction c = plus_function(m.ground_size()) * Rational(lambda);
  for (int i = 0; i < m.ground_size(); ++i) {
    const long a = static_cast<long>(rng() % 9);
    if (a != 0) c += indicator_function(m.ground_size(), i) * Rational(a);
  }
  return make_ample(m, std::move(c));
}

AmplePoint add(const Matroid& m, const AmplePoint& a, const AmplePoint& b) {
  return make_ample(m, a.provenance + b.provenance);
}

AmplePoint scale(const Matroid& m, const AmplePoint& a, const Rational& s) {
  if (s <= 0) throw Error(ErrorCode::kInvalidParameters, "scale factor must be positive");
  return make_ample(m, a.provenance * s);
}

SetFunction effective_function(const SetFunction& c) {
  const int n = c.ground_size() - 1;
  if (n < 1) return c;
  // c' = c - sum_{j=1}^{n} (c([j]) - c([j-1])) (c_j - c_0) with [j] = {1..j};
  // c' then vanishes on every [j] and is nonnegative by strict submodularity.
  SetFunction out = c;
  const SetFunction c0 = raw_indicator(c.ground_size(), 0);
  Subset prefix = 0;
  for (int j = 1; j <= n; ++j) {
    const Subset next = prefix | (Subset{1} << j);
    const Rational step = c(next) - c(prefix);
    if (step != 0) out -= (raw_indicator(c.ground_size(), j) - c0) * step;
    prefix = next;
  }
  return out;
}

ClassVector effective_representative(const Matroid& m, const AmplePoint& u) {
  return induced_class(m, effective_function(u.provenance));
}

namespace {

AmplePoint approach(const Matroid& m, const SetFunction& limit, const ClassVector& expected, const Rational& eps) {
  if (eps <= 0) throw Error(ErrorCode::kInvalidParameters, "eps must be positive");
  if (induced_class(m, limit) != expected) {
    throw Error(ErrorCode::kCertificationFailed, "limit set function does not induce the expected class");
  }
  return make_ample(m, limit + plus_function(m.ground_size()) * eps);
}

}  // namespace

AmplePoint approach_alpha(const Matroid& m, int element, const Rational& eps) {
  return approach(m, indicator_function(m.ground_size(), element), alpha_vector(m, element), eps);
}

AmplePoint approach_beta(const Matroid& m, int element, const Rational& eps) {
  return approach(m, beta_function(m.ground_size(), element), beta_vector(m, element), eps);
}

ProjectedAmple project_ample(const Matroid& m, const AmplePoint& u, int flat, ProjectionSide side) {
  if (flat < 0 || flat >= m.flat_count() || !m.is_proper(flat)) {
    throw Error(ErrorCode::kImproperFlat, "flat " + std::to_string(flat) + " is not proper");
  }
  const SetFunction& c = u.provenance;
  const Subset f = m.flat(flat);
  const int i = members(f & ~m.flat(m.bottom())).front();
  const int j = members(m.ground() & ~f).front();
  SetFunction corrected = c - (raw_indicator(c.ground_size(), i) - raw_indicator(c.ground_size(), j)) * c(f);

  IntervalMinor minor = side == ProjectionSide::kUp ? restriction(m, flat) : contraction(m, flat);
  const int k = minor.matroid.ground_size();
  SetFunction restricted(k);
  const Subset base = side == ProjectionSide::kUp ? m.flat(m.bottom()) : f;
  for (Subset s = 0; s <= full_set(k); ++s) {
    Subset parent = base;
    for (int e : members(s)) parent |= Subset{1} << minor.elements[e];
    restricted(s) = corrected(parent);
  }
  if (!is_strictly_submodular(restricted)) {
    throw Error(ErrorCode::kCertificationFailed, "projected set function is not strictly submodular");
  }
  ProjectedAmple out{induced_class(minor.matroid, restricted), std::move(restricted)};
  const LinearMap pi = side == ProjectionSide::kUp ? projection_up(m, flat) : projection_down(m, flat);
  if (pi.apply(induced_class(m, corrected)) != out.coords) {
    throw Error(ErrorCode::kCertificationFailed, "projected coordinates disagree with the linear projection");
  }
  return out;
}

}  // namespace mlc

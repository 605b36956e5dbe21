#include "mlc/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "mlc/error.hpp"

namespace mlc {

UniPoly::UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& root) { return UniPoly({-root, Rational(1)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UniPoly::evaluate(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly out = *this;
  Rational inv = 1 / leading();
  out *= inv;
  return out;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  Integer l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& c : coeffs_) {
    Integer n = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  UniPoly out = *this;
  out *= Rational(l) / Rational(g);
  return out;
}

UniPoly UniPoly::reflect() const {
  UniPoly out = *this;
  for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) out.coeffs_[k] = -out.coeffs_[k];
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly UniPoly::pow(int e) const {
  UniPoly out = constant(1);
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mlc::to_string(mag);
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kNotDivisible, "division by the zero polynomial");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> quo(a.degree() - db + 1);
  const Rational inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] * inv;
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coefficients()[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.primitive();
  }
  return x.monic();
}

int sign_variations(const std::vector<Rational>& seq) {
  int changes = 0;
  int last = 0;
  for (const auto& v : seq) {
    int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p.primitive());
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.primitive());
  while (true) {
    UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern of -r.
    chain.push_back((-r).primitive());
  }
  return chain;
}

namespace {

int variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
  std::vector<Rational> values;
  values.reserve(chain.size());
  for (const auto& q : chain) values.push_back(q.evaluate(x));
  return sign_variations(values);
}

int variations_at_infinity(const std::vector<UniPoly>& chain, bool positive) {
  std::vector<Rational> values;
  for (const auto& q : chain) {
    int s = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    values.emplace_back(s);
  }
  return sign_variations(values);
}

}  // namespace

int count_roots(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi) {
  if (chain.empty()) return 0;
  return variations_at(chain, lo) - variations_at(chain, hi);
}

int count_distinct_real_roots(const UniPoly& p) {
  if (p.degree() < 1) return 0;
  auto chain = sturm_chain(p);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.degree() < 1) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<UniPoly> square_free_decomposition(const UniPoly& p) {
  std::vector<UniPoly> factors;
  if (p.degree() < 1) return factors;
  UniPoly a = p.monic();
  UniPoly b = gcd(a, a.derivative());
  UniPoly c = divmod(a, b).first;
  UniPoly d = divmod(a.derivative(), b).first - c.derivative();
  while (c.degree() >= 1) {
    UniPoly f = gcd(c, d);
    factors.push_back(f);
    c = divmod(c, f).first;
    d = divmod(d, f).first - c.derivative();
  }
  while (!factors.empty() && factors.back().degree() < 1) factors.pop_back();
  return factors;
}

int count_real_roots_with_multiplicity(const UniPoly& p) {
  auto factors = square_free_decomposition(p);
  int total = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    total += static_cast<int>(k + 1) * count_distinct_real_roots(factors[k]);
  }
  return total;
}

Rational root_bound(const UniPoly& p) {
  // Cauchy: 1 + max |a_k / a_n|.
  Rational best = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coefficient(k) / p.leading());
    if (r > best) best = r;
  }
  return best + 1;
}

RootBracket largest_real_root(const UniPoly& p, const Rational& tol) {
  UniPoly s = square_free_part(p);
  auto chain = sturm_chain(s);
  Rational hi = root_bound(s);
  Rational lo = -hi;
  if (count_roots(chain, lo, hi) == 0) throw Error(ErrorCode::kInvalidParameters, "polynomial has no real root");
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (count_roots(chain, mid, hi) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

int largest_root_multiplicity(const UniPoly& p) {
  auto factors = square_free_decomposition(p);
  // Largest root overall, then the factor that owns it.
  UniPoly s = square_free_part(p);
  auto chain = sturm_chain(s);
  Rational hi = root_bound(s);
  Rational lo = -hi;
  if (count_roots(chain, lo, hi) == 0) throw Error(ErrorCode::kInvalidParameters, "polynomial has no real root");
  // Shrink until exactly one distinct root of s lies in (lo, hi].
  while (count_roots(chain, lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (count_roots(chain, mid, hi) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  for (std::size_t k = 0; k < factors.size(); ++k) {
    auto fc = sturm_chain(factors[k]);
    if (count_roots(fc, lo, hi) > 0) return static_cast<int>(k + 1);
  }
  throw Error(ErrorCode::kInternalMismatch, "largest root not found in square-free factors");
}

}  // namespace mlc

#include "mlc/charpoly.hpp"

#include <sstream>

#include "mlc/error.hpp"

namespace mlc {

Rational IncidenceElement::at(int f, int g) const {
  auto it = coeffs.find({f, g});
  return it == coeffs.end() ? Rational(0) : it->second;
}

namespace {

void check_keys(const Matroid& m, const IncidenceElement& a) {
  for (const auto& [key, c] : a.coeffs) {
    auto [f, g] = key;
    if (f < 0 || g < 0 || f >= m.flat_count() || g >= m.flat_count() || !is_subset(m.flat(f), m.flat(g))) {
      throw Error(ErrorCode::kInvalidParameters,
                  "[" + std::to_string(f) + "," + std::to_string(g) + "] is not an interval");
    }
  }
}

// Flats containing each flat, itself included, in increasing id order.
std::vector<std::vector<int>> up_sets(const Matroid& m) {
  std::vector<std::vector<int>> up(m.flat_count());
  for (int f = 0; f < m.flat_count(); ++f) {
    for (int g = f; g < m.flat_count(); ++g) {
      if (is_subset(m.flat(f), m.flat(g))) up[f].push_back(g);
    }
  }
  return up;
}

}  // namespace

IncidenceElement incidence_delta(const Matroid& m) {
  IncidenceElement d;
  for (int f = 0; f < m.flat_count(); ++f) d.coeffs[{f, f}] = 1;
  return d;
}

IncidenceElement incidence_zeta(const Matroid& m) {
  IncidenceElement z;
  auto up = up_sets(m);
  for (int f = 0; f < m.flat_count(); ++f) {
    for (int g : up[f]) z.coeffs[{f, g}] = 1;
  }
  return z;
}

IncidenceElement incidence_multiply(const Matroid& m, const IncidenceElement& a, const IncidenceElement& b) {
  check_keys(m, a);
  check_keys(m, b);
  IncidenceElement out;
  for (const auto& [ka, ca] : a.coeffs) {
    auto lo = b.coeffs.lower_bound({ka.second, 0});
    for (auto it = lo; it != b.coeffs.end() && it->first.first == ka.second; ++it) {
      Rational v = ca * it->second;
      if (v != 0) out.coeffs[{ka.first, it->first.second}] += v;
    }
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IncidenceElement incidence_invert(const Matroid& m, const IncidenceElement& a) {
  check_keys(m, a);
  const int n = m.flat_count();
  for (int x = 0; x < n; ++x) {
    if (a.at(x, x) == 0) {
      throw Error(ErrorCode::kNotInvertible, "coefficient of [" + std::to_string(x) + "," + std::to_string(x) + "] is zero");
    }
  }
  auto up = up_sets(m);
  // Strict inclusion raises the id, so b_{y,z} for y above x is final when
  // x is processed in decreasing order.
  std::vector<std::vector<Rational>> b(n);
  for (int x = n - 1; x >= 0; --x) {
    b[x].assign(n, 0);
    const Rational inv = 1 / a.at(x, x);
    for (int z : up[x]) {
      Rational acc = (x == z) ? 1 : 0;
      for (int y : up[x]) {
        if (y == x || y > z) continue;
        Rational axy = a.at(x, y);
        if (axy != 0 && b[y][z] != 0) acc -= axy * b[y][z];
      }
      b[x][z] = acc * inv;
    }
  }
  IncidenceElement out;
  for (int x = 0; x < n; ++x) {
    for (int z : up[x]) {
      if (b[x][z] != 0) out.coeffs[{x, z}] = b[x][z];
    }
  }
  return out;
}

MobiusTable::MobiusTable(const Matroid& m) {
  IncidenceElement mu = incidence_invert(m, incidence_zeta(m));
  for (const auto& [key, c] : mu.coeffs) {
    if (!is_integer(c)) throw Error(ErrorCode::kInternalMismatch, "non-integral Mobius value");
    values_[key] = c.get_num();
  }
}

Integer MobiusTable::operator()(int f, int g) const {
  auto it = values_.find({f, g});
  return it == values_.end() ? Integer(0) : it->second;
}

MobiusTable mobius_invariants(const Matroid& m) { return MobiusTable(m); }

UniPoly characteristic_by_recursion(const Matroid& m) {
  if (!m.is_loopless()) return {};
  const int n = m.flat_count();
  auto up = up_sets(m);
  // chi of the contraction at each flat, from the top down.
  std::vector<UniPoly> chi(n);
  for (int f = n - 1; f >= 0; --f) {
    UniPoly p = UniPoly::monomial(1, m.rank() - m.rank(f));
    for (int g : up[f]) {
      if (g != f) p -= chi[g];
    }
    chi[f] = std::move(p);
  }
  return chi[m.bottom()];
}

UniPoly characteristic_by_mobius(const Matroid& m) {
  if (!m.is_loopless()) return {};
  MobiusTable mu(m);
  UniPoly p;
  for (int f = 0; f < m.flat_count(); ++f) {
    p += UniPoly::monomial(Rational(mu(m.bottom(), f)), m.rank() - m.rank(f));
  }
  return p;
}

std::vector<Integer> signed_magnitudes(const UniPoly& p) {
  std::vector<Integer> mu;
  for (int i = 0; i <= p.degree(); ++i) {
    Rational c = p.coefficient(p.degree() - i);
    if (!is_integer(c)) throw Error(ErrorCode::kInternalMismatch, "non-integer coefficient " + to_string(c));
    mu.push_back(i % 2 == 0 ? c.get_num() : Integer(-c.get_num()));
  }
  return mu;
}

CharPoly characteristic_polynomial(const Matroid& m) {
  UniPoly a = characteristic_by_recursion(m);
  UniPoly b = characteristic_by_mobius(m);
  if (!(a == b)) {
    throw Error(ErrorCode::kInternalMismatch, "recursion gives " + a.to_string() + ", Mobius formula gives " + b.to_string());
  }
  CharPoly out{a, {}};
  if (a.is_zero()) {
    out.mu.assign(m.rank() + 1, 0);
  } else {
    out.mu = signed_magnitudes(a);
  }
  return out;
}

ReducedCharPoly reduced_characteristic_polynomial(const Matroid& m) {
  if (m.rank() == 0) throw Error(ErrorCode::kNotDivisible, "rank 0 matroid has no reduced polynomial");
  if (!m.is_loopless()) throw Error(ErrorCode::kNotDivisible, "matroid has loops");
  CharPoly chi = characteristic_polynomial(m);
  auto [q, r] = divmod(chi.poly, UniPoly::linear_root(1));
  if (!r.is_zero()) throw Error(ErrorCode::kNotDivisible, "remainder " + r.to_string());
  return {q, signed_magnitudes(q)};
}

bool chromatic_relation_check(const Graph& g) {
  UniPoly p = chromatic_polynomial(g);
  Matroid m = graphic_matroid(g);
  UniPoly rhs = UniPoly::monomial(1, component_count(g)) * characteristic_polynomial(m).poly;
  return p == rhs;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Arrangement parse_arrangement(std::string_view text) {
  std::istringstream in{std::string(text)};
  long p = 0;
  long dim = 0;
  long count = 0;
  if (!(in >> p >> dim >> count) || p < 2 || dim < 0 || count < 0) {
    throw Error(ErrorCode::kParseError, "expected header 'p r+1 n+1'");
  }
  Arrangement a;
  a.p = static_cast<int>(p);
  a.dimension = static_cast<int>(dim);
  for (long j = 0; j < count; ++j) {
    std::vector<int> row;
    for (long k = 0; k < dim; ++k) {
      long v = 0;
      if (!(in >> v)) throw Error(ErrorCode::kParseError, "row " + std::to_string(j) + " is short");
      row.push_back(static_cast<int>(((v % p) + p) % p));
    }
    a.rows.push_back(std::move(row));
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::kParseError, "trailing data after arrangement");
  return a;
}

namespace {

int rank_mod_p(std::vector<std::vector<int>> rows, int p) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    // Inverse by Fermat.
    long inv = 1;
    long base = rows[rank][c];
    for (int e = p - 2; e > 0; e >>= 1) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
    }
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      long f = rows[r][c] * inv % p;
      for (int k = 0; k < cols; ++k) rows[r][k] = static_cast<int>(((rows[r][k] - f * rows[rank][k]) % p + p) % p);
    }
    ++rank;
  }
  return rank;
}

void check_arrangement(const Arrangement& a) {
  if (!is_prime(a.p)) throw Error(ErrorCode::kNotPrime, std::to_string(a.p) + " is not prime");
  if (a.rows.size() > 20) throw Error(ErrorCode::kInvalidParameters, "at most 20 linear forms");
  for (std::size_t j = 0; j < a.rows.size(); ++j) {
    if (static_cast<int>(a.rows[j].size()) != a.dimension) {
      throw Error(ErrorCode::kInvalidParameters, "row " + std::to_string(j) + " has the wrong length");
    }
    bool nonzero = false;
    for (int v : a.rows[j]) {
      if (v < 0 || v >= a.p) throw Error(ErrorCode::kInvalidParameters, "entry outside [0, p)");
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) throw Error(ErrorCode::kInvalidParameters, "row " + std::to_string(j) + " is the zero form");
  }
}

}  // namespace

Matroid arrangement_matroid(const Arrangement& a) {
  check_arrangement(a);
  const int n = static_cast<int>(a.rows.size());
  const Subset limit = Subset{1} << n;
  std::vector<int> rank(limit);
  for (Subset s = 0; s < limit; ++s) {
    std::vector<std::vector<int>> rows;
    for (int j : members(s)) rows.push_back(a.rows[j]);
    rank[s] = rank_mod_p(std::move(rows), a.p);
  }
  std::vector<Subset> flats;
  for (Subset s = 0; s < limit; ++s) {
    bool closed = true;
    for (int j = 0; j < n && closed; ++j) {
      if (!contains(s, j) && rank[s | (Subset{1} << j)] == rank[s]) closed = false;
    }
    if (closed) flats.push_back(s);
  }
  return validate_flats(std::move(flats), n);
}

FiniteFieldCount finite_field_count(const Arrangement& a, int b, std::uint64_t budget) {
  if (b < 1) throw Error(ErrorCode::kInvalidParameters, "extension degree must be positive");
  Matroid m = arrangement_matroid(a);
  const int digits = a.dimension * b;
  std::uint64_t total = 1;
  for (int k = 0; k < digits; ++k) {
    if (total > budget / static_cast<std::uint64_t>(a.p)) {
      throw Error(ErrorCode::kBudgetExceeded, "p^(b(r+1)) exceeds the point budget");
    }
    total *= static_cast<std::uint64_t>(a.p);
  }
  // A point is `dimension` coordinates in F_p^b; digit k*b + c is component
  // c of coordinate k.  The forms have F_p coefficients, so each component
  // is evaluated separately.
  std::vector<int> x(digits, 0);
  std::uint64_t off = 0;
  for (std::uint64_t step = 0; step < total; ++step) {
    bool avoids = true;
    for (const auto& row : a.rows) {
      bool nonzero = false;
      for (int c = 0; c < b && !nonzero; ++c) {
        long v = 0;
        for (int k = 0; k < a.dimension; ++k) v += static_cast<long>(row[k]) * x[k * b + c];
        nonzero = v % a.p != 0;
      }
      if (!nonzero) {
        avoids = false;
        break;
      }
    }
    if (avoids) ++off;
    for (int k = 0; k < digits; ++k) {
      if (++x[k] < a.p) break;
      x[k] = 0;
    }
  }
  std::vector<std::vector<int>> rows = a.rows;
  const int kappa = a.dimension - rank_mod_p(rows, a.p);
  Integer field = 1;
  mpz_ui_pow_ui(field.get_mpz_t(), a.p, b);
  Integer scale = 1;
  mpz_pow_ui(scale.get_mpz_t(), field.get_mpz_t(), kappa);
  Rational chi = characteristic_polynomial(m).poly.evaluate(Rational(field));
  Rational expected = chi * scale;
  Integer off_count;
  mpz_set_ui(off_count.get_mpz_t(), off);
  return {std::move(m), kappa, off_count, expected.get_num()};
}

std::vector<Rational> to_rationals(const std::vector<Integer>& a) {
  return std::vector<Rational>(a.begin(), a.end());
}

bool is_log_concave(const std::vector<Rational>& a) {
  for (std::size_t j = 1; j + 1 < a.size(); ++j) {
    if (a[j - 1] * a[j + 1] > a[j] * a[j]) return false;
  }
  return true;
}

bool is_ultra_log_concave(const std::vector<Rational>& a) {
  if (a.empty()) return true;
  const unsigned n = static_cast<unsigned>(a.size() - 1);
  std::vector<Rational> b(a.size());
  for (unsigned k = 0; k <= n; ++k) b[k] = a[k] / Rational(binomial(n, k));
  return is_log_concave(b);
}

bool is_unimodal(const std::vector<Rational>& a) {
  std::size_t j = 0;
  while (j + 1 < a.size() && a[j] <= a[j + 1]) ++j;
  while (j + 1 < a.size() && a[j] >= a[j + 1]) ++j;
  return j + 1 >= a.size();
}

bool is_real_rooted(const std::vector<Rational>& a) {
  UniPoly p(a);
  if (p.degree() < 1) return true;
  return count_real_roots_with_multiplicity(p) == p.degree();
}

SequenceShape sequence_checks(const std::vector<Rational>& a) {
  return {is_log_concave(a), is_ultra_log_concave(a), is_unimodal(a), is_real_rooted(a)};
}

}  // namespace mlc

#include "mlc/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "mlc/charpoly.hpp"
#include "mlc/error.hpp"

namespace mlc {

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," + std::to_string(s.zero) + ")";
}

namespace {

void require_symmetric(const SymMatrix& a) {
  if (!a.is_symmetric()) throw Error(ErrorCode::kNotSymmetric, "matrix differs from its transpose");
}

// Positive multiple with integer entries; signatures are unchanged.
std::vector<std::vector<Rational>> integer_rows(const SymMatrix& a) {
  const int n = a.dimension();
  Integer l = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
  }
  std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h[i][j] = a(i, j) * Rational(l);
  }
  return h;
}

UniPoly hessenberg_charpoly(std::vector<std::vector<Rational>> h) {
  const int n = static_cast<int>(h.size());
  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int pivot = -1;
    for (int i = j + 1; i < n; ++i) {
      if (h[i][j] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != j + 1) {
      std::swap(h[pivot], h[j + 1]);
      for (int r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][j + 1]);
    }
    for (int i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      const Rational u = h[i][j] / h[j + 1][j];
      for (int c = 0; c < n; ++c) {
        if (h[j + 1][c] != 0) h[i][c] -= u * h[j + 1][c];
      }
      for (int r = 0; r < n; ++r) {
        if (h[r][i] != 0) h[r][j + 1] += u * h[r][i];
      }
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{m=i+1..k} h_{m,m-1}) p_{i-1}
  std::vector<UniPoly> p(n + 1);
  p[0] = UniPoly::constant(1);
  for (int k = 1; k <= n; ++k) {
    p[k] = UniPoly::linear_root(h[k - 1][k - 1]) * p[k - 1];
    Rational prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod *= h[i][i - 1];
      if (prod == 0) break;
      if (h[i - 1][k - 1] != 0) p[k] -= p[i - 1] * (h[i - 1][k - 1] * prod);
    }
  }
  return p[n];
}

}  // namespace

UniPoly characteristic_polynomial(const SymMatrix& a) {
  std::vector<std::vector<Rational>> h(a.dimension(), std::vector<Rational>(a.dimension()));
  for (int i = 0; i < a.dimension(); ++i) {
    for (int j = 0; j < a.dimension(); ++j) h[i][j] = a(i, j);
  }
  return hessenberg_charpoly(std::move(h));
}

Signature signature(const SymMatrix& a) {
  require_symmetric(a);
  const int n = a.dimension();
  UniPoly p = hessenberg_charpoly(integer_rows(a));
  Signature s;
  while (s.zero < n && p.coefficient(s.zero) == 0) ++s.zero;
  std::vector<Rational> stripped(p.coefficients().begin() + s.zero, p.coefficients().end());
  UniPoly q(stripped);
  s.positive = sign_variations(q.coefficients());
  s.negative = sign_variations(q.reflect().coefficients());
  if (s.positive + s.negative + s.zero != n) {
    throw Error(ErrorCode::kInternalMismatch, "characteristic polynomial is not real-rooted");
  }
  return s;
}

Signature signature_ldlt(const SymMatrix& a) {
  require_symmetric(a);
  std::vector<std::vector<Rational>> w = integer_rows(a);
  std::vector<int> active(a.dimension());
  for (int i = 0; i < a.dimension(); ++i) active[i] = i;
  Signature s;
  while (!active.empty()) {
    int pivot = -1;
    for (int i : active) {
      if (w[i][i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      // Zero diagonal: fold a partner into row/column i to make w_ii = 2 w_ij.
      int pi = -1;
      int pj = -1;
      for (int i : active) {
        for (int j : active) {
          if (i != j && w[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
        if (pi >= 0) break;
      }
      if (pi < 0) {
        s.zero += static_cast<int>(active.size());
        break;
      }
      for (int k : active) w[pi][k] += w[pj][k];
      for (int k : active) w[k][pi] += w[k][pj];
      pivot = pi;
    }
    const Rational d = w[pivot][pivot];
    (d > 0 ? s.positive : s.negative) += 1;
    std::erase(active, pivot);
    for (int r : active) {
      if (w[r][pivot] == 0) continue;
      const Rational f = w[r][pivot] / d;
      for (int c : active) {
        if (w[pivot][c] != 0) w[r][c] -= f * w[pivot][c];
      }
    }
  }
  return s;
}

Rational rayleigh(const SymMatrix& a, const RationalVector& x) {
  const Rational norm = dot(x, x);
  if (norm == 0) throw Error(ErrorCode::kZeroVector, "Rayleigh quotient of the zero vector");
  return a.bilinear(x, x) / norm;
}

bool is_irreducible(const SymMatrix& a) {
  const int n = a.dimension();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j != i && !seen[j] && a(i, j) != 0) {
        seen[j] = true;
        ++reached;
        queue.push_back(j);
      }
    }
  }
  return reached == n;
}

bool is_weakly_nonnegative(const SymMatrix& a) {
  for (int i = 0; i < a.dimension(); ++i) {
    for (int j = 0; j < a.dimension(); ++j) {
      if (i != j && a(i, j) < 0) return false;
    }
  }
  return true;
}

PerronResult perron(const SymMatrix& a, const PerronOptions& options) {
  require_symmetric(a);
  if (!is_weakly_nonnegative(a)) throw Error(ErrorCode::kNotWeaklyNonnegative, "negative off-diagonal entry");
  if (!is_irreducible(a)) throw Error(ErrorCode::kNotIrreducible, "incidence graph is disconnected");
  const int n = a.dimension();
  const std::vector<double> m = a.to_double();
  // Gershgorin shift makes A + sI positive semidefinite, so the top
  // eigenvalue dominates in absolute value.
  double shift = 0;
  for (int i = 0; i < n; ++i) {
    double radius = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i) radius += std::fabs(m[i * n + j]);
    }
    shift = std::max(shift, radius - m[i * n + i]);
  }
  const double norm = std::max(a.norm_inf(), 1e-300);
  auto times = [&](const std::vector<double>& v) {
    std::vector<double> w(n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) w[i] += m[i * n + j] * v[j];
    }
    return w;
  };
  auto normalise = [](std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    s = std::sqrt(s);
    for (double& x : v) x /= s;
  };

  PerronResult out;
  std::vector<double> v(n, 1.0);
  normalise(v);
  bool converged = false;
  for (int it = 1; it <= options.max_iterations; ++it) {
    std::vector<double> av = times(v);
    double lambda = 0;
    for (int i = 0; i < n; ++i) lambda += v[i] * av[i];
    double residual = 0;
    for (int i = 0; i < n; ++i) residual = std::max(residual, std::fabs(av[i] - lambda * v[i]));
    out.iterations = it;
    out.lambda = lambda;
    if (residual <= options.tolerance * norm) {
      converged = true;
      break;
    }
    for (int i = 0; i < n; ++i) av[i] += shift * v[i];
    v = std::move(av);
    normalise(v);
  }
  if (!converged) {
    throw Error(ErrorCode::kNoConvergence, "power iteration did not converge in " + std::to_string(options.max_iterations) + " steps");
  }
  out.vector = v;
  const UniPoly p = characteristic_polynomial(a);
  Rational tol = root_bound(p) * Rational(1, 1000000) / Rational(1000000);
  out.exact = largest_real_root(p, tol);
  out.simple = largest_root_multiplicity(p) == 1;
  return out;
}

bool downdate_check(const SymMatrix& a, const RationalVector& v) {
  if (signature(a).positive > 1) throw Error(ErrorCode::kPreconditionViolated, "matrix has more than one positive eigenvalue");
  return signature(a - outer(v)).positive <= 1;
}

namespace {

bool all_positive(const RationalVector& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v > 0; });
}

MultiPoly derivative_along(const MultiPoly& f, const std::vector<RationalVector>& dirs) {
  MultiPoly g = f;
  for (const auto& d : dirs) g = directional_derivative(g, d);
  return g;
}

}  // namespace

Certificate bootstrap_check(const MultiPoly& f, const RationalVector& x) {
  auto d = f.homogeneous_degree();
  if (!d || *d < 3) throw Error(ErrorCode::kInvalidParameters, "bootstrap needs a homogeneous polynomial of degree >= 3");
  if (static_cast<int>(x.size()) != f.arity()) throw Error(ErrorCode::kArityMismatch, "point length differs from arity");
  if (!all_positive(x)) throw Error(ErrorCode::kNonPositiveRepresentative, "bootstrap point must be positive");
  const int n = f.arity();
  const SymMatrix h = hessian_at(f, x);
  if (!is_weakly_nonnegative(h) || !is_irreducible(h)) {
    if (!(n == 1 && h(0, 0) >= 0)) {
      throw Error(ErrorCode::kHypothesisFailed, "hypothesis 1: Hessian is not weakly nonnegative and irreducible");
    }
  }
  const RationalVector grad = gradient_at(f, x);
  for (int i = 0; i < n; ++i) {
    if (grad[i] <= 0) throw Error(ErrorCode::kHypothesisFailed, "hypothesis 2 fails at index " + std::to_string(i));
  }
  for (int i = 0; i < n; ++i) {
    const Signature si = signature(hessian_at(differentiate(f, i), x));
    if (si.positive != 1) {
      throw Error(ErrorCode::kHypothesisFailed,
                  "hypothesis 3 fails at index " + std::to_string(i) + " with signature " + to_string(si));
    }
  }
  Certificate c;
  c.kind = "bootstrap";
  c.point = x;
  c.hessian = h;
  c.signature = signature(h);
  c.value = evaluate(f, x);
  if (c.signature.positive != 1) {
    throw Error(ErrorCode::kConclusionFailed, "Hessian signature " + to_string(c.signature));
  }
  // B = L^{1/2} H L^{1/2} with L = diag(x_i / d_i f) fixes L^{-1/2} x with
  // eigenvalue d-1; checked in floating point.
  double residual = 0;
  const RationalVector hx = h.multiply(x);
  for (int i = 0; i < n; ++i) {
    const double lam = Rational(x[i] / grad[i]).get_d();
    const double lhs = std::sqrt(lam) * hx[i].get_d();
    const double rhs = (*d - 1) * x[i].get_d() / std::sqrt(lam);
    residual = std::max(residual, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)));
  }
  if (residual > 1e-9) throw Error(ErrorCode::kConclusionFailed, "eigenvector identity residual " + std::to_string(residual));
  SymMatrix lam(n);
  for (int i = 0; i < n; ++i) lam(i, i) = x[i] / grad[i];
  const SymMatrix psd = product(h, product(lam, h)) - h * Rational(*d - 1);
  const Signature sp = signature(psd);
  if (sp.negative != 0) throw Error(ErrorCode::kConclusionFailed, "H L H - (d-1) H has signature " + to_string(sp));
  c.pass = true;
  return c;
}

Certificate certify_lorentzian(const Matroid& m, const MultiPoly& volume, const AmplePoint& u,
                               const std::vector<AmplePoint>& dirs) {
  const int k = static_cast<int>(dirs.size());
  if (m.rank() < 3 || k > m.rank() - 3) {
    throw Error(ErrorCode::kRankTooSmall, "need rank >= 3 and at most rank-3 directions");
  }
  if (!u.positive || !all_positive(u.coords)) throw Error(ErrorCode::kNonPositiveRepresentative, "point is not positive");
  std::vector<RationalVector> d;
  for (const auto& p : dirs) {
    if (!p.positive || !all_positive(p.coords)) throw Error(ErrorCode::kNonPositiveRepresentative, "direction is not positive");
    d.push_back(p.coords);
  }
  const MultiPoly g = derivative_along(volume, d);
  Certificate c;
  c.kind = "lorentzian";
  c.matroid_hash = matroid_hash(m);
  c.point = u.coords;
  c.directions = d;
  c.hessian = hessian_at(g, u.coords);
  c.signature = signature(c.hessian);
  c.value = evaluate(g, u.coords);
  c.pass = c.signature.positive == 1;
  if (!c.pass) c.witness = "Hessian signature " + to_string(c.signature);
  return c;
}

Certificate certify_lorentzian(const Matroid& m, const AmplePoint& u, const std::vector<AmplePoint>& dirs) {
  const int k = static_cast<int>(dirs.size());
  if (m.rank() < 3 || k > m.rank() - 3) {
    throw Error(ErrorCode::kRankTooSmall, "need rank >= 3 and at most rank-3 directions");
  }
  return certify_lorentzian(m, volume_polynomial(m), u, dirs);
}

RationalVector sample_chain_point(const Matroid& m, const std::vector<int>& chain, std::uint64_t seed) {
  validate_chain(m, chain);
  std::vector<int> ends{m.bottom()};
  ends.insert(ends.end(), chain.begin(), chain.end());
  ends.push_back(m.top());
  RationalVector out;
  for (std::size_t j = 1; j < ends.size(); ++j) {
    IntervalMinor block = interval_minor(m, ends[j - 1], ends[j]);
    AmplePoint p = sample_ample(block.matroid, seed * 1000003ULL + j);
    out.insert(out.end(), p.coords.begin(), p.coords.end());
  }
  return out;
}

Certificate certify_chain(const Matroid& m, const std::vector<int>& chain, const RationalVector& u,
                          const std::vector<RationalVector>& dirs) {
  const ChainProduct cp = chain_product(m, chain);
  const int degree = m.rank() - static_cast<int>(chain.size()) - 1;
  const int k = static_cast<int>(dirs.size());
  if (degree < 2 || k > degree - 2) throw Error(ErrorCode::kRankTooSmall, "need at most deg(f) - 2 directions");
  if (static_cast<int>(u.size()) != cp.f.arity()) throw Error(ErrorCode::kArityMismatch, "point length differs from arity");
  if (!all_positive(u)) throw Error(ErrorCode::kNonPositiveRepresentative, "point is not positive");
  for (const auto& d : dirs) {
    if (static_cast<int>(d.size()) != cp.f.arity()) throw Error(ErrorCode::kArityMismatch, "direction length differs");
    if (!all_positive(d)) throw Error(ErrorCode::kNonPositiveRepresentative, "direction is not positive");
  }
  const MultiPoly g = derivative_along(cp.f, dirs);
  Certificate c;
  c.kind = "chain";
  c.matroid_hash = matroid_hash(m);
  c.chain = chain;
  c.point = u;
  c.directions = dirs;
  c.value = evaluate(g, u);
  c.hessian = hessian_at(g, u);
  c.signature = signature(c.hessian);

  // Expected incidence graph: join of the block flat graphs.
  std::vector<Graph> parts;
  for (const auto& b : cp.blocks) parts.push_back(flat_graph(b.matroid));
  const Graph expected = join(parts);
  std::vector<std::vector<bool>> adjacent(cp.f.arity(), std::vector<bool>(cp.f.arity(), false));
  for (const auto& e : expected.edges()) adjacent[e.tail][e.head] = adjacent[e.head][e.tail] = true;
  for (int a = 0; a < cp.f.arity() && c.graph_matches; ++a) {
    for (int b = 0; b < cp.f.arity(); ++b) {
      if (a != b && (c.hessian(a, b) != 0) != adjacent[a][b]) {
        c.graph_matches = false;
        c.witness = "incidence differs at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        break;
      }
    }
  }
  c.pass = c.value > 0 && c.signature.positive == 1 && c.graph_matches;
  if (!c.pass && c.witness.empty()) {
    c.witness = c.value > 0 ? "Hessian signature " + to_string(c.signature) : "derivative value " + to_string(c.value);
  }
  return c;
}

HodgeResult hodge_2x2(const Matroid& m, const MultiPoly& volume, const ClassVector& x, const ClassVector& y,
                      const std::vector<AmplePoint>& dirs) {
  if (m.rank() < 3 || static_cast<int>(dirs.size()) != m.rank() - 3) {
    throw Error(ErrorCode::kRankTooSmall, "need exactly rank-3 directions");
  }
  std::vector<RationalVector> d;
  for (const auto& p : dirs) d.push_back(p.coords);
  const MultiPoly g = derivative_along(volume, d);
  const ClassVector zero = zero_class(m);
  const Rational xx = evaluate(directional_derivative(directional_derivative(g, x), x), zero);
  const Rational xy = evaluate(directional_derivative(directional_derivative(g, x), y), zero);
  const Rational yy = evaluate(directional_derivative(directional_derivative(g, y), y), zero);
  if (xx <= 0) throw Error(ErrorCode::kPreconditionViolated, "D_x^2 g = " + to_string(xx) + " is not positive");
  HodgeResult out;
  out.matrix = SymMatrix(2);
  out.matrix(0, 0) = xx;
  out.matrix.set(0, 1, xy);
  out.matrix(1, 1) = yy;
  out.determinant = xx * yy - xy * xy;
  out.holds = out.determinant <= 0;
  return out;
}

HodgeResult hodge_2x2(const Matroid& m, const ClassVector& x, const ClassVector& y, const std::vector<AmplePoint>& dirs) {
  if (m.rank() < 3 || static_cast<int>(dirs.size()) != m.rank() - 3) {
    throw Error(ErrorCode::kRankTooSmall, "need exactly rank-3 directions");
  }
  return hodge_2x2(m, volume_polynomial(m), x, y, dirs);
}

RhwReport verify_rhw(const Matroid& m) {
  if (!m.is_loopless()) throw Error(ErrorCode::kLoopyMatroid, "matroid has loops");
  RhwReport r;
  const CharPoly chi = characteristic_polynomial(m);
  r.mu = chi.mu;
  r.mu_log_concave = is_log_concave(to_rationals(r.mu));
  r.mixed_matches = true;
  r.reduced_log_concave = true;
  if (m.rank() >= 1) {
    const ReducedCharPoly red = reduced_characteristic_polynomial(m);
    r.mu_reduced = red.mu;
    r.reduced_log_concave = is_log_concave(to_rationals(r.mu_reduced));
    const MultiPoly v = volume_polynomial(m);
    const int e = default_element(m);
    for (int k = 0; k < m.rank(); ++k) r.mixed.push_back(mixed_degree(m, v, k, e));
    r.mixed_matches = r.mixed == to_rationals(r.mu_reduced);
  }
  const ReducedCharPoly sum = reduced_characteristic_polynomial(direct_sum(m, uniform(1, 1)));
  r.sum_matches = sum.poly == chi.poly;
  r.pass = r.mu_log_concave && r.reduced_log_concave && r.mixed_matches && r.sum_matches;
  return r;
}

}  // namespace mlc

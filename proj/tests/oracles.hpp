#pragma once

// Brute-force reference computations.  None of these call into the code they
// are used to check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "mlc/graph.hpp"
#include "mlc/matroid.hpp"
#include "mlc/multipoly.hpp"
#include "mlc/rational.hpp"
#include "mlc/symmatrix.hpp"
#include "mlc/unipoly.hpp"

namespace oracle {

using mlc::Integer;
using mlc::Rational;
using mlc::RationalVector;
using mlc::Subset;

inline int rank_of_columns(const std::vector<RationalVector>& cols) {
  if (cols.empty()) return 0;
  std::vector<RationalVector> a = cols;
  const int rows = static_cast<int>(a[0].size());
  int rank = 0;
  for (int r = 0; r < rows && rank < static_cast<int>(a.size()); ++r) {
    int piv = -1;
    for (int c = rank; c < static_cast<int>(a.size()); ++c) {
      if (a[c][r] != 0) {
        piv = c;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int c = rank + 1; c < static_cast<int>(a.size()); ++c) {
      if (a[c][r] == 0) continue;
      const Rational f = a[c][r] / a[rank][r];
      for (int k = 0; k < rows; ++k) a[c][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Flats of the vector matroid of `cols`: S is closed when adding any outside
// column raises the rank.
inline std::vector<Subset> vector_flats(const std::vector<RationalVector>& cols) {
  const int n = static_cast<int>(cols.size());
  auto rank = [&](Subset s) {
    std::vector<RationalVector> pick;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1U) pick.push_back(cols[i]);
    return rank_of_columns(pick);
  };
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    const int r = rank(s);
    bool closed = true;
    for (int e = 0; e < n && closed; ++e)
      if (!((s >> e) & 1U) && rank(s | (Subset{1} << e)) == r) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

// U_{r,n} on the moment curve: any r columns are independent.
inline std::vector<RationalVector> moment_columns(int r, int n) {
  std::vector<RationalVector> cols;
  for (int i = 0; i < n; ++i) {
    RationalVector c;
    Rational x = 1;
    for (int k = 0; k < r; ++k) {
      c.push_back(x);
      x *= i + 1;
    }
    cols.push_back(c);
  }
  return cols;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// S is a graph flat iff no edge outside S joins two vertices connected by S.
inline std::vector<Subset> graph_flats(const mlc::Graph& g) {
  const int m = g.edge_count();
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << m); ++s) {
    Dsu d(g.vertex_count());
    for (int e = 0; e < m; ++e)
      if ((s >> e) & 1U) d.unite(g.edge(e).tail, g.edge(e).head);
    bool closed = true;
    for (int e = 0; e < m && closed; ++e)
      if (!((s >> e) & 1U) && d.find(g.edge(e).tail) == d.find(g.edge(e).head)) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

inline int components(const mlc::Graph& g) {
  Dsu d(g.vertex_count());
  for (const auto& e : g.edges()) d.unite(e.tail, e.head);
  int c = 0;
  for (int v = 0; v < g.vertex_count(); ++v) c += d.find(v) == v;
  return c;
}

// Proper colourings by plain backtracking.
inline long long colorings(const mlc::Graph& g, int q) {
  std::vector<int> col(g.vertex_count(), -1);
  std::function<long long(int)> go = [&](int v) -> long long {
    if (v == g.vertex_count()) return 1;
    long long total = 0;
    for (int c = 0; c < q; ++c) {
      bool ok = true;
      for (const auto& e : g.edges()) {
        const int other = e.tail == v ? e.head : (e.head == v ? e.tail : -1);
        if (other < 0) continue;
        if (other == v || (other < v && col[other] == c)) ok = false;
      }
      if (!ok) continue;
      col[v] = c;
      total += go(v + 1);
      col[v] = -1;
    }
    return total;
  };
  return go(0);
}

// Exact Lagrange interpolation through (xs[i], ys[i]).
inline mlc::UniPoly lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  mlc::UniPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mlc::UniPoly basis = mlc::UniPoly::constant(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= mlc::UniPoly::linear_root(xs[j]);
      basis *= Rational(1) / (xs[i] - xs[j]);
    }
    out += basis;
  }
  return out;
}

// Length of the longest strictly increasing chain of flats from the bottom
// to each flat, using inclusion only.
inline std::vector<int> longest_chain_ranks(const mlc::Matroid& m) {
  std::vector<int> r(m.flat_count(), 0);
  for (int b = 0; b < m.flat_count(); ++b)
    for (int a = 0; a < b; ++a)
      if (m.flat(a) != m.flat(b) && mlc::is_subset(m.flat(a), m.flat(b))) r[b] = std::max(r[b], r[a] + 1);
  return r;
}

// Interior flats of every maximal chain, by inclusion and longest-chain rank.
inline std::vector<std::vector<int>> maximal_chains(const mlc::Matroid& m) {
  const auto r = longest_chain_ranks(m);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto walk = [&](auto&& self, int at) -> void {
    if (at == m.top()) {
      out.push_back(std::vector<int>(cur.begin(), cur.end() - 1));
      return;
    }
    for (int b = 0; b < m.flat_count(); ++b)
      if (r[b] == r[at] + 1 && mlc::is_subset(m.flat(at), m.flat(b))) {
        cur.push_back(b);
        self(self, b);
        cur.pop_back();
      }
  };
  if (m.top() != m.bottom()) walk(walk, m.bottom());
  return out;
}

inline int rank_of_set(const mlc::Matroid& m, const std::vector<int>& ranks, Subset s) {
  int best = -1;
  int size = 65;
  for (int id = 0; id < m.flat_count(); ++id)
    if (mlc::is_subset(s, m.flat(id)) && mlc::cardinality(m.flat(id)) < size) {
      size = mlc::cardinality(m.flat(id));
      best = id;
    }
  return ranks[best];
}

// Whitney's subset expansion: sum_S (-1)^|S| q^{r(E) - r(S)}.
inline mlc::UniPoly whitney_characteristic(const mlc::Matroid& m) {
  const auto ranks = longest_chain_ranks(m);
  const int n = m.ground_size();
  const int top = ranks[m.top()];
  std::vector<Rational> c(top + 1, Rational(0));
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    const int k = top - rank_of_set(m, ranks, s);
    c[k] += (mlc::cardinality(s) % 2) ? -1 : 1;
  }
  return mlc::UniPoly(c);
}

// Independent k-subsets: rank(S) = |S|.
inline std::vector<Integer> independent_counts(const mlc::Matroid& m) {
  const auto ranks = longest_chain_ranks(m);
  std::vector<Integer> f(ranks[m.top()] + 1, 0);
  for (Subset s = 0; s < (Subset{1} << m.ground_size()); ++s)
    if (rank_of_set(m, ranks, s) == mlc::cardinality(s)) f[mlc::cardinality(s)] += 1;
  return f;
}

struct AxiomReport {
  bool f1 = false;
  bool f2 = false;
  bool f3 = false;
};

// E present; closed under intersection; covers of each F != E partition E \ F.
inline AxiomReport axioms(const std::vector<Subset>& flats, int n) {
  AxiomReport r;
  const Subset e = mlc::full_set(n);
  r.f1 = std::find(flats.begin(), flats.end(), e) != flats.end();
  r.f2 = true;
  for (Subset a : flats)
    for (Subset b : flats)
      if (std::find(flats.begin(), flats.end(), a & b) == flats.end()) r.f2 = false;
  r.f3 = true;
  for (Subset f : flats) {
    if (f == e) continue;
    std::vector<Subset> covers;
    for (Subset g : flats) {
      if (g == f || !mlc::is_subset(f, g)) continue;
      bool minimal = true;
      for (Subset h : flats)
        if (h != f && h != g && mlc::is_subset(f, h) && mlc::is_subset(h, g)) minimal = false;
      if (minimal) covers.push_back(g);
    }
    for (int x = 0; x < n; ++x) {
      if ((f >> x) & 1U) continue;
      int hits = 0;
      for (Subset g : covers) hits += (g >> x) & 1U;
      if (hits != 1) r.f3 = false;
    }
  }
  return r;
}

// Central differences of the double evaluation.
inline std::vector<double> numeric_gradient(const mlc::MultiPoly& f, std::vector<double> x, double h = 1e-4) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double keep = x[i];
    x[i] = keep + h;
    const double up = mlc::evaluate(f, x);
    x[i] = keep - h;
    const double down = mlc::evaluate(f, x);
    x[i] = keep;
    g[i] = (up - down) / (2 * h);
  }
  return g;
}

inline std::vector<double> numeric_hessian(const mlc::MultiPoly& f, std::vector<double> x, double h = 1e-3) {
  const std::size_t n = x.size();
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0;
      for (int a : {1, -1})
        for (int b : {1, -1}) {
          std::vector<double> y = x;
          y[i] += a * h;
          y[j] += b * h;
          s += a * b * mlc::evaluate(f, y);
        }
      out[i * n + j] = s / (4 * h * h);
    }
  return out;
}

// Cyclic Jacobi eigenvalues of a symmetric double matrix.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    if (off < 1e-22) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p * n + q]) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2 * a[p * n + q]);
        const double t = (theta >= 0 ? 1 : -1) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double kp = a[k * n + p];
          const double kq = a[k * n + q];
          a[k * n + p] = c * kp - s * kq;
          a[k * n + q] = s * kp + c * kq;
        }
        for (int k = 0; k < n; ++k) {
          const double pk = a[p * n + k];
          const double qk = a[q * n + k];
          a[p * n + k] = c * pk - s * qk;
          a[q * n + k] = s * pk + c * qk;
        }
      }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a[i * n + i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline Rational small_rational(std::mt19937_64& rng, int range = 5, int den = 3) {
  const long num = static_cast<long>(rng() % (2 * range + 1)) - range;
  const long d = 1 + static_cast<long>(rng() % den);
  Rational r(num, d);
  r.canonicalize();
  return r;
}

inline mlc::SymMatrix random_symmetric(std::mt19937_64& rng, int n, int range = 5, int den = 3) {
  mlc::SymMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational v = small_rational(rng, range, den);
      v.canonicalize();
      a.set(i, j, v);
    }
  return a;
}

// Lower unitriangular times upper triangular with nonzero diagonal.
inline std::vector<RationalVector> random_invertible(std::mt19937_64& rng, int n) {
  std::vector<RationalVector> l(n, RationalVector(n)), u(n, RationalVector(n)), p(n, RationalVector(n));
  for (int i = 0; i < n; ++i) {
    l[i][i] = 1;
    for (int j = 0; j < i; ++j) l[i][j] = small_rational(rng, 3, 2);
    u[i][i] = Rational(1 + static_cast<long>(rng() % 4)) * ((rng() & 1) ? 1 : -1);
    for (int j = i + 1; j < n; ++j) u[i][j] = small_rational(rng, 3, 2);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) p[i][j] += l[i][k] * u[k][j];
  for (auto& row : p)
    for (auto& x : row) x.canonicalize();
  return p;
}

}  // namespace oracle

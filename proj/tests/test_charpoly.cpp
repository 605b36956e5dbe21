#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "mlc/charpoly.hpp"
#include "mlc/error.hpp"
#include "oracles.hpp"

using namespace mlc;

TEST_CASE("incidence algebra") {
  const Matroid u11 = uniform(1, 1);
  const IncidenceElement zeta = incidence_zeta(u11);
  const IncidenceElement delta = incidence_delta(u11);
  CHECK(incidence_multiply(u11, delta, zeta) == zeta);
  const IncidenceElement inv = incidence_invert(u11, zeta);
  CHECK(inv.at(0, 0) == 1);
  CHECK(inv.at(1, 1) == 1);
  CHECK(inv.at(0, 1) == -1);

  const Matroid u34 = uniform(3, 4);
  const IncidenceElement z = incidence_zeta(u34);
  CHECK(incidence_multiply(u34, incidence_invert(u34, z), z) == incidence_delta(u34));
  CHECK(incidence_multiply(u34, z, incidence_invert(u34, z)) == incidence_delta(u34));

  IncidenceElement singular = z;
  singular.coeffs[{3, 3}] = 0;
  try {
    incidence_invert(u34, singular);
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotInvertible);
  }
  IncidenceElement bad;
  bad.coeffs[{1, 2}] = 1;
  CHECK_THROWS_AS(incidence_multiply(u34, bad, z), Error);
}

TEST_CASE("Mobius invariants") {
  const MobiusTable mu(uniform(1, 1));
  CHECK(mu(0, 1) == -1);
  for (const auto& e : corpus::all()) {
    CAPTURE(e.name);
    const Matroid& m = e.matroid;
    const MobiusTable t(m);
    Integer sum = 0;
    for (int f = 0; f < m.flat_count(); ++f) {
      CHECK(t(f, f) == 1);
      sum += t(m.bottom(), f);
    }
    if (m.rank() >= 1) CHECK(sum == 0);
  }
}

TEST_CASE("characteristic polynomial examples") {
  CHECK(characteristic_polynomial(uniform(1, 1)).poly.to_string() == "q - 1");
  for (int n = 1; n <= 5; ++n) CHECK(characteristic_polynomial(uniform(n, n)).poly == UniPoly::linear_root(1).pow(n));
  CHECK(characteristic_polynomial(uniform(2, 3)).poly.to_string() == "q^2 - 3q + 2");
  CHECK(characteristic_polynomial(uniform(3, 4)).poly.to_string() == "q^3 - 4q^2 + 6q - 3");
  CHECK(characteristic_polynomial(uniform(3, 4)).mu == std::vector<Integer>{1, 4, 6, 3});
  CHECK(characteristic_polynomial(graphic_matroid(Graph(2, {{0, 0}, {0, 1}}))).poly.is_zero());
  CHECK(characteristic_polynomial(uniform(0, 0)).poly == UniPoly::constant(1));
}

TEST_CASE("both constructions agree with the Whitney expansion") {
  for (const auto& e : corpus::all()) {
    CAPTURE(e.name);
    const UniPoly a = characteristic_by_recursion(e.matroid);
    const UniPoly b = characteristic_by_mobius(e.matroid);
    CHECK(a == b);
    CHECK(a == oracle::whitney_characteristic(e.matroid));
    CHECK(a.evaluate(Rational(1)) == 0);
  }
}

TEST_CASE("characteristic polynomial is multiplicative on direct sums") {
  const auto es = corpus::all();
  for (std::size_t i = 0; i < es.size(); i += 4)
    for (std::size_t j = 2; j < es.size(); j += 9) {
      if (es[i].matroid.ground_size() + es[j].matroid.ground_size() > 11) continue;
      CAPTURE(es[i].name);
      CAPTURE(es[j].name);
      CHECK(characteristic_polynomial(direct_sum(es[i].matroid, es[j].matroid)).poly ==
            characteristic_polynomial(es[i].matroid).poly * characteristic_polynomial(es[j].matroid).poly);
    }
}

TEST_CASE("reduced characteristic polynomial") {
  CHECK(reduced_characteristic_polynomial(uniform(2, 3)).poly.to_string() == "q - 2");
  CHECK(reduced_characteristic_polynomial(uniform(2, 3)).mu == std::vector<Integer>{1, 2});
  CHECK(reduced_characteristic_polynomial(uniform(3, 4)).poly.to_string() == "q^2 - 3q + 3");
  CHECK(reduced_characteristic_polynomial(uniform(3, 4)).mu == std::vector<Integer>{1, 3, 3});
  CHECK_THROWS_AS(reduced_characteristic_polynomial(uniform(0, 0)), Error);
  CHECK_THROWS_AS(reduced_characteristic_polynomial(graphic_matroid(Graph(2, {{0, 0}, {0, 1}}))), Error);

  for (const auto& e : corpus::all()) {
    CAPTURE(e.name);
    const Matroid& m = e.matroid;
    const ReducedCharPoly red = reduced_characteristic_polynomial(m);
    CHECK(red.poly * UniPoly::linear_root(1) == characteristic_polynomial(m).poly);
    const MobiusTable t(m);
    for (int i = 0; i < m.rank(); ++i) {
      CHECK(red.mu[i] >= 0);
      Integer s = 0;
      for (int f = 0; f < m.flat_count(); ++f)
        if (m.rank(f) >= i + 1) s += t(m.bottom(), f);
      CHECK(red.mu[i] == ((i + 1) % 2 ? -s : s));
    }
    for (int i = 1; i < m.rank(); ++i) {
      const Matroid tr = truncation(m, i);
      const auto tr_mu = reduced_characteristic_polynomial(tr).mu;
      const int k = m.rank() - 1 - i;
      CHECK(red.mu[k] == tr_mu[k]);
    }
    if (m.rank() >= 2) {
      const UniPoly shifted = red.poly - UniPoly::constant(red.poly.coefficient(0));
      const auto [q_div, rem] = divmod(shifted, UniPoly::monomial(1, 1));
      CHECK(rem.is_zero());
      CHECK(reduced_characteristic_polynomial(truncation(m, 1)).poly == q_div);
    }
  }
}

TEST_CASE("chromatic relation") {
  for (const auto& [name, g] : corpus::graphs()) CHECK(chromatic_relation_check(g));
  CHECK(chromatic_relation_check(Graph(4, {})));
}

TEST_CASE("finite field arrangements") {
  const Arrangement lines = parse_arrangement("5 2 3\n1 0\n0 1\n1 1\n");
  const FiniteFieldCount c = finite_field_count(lines, 1);
  CHECK(c.matroid == uniform(2, 3));
  CHECK(c.kappa == 0);
  CHECK(c.count == 12);
  CHECK(c.expected == 12);
  CHECK(finite_field_count(lines, 2).count == finite_field_count(lines, 2).expected);

  const FiniteFieldCount h = finite_field_count(parse_arrangement("3 2 1\n1 0\n"), 1);
  CHECK(h.count == 6);
  CHECK(h.kappa == 1);

  const Matroid rep = arrangement_matroid(parse_arrangement("3 2 3\n1 0\n2 0\n0 1\n"));
  for (Subset f : rep.flats()) CHECK(contains(f, 0) == contains(f, 1));

  try {
    arrangement_matroid(parse_arrangement("4 2 1\n1 0\n"));
    FAIL("expected NotPrime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotPrime);
  }
  CHECK_THROWS_AS(arrangement_matroid(parse_arrangement("3 2 1\n0 0\n")), Error);
  CHECK_THROWS_AS(parse_arrangement("3 2 2\n1 0\n"), Error);
  try {
    finite_field_count(parse_arrangement("7 3 1\n1 0 0\n"), 2, 1000);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudgetExceeded);
  }
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("finite field counts on random arrangements") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    Arrangement a;
    a.p = trial % 2 ? 3 : 5;
    a.dimension = 2 + static_cast<int>(rng() % 2);
    const int n = 1 + static_cast<int>(rng() % 4);
    while (static_cast<int>(a.rows.size()) < n) {
      std::vector<int> row(a.dimension);
      for (auto& x : row) x = static_cast<int>(rng() % a.p);
      if (std::any_of(row.begin(), row.end(), [](int x) { return x != 0; })) a.rows.push_back(row);
    }
    for (int b : {1, 2}) {
      const FiniteFieldCount c = finite_field_count(a, b);
      CHECK(c.count == c.expected);
    }
  }
}

TEST_CASE("sequence shapes") {
  CHECK(is_log_concave({1, 5, 8, 4}));
  CHECK(is_ultra_log_concave({1, 3, 3, 1}));
  CHECK_FALSE(is_log_concave({1, 1, 2}));
  CHECK(is_unimodal({1, 3, 3, 1}));
  CHECK_FALSE(is_unimodal({2, 1, 2}));
  CHECK(is_real_rooted({2, 3, 1}));
  CHECK_FALSE(is_real_rooted({1, 0, 1}));
  CHECK(is_real_rooted({}));
  CHECK(is_real_rooted({5}));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    // Product of (x + r) with r >= 0 is real-rooted; a random perturbation may not be.
    UniPoly p = UniPoly::constant(1);
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) p *= UniPoly::linear_root(-Rational(static_cast<long>(rng() % 6)));
    std::vector<Rational> a = p.coefficients();
    if (trial % 2) a[rng() % a.size()] += static_cast<long>(rng() % 9);
    const SequenceShape s = sequence_checks(a);
    if (trial % 2 == 0) CHECK(s.real_rooted);
    if (s.real_rooted) CHECK(s.ultra_log_concave);
    if (s.ultra_log_concave) CHECK(s.log_concave);
    // Log-concave without internal zeros implies unimodal.
    std::size_t first = 0, last = a.size();
    while (first < a.size() && a[first] == 0) ++first;
    while (last > first && a[last - 1] == 0) --last;
    const bool gaps = std::any_of(a.begin() + first, a.begin() + last, [](const Rational& x) { return x == 0; });
    if (s.log_concave && !gaps) CHECK(s.unimodal);
  }
}

#include <doctest.h>

#include "corpus.hpp"
#include "mlc/charpoly.hpp"
#include "mlc/error.hpp"
#include "mlc/graph.hpp"
#include "mlc/matroid.hpp"
#include "oracles.hpp"

using namespace mlc;

TEST_CASE("coloring counts") {
  CHECK(coloring_count(square_with_diagonal(), 3) == 6);
  CHECK(coloring_count(complete_graph(3), 3) == 6);
  CHECK(coloring_count(Graph(1, {{0, 0}}), 4) == 0);
  CHECK(coloring_count(Graph(3, {}), 2) == 8);
  CHECK(coloring_count(Graph(2, {{0, 1}}), 1) == 0);
  try {
    coloring_count(complete_graph(6), 9, 1000);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSizeCapExceeded);
  }
}

TEST_CASE("chromatic polynomials") {
  CHECK(chromatic_polynomial(square_with_diagonal()).to_string() == "q^4 - 5q^3 + 8q^2 - 4q");
  CHECK(chromatic_polynomial(complete_graph(4)).to_string() == "q^4 - 6q^3 + 11q^2 - 6q");
  CHECK(chromatic_polynomial(Graph(2, {{0, 0}, {0, 1}})).is_zero());
  CHECK(chromatic_polynomial(Graph(3, {})) == UniPoly::monomial(1, 3));
}

TEST_CASE("chromatic polynomial equals interpolated brute-force counts") {
  auto gs = corpus::graphs();
  gs.push_back({"multi", Graph(3, {{0, 1}, {0, 1}, {1, 2}})});
  gs.push_back({"forest", Graph(5, {{0, 1}, {2, 3}})});
  for (const auto& [name, g] : gs) {
    CAPTURE(name);
    std::vector<Rational> xs, ys;
    for (int q = 0; q <= g.vertex_count(); ++q) {
      xs.push_back(q);
      ys.push_back(Rational(static_cast<long>(oracle::colorings(g, q))));
    }
    const UniPoly p = chromatic_polynomial(g);
    CHECK(p == oracle::lagrange(xs, ys));
    for (int q = 1; q <= 5; ++q) CHECK(p.evaluate(Rational(q)) == Rational(static_cast<unsigned long>(coloring_count(g, q))));
    // Alternating signs.
    for (int k = 0; k <= p.degree(); ++k) {
      const int s = (g.vertex_count() - k) % 2 ? -1 : 1;
      CHECK(s * sgn(p.coefficient(k)) >= 0);
    }
  }
}

TEST_CASE("sum over flats of contracted chromatic polynomials is q^|V|") {
  for (const auto& [name, g] : corpus::graphs()) {
    CAPTURE(name);
    UniPoly sum;
    for (Subset f : graph_flats(g)) sum += chromatic_polynomial(contraction(g, f));
    CHECK(sum == UniPoly::monomial(1, g.vertex_count()));
  }
}

TEST_CASE("restriction and contraction") {
  const Graph k3 = complete_graph(3);
  const Graph c = contraction(k3, 0b001);
  CHECK(c.vertex_count() == 2);
  CHECK(c.edge_count() == 2);
  CHECK(c.edge(0).tail != c.edge(0).head);
  CHECK(restriction(k3, 0b011).edge_count() == 2);
  CHECK(restriction(k3, 0b011).vertex_count() == 3);
  CHECK(contraction(k3, 0) == k3);
}

TEST_CASE("contraction keeps the component count") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = corpus::random_graph(rng());
    const Subset s = rng() & g.all_edges();
    const Graph c = contraction(g, s);
    CHECK(component_count(c) == component_count(g));
    CHECK(c.vertex_count() == component_count(restriction(g, s)));
  }
}

TEST_CASE("a loop edge lies in the bottom flat") {
  const Matroid m = graphic_matroid(Graph(2, {{0, 0}, {0, 1}}));
  CHECK(m.flat(m.bottom()) == 0b01);
  CHECK_FALSE(m.is_loopless());
}

TEST_CASE("graph rank is |V| minus components") {
  for (const auto& [name, g] : corpus::graphs()) {
    const Matroid m = graphic_matroid(g);
    for (int f = 0; f < m.flat_count(); ++f) {
      CHECK(m.rank(f) == g.vertex_count() - component_count(restriction(g, m.flat(f))));
    }
  }
}

TEST_CASE("graph flats match brute-force closure") {
  CHECK(graph_flats(square_with_diagonal()).size() == 13);
  for (const auto& [name, g] : corpus::graphs()) {
    CAPTURE(name);
    auto ours = graph_flats(g);
    auto brute = oracle::graph_flats(g);
    std::sort(ours.begin(), ours.end());
    std::sort(brute.begin(), brute.end());
    CHECK(ours == brute);
    for (Subset s : brute) CHECK(is_graph_flat(g, s));
  }
  const Matroid k3 = graphic_matroid(complete_graph(3));
  CHECK(k3.flat_count() == 5);
  CHECK(is_relabeling(k3, uniform(2, 3), {0, 1, 2}));
  try {
    graph_flats(complete_graph(5), 10);
    FAIL("expected cap error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSizeCapExceeded);
  }
}

TEST_CASE("graphic minors are minors of the graphic matroid") {
  for (const auto& [name, g] : corpus::graphs()) {
    CAPTURE(name);
    const Matroid m = graphic_matroid(g);
    for (int f = 0; f < m.flat_count(); ++f) {
      const IntervalMinor up = restriction(m, f);
      const Matroid gu = graphic_matroid(restriction(g, m.flat(f)));
      CHECK(gu == up.matroid);
      // Contraction keeps E \ F in order, matching the minor's labels.
      const IntervalMinor down = contraction(m, f);
      CHECK(graphic_matroid(contraction(g, m.flat(f))) == down.matroid);
    }
  }
}

TEST_CASE("chromatic relation with the characteristic polynomial") {
  for (const auto& [name, g] : corpus::graphs()) {
    CAPTURE(name);
    CHECK(chromatic_relation_check(g));
    CHECK(component_count(g) == oracle::components(g));
  }
  const UniPoly tri = chromatic_polynomial(complete_graph(3));
  CHECK(tri == UniPoly::monomial(1, 1) * characteristic_polynomial(uniform(2, 3)).poly);
}

TEST_CASE("join") {
  const Graph k1(1, {});
  const Graph k2(2, {{0, 1}});
  const Graph j = join({k1, k2});
  CHECK(j.vertex_count() == 3);
  CHECK(j.edge_count() == 3);
  CHECK(is_connected(j));
  CHECK(is_connected(join({Graph(2, {}), Graph(3, {})})));
}

TEST_CASE("edge list round trip and errors") {
  const Graph g = parse_edge_list("4 5\n0 1\n1 2\n2 3\n3 0\n0 2\n");
  CHECK(g == square_with_diagonal());
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  CHECK(parse_edge_list("1 1\n0 0\n").has_loop());
  for (const char* bad : {"", "2 1\n0 2\n", "2 2\n0 1\n", "x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_edge_list(bad), Error);
  }
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
}

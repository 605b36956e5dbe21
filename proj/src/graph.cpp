#include "mlc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "mlc/error.hpp"
#include "mlc/matroid.hpp"

namespace mlc {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw Error(ErrorCode::kInvalidParameters, "negative vertex count");
  for (const auto& e : edges_) {
    if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 || e.head >= vertex_count_) {
      throw Error(ErrorCode::kInvalidParameters,
                  "edge " + std::to_string(e.tail) + "-" + std::to_string(e.head) + " has an endpoint out of range");
    }
  }
}

bool Graph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.tail == e.head; });
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Edge sets are bitsets, so operations taking them need at most 64 edges.
void require_edge_bitset(const Graph& g) {
  if (g.edge_count() > kMaxGround) throw Error(ErrorCode::kSizeCapExceeded, "edge-set operations are limited to 64 edges");
}

UnionFind forest(const Graph& g, Subset edges) {
  UnionFind uf(g.vertex_count());
  for (int id : members(edges)) uf.unite(g.edge(id).tail, g.edge(id).head);
  return uf;
}

}  // namespace

std::vector<int> component_labels(const Graph& g, Subset edges) {
  require_edge_bitset(g);
  UnionFind uf = forest(g, edges);
  std::vector<int> label(g.vertex_count(), -1);
  std::vector<int> root_label(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int r = uf.find(v);
    if (root_label[r] == -1) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

int component_count(const Graph& g) {
  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) uf.unite(e.tail, e.head);
  int count = 0;
  for (int v = 0; v < g.vertex_count(); ++v) count += uf.find(v) == v;
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::uint64_t coloring_count(const Graph& g, int q, std::uint64_t budget) {
  if (q < 1) throw Error(ErrorCode::kInvalidParameters, "need at least one colour");
  if (g.has_loop()) return 0;
  std::uint64_t total = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (total > budget / static_cast<std::uint64_t>(q)) {
      throw Error(ErrorCode::kSizeCapExceeded, std::to_string(q) + "^" + std::to_string(g.vertex_count()) +
                                                   " colourings exceed the budget of " + std::to_string(budget));
    }
    total *= static_cast<std::uint64_t>(q);
  }
  if (total > budget) throw Error(ErrorCode::kSizeCapExceeded, "colouring budget exceeded");

  std::vector<int> colour(g.vertex_count(), 0);
  std::uint64_t proper = 0;
  for (std::uint64_t step = 0; step < total; ++step) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (colour[e.tail] == colour[e.head]) {
        ok = false;
        break;
      }
    }
    if (ok) ++proper;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (++colour[v] < q) break;
      colour[v] = 0;
    }
  }
  return proper;
}

Graph restriction(const Graph& g, Subset edges) {
  require_edge_bitset(g);
  std::vector<Edge> kept;
  for (int id : members(edges & g.all_edges())) kept.push_back(g.edge(id));
  return Graph(g.vertex_count(), std::move(kept));
}

Graph contraction(const Graph& g, Subset edges) {
  auto label = component_labels(g, edges);
  int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<Edge> rest;
  for (int id : members(g.all_edges() & ~edges)) rest.push_back({label[g.edge(id).tail], label[g.edge(id).head]});
  return Graph(count, std::move(rest));
}

Subset graph_closure(const Graph& g, Subset edges) {
  require_edge_bitset(g);
  UnionFind uf = forest(g, edges);
  Subset out = edges;
  for (int id = 0; id < g.edge_count(); ++id) {
    if (uf.find(g.edge(id).tail) == uf.find(g.edge(id).head)) out |= Subset{1} << id;
  }
  return out;
}

bool is_graph_flat(const Graph& g, Subset edges) { return graph_closure(g, edges) == edges; }

std::vector<Subset> graph_flats(const Graph& g, int max_flats) {
  // Every flat is the closure of a smaller flat plus one edge.
  std::set<Subset> found;
  std::vector<Subset> frontier{graph_closure(g, 0)};
  found.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (Subset f : frontier) {
      for (int id = 0; id < g.edge_count(); ++id) {
        if (contains(f, id)) continue;
        Subset c = graph_closure(g, f | (Subset{1} << id));
        if (found.insert(c).second) {
          if (static_cast<int>(found.size()) > max_flats) {
            throw Error(ErrorCode::kSizeCapExceeded, "more than " + std::to_string(max_flats) + " flats");
          }
          next.push_back(c);
        }
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

Matroid graphic_matroid(const Graph& g, int max_flats) {
  return validate_flats(graph_flats(g, max_flats), g.edge_count());
}

UniPoly chromatic_polynomial(const Graph& g) {
  if (g.has_loop()) return {};
  // Recursion over flats ordered by size: P(G_F) depends only on the
  // contraction, which is loopless for F a flat.
  auto flats = graph_flats(g, 1 << 20);
  UniPoly total = UniPoly::monomial(1, g.vertex_count());
  for (Subset f : flats) {
    if (f == 0) continue;
    total -= chromatic_polynomial(contraction(g, f));
  }
  return total;
}

Graph join(const std::vector<Graph>& graphs) {
  if (graphs.empty()) throw Error(ErrorCode::kInvalidParameters, "join of an empty list");
  std::vector<int> offset;
  int total = 0;
  for (const auto& g : graphs) {
    offset.push_back(total);
    total += g.vertex_count();
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (const auto& e : graphs[i].edges()) edges.push_back({e.tail + offset[i], e.head + offset[i]});
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      for (int v = 0; v < graphs[i].vertex_count(); ++v) {
        for (int w = 0; w < graphs[j].vertex_count(); ++w) edges.push_back({v + offset[i], w + offset[j]});
      }
    }
  }
  return Graph(total, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) edges.push_back({a, (a + 1) % n});
  return Graph(n, std::move(edges));
}

Graph square_with_diagonal() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long v = 0;
  long e = 0;
  if (!(in >> v >> e) || v < 0 || e < 0) throw Error(ErrorCode::kParseError, "expected header 'V E'");
  std::vector<Edge> edges;
  for (long k = 0; k < e; ++k) {
    long a = 0;
    long b = 0;
    if (!(in >> a >> b)) throw Error(ErrorCode::kParseError, "expected " + std::to_string(e) + " edge lines");
    edges.push_back({static_cast<int>(a), static_cast<int>(b)});
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::kParseError, "trailing data after edge list");
  return Graph(static_cast<int>(v), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) os << e.tail << ' ' << e.head << '\n';
  return os.str();
}

}  // namespace mlc

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mlc/rational.hpp"
#include "mlc/subset.hpp"
#include "mlc/unipoly.hpp"

namespace mlc {

class Matroid;

struct Edge {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite multigraph with loops.  Edge ids are list positions; orientation is
// storage order only.
class Graph {
 public:
  Graph() = default;
  // Throws kInvalidParameters for out-of-range endpoints.  Operations that take
  // edge bitsets throw kSizeCapExceeded beyond 64 edges.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }
  Subset all_edges() const { return full_set(edge_count()); }
  bool has_loop() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

inline constexpr std::uint64_t kDefaultColoringBudget = 10'000'000;
inline constexpr int kDefaultMaxFlats = 4096;

// Component label per vertex using only edges in `edges`; labels are numbered
// in order of each component's smallest vertex.
std::vector<int> component_labels(const Graph& g, Subset edges);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

// Exhaustive count of proper q-colourings.  Throws kSizeCapExceeded when
// q^|V| exceeds `budget`, kInvalidParameters for q < 1.
std::uint64_t coloring_count(const Graph& g, int q, std::uint64_t budget = kDefaultColoringBudget);

// Chromatic polynomial through the flat recursion
// P(G) = q^|V| - sum over nonempty flats F of P(G_F).
UniPoly chromatic_polynomial(const Graph& g);

Graph restriction(const Graph& g, Subset edges);
Graph contraction(const Graph& g, Subset edges);

// Edges whose endpoints are joined by a path inside `edges` (loops always).
Subset graph_closure(const Graph& g, Subset edges);
bool is_graph_flat(const Graph& g, Subset edges);
// All flats of g; throws kSizeCapExceeded beyond `max_flats`.
std::vector<Subset> graph_flats(const Graph& g, int max_flats = kDefaultMaxFlats);
Matroid graphic_matroid(const Graph& g, int max_flats = kDefaultMaxFlats);

Graph join(const std::vector<Graph>& graphs);

Graph complete_graph(int n);
Graph cycle_graph(int n);
// The 4-cycle 0-1-2-3 with diagonal 0-2.
Graph square_with_diagonal();

// "V E" header followed by E lines "tail head".
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace mlc

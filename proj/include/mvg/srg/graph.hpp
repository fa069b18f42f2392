#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mvg/core/limits.hpp"

namespace mvg::srg {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Bit-matrix adjacency; one row of 64-bit words per vertex.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t v, const Limits& limits);

  std::size_t order() const { return v_; }
  bool test(Vertex u, Vertex w) const { return (bits_[u * words_ + w / 64] >> (w % 64)) & 1u; }
  void set(Vertex u, Vertex w) { bits_[u * words_ + w / 64] |= std::uint64_t{1} << (w % 64); }
  std::size_t row_count(Vertex u) const;
  std::size_t and_count(Vertex u, Vertex w) const;
  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t v_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Simple undirected graph: symmetric, loop-free.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t v, const Limits& limits = {}) : adj_(v, limits) {}
  static Graph from_edges(std::size_t v, const std::vector<Edge>& edges, const Limits& limits = {});

  std::size_t order() const { return adj_.order(); }
  bool adjacent(Vertex u, Vertex w) const { return adj_.test(u, w); }
  void add_edge(Vertex u, Vertex w);  // InputError on loops or bad indices
  std::size_t degree(Vertex u) const { return adj_.row_count(u); }
  std::size_t common_neighbors(Vertex u, Vertex w) const { return adj_.and_count(u, w); }
  std::vector<Edge> edges() const;  // u < w, lexicographic
  bool operator==(const Graph&) const = default;

 private:
  BitMatrix adj_;
};

// Loop-free digraph.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(std::size_t v, const Limits& limits = {}) : adj_(v, limits) {}

  std::size_t order() const { return adj_.order(); }
  bool arc(Vertex u, Vertex w) const { return adj_.test(u, w); }
  void add_arc(Vertex u, Vertex w);
  std::size_t out_degree(Vertex u) const { return adj_.row_count(u); }
  std::vector<Edge> arcs() const;
  // Exactly one of u->w, w->u for every u != w.
  bool is_tournament() const;
  bool operator==(const DirectedGraph&) const = default;

 private:
  BitMatrix adj_;
};

Graph complement(const Graph& g);

}  // namespace mvg::srg

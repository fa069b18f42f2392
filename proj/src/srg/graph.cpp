#include "mvg/srg/graph.hpp"

#include <bit>
#include <string>

#include "mvg/core/error.hpp"

namespace mvg::srg {

BitMatrix::BitMatrix(std::size_t v, const Limits& limits) : v_(v), words_((v + 63) / 64) {
  if (v > limits.graph)
    throw ResourceError("graph with " + std::to_string(v) + " vertices exceeds cap " +
                        std::to_string(limits.graph));
  bits_.assign(v_ * words_, 0);
}

std::size_t BitMatrix::row_count(Vertex u) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_; ++i) c += std::popcount(bits_[u * words_ + i]);
  return c;
}

std::size_t BitMatrix::and_count(Vertex u, Vertex w) const {
  const std::uint64_t* a = &bits_[u * words_];
  const std::uint64_t* b = &bits_[w * words_];
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

namespace {

void check_pair(std::size_t v, Vertex u, Vertex w) {
  if (u >= v || w >= v) throw InputError("vertex index out of range");
  if (u == w) throw InputError("loops are not allowed");
}

}  // namespace

Graph Graph::from_edges(std::size_t v, const std::vector<Edge>& edges, const Limits& limits) {
  Graph g(v, limits);
  for (auto [u, w] : edges) g.add_edge(u, w);
  return g;
}

void Graph::add_edge(Vertex u, Vertex w) {
  check_pair(order(), u, w);
  adj_.set(u, w);
  adj_.set(w, u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex w = u + 1; w < order(); ++w)
      if (adjacent(u, w)) out.emplace_back(u, w);
  return out;
}

void DirectedGraph::add_arc(Vertex u, Vertex w) {
  check_pair(order(), u, w);
  adj_.set(u, w);
}

std::vector<Edge> DirectedGraph::arcs() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex w = 0; w < order(); ++w)
      if (arc(u, w)) out.emplace_back(u, w);
  return out;
}

bool DirectedGraph::is_tournament() const {
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex w = u + 1; w < order(); ++w)
      if (arc(u, w) == arc(w, u)) return false;
  return true;
}

Graph complement(const Graph& g) {
  Graph out(g.order(), Limits::uniform(g.order()));
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex w = u + 1; w < g.order(); ++w)
      if (!g.adjacent(u, w)) out.add_edge(u, w);
  return out;
}

}  // namespace mvg::srg

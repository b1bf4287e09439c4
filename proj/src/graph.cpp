#include "powercolor/graph.hpp"

#include <bit>

namespace powercolor {

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w)
      return false;
  return true;
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

Vertex VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i])
      return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
  return static_cast<Vertex>(capacity_);
}

Vertex VertexSet::next(Vertex v) const {
  std::size_t start = static_cast<std::size_t>(v) + 1;
  if (start >= capacity_)
    return static_cast<Vertex>(capacity_);
  std::size_t i = start >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (w)
      return static_cast<Vertex>(i * 64 + std::countr_zero(w));
    if (++i >= words_.size())
      return static_cast<Vertex>(capacity_);
    w = words_[i];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (Vertex v = first(); v < capacity_; v = next(v))
    out.push_back(v);
  return out;
}

VertexSet &VertexSet::operator&=(const VertexSet &other) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= other.words_[i];
  return *this;
}

VertexSet &VertexSet::operator|=(const VertexSet &other) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= other.words_[i];
  return *this;
}

VertexSet &VertexSet::subtract(const VertexSet &other) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~other.words_[i];
  return *this;
}

std::size_t VertexSet::intersection_count(const VertexSet &other) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

void BitGraph::add_edge(Vertex u, Vertex v) {
  if (u == v)
    return;
  rows_[u].insert(v);
  rows_[v].insert(u);
}

std::size_t BitGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto &row : rows_)
    twice += row.count();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> BitGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < rows_.size(); ++u)
    for (Vertex v = rows_[u].next(u); v < rows_.size(); v = rows_[u].next(v))
      out.emplace_back(u, v);
  return out;
}

BitGraph BitGraph::complement() const {
  const std::size_t n = rows_.size();
  BitGraph out(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!adjacent(u, v))
        out.add_edge(u, v);
  return out;
}

BitGraph BitGraph::induced(std::span<const Vertex> vertices) const {
  BitGraph out(vertices.size());
  for (Vertex i = 0; i < vertices.size(); ++i)
    for (Vertex j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        out.add_edge(i, j);
  return out;
}

bool BitGraph::is_clique(std::span<const Vertex> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!adjacent(vertices[i], vertices[j]))
        return false;
  return true;
}

BitGraph BitGraph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  BitGraph g(n);
  for (const auto &[u, v] : edges)
    g.add_edge(u, v);
  return g;
}

BitGraph BitGraph::cycle(std::size_t n) {
  BitGraph g(n);
  for (Vertex v = 0; v < n; ++v)
    g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

BitGraph BitGraph::complete(std::size_t n) {
  BitGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

} // namespace powercolor

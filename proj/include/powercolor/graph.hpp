#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace powercolor {

using Vertex = std::uint32_t;

/// A dense set of vertices stored as 64-bit words.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  std::size_t capacity() const { return capacity_; }
  bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool empty() const;
  std::size_t count() const;
  /// Smallest member, or capacity() when empty.
  Vertex first() const;
  /// Smallest member greater than v, or capacity() when none.
  Vertex next(Vertex v) const;
  std::vector<Vertex> members() const;

  VertexSet &operator&=(const VertexSet &other);
  VertexSet &operator|=(const VertexSet &other);
  /// Removes every member of other.
  VertexSet &subtract(const VertexSet &other);
  std::size_t intersection_count(const VertexSet &other) const;

  bool operator==(const VertexSet &) const = default;

  std::span<const std::uint64_t> words() const { return words_; }

private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph with one bit row per vertex.
class BitGraph {
public:
  BitGraph() = default;
  explicit BitGraph(std::size_t n) : rows_(n, VertexSet(n)) {}

  std::size_t vertex_count() const { return rows_.size(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  /// Adds {u, v}; self-loops are ignored.
  void add_edge(Vertex u, Vertex v);
  const VertexSet &neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  std::size_t edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  BitGraph complement() const;
  BitGraph induced(std::span<const Vertex> vertices) const;

  /// Every pair in vertices is adjacent.
  bool is_clique(std::span<const Vertex> vertices) const;

  static BitGraph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
  static BitGraph cycle(std::size_t n);
  static BitGraph complete(std::size_t n);

private:
  std::vector<VertexSet> rows_;
};

/// A set of pairwise adjacent vertices, ascending.
struct CliqueWitness {
  std::vector<Vertex> vertices;

  std::size_t size() const { return vertices.size(); }
};

/// Directed relation with one bit row per source vertex.
class BitRelation {
public:
  BitRelation() = default;
  explicit BitRelation(std::size_t n) : rows_(n, VertexSet(n)) {}

  std::size_t size() const { return rows_.size(); }
  bool holds(Vertex from, Vertex to) const { return rows_[from].contains(to); }
  void set(Vertex from, Vertex to) { rows_[from].insert(to); }
  const VertexSet &successors(Vertex from) const { return rows_[from]; }

private:
  std::vector<VertexSet> rows_;
};

} // namespace powercolor

#include "powercolor/perfectness.hpp"

#include "powercolor/errors.hpp"

#include <algorithm>
#include <string>

namespace powercolor {

const char *to_string(HoleKind kind) { return kind == HoleKind::Hole ? "hole" : "antihole"; }

std::size_t default_cycle_bound(std::size_t vertex_count) {
  return vertex_count <= kFullBoundVertexLimit ? vertex_count : kCappedCycleBound;
}

bool is_odd_hole(const BitGraph &g, std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  if (len < 5 || len % 2 == 0)
    return false;
  for (std::size_t i = 0; i < len; ++i) {
    if (cycle[i] >= g.vertex_count())
      return false;
    for (std::size_t j = i + 1; j < len; ++j) {
      if (cycle[i] == cycle[j])
        return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive)
        return false;
    }
  }
  return true;
}

namespace {

class HoleSearch {
public:
  HoleSearch(const BitGraph &g, std::size_t min_len, std::size_t max_len)
      : g_(g), n_(g.vertex_count()), min_len_(min_len), max_len_(max_len) {}

  std::optional<std::vector<Vertex>> run() {
    for (Vertex start = 0; start < n_; ++start) {
      path_.assign(1, start);
      VertexSet above(n_);
      for (Vertex v = start + 1; v < n_; ++v)
        above.insert(v);
      VertexSet inner(n_);
      if (extend(above, inner))
        return path_;
    }
    return std::nullopt;
  }

private:
  // above: vertices greater than path_[0] and not on the path.
  // inner: union of neighborhoods of path_[1 .. len-2].
  bool extend(VertexSet above, const VertexSet &inner) {
    const Vertex start = path_.front();
    const Vertex tail = path_.back();
    const std::size_t len = path_.size();

    VertexSet candidates = g_.neighbors(tail);
    candidates &= above;
    candidates.subtract(inner);

    VertexSet next_inner = inner;
    if (len >= 2)
      next_inner |= g_.neighbors(tail);

    for (Vertex v = candidates.first(); v < n_; v = candidates.next(v)) {
      if (len >= 2 && g_.adjacent(v, start)) {
        const std::size_t cycle_len = len + 1;
        if (cycle_len % 2 == 1 && cycle_len >= min_len_ && cycle_len <= max_len_ && path_[1] < v) {
          path_.push_back(v);
          return true;
        }
        continue;
      }
      // Closing needs at least one more vertex.
      if (len + 2 > max_len_)
        continue;
      path_.push_back(v);
      VertexSet next_above = above;
      next_above.erase(v);
      if (extend(std::move(next_above), next_inner))
        return true;
      path_.pop_back();
    }
    return false;
  }

  const BitGraph &g_;
  std::size_t n_;
  std::size_t min_len_;
  std::size_t max_len_;
  std::vector<Vertex> path_;
};

std::optional<OddHoleWitness> search(const BitGraph &g, std::size_t min_len, std::size_t max_len,
                                     HoleKind kind) {
  if (max_len < 5)
    throw InputError("cycle bound must be at least 5, got " + std::to_string(max_len));
  if (max_len < min_len)
    return std::nullopt;
  auto cycle = HoleSearch(g, min_len, max_len).run();
  if (!cycle)
    return std::nullopt;
  if (!is_odd_hole(g, *cycle))
    throw std::logic_error("hole search produced an invalid witness");
  return OddHoleWitness{kind, std::move(*cycle)};
}

} // namespace

std::optional<OddHoleWitness> find_odd_hole(const BitGraph &g, std::size_t max_len) {
  return search(g, 5, max_len, HoleKind::Hole);
}

std::optional<OddHoleWitness> find_odd_antihole(const BitGraph &g, std::size_t max_len) {
  return search(g.complement(), 7, max_len, HoleKind::Antihole);
}

BergeReport certify_berge(const BitGraph &g, std::optional<std::size_t> max_len) {
  BergeReport report;
  // Graphs with fewer than 5 vertices have no odd holes; search the minimum bound.
  report.hole_search_bound = max_len.value_or(std::max<std::size_t>(5, default_cycle_bound(g.vertex_count())));
  report.witness = find_odd_hole(g, report.hole_search_bound);
  if (!report.witness)
    report.witness = find_odd_antihole(g, report.hole_search_bound);
  if (report.witness)
    report.verdict = BergeVerdict::WitnessFound;
  return report;
}

BergeReport certify_berge(const PowerGraph &p, std::optional<std::size_t> max_len) {
  return certify_berge(p.undirected, max_len);
}

} // namespace powercolor

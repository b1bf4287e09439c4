#include "powercolor/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace powercolor {

namespace {

/// Vertices by descending degree, ties by index.
std::vector<Vertex> degree_order(const BitGraph &g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0u);
  std::ranges::stable_sort(order, [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

class BudgetCounter {
public:
  BudgetCounter(std::uint64_t budget, const char *what) : budget_(budget), what_(what) {}

  void tick() {
    if (++nodes_ > budget_)
      throw CapExceeded(std::string(what_) + " search budget of " + std::to_string(budget_) +
                        " nodes exhausted");
  }

private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  const char *what_;
};

class CliqueSearch {
public:
  CliqueSearch(const BitGraph &g, std::uint64_t budget) : g_(g), budget_(budget, "max-clique") {}

  std::vector<Vertex> run() {
    VertexSet all(g_.vertex_count());
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      all.insert(v);
    std::vector<Vertex> r;
    expand(r, all);
    return best_;
  }

private:
  std::size_t color_bound(const VertexSet &p) const {
    VertexSet uncolored = p;
    std::size_t classes = 0;
    const std::size_t n = g_.vertex_count();
    while (!uncolored.empty()) {
      ++classes;
      VertexSet q = uncolored;
      for (Vertex v = q.first(); v < n; v = q.next(v)) {
        uncolored.erase(v);
        q.subtract(g_.neighbors(v));
      }
    }
    return classes;
  }

  void expand(std::vector<Vertex> &r, VertexSet p) {
    budget_.tick();
    const std::size_t n = g_.vertex_count();
    if (p.empty()) {
      if (r.size() > best_.size())
        best_ = r;
      return;
    }
    if (r.size() + color_bound(p) <= best_.size())
      return;

    Vertex pivot = p.first();
    std::size_t pivot_score = p.intersection_count(g_.neighbors(pivot));
    for (Vertex u = p.next(pivot); u < n; u = p.next(u)) {
      const std::size_t s = p.intersection_count(g_.neighbors(u));
      if (s > pivot_score) {
        pivot = u;
        pivot_score = s;
      }
    }
    VertexSet branches = p;
    branches.subtract(g_.neighbors(pivot));

    for (Vertex v = branches.first(); v < n; v = branches.next(v)) {
      if (r.size() + p.count() <= best_.size())
        return;
      VertexSet next = p;
      next &= g_.neighbors(v);
      r.push_back(v);
      expand(r, std::move(next));
      r.pop_back();
      p.erase(v);
    }
  }

  const BitGraph &g_;
  BudgetCounter budget_;
  std::vector<Vertex> best_;
};

/// k-coloring by backtracking in saturation order; a vertex may open at most
/// one new color beyond those already used.
class KColoring {
public:
  KColoring(const BitGraph &g, std::size_t k, BudgetCounter &budget)
      : g_(g), k_(k), budget_(budget), color_(g.vertex_count(), kNone),
        seen_(g.vertex_count(), std::vector<std::uint32_t>(k, 0)), saturation_(g.vertex_count(), 0) {}

  bool run() { return step(0, 0); }

  std::vector<std::uint32_t> assignment() const { return color_; }

private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  void assign(Vertex v, std::uint32_t c) {
    color_[v] = c;
    const auto &nb = g_.neighbors(v);
    for (Vertex u = nb.first(); u < g_.vertex_count(); u = nb.next(u))
      if (seen_[u][c]++ == 0)
        ++saturation_[u];
  }

  void unassign(Vertex v) {
    const std::uint32_t c = color_[v];
    color_[v] = kNone;
    const auto &nb = g_.neighbors(v);
    for (Vertex u = nb.first(); u < g_.vertex_count(); u = nb.next(u))
      if (--seen_[u][c] == 0)
        --saturation_[u];
  }

  bool step(std::size_t colored, std::uint32_t used) {
    budget_.tick();
    const std::size_t n = g_.vertex_count();
    if (colored == n)
      return true;
    Vertex pick = 0;
    bool have = false;
    for (Vertex v = 0; v < n; ++v) {
      if (color_[v] != kNone)
        continue;
      if (!have || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] && g_.degree(v) > g_.degree(pick))) {
        pick = v;
        have = true;
      }
    }
    const std::uint32_t limit = static_cast<std::uint32_t>(std::min<std::size_t>(k_, used + 1));
    for (std::uint32_t c = 0; c < limit; ++c) {
      if (seen_[pick][c] != 0)
        continue;
      assign(pick, c);
      if (step(colored + 1, std::max(used, c + 1)))
        return true;
      unassign(pick);
    }
    return false;
  }

  const BitGraph &g_;
  std::size_t k_;
  BudgetCounter &budget_;
  std::vector<std::uint32_t> color_;
  std::vector<std::vector<std::uint32_t>> seen_;
  std::vector<std::size_t> saturation_;
};

} // namespace

CliqueWitness max_clique_exact(const BitGraph &g, std::uint64_t budget) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxCliqueOracleVertices)
    throw CapExceeded("max-clique oracle accepts at most " + std::to_string(kMaxCliqueOracleVertices) +
                      " vertices, got " + std::to_string(n));
  if (n == 0)
    return {};

  // Search on a relabeled copy so ascending bit order is the degree order.
  const auto order = degree_order(g);
  std::vector<Vertex> position(n);
  for (Vertex i = 0; i < n; ++i)
    position[order[i]] = i;
  BitGraph relabeled(n);
  for (const auto &[u, v] : g.edges())
    relabeled.add_edge(position[u], position[v]);

  CliqueSearch search(relabeled, budget);
  CliqueWitness w;
  for (Vertex v : search.run())
    w.vertices.push_back(order[v]);
  std::ranges::sort(w.vertices);
  return w;
}

ExactColoring dsatur_coloring(const BitGraph &g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t none = ~std::uint32_t{0};
  ExactColoring out;
  out.assignment.assign(n, none);
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n + 1, false));
  std::vector<std::size_t> saturation(n, 0);
  for (std::size_t round = 0; round < n; ++round) {
    Vertex pick = 0;
    bool have = false;
    for (Vertex v = 0; v < n; ++v) {
      if (out.assignment[v] != none)
        continue;
      if (!have || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick))) {
        pick = v;
        have = true;
      }
    }
    std::uint32_t c = 0;
    while (seen[pick][c])
      ++c;
    out.assignment[pick] = c;
    out.colors = std::max<std::size_t>(out.colors, c + 1);
    const auto &nb = g.neighbors(pick);
    for (Vertex u = nb.first(); u < n; u = nb.next(u))
      if (!seen[u][c]) {
        seen[u][c] = true;
        ++saturation[u];
      }
  }
  return out;
}

ExactColoring exact_coloring(const BitGraph &g, std::uint64_t budget) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxChromaticOracleVertices)
    throw CapExceeded("chromatic oracle accepts at most " + std::to_string(kMaxChromaticOracleVertices) +
                      " vertices, got " + std::to_string(n));
  if (n == 0)
    return {};
  const std::size_t lower = max_clique_exact(g, budget).size();
  ExactColoring upper = dsatur_coloring(g);
  BudgetCounter counter(budget, "chromatic");
  for (std::size_t k = lower; k < upper.colors; ++k) {
    KColoring attempt(g, k, counter);
    if (attempt.run())
      return {k, attempt.assignment()};
  }
  return upper;
}

std::size_t chromatic_number_exact(const BitGraph &g, std::uint64_t budget) {
  return exact_coloring(g, budget).colors;
}

} // namespace powercolor

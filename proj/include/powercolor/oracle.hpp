#pragma once

#include "powercolor/errors.hpp"
#include "powercolor/graph.hpp"

#include <cstdint>
#include <vector>

namespace powercolor {

inline constexpr std::size_t kMaxCliqueOracleVertices = 300;
inline constexpr std::size_t kMaxChromaticOracleVertices = 120;
/// Search nodes allowed per oracle call before CapExceeded is thrown.
inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// Exact maximum clique: branch and bound over a descending-degree order,
/// Bron-Kerbosch pivoting and a greedy-coloring upper bound.
CliqueWitness max_clique_exact(const BitGraph &g, std::uint64_t budget = kDefaultSearchBudget);

struct ExactColoring {
  std::size_t colors = 0;
  std::vector<std::uint32_t> assignment;
};

/// Degree-saturation greedy coloring (ties by degree, then index).
ExactColoring dsatur_coloring(const BitGraph &g);

/// An optimal coloring: clique lower bound, DSATUR upper bound, then
/// k-coloring backtracking for each k in between.
ExactColoring exact_coloring(const BitGraph &g, std::uint64_t budget = kDefaultSearchBudget);

std::size_t chromatic_number_exact(const BitGraph &g, std::uint64_t budget = kDefaultSearchBudget);

} // namespace powercolor

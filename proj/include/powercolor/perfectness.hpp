#pragma once

#include "powercolor/graph.hpp"
#include "powercolor/powergraph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace powercolor {

enum class HoleKind { Hole, Antihole };

const char *to_string(HoleKind kind);

struct OddHoleWitness {
  HoleKind kind = HoleKind::Hole;
  /// Cycle order; for an antihole this is a hole of the complement.
  std::vector<Vertex> cycle;
};

/// Graphs up to this many vertices are searched at full cycle length.
inline constexpr std::size_t kFullBoundVertexLimit = 24;
inline constexpr std::size_t kCappedCycleBound = 11;

/// vertex_count when it is at most kFullBoundVertexLimit, else kCappedCycleBound.
std::size_t default_cycle_bound(std::size_t vertex_count);

/// True when cycle is an induced chordless cycle of odd length >= 5 in g.
bool is_odd_hole(const BitGraph &g, std::span<const Vertex> cycle);

/// Exhaustive search for an induced odd cycle of length 5..max_len.
/// Paths grow from their smallest vertex; every new vertex is adjacent to the
/// tail only. Returns the first witness in lexicographic path order.
std::optional<OddHoleWitness> find_odd_hole(const BitGraph &g, std::size_t max_len);

/// Odd holes of the complement of length 7..max_len. Length-5 antiholes are
/// exactly length-5 holes and are reported by find_odd_hole.
std::optional<OddHoleWitness> find_odd_antihole(const BitGraph &g, std::size_t max_len);

enum class BergeVerdict { CertifiedUpToBound, WitnessFound };

struct BergeReport {
  std::size_t hole_search_bound = 0;
  BergeVerdict verdict = BergeVerdict::CertifiedUpToBound;
  std::optional<OddHoleWitness> witness;
};

/// Runs both searches. max_len defaults to default_cycle_bound.
BergeReport certify_berge(const BitGraph &g, std::optional<std::size_t> max_len = std::nullopt);
BergeReport certify_berge(const PowerGraph &p, std::optional<std::size_t> max_len = std::nullopt);

} // namespace powercolor

#pragma once

#include "powercolor/graph.hpp"
#include "powercolor/group.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace powercolor::verify {

/// Largest clique size by checking every vertex subset. n <= 20.
std::size_t brute_force_clique_number(const BitGraph &g);

/// Chromatic number by enumerating every partition of the vertex set into
/// independent sets (subset dynamic program). n <= 16.
std::size_t brute_force_chromatic_number(const BitGraph &g);

/// True when g has an induced odd cycle of length >= 5, found by checking
/// every vertex subset of odd size. n <= 16.
bool brute_force_has_odd_hole(const BitGraph &g);

/// The groups the theorem checks run over: cyclic groups of order <= 48,
/// dihedral groups of order <= 48, S3, S4, A4, Q8, C6xC6, C2xC2xC2, C12xC2.
std::vector<FiniteGroup> theorem_corpus();

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 9;

/// Runs one acceptance criterion (1..kCriterionCount). Log lines such as the
/// fallback activations go to log.
CriterionResult run_criterion(int id, std::ostream &log);

/// Runs every criterion, calling on_result after each.
std::vector<CriterionResult> run_acceptance(std::ostream &log,
                                            const std::function<void(const CriterionResult &)> &on_result = {});

} // namespace powercolor::verify

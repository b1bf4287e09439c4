#pragma once

#include "powercolor/arith.hpp"
#include "powercolor/errors.hpp"
#include "powercolor/group.hpp"
#include "powercolor/powergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace powercolor {

using Color = std::uint32_t;

/// Exponent vector (j_1, ..., j_r) of a subgroup of a cyclic group of order
/// n = p_1^k_1 ... p_r^k_r; the subgroup has order p_1^j_1 ... p_r^j_r.
/// Componentwise order matches subgroup inclusion.
struct DivisorVector {
  std::vector<u64> exponents;

  bool operator==(const DivisorVector &) const = default;
  auto operator<=>(const DivisorVector &) const = default;

  /// Componentwise <=.
  bool below(const DivisorVector &other) const;
  bool comparable(const DivisorVector &other) const { return below(other) || other.below(*this); }
  std::string to_string() const;
};

/// Vector of <x> inside Z/n.
DivisorVector vector_of_element(const FactoredInt &n, u64 x);
DivisorVector vector_of_order(const FactoredInt &n, u64 subgroup_order);
u64 subgroup_order(const FactoredInt &n, const DivisorVector &v);

/// For v on the wall v_i = k_i (prime position i, 0-based) other than the full
/// vector: lower coordinate i to k_i - 1 and raise the first coordinate t with
/// v_t != k_t by one. The result lies in the index-p_i subgroup and is
/// incomparable with v. Throws InputError off the wall or for the full vector.
DivisorVector wall_target(const FactoredInt &n, std::size_t prime_pos, const DivisorVector &v);

/// Where a color came from: the extension step that introduced it and the
/// steps at which it was later reused on a new wall class.
struct ColorNote {
  std::size_t introduced_at = 0;
  std::string origin;
  std::vector<std::size_t> reused_at;
};

/// A vertex coloring. For cyclic colorings vertex x is the residue x in Z/n.
/// Color ids are dense, numbered in the order they were introduced.
struct Coloring {
  std::vector<Color> assignment;
  std::size_t palette_size = 0;
  std::vector<ColorNote> provenance;
  std::vector<std::string> log;
};

/// Distinct colors over the given vertices.
std::size_t count_colors(const Coloring &c, const std::vector<Element> &vertices);

/// The single-vertex coloring of the trivial group.
Coloring trivial_coloring();

/// First adjacent pair sharing a color, if any.
std::optional<std::pair<Vertex, Vertex>> find_conflict(const BitGraph &g, const std::vector<Color> &assignment);

/// Raised when a prime step would need more fresh colors than
/// Psi(n) - Psi(n/p).
class ColorBudgetExceeded : public std::runtime_error {
public:
  ColorBudgetExceeded(u64 n, u64 prime, DivisorVector wall, std::size_t used, std::size_t budget);

  const DivisorVector &wall() const { return wall_; }

private:
  DivisorVector wall_;
};

/// Extends a proper coloring c of Z/(n/p) (embedded as the multiples of p) to
/// Z/n. Wall classes are taken in increasing subgroup order, ties by vector;
/// each reuses the colors of its wall_target class first, then the lowest
/// existing colors absent from its down-set, then new ids. The generators of
/// Z/n get phi(n) new ids. Exactly Psi(n) - Psi(n/p) ids are added or
/// ColorBudgetExceeded is thrown.
Coloring extend_prime_step(const Coloring &c, const FactoredInt &n, std::size_t prime_pos);

/// Psi(n)-coloring of Z/n whose restriction to every subgroup of order d
/// uses Psi(d) colors. Primes are peeled largest first from n down to 1 and
/// the prime steps are applied back up.
Coloring stable_color_cyclic(u64 n);

/// Extends a stable coloring of the order-m subgroup of Z/n (c has m entries,
/// residue y standing for y * n/m) through a prime filtration up to Z/n.
Coloring extend_stable(const Coloring &c, u64 n);

struct CyclicStabilityCheck {
  bool ok = true;
  u64 subgroup_order = 0;
  u64 expected = 0;
  std::size_t actual = 0;
};

/// Checks every subgroup of Z/n for exactly Psi(d) colors.
CyclicStabilityCheck verify_cyclic_stability(const Coloring &c);

/// A non-cyclic intersection met while coloring a group.
struct FallbackEvent {
  std::size_t step = 0;
  Element h = 0;
  std::size_t intersection_size = 0;
  /// "backtracking" or "exact-oracle".
  std::string resolution;
};

struct GroupColoring {
  Coloring coloring;
  u64 mu = 0;
  Element seed = 0;
  std::vector<FallbackEvent> fallbacks;
  /// Set when the exact oracle replaced the constructed coloring.
  bool oracle_fallback = false;
};

/// Colors the power graph of g with omega(g) colors, weakly stable. Starts from
/// a stable coloring of <g0> for the omega witness g0, then repeatedly adds
/// <h> for an element h of maximal order outside the colored set (lowest index
/// on ties), extending from the intersection when it is a cyclic subgroup.
GroupColoring color_group(const FiniteGroup &g);

struct WeakStabilityCheck {
  bool ok = true;
  Element witness = 0;
  u64 expected = 0;
  std::size_t actual = 0;
};

/// For every element x, <x> carries exactly Psi(o(x)) colors.
WeakStabilityCheck verify_weak_stability(const FiniteGroup &g, const Coloring &c);

/// Palette size of color_group(g); throws TheoremViolation if it differs from
/// omega(g).
u64 chi(const FiniteGroup &g);

} // namespace powercolor

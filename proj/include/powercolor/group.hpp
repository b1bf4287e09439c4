#pragma once

#include "powercolor/arith.hpp"
#include "powercolor/errors.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace powercolor {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

/// Largest group whose multiplication table is materialized.
inline constexpr std::size_t kMaxGroupOrder = 1024;
/// Associativity is checked on every triple up to this order, sampled above.
inline constexpr std::size_t kExhaustiveAssociativityOrder = 256;
inline constexpr std::size_t kAssociativitySamples = 100000;
/// Closure enumeration stops here regardless of kMaxGroupOrder.
inline constexpr std::size_t kMaxClosureSize = 100000;

enum class GroupAxiom { Shape, Closure, Identity, Associativity, Inverse };

const char *to_string(GroupAxiom axiom);

/// Raised when a multiplication table violates a group axiom.
class GroupAxiomError : public InputError {
public:
  GroupAxiomError(GroupAxiom axiom, std::vector<Element> witness, const std::string &detail);

  GroupAxiom axiom() const { return axiom_; }
  const std::vector<Element> &witness() const { return witness_; }

private:
  GroupAxiom axiom_;
  std::vector<Element> witness_;
};

/// A finite group given by its full multiplication table. Elements are
/// positional indices 0..order-1; labels are display strings only.
/// Immutable after construction.
class FiniteGroup {
public:
  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element power(Element a, u64 k) const;

  u64 element_order(Element x) const { return orders_[x]; }
  const std::vector<u64> &element_orders() const { return orders_; }

  const std::string &label(Element x) const { return labels_[x]; }
  const std::vector<std::string> &labels() const { return labels_; }

  /// Short provenance string, e.g. "symmetric(5)".
  const std::string &name() const { return name_; }

  /// False when associativity was only spot-checked on random triples.
  bool associativity_exhaustive() const { return associativity_exhaustive_; }

  friend FiniteGroup from_cayley_table(const std::vector<std::vector<Element>> &table,
                                       Element identity,
                                       std::vector<std::string> labels,
                                       std::string name);

private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<u64> orders_;
  std::vector<std::string> labels_;
  std::string name_;
  bool associativity_exhaustive_ = true;
};

/// Validates the table as a group: square shape, closure, two-sided identity,
/// associativity and inverses. Throws GroupAxiomError naming the broken axiom
/// with a witness, or CapExceeded above kMaxGroupOrder.
FiniteGroup from_cayley_table(const std::vector<std::vector<Element>> &table,
                              Element identity,
                              std::vector<std::string> labels = {},
                              std::string name = "cayley");

/// Additive group Z/n, element k is the residue k.
FiniteGroup cyclic(u64 n);
/// Symmetries of a regular m-gon (order 2m): r^k is index k, s r^k is m + k.
FiniteGroup dihedral(u64 m);
/// All permutations of {0..n-1} in lexicographic one-line order.
FiniteGroup symmetric(u64 n);
FiniteGroup quaternion8();
/// Pairs (a, b) at index a * |B| + b with componentwise law.
FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b);
/// Closure of one-line permutations of {0..degree-1} under composition.
/// Elements are numbered in breadth-first discovery order, identity first.
FiniteGroup from_permutation_generators(std::size_t degree, const std::vector<Permutation> &gens,
                                        std::string name = {});

/// Cycle notation for a permutation, "()" for the identity.
std::string cycle_notation(const Permutation &perm);

/// Parses cycles such as "(0 1)(2 3 4)" over {0..degree-1}.
Permutation parse_cycles(std::size_t degree, const std::string &text);

u64 element_order(const FiniteGroup &g, Element x);

/// {x^0, x^1, ..., x^(o(x)-1)} in power order, identity first.
std::vector<Element> cyclic_subgroup(const FiniteGroup &g, Element x);

/// lcm of all element orders.
u64 exponent(const FiniteGroup &g);

bool is_full_exponent(const FiniteGroup &g);

} // namespace powercolor

#pragma once

#include "powercolor/graph.hpp"
#include "powercolor/group.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace powercolor {

/// The directed power relation of a group and its underlying undirected graph.
/// reaches(g, h) holds iff h is a power of g (h in <g>); the undirected graph
/// joins distinct g, h when either reaches the other.
struct PowerGraph {
  BitRelation reaches;
  BitGraph undirected;
  std::vector<u64> orders;
  std::vector<std::string> labels;
  std::string source;

  std::size_t vertex_count() const { return orders.size(); }
};

PowerGraph build_power_graph(const FiniteGroup &g);

struct PreorderCheck {
  bool ok = true;
  /// One vertex for a reflexivity failure, (a, b, c) with a->b, b->c, not a->c
  /// for a transitivity failure.
  std::vector<Vertex> witness;
};

PreorderCheck verify_preorder(const BitRelation &reaches);
PreorderCheck verify_preorder(const PowerGraph &p);

struct OmegaResult {
  u64 value = 0;
  /// Lowest-index element attaining max Psi(o(g)).
  Element witness = 0;
};

/// Clique number as the maximum of Psi(o(g)) over all elements.
OmegaResult omega(const FiniteGroup &g);

/// An explicit clique of size omega(g) inside <g> for the omega witness:
/// generators of <g>, then generators of <g^p> for the smallest prime p
/// attaining max Psi(o/p), and so on down to the identity.
CliqueWitness max_clique_via_psi_witness(const FiniteGroup &g);

enum class ExportFormat { Dot, Json };

/// Accepts "dot" or "json"; throws InputError otherwise.
ExportFormat parse_export_format(std::string_view name);

/// Deterministic serialization. DOT carries the undirected graph; JSON carries
/// labels, orders, undirected edges and the non-reflexive part of reaches.
std::string export_graph(const PowerGraph &p, ExportFormat format);

} // namespace powercolor

#include "powercolor/powergraph.hpp"

#include <algorithm>
#include "json.hpp"
#include <sstream>

namespace powercolor {

PowerGraph build_power_graph(const FiniteGroup &g) {
  const std::size_t n = g.order();
  PowerGraph p;
  p.reaches = BitRelation(n);
  p.undirected = BitGraph(n);
  p.orders = g.element_orders();
  p.labels = g.labels();
  p.source = g.name();
  for (Element x = 0; x < n; ++x)
    for (Element y : cyclic_subgroup(g, x)) {
      p.reaches.set(x, y);
      p.undirected.add_edge(x, y);
    }
  return p;
}

PreorderCheck verify_preorder(const BitRelation &reaches) {
  const std::size_t n = reaches.size();
  for (Vertex a = 0; a < n; ++a)
    if (!reaches.holds(a, a))
      return {false, {a}};
  for (Vertex a = 0; a < n; ++a) {
    const VertexSet &out = reaches.successors(a);
    for (Vertex b = out.first(); b < n; b = out.next(b)) {
      // successors(b) must be contained in successors(a)
      VertexSet missing = reaches.successors(b);
      missing.subtract(out);
      if (!missing.empty())
        return {false, {a, b, missing.first()}};
    }
  }
  return {};
}

PreorderCheck verify_preorder(const PowerGraph &p) { return verify_preorder(p.reaches); }

OmegaResult omega(const FiniteGroup &g) {
  OmegaResult best;
  // Psi depends only on the order, so memoize per distinct order.
  std::vector<std::pair<u64, u64>> seen;
  for (Element x = 0; x < g.order(); ++x) {
    const u64 o = g.element_order(x);
    auto it = std::ranges::find(seen, o, &std::pair<u64, u64>::first);
    u64 value = 0;
    if (it == seen.end()) {
      value = psi(o);
      seen.emplace_back(o, value);
    } else {
      value = it->second;
    }
    if (value > best.value)
      best = {value, x};
  }
  return best;
}

CliqueWitness max_clique_via_psi_witness(const FiniteGroup &g) {
  const OmegaResult top = omega(g);
  CliqueWitness w;
  Element current = top.witness;
  u64 m = g.element_order(current);
  while (m > 1) {
    Element y = current;
    for (u64 k = 1; k < m; ++k, y = g.mul(y, current))
      if (gcd(k, m) == 1)
        w.vertices.push_back(y);
    const FactoredInt f(m);
    u64 best_prime = 0, best_value = 0;
    for (const auto &[q, e] : f.factors()) {
      const u64 v = psi(m / q);
      if (v > best_value) {
        best_value = v;
        best_prime = q;
      }
    }
    current = g.power(current, best_prime);
    m /= best_prime;
  }
  w.vertices.push_back(g.identity());
  std::ranges::sort(w.vertices);
  return w;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot")
    return ExportFormat::Dot;
  if (name == "json")
    return ExportFormat::Json;
  throw InputError("unknown export format '" + std::string(name) + "' (expected dot or json)");
}

namespace {

std::string dot_escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace

std::string export_graph(const PowerGraph &p, ExportFormat format) {
  const std::size_t n = p.vertex_count();
  if (format == ExportFormat::Dot) {
    std::ostringstream out;
    out << "graph \"" << dot_escape(p.source) << "\" {\n";
    for (Vertex v = 0; v < n; ++v)
      out << "  " << v << " [label=\"" << dot_escape(p.labels[v]) << "\"];\n";
    for (const auto &[u, v] : p.undirected.edges())
      out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
  }

  nlohmann::ordered_json j;
  j["source"] = p.source;
  j["vertex_count"] = n;
  j["labels"] = p.labels;
  j["orders"] = p.orders;
  auto edges = nlohmann::ordered_json::array();
  for (const auto &[u, v] : p.undirected.edges())
    edges.push_back({u, v});
  j["edges"] = std::move(edges);
  auto arcs = nlohmann::ordered_json::array();
  for (Vertex u = 0; u < n; ++u) {
    const VertexSet &out = p.reaches.successors(u);
    for (Vertex v = out.first(); v < n; v = out.next(v))
      if (u != v)
        arcs.push_back({u, v});
  }
  j["arcs"] = std::move(arcs);
  return j.dump(2) + "\n";
}

} // namespace powercolor

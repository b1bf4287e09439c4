#include "powercolor/report.hpp"

#include <map>

namespace powercolor {

Json group_summary(const FiniteGroup &g) {
  std::map<u64, std::size_t> histogram;
  for (u64 o : g.element_orders())
    ++histogram[o];
  Json hist = Json::array();
  for (const auto &[o, count] : histogram)
    hist.push_back({{"order", o}, {"count", count}});

  Json j;
  j["group"] = g.name();
  j["order"] = g.order();
  j["exponent"] = exponent(g);
  j["full_exponent"] = is_full_exponent(g);
  j["associativity_exhaustive"] = g.associativity_exhaustive();
  j["element_orders"] = std::move(hist);
  return j;
}

Json coloring_report(const FiniteGroup &g, const GroupColoring &gc, const WeakStabilityCheck &stability) {
  const Coloring &c = gc.coloring;
  Json j;
  j["group"] = g.name();
  j["order"] = g.order();
  j["omega"] = gc.mu;
  j["palette_size"] = c.palette_size;
  j["seed"] = {{"element", gc.seed}, {"label", g.label(gc.seed)}, {"order", g.element_order(gc.seed)}};

  Json assignment = Json::array();
  for (Element x = 0; x < g.order(); ++x)
    assignment.push_back({{"vertex", x}, {"label", g.label(x)}, {"color", c.assignment[x]}});
  j["assignment"] = std::move(assignment);

  Json provenance = Json::array();
  for (std::size_t id = 0; id < c.provenance.size(); ++id) {
    const ColorNote &note = c.provenance[id];
    provenance.push_back({{"color", id},
                          {"introduced_at", note.introduced_at},
                          {"origin", note.origin},
                          {"reused_at", note.reused_at}});
  }
  j["provenance"] = std::move(provenance);
  j["steps"] = c.log;

  Json fallbacks = Json::array();
  for (const auto &f : gc.fallbacks)
    fallbacks.push_back({{"step", f.step},
                         {"h", f.h},
                         {"label", g.label(f.h)},
                         {"intersection_size", f.intersection_size},
                         {"resolution", f.resolution}});
  j["fallback_count"] = gc.fallbacks.size();
  j["fallbacks"] = std::move(fallbacks);
  j["oracle_fallback"] = gc.oracle_fallback;

  Json verdict;
  verdict["weakly_stable"] = stability.ok;
  if (!stability.ok)
    verdict["witness"] = {{"element", stability.witness},
                          {"label", g.label(stability.witness)},
                          {"expected", stability.expected},
                          {"actual", stability.actual}};
  j["stability"] = std::move(verdict);
  return j;
}

Json berge_report_json(const BergeReport &report) {
  Json j;
  j["hole_search_bound"] = report.hole_search_bound;
  j["verdict"] = report.verdict == BergeVerdict::CertifiedUpToBound ? "certified-up-to-bound" : "witness-found";
  if (report.witness)
    j["witness"] = {{"kind", to_string(report.witness->kind)}, {"cycle", report.witness->cycle}};
  else
    j["witness"] = nullptr;
  return j;
}

} // namespace powercolor

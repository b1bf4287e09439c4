#include "powercolor/verify.hpp"

#include "powercolor/arith.hpp"
#include "powercolor/coloring.hpp"
#include "powercolor/oracle.hpp"
#include "powercolor/perfectness.hpp"
#include "powercolor/powergraph.hpp"

#include <bit>
#include <chrono>
#include <random>
#include <sstream>

namespace powercolor::verify {

namespace {

using Mask = std::uint32_t;

Mask neighbor_mask(const BitGraph &g, Vertex v) {
  Mask m = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (g.adjacent(v, u))
      m |= Mask{1} << u;
  return m;
}

void require_small(const BitGraph &g, std::size_t limit, const char *what) {
  if (g.vertex_count() > limit)
    throw CapExceeded(std::string(what) + " brute force is limited to " + std::to_string(limit) + " vertices");
}

} // namespace

std::size_t brute_force_clique_number(const BitGraph &g) {
  require_small(g, 20, "clique");
  const std::size_t n = g.vertex_count();
  std::vector<Mask> nb(n);
  for (Vertex v = 0; v < n; ++v)
    nb[v] = neighbor_mask(g, v);
  std::size_t best = 0;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool clique = true;
    for (Vertex v = 0; v < n && clique; ++v)
      if ((s >> v) & 1u)
        clique = (s & ~nb[v] & ~(Mask{1} << v)) == 0;
    if (clique)
      best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
  }
  return best;
}

std::size_t brute_force_chromatic_number(const BitGraph &g) {
  require_small(g, 16, "chromatic");
  const std::size_t n = g.vertex_count();
  if (n == 0)
    return 0;
  std::vector<Mask> nb(n);
  for (Vertex v = 0; v < n; ++v)
    nb[v] = neighbor_mask(g, v);
  const Mask all = (Mask{1} << n) - 1;
  std::vector<bool> independent(all + 1, false);
  for (Mask s = 0; s <= all; ++s) {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v)
      if ((s >> v) & 1u)
        ok = (s & nb[v]) == 0;
    independent[s] = ok;
  }
  // best[s] = fewest independent sets partitioning s; the class holding the
  // lowest vertex of s is enumerated over all its subsets.
  std::vector<std::size_t> best(all + 1, n + 1);
  best[0] = 0;
  for (Mask s = 1; s <= all; ++s) {
    const Mask low = s & (~s + 1);
    const Mask rest = s & ~low;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask cls = sub | low;
      if (independent[cls])
        best[s] = std::min(best[s], best[s & ~cls] + 1);
      if (sub == 0)
        break;
    }
  }
  return best[all];
}

bool brute_force_has_odd_hole(const BitGraph &g) {
  require_small(g, 16, "odd-hole");
  const std::size_t n = g.vertex_count();
  std::vector<Mask> nb(n);
  for (Vertex v = 0; v < n; ++v)
    nb[v] = neighbor_mask(g, v);
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    const int size = std::popcount(s);
    if (size < 5 || size % 2 == 0)
      continue;
    // An induced cycle is 2-regular and connected.
    bool regular = true;
    for (Vertex v = 0; v < n && regular; ++v)
      if ((s >> v) & 1u)
        regular = std::popcount(s & nb[v]) == 2;
    if (!regular)
      continue;
    Mask seen = s & (~s + 1), frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Vertex v = 0; v < n; ++v)
        if ((frontier >> v) & 1u)
          next |= nb[v] & s;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == s)
      return true;
  }
  return false;
}

std::vector<FiniteGroup> theorem_corpus() {
  std::vector<FiniteGroup> out;
  for (u64 n = 1; n <= 48; ++n)
    out.push_back(cyclic(n));
  for (u64 m = 1; 2 * m <= 48; ++m)
    out.push_back(dihedral(m));
  out.push_back(symmetric(3));
  out.push_back(symmetric(4));
  out.push_back(from_permutation_generators(4, {parse_cycles(4, "(0 1 2)"), parse_cycles(4, "(0 1)(2 3)")},
                                            "alternating(4)"));
  out.push_back(quaternion8());
  out.push_back(direct_product(cyclic(6), cyclic(6)));
  out.push_back(direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)));
  out.push_back(direct_product(cyclic(12), cyclic(2)));
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string &why) {
    if (passed)
      detail << why;
    else if (detail.tellp() < 400)
      detail << "; " << why;
    passed = false;
  }
};

Outcome criterion_s5() {
  Outcome o;
  const FiniteGroup s5 = symmetric(5);
  const PowerGraph pg = build_power_graph(s5);
  const u64 e = exponent(s5);
  const u64 p = psi(e);
  const u64 w = omega(s5).value;
  const u64 c = chi(s5);
  const std::size_t clique = max_clique_exact(pg.undirected).size();
  const std::size_t chromatic = chromatic_number_exact(pg.undirected);
  if (e != 60)
    o.fail("exponent " + std::to_string(e) + " != 60");
  if (p != 37)
    o.fail("psi(60) = " + std::to_string(p) + " != 37");
  if (w != 5 || c != 5 || clique != 5 || chromatic != 5)
    o.fail("omega/chi/clique-oracle/chromatic-oracle = " + std::to_string(w) + "/" + std::to_string(c) + "/" +
           std::to_string(clique) + "/" + std::to_string(chromatic) + ", expected 5");
  if (o.passed)
    o.detail << "exponent 60, psi(60) 37, omega 5, chi 5, oracles 5/5";
  return o;
}

Outcome criterion_corpus_equality(std::ostream &log, bool report_fallbacks) {
  Outcome o;
  std::size_t groups = 0, activations = 0;
  for (const FiniteGroup &g : theorem_corpus()) {
    ++groups;
    const PowerGraph pg = build_power_graph(g);
    const GroupColoring gc = color_group(g);
    const u64 w = omega(g).value;
    const std::size_t clique = max_clique_exact(pg.undirected).size();
    const std::size_t chromatic = chromatic_number_exact(pg.undirected);
    const bool proper = !find_conflict(pg.undirected, gc.coloring.assignment);
    if (!proper || gc.coloring.palette_size != w || clique != w || chromatic != w)
      o.fail(g.name() + ": palette " + std::to_string(gc.coloring.palette_size) + ", omega " + std::to_string(w) +
             ", clique " + std::to_string(clique) + ", chromatic " + std::to_string(chromatic) +
             (proper ? "" : ", improper"));
    if (report_fallbacks) {
      activations += gc.fallbacks.size();
      for (const auto &f : gc.fallbacks)
        log << "fallback: " << g.name() << " step " << f.step << " h=" << g.label(f.h) << " intersection "
            << f.intersection_size << " resolved by " << f.resolution << "\n";
    }
  }
  if (report_fallbacks)
    log << "fallback activations over " << groups << " corpus groups: " << activations << "\n";
  if (o.passed) {
    o.detail << groups << " groups, palette = omega = clique oracle = chromatic oracle";
    if (report_fallbacks)
      o.detail << ", " << activations << " fallback activations";
  }
  return o;
}

Outcome criterion_formulas() {
  Outcome o;
  for (u64 n = 1; n <= 100000; ++n) {
    const FactoredInt f(n);
    const u64 a = psi(f), b = psi_closed_form(f);
    if (a != b)
      o.fail("psi(" + std::to_string(n) + ") = " + std::to_string(a) + " but closed form " + std::to_string(b));
    if (n >= 2 && n <= 10000 && ashrafi_value(f) != a)
      o.fail("ashrafi_value(" + std::to_string(n) + ") = " + std::to_string(ashrafi_value(f)) + " != psi " +
             std::to_string(a));
  }
  if (o.passed)
    o.detail << "psi = closed form for n <= 100000, ashrafi = psi for 2 <= n <= 10000";
  return o;
}

Outcome criterion_full_exponent() {
  Outcome o;
  std::size_t checked = 0;
  for (const FiniteGroup &g : theorem_corpus()) {
    if (!is_full_exponent(g))
      continue;
    const u64 e = exponent(g);
    // The formula needs at least one prime; the trivial group has exponent 1.
    if (e == 1)
      continue;
    ++checked;
    const u64 w = omega(g).value, c = chi(g), a = ashrafi_value(FactoredInt(e));
    if (w != a || c != a)
      o.fail(g.name() + ": omega " + std::to_string(w) + ", chi " + std::to_string(c) + ", ashrafi(" +
             std::to_string(e) + ") " + std::to_string(a));
  }
  if (o.passed)
    o.detail << checked << " full-exponent groups with omega = chi = ashrafi_value(exponent)";
  return o;
}

Outcome criterion_prime_step_budget() {
  Outcome o;
  std::size_t steps = 0;
  for (u64 n = 2; n <= 1000; ++n) {
    const FactoredInt nf(n);
    for (std::size_t pos = 0; pos < nf.prime_count(); ++pos) {
      const u64 p = nf.factors()[pos].prime;
      const Coloring base = stable_color_cyclic(n / p);
      try {
        const Coloring ext = extend_prime_step(base, nf, pos);
        ++steps;
        const std::size_t fresh = ext.palette_size - base.palette_size;
        const u64 want = psi(nf) - psi(n / p);
        if (fresh != want)
          o.fail("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " + std::to_string(fresh) +
                 " fresh colors, expected " + std::to_string(want));
        for (u64 y = 0; y < n / p; ++y)
          if (ext.assignment[y * p] != base.assignment[y]) {
            o.fail("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": recolored vertex " +
                   std::to_string(y * p));
            break;
          }
      } catch (const ColorBudgetExceeded &e) {
        o.fail(e.what());
      }
    }
  }
  if (o.passed)
    o.detail << steps << " prime steps, each adding exactly psi(n) - psi(n/p) colors with the input preserved";
  return o;
}

Outcome criterion_weak_stability() {
  Outcome o;
  std::size_t groups = 0;
  for (const FiniteGroup &g : theorem_corpus()) {
    ++groups;
    const GroupColoring gc = color_group(g);
    const WeakStabilityCheck check = verify_weak_stability(g, gc.coloring);
    if (!check.ok)
      o.fail(g.name() + ": <" + g.label(check.witness) + "> carries " + std::to_string(check.actual) +
             " colors, expected " + std::to_string(check.expected));
  }
  if (o.passed)
    o.detail << groups << " groups weakly stable";
  return o;
}

Outcome criterion_berge() {
  Outcome o;
  std::size_t full = 0, capped = 0;
  for (const FiniteGroup &g : theorem_corpus()) {
    const PowerGraph pg = build_power_graph(g);
    const BergeReport report = certify_berge(pg);
    (pg.vertex_count() <= kFullBoundVertexLimit ? full : capped)++;
    if (report.verdict != BergeVerdict::CertifiedUpToBound) {
      std::string cycle;
      for (Vertex v : report.witness->cycle)
        cycle += " " + std::to_string(v);
      o.fail(g.name() + ": " + to_string(report.witness->kind) + cycle);
    }
  }
  if (o.passed)
    o.detail << full << " graphs certified at full length, " << capped << " up to length " << kCappedCycleBound;
  return o;
}

Outcome criterion_oracles() {
  Outcome o;
  std::mt19937_64 rng(20260501);
  std::uniform_int_distribution<std::size_t> size(1, 9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    const double density = 0.15 + 0.7 * unit(rng);
    BitGraph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (unit(rng) < density)
          g.add_edge(u, v);
    const CliqueWitness w = max_clique_exact(g);
    const std::size_t chromatic = chromatic_number_exact(g);
    const std::size_t bf_clique = brute_force_clique_number(g), bf_chromatic = brute_force_chromatic_number(g);
    if (w.size() != bf_clique || !g.is_clique(w.vertices))
      o.fail("trial " + std::to_string(trial) + ": clique " + std::to_string(w.size()) + " vs " +
             std::to_string(bf_clique));
    if (chromatic != bf_chromatic)
      o.fail("trial " + std::to_string(trial) + ": chromatic " + std::to_string(chromatic) + " vs " +
             std::to_string(bf_chromatic));
  }
  if (o.passed)
    o.detail << "200 random graphs, both oracles match exhaustive enumeration";
  return o;
}

struct Spec {
  const char *title;
  double time_limit;
};

constexpr Spec kSpecs[kCriterionCount] = {
    {"S5 counterexample", 10.0},
    {"chi = omega over the corpus", 300.0},
    {"Psi formula consistency", 30.0},
    {"full-exponent formula", 0.0},
    {"prime-step color budget", 120.0},
    {"weak stability", 0.0},
    {"Berge certification", 600.0},
    {"oracle soundness", 0.0},
    {"fallback accounting", 0.0},
};

} // namespace

CriterionResult run_criterion(int id, std::ostream &log) {
  if (id < 1 || id > kCriterionCount)
    throw InputError("no acceptance criterion " + std::to_string(id));
  const Spec &spec = kSpecs[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = spec.title;
  const auto start = Clock::now();
  Outcome o;
  try {
    switch (id) {
    case 1:
      o = criterion_s5();
      break;
    case 2:
      o = criterion_corpus_equality(log, false);
      break;
    case 3:
      o = criterion_formulas();
      break;
    case 4:
      o = criterion_full_exponent();
      break;
    case 5:
      o = criterion_prime_step_budget();
      break;
    case 6:
      o = criterion_weak_stability();
      break;
    case 7:
      o = criterion_berge();
      break;
    case 8:
      o = criterion_oracles();
      break;
    case 9:
      o = criterion_corpus_equality(log, true);
      break;
    }
  } catch (const std::exception &e) {
    o.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (spec.time_limit > 0 && r.seconds > spec.time_limit) {
    std::ostringstream why;
    why << "took " << r.seconds << " s, limit " << spec.time_limit << " s";
    o.fail(why.str());
  }
  r.passed = o.passed;
  r.detail = o.detail.str();
  return r;
}

std::vector<CriterionResult> run_acceptance(std::ostream &log,
                                            const std::function<void(const CriterionResult &)> &on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, log));
    if (on_result)
      on_result(out.back());
  }
  return out;
}

} // namespace powercolor::verify

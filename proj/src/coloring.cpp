#include "powercolor/coloring.hpp"

#include "powercolor/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace powercolor {

namespace {

constexpr Color kUncolored = ~Color{0};

/// Elements of Z/n grouped by the subgroup they generate.
class CyclicClasses {
public:
  explicit CyclicClasses(const FactoredInt &n) : n_(n) {
    const auto &f = n.factors();
    std::size_t total = 1;
    for (const auto &pk : f)
      total *= static_cast<std::size_t>(pk.exponent + 1);
    vectors_.resize(total);
    orders_.resize(total);
    members_.resize(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      DivisorVector v;
      u64 order = 1;
      for (const auto &[p, k] : f) {
        const u64 e = rest % (k + 1);
        rest /= (k + 1);
        v.exponents.push_back(e);
        order *= checked_pow(p, e);
      }
      vectors_[idx] = std::move(v);
      orders_[idx] = order;
    }
    const u64 size = n.value();
    class_of_.resize(size);
    for (u64 x = 0; x < size; ++x) {
      const std::size_t idx = index_of(vector_of_element(n, x));
      class_of_[x] = idx;
      members_[idx].push_back(x);
    }
  }

  std::size_t size() const { return vectors_.size(); }
  const DivisorVector &vector(std::size_t idx) const { return vectors_[idx]; }
  u64 order(std::size_t idx) const { return orders_[idx]; }
  const std::vector<u64> &members(std::size_t idx) const { return members_[idx]; }
  std::size_t class_of(u64 x) const { return class_of_[x]; }

  std::size_t index_of(const DivisorVector &v) const {
    std::size_t idx = 0, stride = 1;
    const auto &f = n_.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
      idx += static_cast<std::size_t>(v.exponents[i]) * stride;
      stride *= static_cast<std::size_t>(f[i].exponent + 1);
    }
    return idx;
  }

private:
  const FactoredInt &n_;
  std::vector<DivisorVector> vectors_;
  std::vector<u64> orders_;
  std::vector<std::vector<u64>> members_;
  std::vector<std::size_t> class_of_;
};

/// Properness of a coloring of Z/n checked class by class: each class is a
/// clique and comparable classes must not share colors.
std::optional<std::pair<Vertex, Vertex>> cyclic_conflict(const CyclicClasses &classes,
                                                         const std::vector<Color> &assignment) {
  std::vector<std::map<Color, u64>> seen(classes.size());
  for (std::size_t ci = 0; ci < classes.size(); ++ci)
    for (u64 x : classes.members(ci)) {
      const Color c = assignment[x];
      if (c == kUncolored)
        continue;
      auto [it, inserted] = seen[ci].emplace(c, x);
      if (!inserted)
        return std::pair{static_cast<Vertex>(it->second), static_cast<Vertex>(x)};
    }
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      if (!classes.vector(a).comparable(classes.vector(b)))
        continue;
      for (const auto &[c, x] : seen[a]) {
        auto it = seen[b].find(c);
        if (it != seen[b].end())
          return std::pair{static_cast<Vertex>(x), static_cast<Vertex>(it->second)};
      }
    }
  return std::nullopt;
}

std::string join_colors(const std::vector<Color> &cs) {
  std::string out = "{";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(cs[i]);
  }
  return out + "}";
}

} // namespace

bool DivisorVector::below(const DivisorVector &other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i])
      return false;
  return true;
}

std::string DivisorVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(exponents[i]);
  }
  return out + ")";
}

DivisorVector vector_of_order(const FactoredInt &n, u64 subgroup_order) {
  if (subgroup_order == 0 || n.value() % subgroup_order != 0)
    throw InputError(std::to_string(subgroup_order) + " does not divide " + std::to_string(n.value()));
  DivisorVector v;
  for (const auto &pk : n.factors()) {
    u64 e = 0;
    while (subgroup_order % pk.prime == 0) {
      subgroup_order /= pk.prime;
      ++e;
    }
    v.exponents.push_back(e);
  }
  return v;
}

DivisorVector vector_of_element(const FactoredInt &n, u64 x) {
  const u64 size = n.value();
  return vector_of_order(n, size / gcd(x % size, size));
}

u64 subgroup_order(const FactoredInt &n, const DivisorVector &v) {
  u64 out = 1;
  for (std::size_t i = 0; i < v.exponents.size(); ++i)
    out = checked_mul(out, checked_pow(n.factors()[i].prime, v.exponents[i]));
  return out;
}

DivisorVector wall_target(const FactoredInt &n, std::size_t prime_pos, const DivisorVector &v) {
  const auto &f = n.factors();
  if (prime_pos >= f.size() || v.exponents.size() != f.size())
    throw InputError("wall_target: vector " + v.to_string() + " does not match " + std::to_string(n.value()));
  if (v.exponents[prime_pos] != f[prime_pos].exponent)
    throw InputError("wall_target: " + v.to_string() + " is not on the wall of prime " +
                     std::to_string(f[prime_pos].prime));
  std::size_t t = f.size();
  for (std::size_t u = 0; u < f.size(); ++u)
    if (v.exponents[u] != f[u].exponent) {
      t = u;
      break;
    }
  if (t == f.size())
    throw InputError("wall_target: the full vector " + v.to_string() + " has no target");
  DivisorVector out = v;
  out.exponents[prime_pos] = f[prime_pos].exponent - 1;
  out.exponents[t] += 1;
  return out;
}

std::size_t count_colors(const Coloring &c, const std::vector<Element> &vertices) {
  std::vector<Color> cs;
  cs.reserve(vertices.size());
  for (auto v : vertices)
    cs.push_back(c.assignment[v]);
  std::ranges::sort(cs);
  return static_cast<std::size_t>(std::ranges::distance(cs.begin(), std::ranges::unique(cs).begin()));
}

Coloring trivial_coloring() {
  Coloring c;
  c.assignment = {0};
  c.palette_size = 1;
  c.provenance.push_back({0, "identity", {}});
  c.log.push_back("step 0: trivial group, color 0 on the identity");
  return c;
}

std::optional<std::pair<Vertex, Vertex>> find_conflict(const BitGraph &g, const std::vector<Color> &assignment) {
  for (const auto &[u, v] : g.edges())
    if (assignment[u] != kUncolored && assignment[u] == assignment[v])
      return std::pair{u, v};
  return std::nullopt;
}

ColorBudgetExceeded::ColorBudgetExceeded(u64 n, u64 prime, DivisorVector wall, std::size_t used,
                                         std::size_t budget)
    : std::runtime_error("prime step p=" + std::to_string(prime) + " into Z/" + std::to_string(n) +
                         " needs " + std::to_string(used) + " fresh colors at wall vector " + wall.to_string() +
                         ", budget is " + std::to_string(budget)),
      wall_(std::move(wall)) {}

Coloring extend_prime_step(const Coloring &c, const FactoredInt &nf, std::size_t prime_pos) {
  const auto &f = nf.factors();
  if (prime_pos >= f.size())
    throw InputError("prime position " + std::to_string(prime_pos) + " out of range for " +
                     std::to_string(nf.value()));
  const u64 n = nf.value();
  const u64 p = f[prime_pos].prime;
  const u64 m = n / p;
  if (c.assignment.size() != m)
    throw InputError("coloring has " + std::to_string(c.assignment.size()) + " vertices, expected " +
                     std::to_string(m));
  for (Color col : c.assignment)
    if (col >= c.palette_size)
      throw InputError("color id " + std::to_string(col) + " outside palette of size " +
                       std::to_string(c.palette_size));
  {
    const FactoredInt mf(m);
    if (auto bad = cyclic_conflict(CyclicClasses(mf), c.assignment))
      throw InputError("input coloring is not proper: " + std::to_string(bad->first) + " and " +
                       std::to_string(bad->second) + " share a color");
  }

  const CyclicClasses classes(nf);
  const std::size_t step = c.log.size();
  const std::size_t budget = psi(nf) - psi(m);
  const std::size_t generator_count = euler_phi(nf);
  const std::size_t wall_budget = budget - generator_count;
  const u64 wall_exp = f[prime_pos].exponent;

  Coloring out;
  out.assignment.assign(n, kUncolored);
  out.provenance = c.provenance;
  out.log = c.log;
  for (u64 y = 0; y < m; ++y)
    out.assignment[y * p] = c.assignment[y];

  DivisorVector full;
  for (const auto &pk : f)
    full.exponents.push_back(pk.exponent);

  std::vector<std::size_t> wall;
  for (std::size_t ci = 0; ci < classes.size(); ++ci)
    if (classes.vector(ci).exponents[prime_pos] == wall_exp && classes.vector(ci) != full)
      wall.push_back(ci);
  std::ranges::sort(wall, [&](std::size_t a, std::size_t b) {
    if (classes.order(a) != classes.order(b))
      return classes.order(a) < classes.order(b);
    return classes.vector(a) < classes.vector(b);
  });

  Color next_id = static_cast<Color>(c.palette_size);
  std::size_t reused_target = 0, reused_pool = 0;
  auto introduce = [&](const std::string &origin) {
    out.provenance.push_back({step, origin, {}});
    return next_id++;
  };

  for (std::size_t w : wall) {
    const DivisorVector &v = classes.vector(w);
    const std::size_t need = classes.members(w).size();

    std::vector<bool> forbidden(c.palette_size + budget, false);
    for (std::size_t u = 0; u < classes.size(); ++u) {
      if (u == w || !classes.vector(u).below(v))
        continue;
      for (u64 x : classes.members(u))
        if (out.assignment[x] != kUncolored)
          forbidden[out.assignment[x]] = true;
    }

    std::vector<Color> chosen;
    std::vector<bool> taken(forbidden.size(), false);
    auto try_take = [&](Color col) {
      if (chosen.size() < need && !forbidden[col] && !taken[col]) {
        taken[col] = true;
        chosen.push_back(col);
        return true;
      }
      return false;
    };

    const std::size_t target = classes.index_of(wall_target(nf, prime_pos, v));
    for (u64 x : classes.members(target))
      if (try_take(out.assignment[x]))
        ++reused_target;
    for (Color col = 0; col < next_id && chosen.size() < need; ++col)
      if (try_take(col))
        ++reused_pool;
    for (Color col : chosen)
      if (auto &notes = out.provenance[col].reused_at; notes.empty() || notes.back() != step)
        notes.push_back(step);
    while (chosen.size() < need) {
      if (static_cast<std::size_t>(next_id) - c.palette_size + 1 > wall_budget)
        throw ColorBudgetExceeded(n, p, v, next_id - c.palette_size + 1, wall_budget);
      const Color col = introduce("fresh on wall " + v.to_string() + " of Z/" + std::to_string(n) +
                                  " at p=" + std::to_string(p));
      taken.resize(std::max<std::size_t>(taken.size(), col + 1), false);
      taken[col] = true;
      chosen.push_back(col);
    }

    const auto &members = classes.members(w);
    for (std::size_t i = 0; i < need; ++i)
      out.assignment[members[i]] = chosen[i];
  }

  const std::size_t wall_fresh = next_id - c.palette_size;
  for (u64 x : classes.members(classes.index_of(full)))
    out.assignment[x] = introduce("generator of Z/" + std::to_string(n));

  const std::size_t fresh = next_id - c.palette_size;
  if (fresh != budget)
    throw ColorBudgetExceeded(n, p, full, fresh, budget);
  out.palette_size = next_id;

  if (auto bad = cyclic_conflict(classes, out.assignment))
    throw TheoremViolation("prime step produced an improper coloring at " + std::to_string(bad->first) + ", " +
                           std::to_string(bad->second));

  std::ostringstream line;
  line << "step " << step << ": Z/" << m << " -> Z/" << n << " (p=" << p << "), " << wall.size()
       << " wall classes, " << reused_target << " target reuses, " << reused_pool << " pool reuses, " << wall_fresh
       << " fresh on walls, " << generator_count << " fresh on generators";
  out.log.push_back(line.str());
  return out;
}

namespace {

u64 largest_prime(u64 x) { return FactoredInt(x).factors().back().prime; }

Coloring climb(Coloring c, u64 from, const std::vector<u64> &primes_down) {
  u64 m = from;
  for (auto it = primes_down.rbegin(); it != primes_down.rend(); ++it) {
    m *= *it;
    const FactoredInt mf(m);
    c = extend_prime_step(c, mf, static_cast<std::size_t>(mf.position_of(*it)));
  }
  return c;
}

} // namespace

Coloring stable_color_cyclic(u64 n) {
  if (n == 0)
    throw InputError("stable_color_cyclic needs n >= 1");
  std::vector<u64> primes_down;
  for (u64 cur = n; cur > 1;) {
    const u64 q = largest_prime(cur);
    primes_down.push_back(q);
    cur /= q;
  }
  return climb(trivial_coloring(), 1, primes_down);
}

CyclicStabilityCheck verify_cyclic_stability(const Coloring &c) {
  const u64 n = c.assignment.size();
  const FactoredInt nf(n);
  for (u64 d : divisors(nf)) {
    std::vector<Element> members;
    for (u64 x = 0; x < n; x += n / d)
      members.push_back(static_cast<Element>(x));
    const std::size_t actual = count_colors(c, members);
    const u64 expected = psi(d);
    if (actual != expected)
      return {false, d, expected, actual};
  }
  return {};
}

Coloring extend_stable(const Coloring &c, u64 n) {
  const u64 m = c.assignment.size();
  if (m == 0 || n % m != 0)
    throw InputError("subgroup order " + std::to_string(m) + " does not divide " + std::to_string(n));
  if (auto check = verify_cyclic_stability(c); !check.ok)
    throw InputError("input coloring is not stable: order-" + std::to_string(check.subgroup_order) +
                     " subgroup uses " + std::to_string(check.actual) + " colors, expected " +
                     std::to_string(check.expected));
  std::vector<u64> primes_down;
  for (u64 cur = n; cur > m;) {
    const u64 q = largest_prime(cur / m);
    primes_down.push_back(q);
    cur /= q;
  }
  return climb(c, m, primes_down);
}

namespace {

/// Backtracking coloring of <h> \ S using palette [0, mu): proper against the
/// whole colored set and weakly stable on every subgroup of <h>.
class IntersectionBacktracker {
public:
  static constexpr std::uint64_t kBudget = 1'000'000;

  IntersectionBacktracker(const PowerGraph &pg, std::vector<Color> &assignment, const std::vector<Element> &powers,
                          u64 mu)
      : pg_(pg), assignment_(assignment), powers_(powers), mu_(mu), m_(powers.size()) {
    for (std::size_t k = 0; k < m_; ++k)
      if (assignment_[powers_[k]] == kUncolored)
        todo_.push_back(k);
    std::ranges::stable_sort(todo_, [&](std::size_t a, std::size_t b) {
      const u64 oa = pg_.orders[powers_[a]], ob = pg_.orders[powers_[b]];
      return oa != ob ? oa < ob : powers_[a] < powers_[b];
    });
    const FactoredInt mf(m_);
    for (u64 d : divisors(mf))
      subgroup_orders_.push_back(d);
  }

  bool run() { return place(0); }

private:
  bool subgroups_ok(std::size_t k) const {
    for (u64 d : subgroup_orders_) {
      const std::size_t stride = m_ / d;
      if (k % stride != 0)
        continue;
      std::vector<Color> cs;
      bool complete = true;
      for (std::size_t y = 0; y < m_; y += stride) {
        const Color c = assignment_[powers_[y]];
        if (c == kUncolored)
          complete = false;
        else
          cs.push_back(c);
      }
      std::ranges::sort(cs);
      const auto distinct =
          static_cast<std::size_t>(std::ranges::distance(cs.begin(), std::ranges::unique(cs).begin()));
      const u64 want = psi(d);
      if (distinct > want || (complete && distinct != want))
        return false;
    }
    return true;
  }

  bool place(std::size_t i) {
    if (++nodes_ > kBudget)
      throw CapExceeded("intersection backtracking budget exhausted");
    if (i == todo_.size())
      return true;
    const std::size_t k = todo_[i];
    const Element x = powers_[k];
    const auto &nb = pg_.undirected.neighbors(x);
    std::vector<bool> blocked(mu_, false);
    for (Vertex u = nb.first(); u < pg_.vertex_count(); u = nb.next(u))
      if (assignment_[u] != kUncolored)
        blocked[assignment_[u]] = true;
    for (Color c = 0; c < mu_; ++c) {
      if (blocked[c])
        continue;
      assignment_[x] = c;
      if (subgroups_ok(k) && place(i + 1))
        return true;
    }
    assignment_[x] = kUncolored;
    return false;
  }

  const PowerGraph &pg_;
  std::vector<Color> &assignment_;
  const std::vector<Element> &powers_;
  u64 mu_;
  std::size_t m_;
  std::vector<std::size_t> todo_;
  std::vector<u64> subgroup_orders_;
  std::uint64_t nodes_ = 0;
};

Element pick_next(const FiniteGroup &g, const VertexSet &covered) {
  Element best = 0;
  u64 best_order = 0;
  for (Element x = 0; x < g.order(); ++x)
    if (!covered.contains(x) && g.element_order(x) > best_order) {
      best = x;
      best_order = g.element_order(x);
    }
  return best;
}

} // namespace

GroupColoring color_group(const FiniteGroup &g) {
  const PowerGraph pg = build_power_graph(g);
  const OmegaResult top = omega(g);
  const std::size_t order = g.order();

  GroupColoring out;
  out.mu = top.value;
  out.seed = top.witness;
  Coloring &col = out.coloring;

  const auto seed_powers = cyclic_subgroup(g, top.witness);
  const Coloring base = stable_color_cyclic(seed_powers.size());
  col.assignment.assign(order, kUncolored);
  col.palette_size = base.palette_size;
  col.provenance = base.provenance;
  col.log = base.log;
  for (std::size_t k = 0; k < seed_powers.size(); ++k)
    col.assignment[seed_powers[k]] = base.assignment[k];

  VertexSet covered(order);
  for (Element x : seed_powers)
    covered.insert(x);
  {
    std::ostringstream line;
    line << "step " << col.log.size() << ": seed <" << g.label(top.witness) << "> of order " << seed_powers.size()
         << " colored with " << base.palette_size << " colors";
    col.log.push_back(line.str());
  }

  while (covered.count() < order && !out.oracle_fallback) {
    const Element h = pick_next(g, covered);
    const auto powers = cyclic_subgroup(g, h);
    const std::size_t m = powers.size();
    const std::size_t step = col.log.size();

    std::vector<std::size_t> inside;
    for (std::size_t k = 0; k < m; ++k)
      if (covered.contains(powers[k]))
        inside.push_back(k);
    const std::size_t t = inside.size();
    const bool is_subgroup = m % t == 0 && std::ranges::all_of(inside, [&](std::size_t k) { return k % (m / t) == 0; });

    std::ostringstream line;
    line << "step " << step << ": add <" << g.label(h) << "> of order " << m << ", intersection of size " << t;

    if (is_subgroup) {
      const std::size_t stride = m / t;
      // Restrict to the intersection and renumber its colors densely.
      Coloring restricted;
      std::vector<Color> dense_to_palette;
      std::map<Color, Color> palette_to_dense;
      for (std::size_t y = 0; y < t; ++y) {
        const Color c = col.assignment[powers[y * stride]];
        auto [it, inserted] = palette_to_dense.emplace(c, static_cast<Color>(dense_to_palette.size()));
        if (inserted) {
          dense_to_palette.push_back(c);
          restricted.provenance.push_back({0, "palette color " + std::to_string(c), {}});
        }
        restricted.assignment.push_back(it->second);
      }
      restricted.palette_size = dense_to_palette.size();

      const Coloring extended = extend_stable(restricted, m);

      std::vector<Color> absent;
      for (Color c = 0; c < out.mu; ++c)
        if (!palette_to_dense.contains(c))
          absent.push_back(c);
      const std::size_t added = extended.palette_size - restricted.palette_size;
      if (added > absent.size())
        throw TheoremViolation("extension of <" + g.label(h) + "> needs " + std::to_string(added) +
                               " colors but only " + std::to_string(absent.size()) + " are free");
      std::vector<Color> relabeled;
      for (std::size_t k = 0; k < m; ++k) {
        if (covered.contains(powers[k]))
          continue;
        const Color local = extended.assignment[k];
        const Color c = local < restricted.palette_size ? dense_to_palette[local]
                                                        : absent[local - restricted.palette_size];
        col.assignment[powers[k]] = c;
        relabeled.push_back(c);
      }
      std::ranges::sort(relabeled);
      relabeled.erase(std::ranges::unique(relabeled).begin(), relabeled.end());
      for (Color c : relabeled)
        if (auto &notes = col.provenance[c].reused_at; notes.empty() || notes.back() != step)
          notes.push_back(step);
      line << ", cyclic; extended by " << added << " colors relabeled onto " << join_colors(relabeled);
    } else {
      FallbackEvent event{step, h, t, "backtracking"};
      bool solved = false;
      try {
        solved = IntersectionBacktracker(pg, col.assignment, powers, out.mu).run();
      } catch (const CapExceeded &) {
        solved = false;
      }
      if (!solved) {
        event.resolution = "exact-oracle";
        const ExactColoring exact = exact_coloring(pg.undirected);
        std::map<Color, Color> renumber;
        for (Element x = 0; x < order; ++x) {
          auto [it, inserted] = renumber.emplace(exact.assignment[x], static_cast<Color>(renumber.size()));
          col.assignment[x] = it->second;
        }
        out.oracle_fallback = true;
      }
      out.fallbacks.push_back(event);
      line << ", not a subgroup; fallback " << event.resolution;
    }

    // Nothing in S \ <h> may touch <h> \ S.
    VertexSet outside_h(order);
    for (Element x = 0; x < order; ++x)
      if (covered.contains(x))
        outside_h.insert(x);
    for (Element y : powers)
      outside_h.erase(y);
    for (Element y : powers) {
      if (covered.contains(y))
        continue;
      if (pg.undirected.neighbors(y).intersection_count(outside_h) != 0)
        throw TheoremViolation("edge between the colored set and <" + g.label(h) + "> outside the intersection");
    }

    for (Element y : powers)
      covered.insert(y);
    col.log.push_back(line.str());
  }

  if (out.oracle_fallback) {
    col.palette_size = 0;
    for (Color c : col.assignment)
      col.palette_size = std::max<std::size_t>(col.palette_size, c + 1);
  }
  if (auto bad = find_conflict(pg.undirected, col.assignment))
    throw TheoremViolation("group coloring is improper at " + std::to_string(bad->first) + ", " +
                           std::to_string(bad->second));
  return out;
}

WeakStabilityCheck verify_weak_stability(const FiniteGroup &g, const Coloring &c) {
  for (Element x = 0; x < g.order(); ++x) {
    const std::size_t actual = count_colors(c, cyclic_subgroup(g, x));
    const u64 expected = psi(g.element_order(x));
    if (actual != expected)
      return {false, x, expected, actual};
  }
  return {};
}

u64 chi(const FiniteGroup &g) {
  const GroupColoring gc = color_group(g);
  const u64 w = omega(g).value;
  if (gc.coloring.palette_size != w)
    throw TheoremViolation("chi = " + std::to_string(gc.coloring.palette_size) + " differs from omega = " +
                           std::to_string(w) + " for " + g.name());
  return gc.coloring.palette_size;
}

} // namespace powercolor

#include "powercolor/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace powercolor {

const char *to_string(GroupAxiom axiom) {
  switch (axiom) {
  case GroupAxiom::Shape:
    return "shape";
  case GroupAxiom::Closure:
    return "closure";
  case GroupAxiom::Identity:
    return "identity";
  case GroupAxiom::Associativity:
    return "associativity";
  case GroupAxiom::Inverse:
    return "inverse";
  }
  return "unknown";
}

namespace {

std::string join(const std::vector<Element> &xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i)
      out += ", ";
    out += std::to_string(xs[i]);
  }
  return out;
}

[[noreturn]] void fail(GroupAxiom axiom, std::vector<Element> witness, const std::string &detail) {
  throw GroupAxiomError(axiom, std::move(witness), detail);
}

} // namespace

GroupAxiomError::GroupAxiomError(GroupAxiom axiom, std::vector<Element> witness, const std::string &detail)
    : InputError(std::string(to_string(axiom)) + " axiom violated" +
                 (witness.empty() ? std::string() : " at (" + join(witness) + ")") +
                 (detail.empty() ? std::string() : ": " + detail)),
      axiom_(axiom), witness_(std::move(witness)) {}

Element FiniteGroup::power(Element a, u64 k) const {
  Element out = identity_;
  k %= orders_[a];
  for (u64 i = 0; i < k; ++i)
    out = mul(out, a);
  return out;
}

FiniteGroup from_cayley_table(const std::vector<std::vector<Element>> &table,
                              Element identity,
                              std::vector<std::string> labels,
                              std::string name) {
  const std::size_t n = table.size();
  if (n == 0)
    fail(GroupAxiom::Shape, {}, "empty table");
  if (n > kMaxGroupOrder)
    throw CapExceeded("group order " + std::to_string(n) + " exceeds table cap " +
                      std::to_string(kMaxGroupOrder));
  for (std::size_t i = 0; i < n; ++i)
    if (table[i].size() != n)
      fail(GroupAxiom::Shape, {static_cast<Element>(i)},
           "row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
               " entries, expected " + std::to_string(n));
  if (identity >= n)
    fail(GroupAxiom::Identity, {identity}, "identity index out of range");
  if (!labels.empty() && labels.size() != n)
    throw InputError("label count " + std::to_string(labels.size()) + " differs from order " +
                     std::to_string(n));

  FiniteGroup g;
  g.order_ = n;
  g.identity_ = identity;
  g.name_ = std::move(name);
  g.table_.resize(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = table[a][b];
      if (ab >= n)
        fail(GroupAxiom::Closure, {a, b}, "product index " + std::to_string(ab) + " out of range");
      g.table_[a * n + b] = ab;
    }

  for (Element a = 0; a < n; ++a)
    if (g.mul(identity, a) != a || g.mul(a, identity) != a)
      fail(GroupAxiom::Identity, {identity, a}, "");

  auto check_triple = [&](Element a, Element b, Element c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      fail(GroupAxiom::Associativity, {a, b, c}, "");
  };
  if (n <= kExhaustiveAssociativityOrder) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          check_triple(a, b, c);
  } else {
    g.associativity_exhaustive_ = false;
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t s = 0; s < kAssociativitySamples; ++s)
      check_triple(pick(rng), pick(rng), pick(rng));
  }

  g.inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b)
      if (g.mul(a, b) == identity && g.mul(b, a) == identity) {
        g.inverse_[a] = b;
        found = true;
      }
    if (!found)
      fail(GroupAxiom::Inverse, {a}, "no two-sided inverse");
  }

  g.orders_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    u64 k = 1;
    for (Element x = a; x != identity; x = g.mul(x, a))
      ++k;
    g.orders_[a] = k;
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (Element a = 0; a < n; ++a)
      labels.push_back(std::to_string(a));
  }
  g.labels_ = std::move(labels);
  return g;
}

namespace {

using Table = std::vector<std::vector<Element>>;

Table square(std::size_t n) { return Table(n, std::vector<Element>(n, 0)); }

Permutation compose(const Permutation &a, const Permutation &b) {
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    out[x] = a[b[x]];
  return out;
}

FiniteGroup from_permutation_list(const std::vector<Permutation> &perms, std::string name) {
  if (perms.size() > kMaxGroupOrder)
    throw CapExceeded("permutation group of order " + std::to_string(perms.size()) +
                      " exceeds table cap " + std::to_string(kMaxGroupOrder));
  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i)
    index.emplace(perms[i], static_cast<Element>(i));
  const std::size_t n = perms.size();
  Table t = square(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = index.at(compose(perms[a], perms[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto &p : perms)
    labels.push_back(cycle_notation(p));
  Permutation id(perms.front().size());
  std::iota(id.begin(), id.end(), 0u);
  return from_cayley_table(t, index.at(id), std::move(labels), std::move(name));
}

void check_bijection(std::size_t degree, const Permutation &p, std::size_t which) {
  if (p.size() != degree)
    throw InputError("generator " + std::to_string(which) + " has length " + std::to_string(p.size()) +
                     ", expected degree " + std::to_string(degree));
  std::vector<bool> seen(degree, false);
  for (auto x : p) {
    if (x >= degree || seen[x])
      throw InputError("generator " + std::to_string(which) + " is not a bijection on {0.." +
                       std::to_string(degree == 0 ? 0 : degree - 1) + "}");
    seen[x] = true;
  }
}

} // namespace

FiniteGroup cyclic(u64 n) {
  if (n == 0)
    throw InputError("cyclic(n) needs n >= 1");
  if (n > kMaxGroupOrder)
    throw CapExceeded("cyclic(" + std::to_string(n) + ") exceeds table cap " + std::to_string(kMaxGroupOrder));
  Table t = square(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      t[a][b] = static_cast<Element>((a + b) % n);
  return from_cayley_table(t, 0, {}, "cyclic(" + std::to_string(n) + ")");
}

FiniteGroup dihedral(u64 m) {
  if (m == 0)
    throw InputError("dihedral(m) needs m >= 1");
  if (2 * m > kMaxGroupOrder)
    throw CapExceeded("dihedral(" + std::to_string(m) + ") exceeds table cap " + std::to_string(kMaxGroupOrder));
  const std::size_t n = 2 * m;
  Table t = square(n);
  auto rot = [&](u64 k) { return static_cast<Element>(k % m); };
  auto ref = [&](u64 k) { return static_cast<Element>(m + k % m); };
  for (u64 a = 0; a < m; ++a)
    for (u64 b = 0; b < m; ++b) {
      // r^a r^b = r^(a+b), r^a s r^b = s r^(b-a), s r^a r^b = s r^(a+b), s r^a s r^b = r^(b-a)
      t[a][b] = rot(a + b);
      t[a][m + b] = ref(b + m - a);
      t[m + a][b] = ref(a + b);
      t[m + a][m + b] = rot(b + m - a);
    }
  std::vector<std::string> labels;
  for (u64 k = 0; k < m; ++k)
    labels.push_back(k == 0 ? "e" : "r^" + std::to_string(k));
  for (u64 k = 0; k < m; ++k)
    labels.push_back(k == 0 ? "s" : "s r^" + std::to_string(k));
  return from_cayley_table(t, 0, std::move(labels), "dihedral(" + std::to_string(m) + ")");
}

FiniteGroup symmetric(u64 n) {
  if (n == 0)
    throw InputError("symmetric(n) needs n >= 1");
  if (n > 8)
    throw CapExceeded("symmetric(n) is limited to n <= 8");
  u64 fact = 1;
  for (u64 k = 2; k <= n; ++k)
    fact *= k;
  if (fact > kMaxGroupOrder)
    throw CapExceeded("symmetric(" + std::to_string(n) + ") has order " + std::to_string(fact) +
                      ", above table cap " + std::to_string(kMaxGroupOrder));
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Permutation> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_permutation_list(perms, "symmetric(" + std::to_string(n) + ")");
}

FiniteGroup quaternion8() {
  // Index 2u + s encodes (-1)^s * unit[u] with units 1, i, j, k.
  // unit_mul[u][v] = (sign, unit) of unit[u] * unit[v].
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> unit_mul{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  Table t = square(8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto [s, u] = unit_mul[a / 2][b / 2];
      const int sign = (a % 2 + b % 2 + s) % 2;
      t[a][b] = static_cast<Element>(2 * u + sign);
    }
  return from_cayley_table(t, 0, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "quaternion8");
}

FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b) {
  const std::size_t na = a.order(), nb = b.order();
  if (na * nb > kMaxGroupOrder)
    throw CapExceeded("direct product of order " + std::to_string(na * nb) + " exceeds table cap " +
                      std::to_string(kMaxGroupOrder));
  const std::size_t n = na * nb;
  Table t = square(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      t[x][y] = static_cast<Element>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element x = 0; x < n; ++x)
    labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
  return from_cayley_table(t, static_cast<Element>(a.identity() * nb + b.identity()), std::move(labels),
                           a.name() + "x" + b.name());
}

FiniteGroup from_permutation_generators(std::size_t degree, const std::vector<Permutation> &gens,
                                        std::string name) {
  if (degree == 0)
    throw InputError("permutation degree must be at least 1");
  for (std::size_t i = 0; i < gens.size(); ++i)
    check_bijection(degree, gens[i], i);

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Permutation> found{id};
  std::map<Permutation, std::size_t> seen{{id, 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const Permutation current = found[queue.front()];
    queue.pop_front();
    for (const auto &g : gens) {
      Permutation next = compose(current, g);
      if (seen.contains(next))
        continue;
      if (found.size() >= kMaxClosureSize)
        throw CapExceeded("permutation closure exceeds " + std::to_string(kMaxClosureSize) + " elements");
      seen.emplace(next, found.size());
      queue.push_back(found.size());
      found.push_back(std::move(next));
    }
  }
  if (name.empty())
    name = "perm(" + std::to_string(degree) + ")";
  return from_permutation_list(found, std::move(name));
}

std::string cycle_notation(const Permutation &perm) {
  std::string out;
  std::vector<bool> done(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == start)
      continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first)
        out += " ";
      out += std::to_string(x);
      first = false;
      x = perm[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::size_t degree, const std::string &text) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::uint32_t> cycle;
  bool open = false;
  std::string number;
  auto flush_number = [&]() {
    if (number.empty())
      return;
    const auto v = std::stoul(number);
    if (v >= degree)
      throw InputError("cycle point " + number + " outside {0.." + std::to_string(degree - 1) + "}");
    cycle.push_back(static_cast<std::uint32_t>(v));
    number.clear();
  };
  std::vector<bool> used(degree, false);
  for (char ch : text) {
    if (ch == '(') {
      if (open)
        throw InputError("nested '(' in cycle text: " + text);
      open = true;
      cycle.clear();
    } else if (ch == ')') {
      if (!open)
        throw InputError("unbalanced ')' in cycle text: " + text);
      flush_number();
      for (auto x : cycle) {
        if (used[x])
          throw InputError("point " + std::to_string(x) + " repeated in cycle text: " + text);
        used[x] = true;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i)
        p[cycle[i]] = cycle[(i + 1) % cycle.size()];
      open = false;
    } else if (ch >= '0' && ch <= '9') {
      if (!open)
        throw InputError("digit outside a cycle in: " + text);
      number += ch;
    } else if (ch == ' ' || ch == ',') {
      flush_number();
    } else {
      throw InputError(std::string("unexpected character '") + ch + "' in cycle text: " + text);
    }
  }
  if (open)
    throw InputError("unterminated cycle in: " + text);
  return p;
}

u64 element_order(const FiniteGroup &g, Element x) { return g.element_order(x); }

std::vector<Element> cyclic_subgroup(const FiniteGroup &g, Element x) {
  std::vector<Element> out{g.identity()};
  for (Element y = x; y != g.identity(); y = g.mul(y, x))
    out.push_back(y);
  return out;
}

u64 exponent(const FiniteGroup &g) {
  u64 out = 1;
  for (auto o : g.element_orders())
    out = lcm(out, o);
  return out;
}

bool is_full_exponent(const FiniteGroup &g) {
  const u64 e = exponent(g);
  return std::ranges::any_of(g.element_orders(), [e](u64 o) { return o == e; });
}

} // namespace powercolor

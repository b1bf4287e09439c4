#include "powercolor/arith.hpp"

#include <algorithm>
#include <string>

namespace powercolor {

u64 checked_mul(u64 a, u64 b) {
  u64 out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw ArithmeticOverflow("u64 overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return out;
}

u64 checked_add(u64 a, u64 b) {
  u64 out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw ArithmeticOverflow("u64 overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return out;
}

u64 checked_pow(u64 base, u64 exponent) {
  u64 out = 1;
  for (u64 i = 0; i < exponent; ++i)
    out = checked_mul(out, base);
  return out;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0)
    return 0;
  return checked_mul(a / gcd(a, b), b);
}

FactoredInt::FactoredInt(u64 n) : value_(n) {
  if (n == 0)
    throw std::invalid_argument("cannot factorize 0");
  for (u64 p = 2; p <= n / p; ++p) {
    if (n % p != 0)
      continue;
    u64 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors_.push_back({p, e});
  }
  if (n > 1)
    factors_.push_back({n, 1});
}

int FactoredInt::position_of(u64 prime) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].prime == prime)
      return static_cast<int>(i);
  return -1;
}

FactoredInt factorize(u64 n) { return FactoredInt(n); }

namespace {

u64 prime_power_phi(u64 p, u64 e) {
  if (e == 0)
    return 1;
  return checked_mul(checked_pow(p, e - 1), p - 1);
}

} // namespace

u64 euler_phi(const FactoredInt &n) {
  u64 out = 1;
  for (const auto &[p, e] : n.factors())
    out = checked_mul(out, prime_power_phi(p, e));
  return out;
}

u64 euler_phi(u64 n) { return euler_phi(FactoredInt(n)); }

u64 psi(const FactoredInt &n) {
  const auto &f = n.factors();
  const std::size_t r = f.size();

  // Divisors are indexed in mixed radix by their exponent vectors; removing a
  // prime always lowers the index, so a single increasing sweep fills the memo.
  std::vector<std::size_t> stride(r, 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    stride[i] = total;
    total *= static_cast<std::size_t>(f[i].exponent + 1);
  }

  std::vector<u64> memo(total, 0);
  std::vector<u64> exps(r, 0);
  memo[0] = 1;
  for (std::size_t idx = 1; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < r; ++i) {
      exps[i] = rest % (f[i].exponent + 1);
      rest /= (f[i].exponent + 1);
    }
    u64 phi = 1;
    u64 best = 0;
    for (std::size_t i = 0; i < r; ++i) {
      phi = checked_mul(phi, prime_power_phi(f[i].prime, exps[i]));
      if (exps[i] > 0)
        best = std::max(best, memo[idx - stride[i]]);
    }
    memo[idx] = checked_add(phi, best);
  }
  return memo[total - 1];
}

u64 psi(u64 n) { return psi(FactoredInt(n)); }

u64 psi_closed_form(const FactoredInt &n) {
  const auto &f = n.factors();
  u64 sum = 1;
  for (std::size_t r = 0; r < f.size(); ++r) {
    u64 term = checked_pow(f[r].prime, f[r].exponent) - 1;
    for (std::size_t j = r + 1; j < f.size(); ++j)
      term = checked_mul(term, prime_power_phi(f[j].prime, f[j].exponent));
    sum = checked_add(sum, term);
  }
  return sum;
}

u64 ashrafi_value(const FactoredInt &n) {
  const auto &f = n.factors();
  if (f.empty())
    throw std::invalid_argument("ashrafi_value needs n >= 2");

  // The formula indexes primes 1..r; p(m) is the m-th prime, 1-based.
  const std::size_t r = f.size();
  auto prime_power = [&](std::size_t m) { return checked_pow(f[m - 1].prime, f[m - 1].exponent); };
  auto phi_of = [&](std::size_t m) { return prime_power_phi(f[m - 1].prime, f[m - 1].exponent); };

  u64 total = prime_power(r);
  for (std::size_t j = 0; j + 2 <= r; ++j) {
    u64 term = prime_power(r - j - 1) - 1;
    for (std::size_t i = 0; i <= j; ++i)
      term = checked_mul(term, phi_of(r - i));
    total = checked_add(total, term);
  }
  return total;
}

std::vector<u64> divisors(const FactoredInt &n) {
  std::vector<u64> out{1};
  for (const auto &[p, e] : n.factors()) {
    const std::size_t prev = out.size();
    u64 pk = 1;
    for (u64 k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < prev; ++i)
        out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace powercolor

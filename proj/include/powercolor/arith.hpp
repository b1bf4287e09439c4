#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace powercolor {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime;
  u64 exponent;

  bool operator==(const PrimePower &) const = default;
};

/// A positive integer together with its prime factorization.
/// Primes are strictly increasing and exponents are at least one; the factor
/// list is empty exactly when the value is 1.
class FactoredInt {
public:
  /// Factorizes n by trial division. Throws std::invalid_argument for n == 0.
  explicit FactoredInt(u64 n);

  u64 value() const { return value_; }
  const std::vector<PrimePower> &factors() const { return factors_; }
  std::size_t prime_count() const { return factors_.size(); }

  /// Position of prime p in factors(), or -1 when p does not divide the value.
  int position_of(u64 prime) const;

private:
  u64 value_;
  std::vector<PrimePower> factors_;
};

class ArithmeticOverflow : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

u64 checked_mul(u64 a, u64 b);
u64 checked_add(u64 a, u64 b);
u64 checked_pow(u64 base, u64 exponent);

FactoredInt factorize(u64 n);

u64 euler_phi(const FactoredInt &n);
u64 euler_phi(u64 n);

/// Largest clique in the power graph of a cyclic group of order n, via
/// Psi(1) = 1, Psi(n) = phi(n) + max over primes p | n of Psi(n/p).
/// Memoized over the divisor lattice of n; every prime divisor is examined.
u64 psi(const FactoredInt &n);
u64 psi(u64 n);

/// Closed form 1 + sum_r (p_r^a_r - 1) prod_{j>r} p_j^(a_j-1) (p_j - 1),
/// primes ascending.
u64 psi_closed_form(const FactoredInt &n);

/// Right-hand side of the full-exponent clique formula
///   p_r^b_r + sum_{j=0}^{r-2} (p_{r-j-1}^b_{r-j-1} - 1) prod_{i=0}^{j} phi(p_{r-i}^b_{r-i}).
/// Throws std::invalid_argument for n == 1.
u64 ashrafi_value(const FactoredInt &n);

/// All positive divisors of n in increasing order.
std::vector<u64> divisors(const FactoredInt &n);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

} // namespace powercolor

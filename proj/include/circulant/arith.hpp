#ifndef CIRCULANT_ARITH_HPP
#define CIRCULANT_ARITH_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace circulant {

struct PrimePower
{
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(PrimePower const &, PrimePower const &) = default;
};

/// Prime-power decomposition of n, primes strictly increasing.
struct Factorization
{
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;

  std::uint64_t radical() const
  {
    std::uint64_t k = 1;
    for (auto const &f : factors)
      k *= f.prime;
    return k;
  }

  /// Exponent of p in n, zero when p does not divide n.
  unsigned exponent_of(std::uint64_t p) const
  {
    for (auto const &f : factors)
      if (f.prime == p)
        return f.exponent;
    return 0;
  }

  friend bool operator==(Factorization const &, Factorization const &) = default;
};

inline std::uint64_t ipow(std::uint64_t base, unsigned exp)
{
  std::uint64_t r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// Trial division; inputs stay at desk scale.
inline Factorization factorize(std::uint64_t n)
{
  if (n == 0)
    throw std::invalid_argument("factorize: n must be positive");

  Factorization result;
  result.n = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0)
      continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    result.factors.push_back({d, e});
  }
  if (n > 1)
    result.factors.push_back({n, 1});
  return result;
}

/// Number of prime factors of n counted with multiplicity.
inline unsigned big_omega(std::uint64_t n)
{
  unsigned total = 0;
  for (auto const &f : factorize(n).factors)
    total += f.exponent;
  return total;
}

inline std::uint64_t euler_phi(std::uint64_t n)
{
  std::uint64_t phi = n;
  for (auto const &f : factorize(n).factors)
    phi = phi / f.prime * (f.prime - 1);
  return phi;
}

/// gcd(k, phi(k)) == 1 for k the radical of n. Under this condition the
/// analyzer's realizable set is complete, not only sound.
inline bool arithmetic_condition(std::uint64_t n)
{
  if (n < 2)
    throw std::invalid_argument("arithmetic_condition: n must be at least 2");
  auto k = factorize(n).radical();
  return std::gcd(k, euler_phi(k)) == 1;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0)
      continue;
    small.push_back(d);
    if (d != n / d)
      large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

} // namespace circulant

#endif // CIRCULANT_ARITH_HPP

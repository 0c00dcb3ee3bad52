#ifndef CIRCULANT_ANALYZER_HPP
#define CIRCULANT_ANALYZER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "arith.hpp"
#include "connection_set.hpp"
#include "digraph.hpp"
#include "permgroup.hpp"

namespace circulant {

/// The unique subgroup of Z_n of order d: {0, n/d, 2n/d, ...}.
inline std::vector<std::uint64_t> subgroup_of_order(std::uint64_t n, std::uint64_t d)
{
  if (d == 0 || n % d != 0)
    throw std::invalid_argument("subgroup_of_order: " + std::to_string(d) + " does not divide " +
                                std::to_string(n));
  std::vector<std::uint64_t> out;
  out.reserve(d);
  for (std::uint64_t k = 0; k < d; ++k)
    out.push_back(k * (n / d));
  return out;
}

namespace detail {

inline unsigned checked_exponent(std::uint64_t n, std::uint64_t p)
{
  auto a = factorize(n).exponent_of(p);
  if (a == 0)
    throw std::invalid_argument("prime " + std::to_string(p) + " does not divide " +
                                std::to_string(n));
  return a;
}

inline void check_level(std::uint64_t p, unsigned a, unsigned level)
{
  if (level < 1 || level + 1 > a)
    throw std::invalid_argument("level " + std::to_string(level) + " for prime " +
                                std::to_string(p) + " outside 1.." + std::to_string(a) + "-1");
}

} // namespace detail

/// Level l of prime p (p^a || n) is valid when S \ W is a union of cosets of
/// P, where P is the subgroup of order p^l and W = P + (Hall p'-subgroup), the
/// subgroup of order p^l * n/p^a.
inline bool coset_condition(ConnectionSet const &s, std::uint64_t p, unsigned level)
{
  auto const n = s.n();
  auto const a = detail::checked_exponent(n, p);
  detail::check_level(p, a, level);

  auto const p_step = n / ipow(p, level);      // generator of P
  auto const w_step = ipow(p, a - level);      // generator of W
  for (auto x : s.members()) {
    if (x % w_step == 0)
      continue;
    for (std::uint64_t t = p_step; t < n; t += p_step)
      if (!s.contains((x + t) % n))
        return false;
  }
  return true;
}

struct PrimeLayers
{
  std::uint64_t p;
  unsigned a;
  std::vector<unsigned> valid_levels;
  /// 0 = l_0 < l_1 < ... < l_m = a.
  std::vector<unsigned> boundaries;
  /// l_j - l_{j-1} for j = 1..m, innermost (smallest subgroup) first.
  std::vector<unsigned> layer_sizes;
  PPartition minimal_sylow;

  /// Wreath factors outermost first, the order a tower is built in.
  std::vector<unsigned> tower_layers() const
  {
    return {layer_sizes.rbegin(), layer_sizes.rend()};
  }
};

struct LayerDecomposition
{
  std::uint64_t n;
  std::vector<PrimeLayers> primes;

  PrimeLayers const *for_prime(std::uint64_t p) const
  {
    for (auto const &pl : primes)
      if (pl.p == p)
        return &pl;
    return nullptr;
  }
};

inline PrimeLayers decompose_prime(ConnectionSet const &s, std::uint64_t p)
{
  PrimeLayers out;
  out.p = p;
  out.a = detail::checked_exponent(s.n(), p);
  out.boundaries.push_back(0);
  for (unsigned l = 1; l < out.a; ++l)
    if (coset_condition(s, p, l)) {
      out.valid_levels.push_back(l);
      out.boundaries.push_back(l);
    }
  out.boundaries.push_back(out.a);
  for (std::size_t j = 1; j < out.boundaries.size(); ++j)
    out.layer_sizes.push_back(out.boundaries[j] - out.boundaries[j - 1]);
  out.minimal_sylow = PPartition(p, out.layer_sizes);
  return out;
}

/// Valid levels and layer sizes for every prime dividing n. Z_n has a single
/// subgroup of each order, so the finest chain is determined by the levels.
inline LayerDecomposition decompose(ConnectionSet const &s)
{
  if (s.n() < 2)
    throw std::invalid_argument("decompose: n must be at least 2");
  LayerDecomposition out{s.n(), {}};
  for (auto const &f : factorize(s.n()).factors)
    out.primes.push_back(decompose_prime(s, f.prime));
  return out;
}

inline AbelianType minimal_group(LayerDecomposition const &d)
{
  std::vector<PPartition> sylow;
  for (auto const &pl : d.primes)
    sylow.push_back(pl.minimal_sylow);
  return AbelianType(std::move(sylow));
}

/// The least abelian group (under the product order) that Cay(Z_n, S) is a
/// Cayley digraph of, as read off the valid levels.
inline AbelianType minimal_group(ConnectionSet const &s) { return minimal_group(decompose(s)); }

struct Realizable
{
  std::vector<AbelianType> groups;
  /// gcd(k, phi(k)) == 1: `groups` is the complete answer. Otherwise it is
  /// sound but may miss groups.
  bool exact;
};

inline Realizable realizable_groups(LayerDecomposition const &d)
{
  return {up_set(minimal_group(d)), arithmetic_condition(d.n)};
}

inline Realizable realizable_groups(ConnectionSet const &s) { return realizable_groups(decompose(s)); }

/// For each prime, the wreath tower over that prime's layers (outermost
/// first). Its automorphism group, acting on the p-coordinate of Z_n, lies
/// in Aut(Cay(Z_n, S)).
inline std::vector<Digraph> product_type_witness(LayerDecomposition const &d)
{
  std::vector<Digraph> out;
  for (auto const &pl : d.primes)
    out.push_back(tower_digraph(pl.p, pl.tower_layers()));
  return out;
}

inline std::vector<Digraph> product_type_witness(ConnectionSet const &s)
{
  return product_type_witness(decompose(s));
}

/// For a valid level: for every coset C of W and every t in P, the map
/// "x -> x + t on C, identity elsewhere" is an automorphism of Cay(Z_n, S).
inline bool translation_check(ConnectionSet const &s, std::uint64_t p, unsigned level)
{
  auto const n = s.n();
  auto const a = detail::checked_exponent(n, p);
  detail::check_level(p, a, level);
  if (!coset_condition(s, p, level))
    throw std::invalid_argument("translation_check: level " + std::to_string(level) +
                                " is not valid for prime " + std::to_string(p));

  std::vector<char> in_s(n, 0);
  for (auto x : s.members())
    in_s[x] = 1;
  auto arc = [&](std::uint64_t u, std::uint64_t v) { return in_s[(v + n - u) % n] != 0; };

  auto const p_step = n / ipow(p, level);
  auto const w_step = ipow(p, a - level);
  // Cosets of W are the residue classes mod w_step.
  for (std::uint64_t c = 0; c < w_step; ++c) {
    auto in_c = [&](std::uint64_t x) { return x % w_step == c; };
    for (std::uint64_t t = p_step; t < n; t += p_step) {
      auto image = [&](std::uint64_t x) { return in_c(x) ? (x + t) % n : x; };
      for (std::uint64_t x = c; x < n; x += w_step)
        for (auto d : s.members()) {
          auto y = (x + d) % n;
          if (!arc(image(x), image(y)))
            return false;
          auto z = (x + n - d) % n;  // arc z -> x
          if (!arc(image(z), image(x)))
            return false;
        }
    }
  }
  return true;
}

/// Chinese-remainder lift of a permutation of Z_{p^a} to Z_n acting on the
/// p-coordinate only.
inline Permutation lift_to_prime_coordinate(Permutation const &local, std::uint64_t n,
                                            std::uint64_t pa)
{
  auto const m = n / pa;
  // x <-> (x mod pa, x mod m); recover x from its pair by table lookup.
  std::vector<std::uint64_t> from_pair(n);
  for (std::uint64_t x = 0; x < n; ++x)
    from_pair[(x % pa) * m + x % m] = x;
  std::vector<Point> img(n);
  for (std::uint64_t x = 0; x < n; ++x)
    img[x] = static_cast<Point>(from_pair[local[static_cast<Point>(x % pa)] * m + x % m]);
  return Permutation(std::move(img));
}

/// Checks the product-type claim with the automorphism engine: every
/// generator of Aut(tower_p), with the tower realized as a circulant on
/// Z_{p^a} and lifted coordinate-wise, is an automorphism of Cay(Z_n, S).
inline bool product_type_holds(ConnectionSet const &s, std::size_t vertex_cap = default_vertex_cap)
{
  auto const d = decompose(s);
  auto const g = cayley_digraph(s);
  for (auto const &pl : d.primes) {
    auto tower = tower_connection_set(pl.p, pl.tower_layers());
    auto aut = automorphism_group(cayley_digraph(tower), vertex_cap);
    for (auto const &x : aut.generators())
      if (!g.is_automorphism(lift_to_prime_coordinate(x, s.n(), tower.n())))
        return false;
  }
  return true;
}

} // namespace circulant

#endif // CIRCULANT_ANALYZER_HPP

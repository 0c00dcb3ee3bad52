#ifndef CIRCULANT_ABELIAN_HPP
#define CIRCULANT_ABELIAN_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "error.hpp"

namespace circulant {

// Abelian groups of order n, the subdivision order on abelian p-groups and
// the induced product order on groups of order n.

/// True iff the multiset `finer` can be split into groups whose sums are
/// exactly the multiset `coarser`. Entry order is irrelevant.
inline bool is_subdivision(std::vector<unsigned> finer, std::vector<unsigned> coarser)
{
  for (auto v : finer)
    if (v == 0)
      throw std::invalid_argument("is_subdivision: entries must be positive");
  for (auto v : coarser)
    if (v == 0)
      throw std::invalid_argument("is_subdivision: entries must be positive");

  auto sum = [](std::vector<unsigned> const &v) {
    return std::accumulate(v.begin(), v.end(), 0u);
  };
  if (sum(finer) != sum(coarser) || finer.size() < coarser.size())
    return false;

  std::sort(finer.begin(), finer.end(), std::greater<>());
  std::sort(coarser.begin(), coarser.end(), std::greater<>());

  // Place the largest remaining piece into some bin with enough room. Bins with
  // equal remaining capacity are interchangeable, so only the first is tried.
  std::vector<unsigned> room = coarser;
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == finer.size())
      return true;
    for (std::size_t b = 0; b < room.size(); ++b) {
      if (room[b] < finer[i])
        continue;
      bool seen = false;
      for (std::size_t c = 0; c < b; ++c)
        if (room[c] == room[b]) {
          seen = true;
          break;
        }
      if (seen)
        continue;
      room[b] -= finer[i];
      bool ok = place(i + 1);
      room[b] += finer[i];
      if (ok)
        return true;
    }
    return false;
  };
  return place(0);
}

/// Abelian p-group Z_{p^{i_1}} x ... x Z_{p^{i_m}} stored as its exponent
/// partition, non-increasing.
class PPartition
{
public:
  PPartition() = default;

  PPartition(std::uint64_t p, std::vector<unsigned> parts) : _p(p), _parts(std::move(parts))
  {
    if (!is_prime(_p))
      throw std::invalid_argument("PPartition: " + std::to_string(_p) + " is not prime");
    if (_parts.empty())
      throw std::invalid_argument("PPartition: at least one part required");
    for (auto v : _parts)
      if (v == 0)
        throw std::invalid_argument("PPartition: parts must be positive");
    std::sort(_parts.begin(), _parts.end(), std::greater<>());
  }

  std::uint64_t prime() const { return _p; }
  std::vector<unsigned> const &parts() const { return _parts; }
  std::size_t rank() const { return _parts.size(); }

  unsigned exponent() const { return std::accumulate(_parts.begin(), _parts.end(), 0u); }
  std::uint64_t order() const { return ipow(_p, exponent()); }
  bool is_cyclic() const { return _parts.size() == 1; }

  friend bool operator==(PPartition const &, PPartition const &) = default;

  friend bool operator<(PPartition const &lhs, PPartition const &rhs)
  {
    if (lhs._p != rhs._p)
      return lhs._p < rhs._p;
    return lhs._parts < rhs._parts;
  }

private:
  std::uint64_t _p = 2;
  std::vector<unsigned> _parts{1};
};

inline bool preceq_p(PPartition const &g, PPartition const &h)
{
  if (g.prime() != h.prime())
    throw std::invalid_argument("preceq_p: groups for different primes");
  return is_subdivision(g.parts(), h.parts());
}

/// Isomorphism type of an abelian group, as its Sylow decomposition.
class AbelianType
{
public:
  /// The trivial group.
  AbelianType() = default;

  explicit AbelianType(std::vector<PPartition> sylow) : _sylow(std::move(sylow))
  {
    std::sort(_sylow.begin(), _sylow.end());
    for (std::size_t i = 1; i < _sylow.size(); ++i)
      if (_sylow[i].prime() == _sylow[i - 1].prime())
        throw std::invalid_argument("AbelianType: repeated prime " +
                                    std::to_string(_sylow[i].prime()));
    for (auto const &s : _sylow)
      _order *= s.order();
  }

  std::uint64_t order() const { return _order; }
  std::vector<PPartition> const &sylow() const { return _sylow; }

  PPartition const *sylow_for(std::uint64_t p) const
  {
    for (auto const &s : _sylow)
      if (s.prime() == p)
        return &s;
    return nullptr;
  }

  bool is_cyclic() const
  {
    return std::all_of(_sylow.begin(), _sylow.end(),
                       [](auto const &s) { return s.is_cyclic(); });
  }

  /// Invariant factors d_1 >= d_2 >= ... with d_{i+1} | d_i.
  std::vector<std::uint64_t> invariant_factors() const
  {
    std::size_t rank = 0;
    for (auto const &s : _sylow)
      rank = std::max(rank, s.rank());
    std::vector<std::uint64_t> d(rank, 1);
    for (auto const &s : _sylow)
      for (std::size_t i = 0; i < s.rank(); ++i)
        d[i] *= ipow(s.prime(), s.parts()[i]);
    return d;
  }

  /// Canonical primary form, e.g. "Z9xZ5", "Z3^2xZ5", "Z4xZ2".
  std::string to_string() const
  {
    if (_sylow.empty())
      return "Z1";
    std::string out;
    for (auto const &s : _sylow) {
      auto const &parts = s.parts();
      for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
          ++j;
        if (!out.empty())
          out += 'x';
        out += 'Z' + std::to_string(ipow(s.prime(), parts[i]));
        if (j - i > 1)
          out += '^' + std::to_string(j - i);
        i = j;
      }
    }
    return out;
  }

  /// Invariant-factor form, e.g. "Z45", "Z12xZ2", "Z3^2".
  std::string to_invariant_string() const
  {
    auto d = invariant_factors();
    if (d.empty())
      return "Z1";
    std::string out;
    for (std::size_t i = 0; i < d.size();) {
      std::size_t j = i;
      while (j < d.size() && d[j] == d[i])
        ++j;
      if (!out.empty())
        out += 'x';
      out += 'Z' + std::to_string(d[i]);
      if (j - i > 1)
        out += '^' + std::to_string(j - i);
      i = j;
    }
    return out;
  }

  friend bool operator==(AbelianType const &, AbelianType const &) = default;

  friend bool operator<(AbelianType const &lhs, AbelianType const &rhs)
  {
    if (lhs._order != rhs._order)
      return lhs._order < rhs._order;
    return lhs._sylow < rhs._sylow;
  }

private:
  std::vector<PPartition> _sylow;
  std::uint64_t _order = 1;
};

inline std::ostream &operator<<(std::ostream &os, AbelianType const &g)
{
  return os << g.to_string();
}

/// Product order: G <= H iff every Sylow subgroup of G subdivides the
/// matching Sylow subgroup of H.
inline bool preceq(AbelianType const &g, AbelianType const &h)
{
  if (g.order() != h.order())
    throw std::invalid_argument("preceq: groups of different order " +
                                std::to_string(g.order()) + " and " +
                                std::to_string(h.order()));
  for (auto const &gs : g.sylow()) {
    auto const *hs = h.sylow_for(gs.prime());
    if (hs == nullptr || !preceq_p(gs, *hs))
      return false;
  }
  return true;
}

/// Partitions of k as non-increasing sequences, ascending lexicographic, so
/// (1,...,1) comes first and (k) last.
inline std::vector<std::vector<unsigned>> integer_partitions(unsigned k)
{
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = 1; part <= std::min(remaining, max_part); ++part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(k, k);
  std::sort(out.begin(), out.end());
  return out;
}

/// All abelian groups of order n, each once, ordered by prime then partition.
inline std::vector<AbelianType> enumerate_abelian(std::uint64_t n)
{
  auto fact = factorize(n);

  std::vector<std::vector<PPartition>> choices;
  for (auto const &f : fact.factors) {
    std::vector<PPartition> per_prime;
    for (auto &parts : integer_partitions(f.exponent))
      per_prime.emplace_back(f.prime, std::move(parts));
    choices.push_back(std::move(per_prime));
  }

  std::vector<AbelianType> out;
  std::vector<PPartition> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      out.emplace_back(pick);
      return;
    }
    for (auto const &c : choices[i]) {
      pick.push_back(c);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Every K of the same order with H <= K, H included, in canonical order.
inline std::vector<AbelianType> up_set(AbelianType const &h)
{
  std::vector<AbelianType> out;
  for (auto &k : enumerate_abelian(h.order()))
    if (preceq(h, k))
      out.push_back(std::move(k));
  return out;
}

/// Cover relations (G, H): G < H with nothing strictly between.
inline std::vector<std::pair<AbelianType, AbelianType>> hasse_edges(std::uint64_t n)
{
  auto groups = enumerate_abelian(n);
  auto const count = groups.size();

  std::vector<std::vector<char>> below(count, std::vector<char>(count, 0));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      below[i][j] = i != j && preceq(groups[i], groups[j]);

  std::vector<std::pair<AbelianType, AbelianType>> out;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (!below[i][j])
        continue;
      bool covered = true;
      for (std::size_t k = 0; k < count && covered; ++k)
        if (below[i][k] && below[k][j])
          covered = false;
      if (covered)
        out.emplace_back(groups[i], groups[j]);
    }
  return out;
}

/// Parses "Z9xZ5", "Z3^2xZ5" or invariant-factor forms such as "Z45".
/// Cyclic factors of composite order are split into prime powers.
inline AbelianType parse_abelian_type(std::string_view text)
{
  std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> by_prime;
  auto add = [&](std::uint64_t p, unsigned e) {
    for (auto &[q, parts] : by_prime)
      if (q == p) {
        parts.push_back(e);
        return;
      }
    by_prime.push_back({p, {e}});
  };

  std::size_t pos = 0;
  auto fail = [&](std::string const &msg) -> AbelianType {
    throw ParseError(msg + " in group name '" + std::string(text) + "'", 1, pos + 1);
  };
  auto read_number = [&]() -> std::uint64_t {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
      fail("expected a number");
    std::uint64_t v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (v > (1ull << 40))
        fail("number too large");
      ++pos;
    }
    return v;
  };

  while (true) {
    if (pos >= text.size() || text[pos] != 'Z')
      return fail("expected 'Z'");
    ++pos;
    auto m = read_number();
    if (m == 0)
      return fail("cyclic factor of order 0");
    unsigned times = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      times = static_cast<unsigned>(read_number());
      if (times == 0)
        return fail("zero multiplicity");
    }
    for (unsigned t = 0; t < times; ++t)
      for (auto const &f : factorize(m).factors)
        add(f.prime, f.exponent);
    if (pos == text.size())
      break;
    if (text[pos] != 'x')
      return fail("expected 'x'");
    ++pos;
  }

  std::vector<PPartition> sylow;
  for (auto &[p, parts] : by_prime)
    sylow.emplace_back(p, std::move(parts));
  return AbelianType(std::move(sylow));
}

} // namespace circulant

#endif // CIRCULANT_ABELIAN_HPP

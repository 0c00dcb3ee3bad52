#ifndef CIRCULANT_ORACLE_HPP
#define CIRCULANT_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "abelian.hpp"
#include "analyzer.hpp"
#include "connection_set.hpp"
#include "digraph.hpp"
#include "permgroup.hpp"

namespace circulant {

namespace detail {

/// Brute-force search for regular abelian subgroups inside an enumerated
/// permutation group. Only fixed-point-free elements with all cycles of equal
/// length can lie in a regular abelian subgroup, so the search runs over that
/// pool, indexed for fast products.
class RegularSubgroupSearch
{
public:
  RegularSubgroupSearch(PermGroup const &group, std::size_t cap)
    : _degree(group.degree())
  {
    auto elements = enumerate_elements(group, cap);
    for (auto &e : elements)
      if (!e.is_identity() && e.fixed_point_count() == 0 && e.is_semiregular()) {
        _index.emplace(e, _pool.size());
        _order.push_back(e.order());
        _pool.push_back(std::move(e));
      }
    _class = conjugacy_classes(group.generators());
  }

  /// A regular subgroup of type `h` exists.
  bool contains(AbelianType const &h)
  {
    auto factors = h.invariant_factors();
    if (factors.empty())
      return _degree == 1;
    if (h.order() != _degree)
      return false;

    _targets = factors;
    _visited.assign(factors.size(), {});
    std::vector<char> seen_class(_pool.size(), 0);
    for (std::size_t i = 0; i < _pool.size(); ++i) {
      if (_order[i] != factors[0] || seen_class[_class[i]])
        continue;
      seen_class[_class[i]] = 1;
      std::vector<std::size_t> group{i};
      for (auto x = _pool[i] * _pool[i]; !x.is_identity(); x = x * _pool[i])
        group.push_back(_index.at(x));
      if (extend(group, {i}, 1))
        return true;
    }
    return false;
  }

private:
  // `group` holds the pool indices of the non-identity elements of the
  // current semiregular abelian subgroup generated by `gens`.
  bool extend(std::vector<std::size_t> const &group, std::vector<std::size_t> const &gens,
              std::size_t level)
  {
    if (level == _targets.size())
      return true;

    auto key = group;
    std::sort(key.begin(), key.end());
    if (!_visited[level].insert(key).second)
      return false;

    std::vector<char> in_group(_pool.size(), 0);
    for (auto i : group)
      in_group[i] = 1;

    for (std::size_t c = 0; c < _pool.size(); ++c) {
      if (_order[c] != _targets[level] || in_group[c])
        continue;
      auto const &g = _pool[c];
      bool commutes = true;
      for (auto k : gens)
        if (_pool[k] * g != g * _pool[k]) {
          commutes = false;
          break;
        }
      if (!commutes)
        continue;

      // <K, g> = union of K g^j; it must have |K| * order(g) elements, all
      // fixed-point-free apart from the identity.
      std::vector<std::size_t> next = group;
      std::vector<char> in_next = in_group;
      bool ok = true;
      Permutation power(_degree);
      for (std::uint64_t j = 1; j < _order[c] && ok; ++j) {
        power = power * g;
        for (std::size_t t = 0; t <= group.size() && ok; ++t) {
          auto y = t == group.size() ? power : _pool[group[t]] * power;
          auto it = _index.find(y);
          if (it == _index.end() || in_next[it->second]) {
            ok = false;
            break;
          }
          in_next[it->second] = 1;
          next.push_back(it->second);
        }
      }
      if (!ok)
        continue;

      auto next_gens = gens;
      next_gens.push_back(c);
      if (extend(next, next_gens, level + 1))
        return true;
    }
    return false;
  }

  std::vector<std::size_t> conjugacy_classes(std::vector<Permutation> const &gens) const
  {
    std::vector<std::size_t> parent(_pool.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < _pool.size(); ++i)
      for (auto const &s : gens) {
        auto c = s.inverse() * _pool[i] * s;
        auto a = find(i), b = find(_index.at(c));
        if (a != b)
          parent[std::max(a, b)] = std::min(a, b);
      }
    std::vector<std::size_t> out(_pool.size());
    for (std::size_t i = 0; i < _pool.size(); ++i)
      out[i] = find(i);
    return out;
  }

  std::size_t _degree;
  std::vector<Permutation> _pool;
  std::vector<std::uint64_t> _order;
  std::unordered_map<Permutation, std::size_t> _index;
  std::vector<std::size_t> _class;
  std::vector<std::uint64_t> _targets;
  std::vector<std::set<std::vector<std::size_t>>> _visited;
};

} // namespace detail

/// Every abelian type of order n occurring as a regular subgroup of `group`,
/// in canonical order.
inline std::vector<AbelianType> regular_abelian_types(PermGroup const &group, std::uint64_t n,
                                                      std::size_t cap = default_element_cap)
{
  if (group.degree() != n)
    throw std::invalid_argument("regular_abelian_types: group degree " +
                                std::to_string(group.degree()) + " differs from n = " +
                                std::to_string(n));
  detail::RegularSubgroupSearch search(group, cap);
  std::vector<AbelianType> out;
  for (auto const &h : enumerate_abelian(n))
    if (search.contains(h))
      out.push_back(h);
  return out;
}

enum class Verdict { exact_match, sound_subset, mismatch, oracle_capped };

inline std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::exact_match:
    return "exact-match";
  case Verdict::sound_subset:
    return "sound-subset";
  case Verdict::mismatch:
    return "MISMATCH";
  case Verdict::oracle_capped:
    return "oracle-capped";
  }
  return "?";
}

struct ValidationReport
{
  ConnectionSet s;
  std::vector<AbelianType> predicted;
  bool exact = false;
  std::optional<std::vector<AbelianType>> actual;
  Verdict verdict = Verdict::oracle_capped;
  std::optional<std::uint64_t> automorphism_order;
  std::string capped_reason;
};

struct OracleOptions
{
  std::size_t element_cap = default_element_cap;
  std::size_t vertex_cap = default_vertex_cap;
};

inline Verdict classify(std::vector<AbelianType> const &predicted,
                        std::vector<AbelianType> const &actual, bool exact)
{
  bool subset = std::all_of(predicted.begin(), predicted.end(), [&](auto const &g) {
    return std::find(actual.begin(), actual.end(), g) != actual.end();
  });
  bool equal = subset && predicted.size() == actual.size();
  if (!subset || (exact && !equal))
    return Verdict::mismatch;
  return equal ? Verdict::exact_match : Verdict::sound_subset;
}

/// Compares the analyzer's prediction with a brute-force search of
/// Aut(Cay(Z_n, S)). Caps degrade the verdict to oracle-capped.
inline ValidationReport cross_validate(ConnectionSet const &s, OracleOptions const &options = {})
{
  ValidationReport report{s, {}, false, std::nullopt, Verdict::oracle_capped, std::nullopt, {}};
  auto predicted = realizable_groups(s);
  report.predicted = predicted.groups;
  report.exact = predicted.exact;

  try {
    auto aut = automorphism_group(cayley_digraph(s), options.vertex_cap);
    report.automorphism_order = aut.cached_order();
    report.actual = regular_abelian_types(aut, s.n(), options.element_cap);
  } catch (CapacityError const &e) {
    report.capped_reason = e.what();
    return report;
  }
  report.verdict = classify(report.predicted, *report.actual, report.exact);
  return report;
}

} // namespace circulant

#endif // CIRCULANT_ORACLE_HPP

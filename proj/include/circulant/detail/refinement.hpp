#ifndef CIRCULANT_DETAIL_REFINEMENT_HPP
#define CIRCULANT_DETAIL_REFINEMENT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "../permutation.hpp"

namespace circulant::detail {

/// Complete colouring of ordered pairs: arc_color[u*n+v] == 0 means no arc.
/// Loops live on the diagonal.
struct ColoredArcs
{
  std::size_t n = 0;
  std::vector<std::uint32_t> vertex_color;
  std::vector<std::uint32_t> arc_color;

  std::uint32_t arc(std::size_t u, std::size_t v) const { return arc_color[u * n + v]; }
};

using Coloring = std::vector<std::uint32_t>;

struct Side
{
  ColoredArcs const *structure;
  Coloring *colors;
};

inline std::size_t color_count(Coloring const &c)
{
  std::uint32_t m = 0;
  for (auto x : c)
    m = std::max(m, x + 1);
  return c.empty() ? 0 : m;
}

/// Colour refinement run on all sides at once so that the resulting colour
/// numbers are comparable across sides. New colours are ranks of sorted
/// signatures, which makes the refinement label independent. Returns false as
/// soon as the sides have different colour-class multisets.
inline bool refine(std::span<Side> sides)
{
  using Signature = std::vector<std::uint64_t>;
  auto signature = [](ColoredArcs const &s, Coloring const &c, std::size_t v) {
    Signature sig;
    sig.push_back(c[v]);
    sig.push_back(s.arc(v, v));
    std::vector<std::uint64_t> out, in;
    for (std::size_t w = 0; w < s.n; ++w) {
      if (w == v)
        continue;
      if (auto a = s.arc(v, w))
        out.push_back((std::uint64_t{a} << 32) | c[w]);
      if (auto a = s.arc(w, v))
        in.push_back((std::uint64_t{a} << 32) | c[w]);
    }
    std::sort(out.begin(), out.end());
    std::sort(in.begin(), in.end());
    sig.push_back(out.size());
    sig.insert(sig.end(), out.begin(), out.end());
    sig.insert(sig.end(), in.begin(), in.end());
    return sig;
  };

  // Canonicalize the initial colours as well.
  auto renumber = [&](std::vector<std::vector<Signature>> const &sigs) {
    std::map<Signature, std::uint32_t> rank;
    for (auto const &per_side : sigs)
      for (auto const &s : per_side)
        rank.emplace(s, 0);
    std::uint32_t next = 0;
    for (auto &[sig, r] : rank)
      r = next++;
    std::vector<std::size_t> reference;
    for (std::size_t i = 0; i < sides.size(); ++i) {
      std::vector<std::size_t> hist(next, 0);
      for (std::size_t v = 0; v < sigs[i].size(); ++v) {
        auto r = rank[sigs[i][v]];
        (*sides[i].colors)[v] = r;
        ++hist[r];
      }
      if (i == 0)
        reference = std::move(hist);
      else if (hist != reference)
        return std::optional<std::size_t>{};
    }
    return std::optional<std::size_t>{next};
  };

  std::size_t classes = 0;
  {
    std::vector<std::vector<Signature>> sigs;
    for (auto const &side : sides) {
      std::vector<Signature> per;
      for (auto x : *side.colors)
        per.push_back({x});
      sigs.push_back(std::move(per));
    }
    auto r = renumber(sigs);
    if (!r)
      return false;
    classes = *r;
  }

  while (true) {
    std::vector<std::vector<Signature>> sigs;
    for (auto const &side : sides) {
      std::vector<Signature> per;
      for (std::size_t v = 0; v < side.structure->n; ++v)
        per.push_back(signature(*side.structure, *side.colors, v));
      sigs.push_back(std::move(per));
    }
    auto r = renumber(sigs);
    if (!r)
      return false;
    if (*r == classes)
      return true;
    classes = *r;
  }
}

inline bool refine_one(ColoredArcs const &s, Coloring &c)
{
  Side side{&s, &c};
  return refine(std::span<Side>(&side, 1));
}

inline bool refine_two(ColoredArcs const &a, Coloring &ca, ColoredArcs const &b, Coloring &cb)
{
  Side sides[2] = {{&a, &ca}, {&b, &cb}};
  return refine(sides);
}

inline void individualize(Coloring &c, std::size_t v)
{
  c[v] = static_cast<std::uint32_t>(color_count(c));
}

inline bool is_discrete(Coloring const &c) { return color_count(c) == c.size(); }

/// Smallest vertex lying in a non-singleton colour class, or n if discrete.
inline std::size_t first_unresolved(Coloring const &c)
{
  std::vector<std::size_t> size(color_count(c), 0);
  for (auto x : c)
    ++size[x];
  for (std::size_t v = 0; v < c.size(); ++v)
    if (size[c[v]] > 1)
      return v;
  return c.size();
}

inline bool is_isomorphism(ColoredArcs const &a, ColoredArcs const &b, std::vector<Point> const &map)
{
  for (std::size_t u = 0; u < a.n; ++u) {
    if (a.vertex_color[u] != b.vertex_color[map[u]])
      return false;
    for (std::size_t v = 0; v < a.n; ++v)
      if (a.arc(u, v) != b.arc(map[u], map[v]))
        return false;
  }
  return true;
}

/// Depth-first search for an isomorphism a -> b consistent with jointly
/// refined colourings. The smallest unresolved vertex of `a` is branched on
/// first and its candidate images are tried in increasing order, so the first
/// hit is the lexicographically least isomorphism.
inline std::optional<std::vector<Point>> find_isomorphism(ColoredArcs const &a, Coloring ca,
                                                          ColoredArcs const &b, Coloring cb)
{
  if (!refine_two(a, ca, b, cb))
    return std::nullopt;

  auto v = first_unresolved(ca);
  if (v == a.n) {
    std::vector<Point> by_color(a.n);
    for (std::size_t w = 0; w < b.n; ++w)
      by_color[cb[w]] = static_cast<Point>(w);
    std::vector<Point> map(a.n);
    for (std::size_t u = 0; u < a.n; ++u)
      map[u] = by_color[ca[u]];
    if (is_isomorphism(a, b, map))
      return map;
    return std::nullopt;
  }

  for (std::size_t w = 0; w < b.n; ++w) {
    if (cb[w] != ca[v])
      continue;
    Coloring na = ca, nb = cb;
    individualize(na, v);
    individualize(nb, w);
    if (auto found = find_isomorphism(a, na, b, nb))
      return found;
  }
  return std::nullopt;
}

struct AutomorphismSearch
{
  std::vector<Permutation> generators;
  /// Orbit length of each base point under the stabilizer of the earlier ones;
  /// the group order is their product.
  std::vector<std::uint64_t> orbit_sizes;
  std::vector<Point> base;
};

inline std::vector<Point> orbit_of(Point start, std::vector<Permutation> const &gens, std::size_t n)
{
  std::vector<char> seen(n, 0);
  std::vector<Point> orbit{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (auto const &g : gens) {
      auto y = g[orbit[i]];
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  return orbit;
}

/// Generators and order of the automorphism group of a coloured structure.
///
/// Walks the leftmost individualization path to get a base, then from the
/// deepest level up looks for automorphisms moving each base point to every
/// cell mate not already in its known orbit. Generators found at deeper levels
/// generate the deeper stabilizers, so each orbit is exact.
inline AutomorphismSearch automorphisms(ColoredArcs const &s)
{
  AutomorphismSearch result;
  Coloring c = s.vertex_color;
  refine_one(s, c);

  std::vector<Coloring> levels;
  while (!is_discrete(c)) {
    auto b = static_cast<Point>(first_unresolved(c));
    levels.push_back(c);
    result.base.push_back(b);
    individualize(c, b);
    refine_one(s, c);
  }

  result.orbit_sizes.assign(levels.size(), 1);
  for (std::size_t i = levels.size(); i-- > 0;) {
    auto const &ci = levels[i];
    auto b = result.base[i];
    auto orbit = orbit_of(b, result.generators, s.n);
    std::vector<char> in_orbit(s.n, 0);
    for (auto x : orbit)
      in_orbit[x] = 1;

    Coloring from = ci;
    individualize(from, b);
    for (std::size_t w = 0; w < s.n; ++w) {
      if (ci[w] != ci[b] || in_orbit[w])
        continue;
      Coloring to = ci;
      individualize(to, w);
      if (auto map = find_isomorphism(s, from, s, to)) {
        result.generators.emplace_back(std::move(*map));
        orbit = orbit_of(b, result.generators, s.n);
        for (auto x : orbit)
          in_orbit[x] = 1;
      }
    }
    result.orbit_sizes[i] = orbit.size();
  }
  return result;
}

} // namespace circulant::detail

#endif // CIRCULANT_DETAIL_REFINEMENT_HPP

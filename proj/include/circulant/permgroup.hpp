#ifndef CIRCULANT_PERMGROUP_HPP
#define CIRCULANT_PERMGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "detail/refinement.hpp"
#include "digraph.hpp"
#include "error.hpp"
#include "permutation.hpp"

namespace circulant {

inline constexpr std::size_t default_element_cap = 1'000'000;
inline constexpr std::size_t default_vertex_cap = 64;

/// Permutation group given by generators. The order may be known up front
/// (automorphism groups carry it from the search); otherwise it is obtained by
/// capped enumeration.
class PermGroup
{
public:
  explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {})
    : _degree(degree), _generators(std::move(generators))
  {
    for (auto const &g : _generators)
      if (g.degree() != _degree)
        throw std::invalid_argument("PermGroup: generator of degree " +
                                    std::to_string(g.degree()) + " in group of degree " +
                                    std::to_string(_degree));
    std::erase_if(_generators, [](Permutation const &g) { return g.is_identity(); });
  }

  std::size_t degree() const { return _degree; }
  std::vector<Permutation> const &generators() const { return _generators; }

  /// Exact order when known without enumeration.
  std::optional<std::uint64_t> const &cached_order() const { return _order; }
  /// Known to exceed 2^64.
  bool order_overflows() const { return _overflow; }

  PermGroup with_order(std::optional<std::uint64_t> order, bool overflow = false) const
  {
    PermGroup g = *this;
    g._order = order;
    g._overflow = overflow;
    return g;
  }

  bool contains_generators_of(PermGroup const &other) const;

private:
  std::size_t _degree;
  std::vector<Permutation> _generators;
  std::optional<std::uint64_t> _order;
  bool _overflow = false;
};

inline PermGroup trivial_group(std::size_t degree) { return PermGroup(degree); }

/// Rotations x -> x + 1 of Z_n.
inline PermGroup cyclic_group(std::size_t n)
{
  std::vector<Point> img(n);
  for (std::size_t x = 0; x < n; ++x)
    img[x] = static_cast<Point>((x + 1) % n);
  return PermGroup(n, {Permutation(std::move(img))}).with_order(n);
}

inline PermGroup symmetric_group(std::size_t n)
{
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<Point> cycle(n);
    std::iota(cycle.begin(), cycle.end(), Point{0});
    gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return PermGroup(n, std::move(gens));
}

/// G wr H on X x Y, point (x, y) at index x*|Y| + y: all maps
/// (x, y) -> (g(x), h_x(y)). Generated by G acting on the first coordinate and
/// H acting on the fibre over x = 0.
inline PermGroup wreath_product(PermGroup const &outer, PermGroup const &inner)
{
  auto const a = outer.degree(), b = inner.degree();
  std::vector<Permutation> gens;
  for (auto const &g : outer.generators()) {
    std::vector<Point> img(a * b);
    for (std::size_t x = 0; x < a; ++x)
      for (std::size_t y = 0; y < b; ++y)
        img[x * b + y] = static_cast<Point>(g[static_cast<Point>(x)] * b + y);
    gens.emplace_back(std::move(img));
  }
  for (auto const &h : inner.generators()) {
    std::vector<Point> img(a * b);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t y = 0; y < b; ++y)
      img[y] = h[static_cast<Point>(y)];
    gens.emplace_back(std::move(img));
  }
  return PermGroup(a * b, std::move(gens));
}

/// G x H acting coordinate-wise on X x Y, point (x, y) at index x*|Y| + y.
inline PermGroup direct_product(PermGroup const &left, PermGroup const &right)
{
  auto const a = left.degree(), b = right.degree();
  std::vector<Permutation> gens;
  for (auto const &g : left.generators()) {
    std::vector<Point> img(a * b);
    for (std::size_t x = 0; x < a; ++x)
      for (std::size_t y = 0; y < b; ++y)
        img[x * b + y] = static_cast<Point>(g[static_cast<Point>(x)] * b + y);
    gens.emplace_back(std::move(img));
  }
  for (auto const &h : right.generators()) {
    std::vector<Point> img(a * b);
    for (std::size_t x = 0; x < a; ++x)
      for (std::size_t y = 0; y < b; ++y)
        img[x * b + y] = static_cast<Point>(x * b + h[static_cast<Point>(y)]);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(a * b, std::move(gens));
}

/// Orbit partition, each orbit sorted, orbits ordered by least point.
inline std::vector<std::vector<Point>> orbits(PermGroup const &g)
{
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(g.degree(), 0);
  for (Point x = 0; x < g.degree(); ++x) {
    if (seen[x])
      continue;
    auto orbit = detail::orbit_of(x, g.generators(), g.degree());
    for (auto y : orbit)
      seen[y] = 1;
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

inline bool is_transitive(PermGroup const &g)
{
  return g.degree() <= 1 || orbits(g).size() == 1;
}

/// Closure of a generating set under multiplication, in breadth-first order
/// starting from the identity. Throws once more than `cap` elements appear.
inline std::vector<Permutation> closure(std::size_t degree, std::vector<Permutation> const &gens,
                                        std::size_t cap)
{
  std::vector<Permutation> elements{Permutation(degree)};
  std::unordered_set<Permutation> seen{elements.front()};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (auto const &s : gens) {
      auto y = elements[i] * s;
      if (seen.insert(y).second) {
        if (elements.size() >= cap)
          throw CapacityError("group enumeration", cap);
        elements.push_back(std::move(y));
      }
    }
  return elements;
}

/// All elements in deterministic breadth-first order.
inline std::vector<Permutation> enumerate_elements(PermGroup const &g,
                                                   std::size_t cap = default_element_cap)
{
  if (g.order_overflows() || (g.cached_order() && *g.cached_order() > cap))
    throw CapacityError("group of known order enumeration", cap);
  return closure(g.degree(), g.generators(), cap);
}

inline std::uint64_t group_order(PermGroup const &g, std::size_t cap = default_element_cap)
{
  if (g.cached_order())
    return *g.cached_order();
  return enumerate_elements(g, cap).size();
}

inline bool PermGroup::contains_generators_of(PermGroup const &other) const
{
  auto elements = enumerate_elements(*this);
  std::unordered_set<Permutation> set(elements.begin(), elements.end());
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](auto const &x) { return set.contains(x); });
}

/// Transitive with order equal to the degree. Enumeration stops as soon as the
/// degree is exceeded, so no cap is needed.
inline bool is_regular(PermGroup const &g)
{
  if (!is_transitive(g))
    return false;
  if (g.cached_order())
    return *g.cached_order() == g.degree();
  try {
    return closure(g.degree(), g.generators(), g.degree()).size() == g.degree();
  } catch (CapacityError const &) {
    return false;
  }
}

class BlockSystem
{
public:
  /// Blocks are sorted internally and ordered by least point.
  explicit BlockSystem(std::vector<std::vector<Point>> blocks) : _blocks(std::move(blocks))
  {
    if (_blocks.empty())
      throw std::invalid_argument("BlockSystem: no blocks");
    std::size_t total = 0;
    for (auto &b : _blocks) {
      if (b.size() != _blocks.front().size())
        throw std::invalid_argument("BlockSystem: blocks of unequal size");
      std::sort(b.begin(), b.end());
      total += b.size();
    }
    std::sort(_blocks.begin(), _blocks.end());
    _block_of.assign(total, total);
    for (std::size_t i = 0; i < _blocks.size(); ++i)
      for (auto x : _blocks[i]) {
        if (x >= total || _block_of[x] != total)
          throw std::invalid_argument("BlockSystem: blocks do not partition the points");
        _block_of[x] = i;
      }
  }

  std::vector<std::vector<Point>> const &blocks() const { return _blocks; }
  std::size_t block_size() const { return _blocks.front().size(); }
  std::size_t block_count() const { return _blocks.size(); }
  std::size_t degree() const { return _block_of.size(); }
  std::size_t block_of(Point x) const { return _block_of[x]; }

  bool is_invariant_under(Permutation const &g) const
  {
    for (auto const &b : _blocks) {
      auto target = _block_of[g[b.front()]];
      for (auto x : b)
        if (_block_of[g[x]] != target)
          return false;
    }
    return true;
  }

  /// Every block of `coarser` is a union of blocks of this system.
  bool refines(BlockSystem const &coarser) const
  {
    if (coarser.degree() != degree())
      return false;
    for (auto const &b : _blocks)
      for (auto x : b)
        if (coarser.block_of(x) != coarser.block_of(b.front()))
          return false;
    return true;
  }

  friend bool operator==(BlockSystem const &a, BlockSystem const &b)
  {
    return a._blocks == b._blocks;
  }

private:
  std::vector<std::vector<Point>> _blocks;
  std::vector<std::size_t> _block_of;
};

namespace detail {

// Finest G-invariant partition in which all of `seed` lie in one class
// (union-find closure under the generators).
inline BlockSystem block_closure(PermGroup const &g, std::vector<Point> const &seed)
{
  auto const n = g.degree();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };

  std::deque<std::pair<Point, Point>> pending;
  auto unite = [&](Point a, Point b) {
    auto ra = find(a), rb = find(b);
    if (ra == rb)
      return;
    parent[std::max(ra, rb)] = std::min(ra, rb);
    pending.emplace_back(a, b);
  };
  for (std::size_t i = 1; i < seed.size(); ++i)
    unite(seed[0], seed[i]);
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    for (auto const &s : g.generators())
      unite(s[a], s[b]);
  }

  std::vector<std::vector<Point>> classes(n);
  for (Point x = 0; x < n; ++x)
    classes[find(x)].push_back(x);
  std::erase_if(classes, [](auto const &c) { return c.empty(); });
  return BlockSystem(std::move(classes));
}

inline void require_transitive(PermGroup const &g, char const *who)
{
  if (!is_transitive(g))
    throw std::invalid_argument(std::string(who) + ": group is not transitive");
}

} // namespace detail

/// Finest block system with a and b in a common block.
inline BlockSystem minimal_block_system(PermGroup const &g, Point a, Point b)
{
  detail::require_transitive(g, "minimal_block_system");
  if (a == b || a >= g.degree() || b >= g.degree())
    throw std::invalid_argument("minimal_block_system: need two distinct points in range");
  return detail::block_closure(g, {a, b});
}

/// Every block system of a transitive group, ordered by block size then blocks.
inline std::vector<BlockSystem> block_systems(PermGroup const &g)
{
  detail::require_transitive(g, "block_systems");
  auto const n = g.degree();
  std::vector<BlockSystem> found{detail::block_closure(g, {0})};
  for (std::size_t i = 0; i < found.size(); ++i) {
    auto const &base = found[i].blocks()[found[i].block_of(0)];
    std::vector<char> inside(n, 0);
    for (auto x : base)
      inside[x] = 1;
    for (Point y = 0; y < n; ++y) {
      if (inside[y])
        continue;
      auto seed = base;
      seed.push_back(y);
      auto next = detail::block_closure(g, seed);
      if (std::find(found.begin(), found.end(), next) == found.end())
        found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](BlockSystem const &a, BlockSystem const &b) {
    if (a.block_size() != b.block_size())
      return a.block_size() < b.block_size();
    return a.blocks() < b.blocks();
  });
  return found;
}

/// A chain of Omega(degree)+1 nested block systems from singletons to one
/// block, each step of prime index. Depth-first over block systems in
/// canonical order; nullopt when no such chain exists.
inline std::optional<std::vector<BlockSystem>> imprimitivity_chain(PermGroup const &g)
{
  detail::require_transitive(g, "imprimitivity_chain");
  auto systems = block_systems(g);
  std::vector<BlockSystem> chain{systems.front()};
  std::function<bool()> extend = [&]() -> bool {
    auto const &last = chain.back();
    if (last.block_count() == 1)
      return true;
    for (auto const &next : systems) {
      if (next.block_size() <= last.block_size() || next.block_size() % last.block_size() != 0)
        continue;
      if (!is_prime(next.block_size() / last.block_size()) || !last.refines(next))
        continue;
      chain.push_back(next);
      if (extend())
        return true;
      chain.pop_back();
    }
    return false;
  };
  if (!extend())
    return std::nullopt;
  return chain;
}

namespace detail {

inline Permutation commutator(Permutation const &x, Permutation const &y)
{
  return x.inverse() * y.inverse() * x * y;
}

/// Normal closure in <ambient> of the subgroup generated by `gens`.
inline std::vector<Permutation> normal_closure(std::size_t degree, std::vector<Permutation> gens,
                                               std::vector<Permutation> const &ambient,
                                               std::size_t cap)
{
  while (true) {
    auto elements = closure(degree, gens, cap);
    std::unordered_set<Permutation> set(elements.begin(), elements.end());
    bool grew = false;
    for (auto const &h : std::vector<Permutation>(gens))
      for (auto const &a : ambient) {
        auto c = a.inverse() * h * a;
        if (!set.contains(c)) {
          gens.push_back(std::move(c));
          grew = true;
          break;
        }
      }
    if (!grew)
      return elements;
  }
}

} // namespace detail

/// Lower central series G = g_1 >= g_2 = [G,G] >= g_3 = [g_2,G] >= ... reaches
/// the identity. g_{i+1} is the normal closure of the commutators of g_i with
/// the generators of G.
inline bool is_nilpotent(PermGroup const &g, std::size_t cap = default_element_cap)
{
  auto current = enumerate_elements(g, cap);
  while (current.size() > 1) {
    std::vector<Permutation> comms;
    std::unordered_set<Permutation> distinct;
    for (auto const &x : current)
      for (auto const &s : g.generators()) {
        auto c = detail::commutator(x, s);
        if (!c.is_identity() && distinct.insert(c).second)
          comms.push_back(std::move(c));
      }
    auto next = detail::normal_closure(g.degree(), std::move(comms), g.generators(), cap);
    if (next.size() == current.size())
      return false;
    current = std::move(next);
  }
  return true;
}

namespace detail {

inline PermGroup group_from_search(std::size_t degree, AutomorphismSearch const &search)
{
  std::uint64_t order = 1;
  bool overflow = false;
  for (auto s : search.orbit_sizes)
    if (__builtin_mul_overflow(order, s, &order))
      overflow = true;
  PermGroup g(degree, search.generators);
  return overflow ? g.with_order(std::nullopt, true) : g.with_order(order);
}

inline void check_vertex_cap(std::size_t n, std::size_t vertex_cap)
{
  if (n > vertex_cap)
    throw CapacityError("automorphism search on " + std::to_string(n) + " vertices", vertex_cap);
}

} // namespace detail

/// Full automorphism group with its exact order.
inline PermGroup automorphism_group(Digraph const &d, std::size_t vertex_cap = default_vertex_cap)
{
  detail::check_vertex_cap(d.vertex_count(), vertex_cap);
  return detail::group_from_search(d.vertex_count(), detail::automorphisms(d.colored()));
}

/// Automorphisms of a structure whose ordered pairs carry colours.
inline PermGroup automorphism_group(detail::ColoredArcs const &s,
                                    std::size_t vertex_cap = default_vertex_cap)
{
  detail::check_vertex_cap(s.n, vertex_cap);
  return detail::group_from_search(s.n, detail::automorphisms(s));
}

/// Colour every ordered pair (x, y) by its orbit under G, diagonal included.
/// Colours are numbered 1.. in order of the least pair of each orbit.
inline detail::ColoredArcs orbital_coloring(PermGroup const &g)
{
  auto const n = g.degree();
  std::vector<std::uint32_t> color(n * n, 0);
  std::uint32_t next = 0;
  for (std::size_t start = 0; start < n * n; ++start) {
    if (color[start] != 0)
      continue;
    color[start] = ++next;
    std::vector<std::size_t> queue{start};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto x = static_cast<Point>(queue[i] / n), y = static_cast<Point>(queue[i] % n);
      for (auto const &s : g.generators()) {
        auto idx = std::size_t{s[x]} * n + s[y];
        if (color[idx] == 0) {
          color[idx] = next;
          queue.push_back(idx);
        }
      }
    }
  }
  detail::ColoredArcs out;
  out.n = n;
  out.vertex_color.assign(n, 0);
  out.arc_color = std::move(color);
  return out;
}

/// The digraphs whose arc sets are the single orbits of G on ordered pairs.
inline std::vector<Digraph> orbital_digraphs(PermGroup const &g)
{
  auto c = orbital_coloring(g);
  std::uint32_t count = 0;
  for (auto x : c.arc_color)
    count = std::max(count, x);
  std::vector<Digraph> out(count, Digraph(std::max<std::size_t>(c.n, 1)));
  for (std::size_t u = 0; u < c.n; ++u)
    for (std::size_t v = 0; v < c.n; ++v)
      out[c.arc(u, v) - 1].add_arc(u, v);
  return out;
}

/// 2-closure: all permutations preserving every orbital of G.
inline PermGroup two_closure(PermGroup const &g, std::size_t vertex_cap = default_vertex_cap)
{
  return automorphism_group(orbital_coloring(g), vertex_cap);
}

} // namespace circulant

#endif // CIRCULANT_PERMGROUP_HPP

#ifndef CIRCULANT_DIGRAPH_HPP
#define CIRCULANT_DIGRAPH_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "connection_set.hpp"
#include "detail/refinement.hpp"
#include "error.hpp"
#include "permutation.hpp"

namespace circulant {

using Arc = std::pair<std::size_t, std::size_t>;

/// Finite digraph on {0, ..., n-1}. Arcs form a set; loops are ordinary arcs.
class Digraph
{
public:
  explicit Digraph(std::size_t vertex_count) : _n(vertex_count), _adj(vertex_count * vertex_count, 0)
  {
    if (vertex_count == 0)
      throw std::invalid_argument("Digraph: vertex count must be positive");
  }

  Digraph(std::size_t vertex_count, std::vector<Arc> const &arcs) : Digraph(vertex_count)
  {
    for (auto [u, v] : arcs)
      add_arc(u, v);
  }

  std::size_t vertex_count() const { return _n; }
  std::size_t arc_count() const { return _arcs; }

  void add_arc(std::size_t u, std::size_t v)
  {
    if (u >= _n || v >= _n)
      throw std::out_of_range("Digraph: arc (" + std::to_string(u) + "," + std::to_string(v) +
                              ") outside vertex range");
    auto &cell = _adj[u * _n + v];
    _arcs += cell == 0;
    cell = 1;
  }

  bool has_arc(std::size_t u, std::size_t v) const { return _adj[u * _n + v] != 0; }

  /// Arcs in lexicographic order.
  std::vector<Arc> arcs() const
  {
    std::vector<Arc> out;
    out.reserve(_arcs);
    for (std::size_t u = 0; u < _n; ++u)
      for (std::size_t v = 0; v < _n; ++v)
        if (has_arc(u, v))
          out.emplace_back(u, v);
    return out;
  }

  Digraph without_loops() const
  {
    Digraph g(_n);
    for (auto [u, v] : arcs())
      if (u != v)
        g.add_arc(u, v);
    return g;
  }

  Digraph reversed() const
  {
    Digraph g(_n);
    for (auto [u, v] : arcs())
      g.add_arc(v, u);
    return g;
  }

  /// True iff p maps the arc set onto itself.
  bool is_automorphism(Permutation const &p) const
  {
    if (p.degree() != _n)
      return false;
    for (auto [u, v] : arcs())
      if (!has_arc(p[static_cast<Point>(u)], p[static_cast<Point>(v)]))
        return false;
    return true;
  }

  detail::ColoredArcs colored() const
  {
    detail::ColoredArcs s;
    s.n = _n;
    s.vertex_color.assign(_n, 0);
    s.arc_color.assign(_adj.begin(), _adj.end());
    return s;
  }

  friend bool operator==(Digraph const &, Digraph const &) = default;

private:
  std::size_t _n;
  std::vector<std::uint8_t> _adj;
  std::size_t _arcs = 0;
};

/// Cay(Z_n, S): arcs g -> g + s.
inline Digraph cayley_digraph(ConnectionSet const &s)
{
  auto n = static_cast<std::size_t>(s.n());
  Digraph g(n);
  for (std::size_t x = 0; x < n; ++x)
    for (auto t : s.members())
      g.add_arc(x, (x + t) % n);
  return g;
}

inline Digraph cayley_digraph(std::uint64_t n, ConnectionSet const &s)
{
  if (s.n() != n)
    throw std::invalid_argument("cayley_digraph: connection set is for Z_" +
                                std::to_string(s.n()) + ", not Z_" + std::to_string(n));
  return cayley_digraph(s);
}

/// outer wr inner on V(outer) x V(inner); vertex (u, v) has index u*|V(inner)| + v.
/// Inner arcs are copied into every fibre, and every outer arc uu' joins all
/// of fibre u to all of fibre u'.
inline Digraph wreath(Digraph const &outer, Digraph const &inner)
{
  auto const m = inner.vertex_count();
  Digraph g(outer.vertex_count() * m);
  for (std::size_t u = 0; u < outer.vertex_count(); ++u)
    for (auto [v, w] : inner.arcs())
      g.add_arc(u * m + v, u * m + w);
  for (auto [u, u2] : outer.arcs())
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w)
        g.add_arc(u * m + v, u2 * m + w);
  return g;
}

inline Digraph directed_cycle(std::size_t k)
{
  Digraph g(k);
  for (std::size_t v = 0; v < k; ++v)
    g.add_arc(v, (v + 1) % k);
  return g;
}

inline Digraph complete_digraph(std::size_t k)
{
  Digraph g(k);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = 0; v < k; ++v)
      if (u != v)
        g.add_arc(u, v);
  return g;
}

inline Digraph empty_digraph(std::size_t k) { return Digraph(k); }

enum class TowerFactor { directed_cycle, digon, independent_pair };

/// Factor choice for a wreath tower whose automorphism group is the iterated
/// wreath product of the cyclic groups Z_{p^{k_i}}: a directed cycle when
/// p^{k_i} > 2; for p^{k_i} == 2 the digon K_2 unless the previous factor was
/// itself K_2, in which case two isolated vertices.
inline std::vector<TowerFactor> tower_factors(std::uint64_t p, std::vector<unsigned> const &layers)
{
  if (!is_prime(p))
    throw std::invalid_argument("tower: " + std::to_string(p) + " is not prime");
  if (layers.empty())
    throw std::invalid_argument("tower: at least one layer required");
  std::vector<TowerFactor> out;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i] == 0)
      throw std::invalid_argument("tower: layers must be positive");
    if (ipow(p, layers[i]) > 2)
      out.push_back(TowerFactor::directed_cycle);
    else if (i == 0 || out.back() != TowerFactor::digon)
      out.push_back(TowerFactor::digon);
    else
      out.push_back(TowerFactor::independent_pair);
  }
  return out;
}

/// Gamma_1 wr ... wr Gamma_j with Gamma_1 outermost, each a circulant on
/// Z_{p^{k_i}} chosen by tower_factors().
inline Digraph tower_digraph(std::uint64_t p, std::vector<unsigned> const &layers)
{
  auto factors = tower_factors(p, layers);
  auto make = [&](std::size_t i) {
    auto size = static_cast<std::size_t>(ipow(p, layers[i]));
    switch (factors[i]) {
    case TowerFactor::directed_cycle:
      return directed_cycle(size);
    case TowerFactor::digon:
      return complete_digraph(2);
    case TowerFactor::independent_pair:
      return empty_digraph(2);
    }
    return empty_digraph(size);
  };
  Digraph g = make(0);
  for (std::size_t i = 1; i < layers.size(); ++i)
    g = wreath(g, make(i));
  return g;
}

/// The tower as a circulant on Z_{p^{k_1+...+k_j}}. For a circulant outer
/// factor Cay(Z_a, T) and inner circulant Cay(Z_b, U), the wreath product is
/// Cay(Z_ab, a*U + (T + aZ_b)); vertex r + a*y corresponds to (r, y).
inline ConnectionSet tower_connection_set(std::uint64_t p, std::vector<unsigned> const &layers)
{
  auto factors = tower_factors(p, layers);
  std::uint64_t size = 1;
  std::vector<std::uint64_t> current;
  for (std::size_t i = layers.size(); i-- > 0;) {
    auto a = ipow(p, layers[i]);
    std::vector<std::uint64_t> next;
    for (auto s : current)
      next.push_back(a * s);
    if (factors[i] != TowerFactor::independent_pair)
      for (std::uint64_t z = 0; z < size; ++z)
        next.push_back(1 + a * z);
    current = std::move(next);
    size *= a;
  }
  return ConnectionSet(size, std::move(current));
}

struct IsomorphismOptions
{
  std::size_t vertex_cap = 64;
};

/// Lexicographically least isomorphism a -> b, or nullopt.
inline std::optional<Permutation> are_isomorphic(Digraph const &a, Digraph const &b,
                                                 IsomorphismOptions const &options = {})
{
  if (a.vertex_count() > options.vertex_cap)
    throw CapacityError("isomorphism test on " + std::to_string(a.vertex_count()) + " vertices",
                        options.vertex_cap);
  if (b.vertex_count() > options.vertex_cap)
    throw CapacityError("isomorphism test on " + std::to_string(b.vertex_count()) + " vertices",
                        options.vertex_cap);
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count())
    return std::nullopt;

  auto sa = a.colored();
  auto sb = b.colored();
  auto map = detail::find_isomorphism(sa, sa.vertex_color, sb, sb.vertex_color);
  if (!map)
    return std::nullopt;
  return Permutation(std::move(*map));
}

// Edge-list text format: "n=<count>" then one "u v" arc per line. Blank lines
// and '#' comments are ignored.

inline void write_edge_list(std::ostream &os, Digraph const &g)
{
  os << "n=" << g.vertex_count() << '\n';
  for (auto [u, v] : g.arcs())
    os << u << ' ' << v << '\n';
}

inline Digraph read_edge_list(std::istream &is)
{
  std::string line;
  std::size_t line_no = 0;
  std::optional<Digraph> g;
  while (std::getline(is, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    if (!g) {
      if (line.compare(first, 2, "n=") != 0)
        throw ParseError("expected header 'n=<count>'", line_no, first + 1);
      std::istringstream in(line.substr(first + 2));
      long long n = 0;
      std::string rest;
      if (!(in >> n) || n <= 0 || (in >> rest))
        throw ParseError("bad vertex count", line_no, first + 3);
      g.emplace(static_cast<std::size_t>(n));
      continue;
    }
    std::istringstream in(line);
    long long u = -1, v = -1;
    std::string rest;
    if (!(in >> u >> v) || (in >> rest))
      throw ParseError("expected 'u v'", line_no, first + 1);
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= g->vertex_count() ||
        static_cast<std::size_t>(v) >= g->vertex_count())
      throw ParseError("arc endpoint out of range", line_no, first + 1);
    g->add_arc(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  if (!g)
    throw ParseError("missing header 'n=<count>'", line_no + 1, 1);
  return *g;
}

inline void write_dot(std::ostream &os, Digraph const &g, std::string const &name = "G")
{
  os << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    os << "  " << v << ";\n";
  for (auto [u, v] : g.arcs())
    os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
}

} // namespace circulant

#endif // CIRCULANT_DIGRAPH_HPP

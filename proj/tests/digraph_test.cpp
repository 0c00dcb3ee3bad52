#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include <circulant/digraph.hpp>
#include <circulant/permgroup.hpp>

#include "brute_force.hpp"

using namespace circulant;

namespace {

Digraph random_digraph(std::mt19937_64 &rng, std::size_t n, double density = 0.35)
{
  std::bernoulli_distribution coin(density);
  Digraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (coin(rng))
        g.add_arc(u, v);
  return g;
}

Digraph relabel(Digraph const &g, Permutation const &p)
{
  Digraph out(g.vertex_count());
  for (auto [u, v] : g.arcs())
    out.add_arc(p[static_cast<Point>(u)], p[static_cast<Point>(v)]);
  return out;
}

std::uint64_t tower_order(std::uint64_t p, std::vector<unsigned> const &layers)
{
  std::uint64_t order = 1, below = 1;
  for (auto k : layers) {
    auto size = ipow(p, k);
    for (std::uint64_t i = 0; i < below; ++i)
      order *= size;
    below *= size;
  }
  return order;
}

} // namespace

TEST(CayleyDigraph, Examples)
{
  auto c3 = cayley_digraph(ConnectionSet(3, {1}));
  EXPECT_EQ(c3.arcs(), (std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}));

  auto c4 = cayley_digraph(ConnectionSet(4, {1, 3}));
  EXPECT_EQ(c4.arc_count(), 8u);
  for (std::size_t v = 0; v < 4; ++v) {
    EXPECT_TRUE(c4.has_arc(v, (v + 1) % 4));
    EXPECT_TRUE(c4.has_arc((v + 1) % 4, v));
  }

  auto g45 = cayley_digraph(ConnectionSet(45, {0, 1, 15, 30}));
  EXPECT_EQ(g45.arc_count(), 180u);
  std::size_t loops = 0;
  for (auto [u, v] : g45.arcs())
    loops += u == v;
  EXPECT_EQ(loops, 45u);
  EXPECT_EQ(g45.without_loops().arc_count(), 135u);
}

TEST(CayleyDigraph, Errors)
{
  EXPECT_THROW(ConnectionSet(5, {5}), std::out_of_range);
  EXPECT_THROW(cayley_digraph(6, ConnectionSet(5, {1})), std::invalid_argument);
}

TEST(CayleyDigraph, RotationIsAnAutomorphism)
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 200;
    std::vector<std::uint64_t> s;
    for (std::uint64_t x = 0; x < n; ++x)
      if (rng() % 4 == 0)
        s.push_back(x);
    auto g = cayley_digraph(ConnectionSet(n, s));
    for (auto [u, v] : g.arcs())
      ASSERT_TRUE(g.has_arc((u + 1) % n, (v + 1) % n));
  }
}

TEST(Wreath, ArcCountFormula)
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_digraph(rng, 1 + rng() % 8).without_loops();
    auto b = random_digraph(rng, 1 + rng() % 8);
    auto w = wreath(a, b);
    auto m = b.vertex_count();
    ASSERT_EQ(w.vertex_count(), a.vertex_count() * m);
    ASSERT_EQ(w.arc_count(), a.vertex_count() * b.arc_count() + a.arc_count() * m * m);
  }
}

TEST(Wreath, ArcCountWithOuterLoops)
{
  // A loop at u already joins every pair inside the fibre over u.
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_digraph(rng, 1 + rng() % 8);
    auto b = random_digraph(rng, 1 + rng() % 8);
    auto loops = a.arc_count() - a.without_loops().arc_count();
    auto m = b.vertex_count();
    ASSERT_EQ(wreath(a, b).arc_count(),
              (a.vertex_count() - loops) * b.arc_count() + a.arc_count() * m * m);
  }
  EXPECT_EQ(wreath(directed_cycle(3), directed_cycle(3)).arc_count(), 36u);
}

TEST(Wreath, AssociativeUpToIsomorphism)
{
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_digraph(rng, 1 + rng() % 3, 0.5);
    auto b = random_digraph(rng, 1 + rng() % 3, 0.5);
    auto c = random_digraph(rng, 1 + rng() % 3, 0.5);
    auto left = wreath(wreath(a, b), c);
    auto right = wreath(a, wreath(b, c));
    ASSERT_TRUE(are_isomorphic(left, right));
  }
}

TEST(Wreath, Examples)
{
  auto block = cayley_digraph(ConnectionSet(9, {3, 6}));
  auto w = wreath(empty_digraph(3), complete_digraph(3));
  EXPECT_TRUE(are_isomorphic(block, w));
  EXPECT_TRUE(brute::isomorphic(block, w));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_digraph(rng, 1 + rng() % 10);
    auto w1 = wreath(g, empty_digraph(1));
    EXPECT_EQ(w1.arcs(), g.arcs());
    EXPECT_TRUE(are_isomorphic(w1, g));
  }
}

TEST(Tower, FactorRule)
{
  using F = TowerFactor;
  EXPECT_EQ(tower_factors(3, {1}), std::vector<F>{F::directed_cycle});
  EXPECT_EQ(tower_factors(2, {1, 1}), (std::vector<F>{F::digon, F::independent_pair}));
  EXPECT_EQ(tower_factors(2, {1, 1, 1}), (std::vector<F>{F::digon, F::independent_pair, F::digon}));
  EXPECT_EQ(tower_factors(2, {2, 1}), (std::vector<F>{F::directed_cycle, F::digon}));
  EXPECT_THROW(tower_factors(4, {1}), std::invalid_argument);
  EXPECT_THROW(tower_factors(2, {}), std::invalid_argument);
  EXPECT_THROW(tower_factors(2, {0}), std::invalid_argument);
}

TEST(Tower, Examples)
{
  EXPECT_EQ(tower_digraph(3, {1}).arcs(), directed_cycle(3).arcs());

  auto t = tower_digraph(2, {1, 1});
  EXPECT_EQ(t.arcs(), wreath(complete_digraph(2), empty_digraph(2)).arcs());
  EXPECT_EQ(brute::automorphisms(t).size(), 8u);

  auto t3 = tower_digraph(2, {1, 1, 1});
  EXPECT_EQ(t3.arcs(),
            wreath(wreath(complete_digraph(2), empty_digraph(2)), complete_digraph(2)).arcs());
  EXPECT_EQ(brute::automorphisms(t3).size(), tower_order(2, {1, 1, 1}));
}

TEST(Tower, IsTheCirculantOfItsConnectionSet)
{
  for (std::uint64_t p : {2, 3, 5})
    for (auto const &layers : std::vector<std::vector<unsigned>>{
           {1}, {2}, {1, 1}, {2, 1}, {1, 2}, {1, 1, 1}, {3, 1}, {1, 1, 1, 1}, {2, 2}}) {
      std::uint64_t n = 1;
      for (auto k : layers)
        n *= ipow(p, k);
      if (n > 64)
        continue;
      auto s = tower_connection_set(p, layers);
      ASSERT_EQ(s.n(), n);
      ASSERT_TRUE(are_isomorphic(tower_digraph(p, layers), cayley_digraph(s)));
    }
}

TEST(Tower, AutomorphismOrderMatchesWreathFormula)
{
  for (std::uint64_t p : {2, 3}) {
    auto max_degree = p == 2 ? 16u : 27u;
    for (unsigned total = 1; ipow(p, total) <= max_degree; ++total)
      for (auto const &parts : integer_partitions(total)) {
        std::vector<std::vector<unsigned>> orders{parts};
        std::sort(orders.back().begin(), orders.back().end());
        while (std::next_permutation(orders.back().begin(), orders.back().end()))
          orders.push_back(orders.back());
        std::sort(orders.begin(), orders.end());
        orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
        for (auto const &layers : orders) {
          auto g = automorphism_group(tower_digraph(p, layers));
          ASSERT_TRUE(g.cached_order());
          ASSERT_EQ(*g.cached_order(), tower_order(p, layers)) << p << " " << layers.size();
        }
      }
  }
}

TEST(Isomorphism, Examples)
{
  auto c3 = directed_cycle(3);
  EXPECT_TRUE(are_isomorphic(c3, c3.reversed()));
  EXPECT_FALSE(are_isomorphic(complete_digraph(2), empty_digraph(2)));
  EXPECT_FALSE(are_isomorphic(directed_cycle(4), cayley_digraph(ConnectionSet(4, {2}))));
}

TEST(Isomorphism, VertexCap)
{
  auto g = directed_cycle(65);
  EXPECT_THROW(are_isomorphic(g, g), CapacityError);
  EXPECT_TRUE(are_isomorphic(g, g, IsomorphismOptions{100}));
}

TEST(Isomorphism, WitnessIsLexicographicallyLeast)
{
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + rng() % 6;
    auto a = random_digraph(rng, n, trial % 3 == 0 ? 0.2 : 0.5);
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    std::shuffle(img.begin(), img.end(), rng);
    auto b = relabel(a, Permutation(img));
    std::optional<Permutation> least;
    for (auto const &p : brute::all_permutations(n))
      if (relabel(a, p).arcs() == b.arcs()) {
        least = p;
        break;
      }
    auto got = are_isomorphic(a, b);
    ASSERT_TRUE(got);
    ASSERT_EQ(*got, *least);

    auto c = random_digraph(rng, n, 0.5);
    bool expected = brute::isomorphic(a, c);
    ASSERT_EQ(are_isomorphic(a, c).has_value(), expected);
  }
}

TEST(EdgeList, RoundTrip)
{
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_digraph(rng, 1 + rng() % 12);
    std::stringstream ss;
    write_edge_list(ss, g);
    auto back = read_edge_list(ss);
    ASSERT_EQ(back.vertex_count(), g.vertex_count());
    ASSERT_EQ(back.arcs(), g.arcs());
  }
  std::istringstream commented("# header\nn=3\n0 1  # arc\n\n1 2\n");
  EXPECT_EQ(read_edge_list(commented).arc_count(), 2u);
}

TEST(EdgeList, ParseErrorsCarryPosition)
{
  auto fails_at = [](std::string const &text, std::size_t line) {
    std::istringstream in(text);
    try {
      read_edge_list(in);
    } catch (ParseError const &e) {
      return e.line() == line;
    }
    return false;
  };
  EXPECT_TRUE(fails_at("0 1\n", 1));
  EXPECT_TRUE(fails_at("n=3\n0 1\n0 3\n", 3));
  EXPECT_TRUE(fails_at("n=3\n0\n", 2));
  EXPECT_TRUE(fails_at("n=0\n", 1));
  EXPECT_TRUE(fails_at("", 1));
}

TEST(DigraphType, Basics)
{
  EXPECT_THROW(Digraph(0), std::invalid_argument);
  Digraph g(3);
  EXPECT_THROW(g.add_arc(0, 3), std::out_of_range);
  g.add_arc(0, 1);
  g.add_arc(0, 1);
  EXPECT_EQ(g.arc_count(), 1u);
  EXPECT_TRUE(g.reversed().has_arc(1, 0));
  std::ostringstream dot;
  write_dot(dot, g);
  EXPECT_NE(dot.str().find("0 -> 1"), std::string::npos);
}

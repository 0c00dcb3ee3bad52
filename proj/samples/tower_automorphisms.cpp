// Builds the wreath tower for a prime and layer sequence, checks that it is a
// circulant, and prints the order of its automorphism group.
//
//   tower_automorphisms 2 1 1 1

#include <cstdlib>
#include <iostream>
#include <vector>

#include <circulant/circulant.hpp>

int main(int argc, char **argv)
{
  using namespace circulant;
  std::uint64_t p = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2;
  std::vector<unsigned> layers;
  for (int i = 2; i < argc; ++i)
    layers.push_back(static_cast<unsigned>(std::strtoul(argv[i], nullptr, 10)));
  if (layers.empty())
    layers = {1, 1, 1};

  auto tower = tower_digraph(p, layers);
  auto s = tower_connection_set(p, layers);
  std::cout << "circulant form: " << s.to_string() << '\n';
  std::cout << "isomorphic to Cay(Z_n, S): "
            << (are_isomorphic(tower, cayley_digraph(s)) ? "yes" : "no") << '\n';

  auto aut = automorphism_group(tower);
  if (aut.cached_order())
    std::cout << "|Aut| = " << *aut.cached_order() << '\n';
  else
    std::cout << "|Aut| exceeds 2^64\n";
}

// Prints the abelian groups a circulant is a Cayley digraph of, then asks the
// automorphism oracle for a second opinion.
//
//   two_groups "n=9; S=3,6"

#include <iostream>

#include <circulant/circulant.hpp>

int main(int argc, char **argv)
{
  using namespace circulant;
  auto text = argc > 1 ? argv[1] : "n=9; S=3,6";
  auto s = parse_connection_set(text).set;

  auto d = decompose(s);
  for (auto const &pl : d.primes) {
    std::cout << "p=" << pl.p << " layers (innermost first):";
    for (auto k : pl.layer_sizes)
      std::cout << ' ' << k;
    std::cout << '\n';
  }

  auto r = realizable_groups(d);
  std::cout << "minimal group: " << minimal_group(d) << '\n' << "realizable:";
  for (auto const &g : r.groups)
    std::cout << ' ' << g;
  std::cout << (r.exact ? " (complete)\n" : " (may be incomplete)\n");

  auto report = cross_validate(s);
  std::cout << "oracle: " << to_string(report.verdict);
  if (report.automorphism_order)
    std::cout << ", |Aut| = " << *report.automorphism_order;
  std::cout << '\n';
}

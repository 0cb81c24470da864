// Computes the Kirchhoff index of P_5 three ways and prints them side by side.

#include <pentakirch/pentakirch.hpp>

#include <iostream>

int main() {
  using namespace pentakirch;
  const GraphFamily family{Variant::Cylinder, 5};
  const Graph g = build_chain(family);

  const BigRational closed = kirchhoff_closed(family);
  std::cout << "closed form : " << closed << " = " << to_decimal(closed, 12) << '\n';
  std::cout << "eigenvalues : " << kirchhoff_spectral(g) << '\n';
  std::cout << "resistances : " << resistance_distances(g).pair_sum() << '\n';
  std::cout << "spanning trees: " << spanning_trees_closed(family) << " (Matrix-Tree " << spanning_tree_count(g)
            << ")\n";
}

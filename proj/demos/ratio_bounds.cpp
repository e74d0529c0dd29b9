// Prints the independence-ratio lower bounds for the hypercube family and the
// E8 root graph, using the library directly.

#include <iostream>

#include "udg/udg.hpp"

int main() {
  struct Item {
    udg::GeometricGraph gg;
    int ambient;
  };
  std::vector<Item> items;
  items.push_back({udg::half_cube(5, 2), 5});
  items.push_back({udg::slice_graph(10, 4, 5), 9});
  items.push_back({udg::half_cube(10, 4), 10});
  items.push_back({udg::build_g0(), 8});

  for (const auto& [gg, ambient] : items) {
    const auto r = udg::alpha_vertex_transitive(gg.graph, 0);
    const int n = gg.graph.vertex_count();
    std::cout << gg.graph.name() << ": n=" << n << " alpha=" << *r.alpha()
              << " => chi(R^" << ambient << ") >= " << udg::ratio_lower_bound(n, *r.alpha()) << "\n";
  }
}

// Builds the 2-subdivided quadrilateral, flips its diagonal, and prints the
// cluster variables that appear on the new diagonal.
#include <iostream>

#include "clusterflip/surface.hpp"

int main() {
  const int n = 2;
  auto poly = cflip::quad_pattern(n);
  cflip::Seed seed = poly.initial_seed();

  cflip::FlipPlan plan = poly.flip(0, 2);
  std::cout << "flip of the V1 V3 diagonal, layer by layer:\n";
  for (const auto& layer : plan) {
    std::cout << " ";
    for (const auto& id : layer) std::cout << " " << id;
    std::cout << "\n";
  }

  seed = seed.run_layers(plan);
  std::cout << "variables on the new diagonal V2 V4:\n";
  for (const auto& id : poly.edge_points(1, 3))
    std::cout << "  " << id << " = " << seed.value(id).to_string() << "\n";
  return 0;
}

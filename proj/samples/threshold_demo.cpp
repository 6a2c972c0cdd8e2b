// Builds a two-level hierarchical scheme, splits a secret and recovers it.

#include <iostream>
#include <random>

#include "polyshare/polyshare.hpp"

int main() {
  using namespace polyshare;

  const UniformPolymatroid z({2, 1, 0});
  const DeltaFamily delta = DeltaFamily::parse("{1};{2,3}", z.m());
  const Partition blocks({3, 3, 3});

  const auto c = classify_instance(z, delta, blocks);
  std::cout << "order type: " << to_string(c.hierarchy->type.kind) << "\nminimal authorized vectors:";
  for (const auto& v : c.gamma->min_vectors()) std::cout << " " << format_vector(v);
  std::cout << "\n";

  std::mt19937_64 rng(2024);
  const auto search = search_extension(z, delta, default_prime(z.m()), 200, rng);
  if (!search) {
    std::cerr << "no extension vector: " << search.reason << "\n";
    return 1;
  }
  const auto scheme = assign_vectors(*search.extension, blocks, rng);
  const auto bundle = distribute(scheme, 5, 99);

  const auto set = parse_participants(scheme, "1.1,1.2");
  std::cout << "p = " << scheme.p() << ", secret recovered by {1.1,1.2}: "
            << reconstruct(scheme, set, bundle.shares) << "\n";
  return 0;
}

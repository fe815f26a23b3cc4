#ifndef SGCHAIN_ZOO_HPP_
#define SGCHAIN_ZOO_HPP_

#include <string>
#include <vector>

#include "sgchain/instance.hpp"

namespace sgchain {

// The built-in finite instances the verification suites run over.  Every
// entry carries a parsable document spec alongside the resolved semigroup.
struct ZooEntry {
  std::string id;
  InstanceSpec spec;
  FiniteSemigroup semigroup;
};

std::vector<ZooEntry> const& zoo();

// Seeded random transformation semigroups: k in {3,4,5} points, two or
// three generating maps, rejection-sampled to at most max_size elements.
FiniteSemigroup random_transformation_semigroup(std::uint64_t seed,
                                                std::size_t max_size = 200);

}  // namespace sgchain

#endif  // SGCHAIN_ZOO_HPP_

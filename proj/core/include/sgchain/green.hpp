#ifndef SGCHAIN_GREEN_HPP_
#define SGCHAIN_GREEN_HPP_

#include <vector>

#include "sgchain/semigroup.hpp"

namespace sgchain {

// A finite poset stored as a dense boolean leq matrix.
class Poset {
 public:
  explicit Poset(std::size_t n) : n_(n), leq_(n * n, false) {
    for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = true;
  }

  // Validates reflexivity, antisymmetry and transitivity.
  static Poset from_leq(std::size_t n, std::vector<bool> leq);

  std::size_t size() const { return n_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b]; }
  bool lt(std::size_t a, std::size_t b) const {
    return a != b && leq(a, b);
  }

  void set_leq(std::size_t a, std::size_t b) { leq_[a * n_ + b] = true; }

  // number of elements in a longest chain
  std::size_t height() const;

 private:
  std::size_t n_;
  std::vector<bool> leq_;
};

// Elements of `subset` with no strictly greater element in `subset`.
std::vector<std::size_t> maximal_elements(Poset const& p,
                                          std::vector<std::size_t> subset);

// A maximum-cardinality antichain.  Exact: branch and bound for n <= 24
// (lexicographically least among the maximum ones), chain-partition dual
// via bipartite matching above that.
std::vector<std::size_t> maximum_antichain(Poset const& p);

// A partition of {0..n-1} into classes.  Classes are ordered by their
// least element; class_of maps each element to its class index.
struct Partition {
  std::vector<ElementSet> classes;
  std::vector<std::uint32_t> class_of;

  std::size_t count() const { return classes.size(); }
};

Partition partition_from_keys(std::size_t n,
                              std::vector<ElementSet> const& key_of);

struct GreenStructure {
  Partition r, l, j, h, d;
  // containment order on the R-classes: [a] <= [b] iff aS^1 subset of bS^1
  Poset r_poset{0};
  // principal right/left/two-sided ideals per element, kept for reuse
  std::vector<ElementSet> right_ideal_of, left_ideal_of, ideal_of;
};

GreenStructure compute_green(FiniteSemigroup const& s);

}  // namespace sgchain

#endif  // SGCHAIN_GREEN_HPP_

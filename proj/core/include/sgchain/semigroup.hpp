#ifndef SGCHAIN_SEMIGROUP_HPP_
#define SGCHAIN_SEMIGROUP_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgchain/element_set.hpp"

namespace sgchain {

// A finite semigroup given by its full multiplication table (row index is
// the left factor).  Instances are validated on construction and immutable
// afterwards, so they can be shared freely across threads.
//
// Elements are dense indices 0..size-1; labels are presentation-only.
class FiniteSemigroup {
 public:
  static constexpr std::size_t kMaxSize = 4096;

  // Validates shape, entry ranges, label distinctness, associativity
  // (exhaustively) and the zero/identity axioms when declared.
  static FiniteSemigroup from_table(std::vector<std::string> labels,
                                    std::vector<std::vector<element>> table,
                                    std::optional<element> zero = {},
                                    std::optional<element> identity = {});

  std::size_t size() const { return n_; }
  element mul(element a, element b) const { return table_[a * n_ + b]; }

  std::string const& label(element a) const { return labels_[a]; }
  std::vector<std::string> const& labels() const { return labels_; }
  std::optional<element> zero() const { return zero_; }
  std::optional<element> identity() const { return identity_; }

  // index of a label, if present
  std::optional<element> find_label(std::string const& lab) const;

  ElementSet all() const { return ElementSet::full(n_); }
  ElementSet singleton(element a) const;

  bool same_table(FiniteSemigroup const& other) const;

 private:
  FiniteSemigroup(std::size_t n, std::vector<element> flat,
                  std::vector<std::string> labels, std::optional<element> zero,
                  std::optional<element> identity)
      : n_(n),
        table_(std::move(flat)),
        labels_(std::move(labels)),
        zero_(zero),
        identity_(identity) {}

  std::size_t n_;
  std::vector<element> table_;  // row-major, n_ * n_
  std::vector<std::string> labels_;
  std::optional<element> zero_;
  std::optional<element> identity_;
};

// S^1: returns S unchanged if an identity is declared, otherwise a copy of
// size+1 with a fresh identity adjoined (labelled "1", primed on collision).
FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);

// S^0, dually (fresh label "0").
FiniteSemigroup adjoin_zero(FiniteSemigroup const& s);

// {xy : x in X, y in Y}
ElementSet product_set(FiniteSemigroup const& s, ElementSet const& x,
                       ElementSet const& y);

// Least superset of X closed under multiplication.
ElementSet closure(FiniteSemigroup const& s, ElementSet const& x);

// The semigroup generated by total maps on {0..k-1} under right-action
// composition: point . (f g) = g(f(point)).  With this convention two
// constant maps generate the right zero semigroup RZ_k.  Zero and identity
// elements are detected and declared on the result.
FiniteSemigroup from_transformations(
    std::size_t k, std::vector<std::vector<element>> const& maps);

struct RegularityReport {
  bool regular;
  // witness[a] = some b with a b a = a, when it exists
  std::vector<std::optional<element>> witness;
  std::optional<element> failing;  // least non-regular element
};

RegularityReport is_regular(FiniteSemigroup const& s);

ElementSet idempotents(FiniteSemigroup const& s);

// a in aS
bool has_local_right_identity(FiniteSemigroup const& s, element a);

// Restriction of the table to a multiplicatively closed subset.  Returns
// the subsemigroup together with the list mapping its indices back to
// elements of s.  Zero and identity of the restriction are re-detected.
std::pair<FiniteSemigroup, std::vector<element>> subsemigroup(
    FiniteSemigroup const& s, ElementSet const& closed);

// The opposite semigroup (transposed table).  Left-sided notions of s are
// right-sided notions of the transpose, which the dual computations use.
FiniteSemigroup transpose(FiniteSemigroup const& s);

}  // namespace sgchain

#endif  // SGCHAIN_SEMIGROUP_HPP_

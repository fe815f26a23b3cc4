#ifndef SGCHAIN_ACTS_HPP_
#define SGCHAIN_ACTS_HPP_

#include <optional>
#include <vector>

#include "sgchain/green.hpp"
#include "sgchain/semigroup.hpp"

namespace sgchain {

// A finite right act of a semigroup on a set of points.  The semigroup is
// held by value, so an Act is self-contained and immutable.
//
// A zero of an act is a point fixed by every semigroup element; it is
// optional and independent of any zero the semigroup may have.
class Act {
 public:
  // Validates (a s) t == a (st) exhaustively, and the zero axiom when a
  // zero point is declared.
  static Act from_table(FiniteSemigroup s,
                        std::vector<std::vector<element>> action,
                        std::optional<element> zero = {});

  // S acting on itself by right multiplication (the act S_S).
  static Act regular(FiniteSemigroup s);

  std::size_t carrier_size() const { return carrier_; }
  FiniteSemigroup const& over() const { return over_; }
  std::optional<element> zero() const { return zero_; }

  element act(element point, element s) const {
    return action_[point * over_.size() + s];
  }

  bool same_table(Act const& other) const;

 private:
  Act(FiniteSemigroup s, std::size_t carrier, std::vector<element> flat,
      std::optional<element> zero)
      : over_(std::move(s)),
        carrier_(carrier),
        action_(std::move(flat)),
        zero_(zero) {}

  FiniteSemigroup over_;
  std::size_t carrier_;
  std::vector<element> action_;  // carrier_ x |S|
  std::optional<element> zero_;
};

// X S^1 within the act
ElementSet generated_subact(Act const& a, ElementSet const& x);

bool is_subact(Act const& a, ElementSet const& b);

struct ActQuotient {
  Act quotient;
  // carrier of a -> carrier of quotient (collapsed points map to the zero)
  std::vector<element> map;
};

// Rees quotient of the act by a subact: points of B collapse to a fresh
// zero point (placed last).
ActQuotient act_rees_quotient(Act const& a, ElementSet const& b);

struct RsClasses {
  Partition classes;           // R_S-classes of the carrier
  Poset poset{0};              // containment order on the classes
  std::vector<ElementSet> subact_of;  // xS^1 per point
};

RsClasses rs_class_poset(Act const& a);

// Every subact, enumerated as the non-empty down-closed unions of
// R_S-classes.  Guarded to carriers of at most 20 points.
std::vector<ElementSet> all_subacts(Act const& a);

bool is_simple_act(Act const& a);
bool is_0_simple_act(Act const& a);

}  // namespace sgchain

#endif  // SGCHAIN_ACTS_HPP_

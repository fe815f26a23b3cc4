#ifndef SGCHAIN_IDEALS_HPP_
#define SGCHAIN_IDEALS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgchain/green.hpp"
#include "sgchain/semigroup.hpp"

namespace sgchain {

// aS^1 = {a} u aS
ElementSet principal_right_ideal(FiniteSemigroup const& s, element a);
// S^1 a
ElementSet principal_left_ideal(FiniteSemigroup const& s, element a);
// S^1 a S^1
ElementSet principal_ideal(FiniteSemigroup const& s, element a);

// X S^1, S^1 X, S^1 X S^1
ElementSet generated_right_ideal(FiniteSemigroup const& s, ElementSet const& x);
ElementSet generated_left_ideal(FiniteSemigroup const& s, ElementSet const& x);
ElementSet generated_ideal(FiniteSemigroup const& s, ElementSet const& x);

struct IdealCheck {
  bool ok;
  // (element, multiplier) whose product escapes, and on which side
  std::optional<std::pair<element, element>> witness;
  bool left_failure = false;

  explicit operator bool() const { return ok; }
};

IdealCheck is_right_ideal(FiniteSemigroup const& s, ElementSet const& i);
IdealCheck is_left_ideal(FiniteSemigroup const& s, ElementSet const& i);
IdealCheck is_ideal(FiniteSemigroup const& s, ElementSet const& i);

struct MnIdealCheck {
  bool ok;
  std::optional<element> witness;  // element of A^m S A^n outside A
};

// A must be a subsemigroup (checked); decides A^m S A^n subset of A.
MnIdealCheck is_mn_ideal(FiniteSemigroup const& s, ElementSet const& a,
                         std::size_t m, std::size_t n);

std::vector<ElementSet> minimal_right_ideals(FiniteSemigroup const& s);
std::vector<ElementSet> minimal_left_ideals(FiniteSemigroup const& s);
std::vector<ElementSet> minimal_ideals(FiniteSemigroup const& s);

// 0-minimal variants; require a declared zero.
std::vector<ElementSet> zero_minimal_right_ideals(FiniteSemigroup const& s);
std::vector<ElementSet> zero_minimal_left_ideals(FiniteSemigroup const& s);
std::vector<ElementSet> zero_minimal_ideals(FiniteSemigroup const& s);

// The minimum two-sided ideal, computed as the intersection of all
// principal two-sided ideals.
ElementSet kernel(FiniteSemigroup const& s);

// R^2 == R
bool is_globally_idempotent(FiniteSemigroup const& s, ElementSet const& r);

// All right ideals of s (non-empty subsets closed under right
// multiplication), enumerated as unions of down-closed sets of R-classes.
// Intended for desk-scale instances; guarded against blowup.
std::vector<ElementSet> all_right_ideals(FiniteSemigroup const& s,
                                         std::size_t limit = 1u << 20);

struct ClauseVerdict {
  std::string name;
  bool pass;
  std::string witness;  // empty when pass
};

// Decomposition of SR for a globally idempotent 0-minimal right ideal R:
// the null part, the globally idempotent part and the verdicts for the
// four structure clauses.
struct SRDecomposition {
  ElementSet sr;      // the two-sided ideal generated by R
  ElementSet a_part;  // {0} with all null 0-minimal right ideals inside SR
  ElementSet b_part;  // union of the globally idempotent ones
  std::vector<ClauseVerdict> clauses;

  bool all_pass() const;
};

SRDecomposition decompose_SR(FiniteSemigroup const& s, ElementSet const& r);

enum class Side { Right, Left };

struct SocleReport {
  ElementSet sigma;      // union of 0 and all 0-minimal right (left) ideals
  ElementSet null_part;  // A
  ElementSet gi_part;    // B
  std::vector<ElementSet> blocks;
  Side side;
  std::vector<ClauseVerdict> clauses;

  bool all_pass() const;
};

SocleReport socle(FiniteSemigroup const& s, Side side);

// I == I . A, for a right ideal I of A
bool is_decomposable_right_ideal(FiniteSemigroup const& a,
                                 ElementSet const& i);

// True / False / NotApplicable; the 0-flavoured predicates are reported as
// NotApplicable on semigroups without a declared zero.
enum class Tri { True, False, NotApplicable };

bool tri_true(Tri t);

struct StructureReport {
  Tri is_null = Tri::NotApplicable;
  bool is_right_simple = false;
  bool is_left_simple = false;
  bool is_simple = false;
  Tri is_right_0_simple = Tri::NotApplicable;
  Tri is_0_simple = Tri::NotApplicable;
  bool is_completely_simple = false;
  Tri is_completely_0_simple = Tri::NotApplicable;
  bool is_semisimple = false;
  bool is_regular = false;
  // failed predicate -> least-index counterexample, rendered with labels
  std::map<std::string, std::string> witnesses;
};

StructureReport classify(FiniteSemigroup const& s);

}  // namespace sgchain

#endif  // SGCHAIN_IDEALS_HPP_

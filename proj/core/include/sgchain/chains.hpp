#ifndef SGCHAIN_CHAINS_HPP_
#define SGCHAIN_CHAINS_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sgchain/rewrite.hpp"
#include "sgchain/semigroup.hpp"

namespace sgchain {

// Rees matrix semigroup over the infinite cyclic group, written
// additively inside: elements are (row, exponent, column) triples plus a
// zero, and (i,g,j)(k,h,l) = (i, g + p[j][k] + h, l) when p[j][k] is an
// integer.
struct SymbolicReesZ {
  std::size_t i_count = 0;
  std::size_t j_count = 0;
  std::vector<std::vector<std::optional<std::int64_t>>> p;  // p[j][i]

  static SymbolicReesZ make(
      std::size_t i_count, std::size_t j_count,
      std::vector<std::vector<std::optional<std::int64_t>>> p);
};

struct SymbolicTriple {
  std::int64_t row;  // 0-based
  std::int64_t exp;
  std::int64_t col;  // 0-based
  auto operator<=>(SymbolicTriple const&) const = default;
};

struct SymbolicZero {
  auto operator<=>(SymbolicZero const&) const = default;
};

// A canonical element of an explorable semigroup: a table index, an
// irreducible word, or a symbolic Rees triple / zero.
using Elem = std::variant<element, Word, SymbolicTriple, SymbolicZero>;

struct Membership {
  enum class Kind { Yes, Equal, NoUpTo, ExactNo };
  Kind kind;
  std::optional<Elem> witness;  // multiplier, for Yes
  std::size_t bound = 0;        // for NoUpTo
};

// Uniform facade over the instance families: finite tables, confluent
// finitely presented semigroups under bounded exploration, and symbolic
// Rees matrix semigroups over the infinite cyclic group.
class ExplorableSemigroup {
 public:
  virtual ~ExplorableSemigroup() = default;

  // canonical elements within the exploration radius, in a fixed order
  // that only ever grows with the radius
  virtual std::vector<Elem> enumerate(std::size_t radius) const = 0;
  virtual Elem multiply(Elem const& x, Elem const& y) const = 0;
  // decides x in y S^1; ExactNo only where membership is decidable
  virtual Membership in_principal_right_ideal(Elem const& x, Elem const& y,
                                              std::size_t bound) const = 0;
  virtual std::string display(Elem const& e) const = 0;
};

std::unique_ptr<ExplorableSemigroup> finite_backend(FiniteSemigroup s);

// Bounded exploration of a confluent presentation.  The optional filter
// restricts both the ground set and the multipliers to the normal forms it
// accepts, so membership is decided within the filtered subsemigroup.
std::unique_ptr<ExplorableSemigroup> fp_backend(
    FpSemigroup fp, std::size_t bound,
    std::function<bool(Word const&)> filter = nullptr);

// keeps normal forms that use any letter beyond the first; for the
// built-in example presentation this is exactly its kernel
bool uses_non_initial_letter(Word const& w);

std::unique_ptr<ExplorableSemigroup> rees_z_backend(SymbolicReesZ spec);
// the subsemigroup R_i = ({i} x Z x J) u {0}; row is 0-based
std::unique_ptr<ExplorableSemigroup> rees_z_row_backend(SymbolicReesZ spec,
                                                        std::size_t row);

enum class CertKind { Antichain, AscendingChain };
enum class VerdictBasis { Exact, BoundedSearch };

// Machine-checkable evidence: pairwise-incomparable elements, or a
// strictly ascending chain of principal right ideals.
struct Certificate {
  CertKind kind;
  std::vector<Elem> elements;
  std::size_t checked_bound;
  VerdictBasis basis;
};

struct SearchResult {
  std::optional<Certificate> certificate;
  std::size_t radius;

  bool found() const { return certificate.has_value(); }
};

// Greedy search for an antichain of exactly target_size elements over the
// enumerated ground set, restarted from each start offset in order.
SearchResult antichain_certificate(ExplorableSemigroup const& e,
                                   std::size_t target_size,
                                   std::size_t radius);

// A strictly ascending chain of the requested length, found by bounded
// longest-chain relaxation over the enumerated elements.
SearchResult ascending_chain_certificate(ExplorableSemigroup const& e,
                                         std::size_t target_length,
                                         std::size_t radius);

// Re-checks every membership claim a certificate makes; independent of the
// search code.  A bounded-basis certificate accepts NoUpTo answers, an
// exact one insists on ExactNo.
bool validate_certificate(ExplorableSemigroup const& e,
                          Certificate const& cert);

// The antichain {b a^i : i < n} of principal right ideals of the kernel of
// the example presentation, verified by reducing every product b a^i u
// against kernel multipliers u up to mult_bound.
Certificate kernel_antichain_41(std::size_t n, std::size_t mult_bound);

struct FgSubact41Result {
  std::vector<Word> generators;  // at most three
  std::size_t i0;                // least power with b^i in the subact
  std::optional<Word> y_generator, z_generator;
  bool ball_equal;  // bounded closures of X and the generators agree
};

// For kernel words X of the example presentation: the at-most-three-word
// generating set of X S^1 predicted by its normal form families, verified
// against the bounded closure.
FgSubact41Result fg_subact_41(std::vector<Word> const& x, std::size_t radius);

struct ZeroMinRightIdealReport {
  bool infinite;
  std::size_t annihilator_size;  // exact when finite
  std::vector<Elem> annihilator;  // all of it when finite, a sample when not
  std::optional<Certificate> certificate;
};

// The set {a in R \ {0} : aR = 0} for a 0-minimal right ideal, with the
// induced antichain of principal right ideals of R.
ZeroMinRightIdealReport zero_min_right_ideal_report(FiniteSemigroup const& s,
                                                    ElementSet const& r);
ZeroMinRightIdealReport zero_min_right_ideal_report(
    SymbolicReesZ const& spec, std::size_t row, std::size_t antichain_target);

// True when the (completed) rules coincide with the built-in example
// presentation; the CLI routes kernel-only antichain requests through
// kernel_antichain_41 in that case.
bool is_example_41_presentation(FpSemigroup const& fp);

}  // namespace sgchain

#endif  // SGCHAIN_CHAINS_HPP_

#ifndef SGCHAIN_REWRITE_HPP_
#define SGCHAIN_REWRITE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sgchain {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// Shortlex: shorter words first, then lexicographic by letter index.
bool shortlex_less(Word const& a, Word const& b);

// A terminating string-rewriting system: ordered alphabet plus rules whose
// left side is shortlex-greater than the right side.
class RewritingSystem {
 public:
  // Validates the orientation invariant on every rule.
  static RewritingSystem make(std::vector<std::string> alphabet,
                              std::vector<std::pair<Word, Word>> rules);

  std::vector<std::string> const& alphabet() const { return alphabet_; }
  std::vector<std::pair<Word, Word>> const& rules() const { return rules_; }

  Letter letter(std::string const& name) const;  // UnknownLetter
  std::string display(Word const& w) const;
  Word parse(std::string const& text) const;

 private:
  RewritingSystem(std::vector<std::string> alphabet,
                  std::vector<std::pair<Word, Word>> rules)
      : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {}

  std::vector<std::string> alphabet_;
  std::vector<std::pair<Word, Word>> rules_;
};

// Orients raw relations: the shortlex-greater side becomes the left side.
// A relation with identical sides cannot be oriented.
std::vector<std::pair<Word, Word>> orient_relations(
    std::vector<std::pair<Word, Word>> relations);

// Applies the leftmost applicable rule (first rule in declaration order on
// position ties) until no rule applies.
Word reduce(RewritingSystem const& rs, Word const& w);

struct CriticalPair {
  Word peak;   // the overlap word
  Word left;   // one-step descendant via the first rule
  Word right;  // one-step descendant via the second rule
};

// All overlap divergences between rule left sides, including a rule with
// itself and one left side inside another.
std::vector<CriticalPair> critical_pairs(RewritingSystem const& rs);

struct ConfluenceCheck {
  bool confluent;
  std::optional<std::pair<Word, Word>> witness;  // non-joinable normal forms
};

// Every critical pair must reduce to a common form; with termination this
// certifies confluence.
ConfluenceCheck is_locally_confluent(RewritingSystem const& rs);

struct CompletionResult {
  enum class Status { Completed, GaveUp };
  Status status;
  RewritingSystem system;

  bool completed() const { return status == Status::Completed; }
};

// Knuth-Bendix completion: orients non-joinable critical pairs into new
// rules until locally confluent or a bound trips.
CompletionResult knuth_bendix(RewritingSystem const& rs,
                              std::size_t max_rules = 200,
                              std::size_t max_len = 32);

// A finitely presented semigroup carried by its rewriting system, with the
// confluence verdict from critical-pair analysis baked in.
class FpSemigroup {
 public:
  static FpSemigroup analyze(RewritingSystem rs);

  RewritingSystem const& rs() const { return rs_; }
  bool confluent() const { return confluent_; }

 private:
  FpSemigroup(RewritingSystem rs, bool confluent)
      : rs_(std::move(rs)), confluent_(confluent) {}

  RewritingSystem rs_;
  bool confluent_;
};

// All irreducible words of length <= max_len; result[k] holds the words of
// length k in shortlex order (index 0 stays empty).
std::vector<std::vector<Word>> enumerate_normal_forms(FpSemigroup const& fp,
                                                      std::size_t max_len);

struct MembershipResult {
  enum class Kind { Yes, Equal, NoUpTo };
  Kind kind;
  Word witness;       // the multiplier, for Yes
  std::size_t bound;  // the bound used, for NoUpTo
};

// Decides u in v S^1 by bounded search over irreducible multipliers.
MembershipResult right_ideal_membership(FpSemigroup const& fp, Word const& u,
                                        Word const& v, std::size_t bound);

// The built-in two-rule presentation on {a, b} whose kernel carries the
// infinite antichain certificates.
FpSemigroup example_41();

// Free semigroup on k letters: empty rule set, trivially confluent.
FpSemigroup free_fp(std::size_t k);

}  // namespace sgchain

#endif  // SGCHAIN_REWRITE_HPP_

#include "sgchain/rewrite.hpp"

#include <algorithm>
#include <set>

#include "sgchain/errors.hpp"

namespace sgchain {

bool shortlex_less(Word const& a, Word const& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

RewritingSystem RewritingSystem::make(
    std::vector<std::string> alphabet,
    std::vector<std::pair<Word, Word>> rules) {
  if (alphabet.empty()) {
    throw InvalidArgumentError("alphabet is empty");
  }
  {
    std::set<std::string> seen;
    for (auto const& l : alphabet) {
      if (l.empty() || !seen.insert(l).second) {
        throw InvalidArgumentError("alphabet letters must be distinct and non-empty");
      }
    }
  }
  for (auto const& [lhs, rhs] : rules) {
    for (Letter l : lhs) {
      if (l >= alphabet.size()) throw UnknownLetterError(std::to_string(l));
    }
    for (Letter l : rhs) {
      if (l >= alphabet.size()) throw UnknownLetterError(std::to_string(l));
    }
    if (lhs.empty()) {
      throw BadRuleOrderError("rule left side is empty");
    }
    if (!shortlex_less(rhs, lhs)) {
      throw BadRuleOrderError("rule is not shortlex-decreasing");
    }
  }
  return RewritingSystem(std::move(alphabet), std::move(rules));
}

Letter RewritingSystem::letter(std::string const& name) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == name) return static_cast<Letter>(i);
  }
  throw UnknownLetterError(name);
}

std::string RewritingSystem::display(Word const& w) const {
  bool const compact = std::all_of(alphabet_.begin(), alphabet_.end(),
                                   [](std::string const& l) {
                                     return l.size() == 1;
                                   });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += alphabet_[w[i]];
  }
  return out;
}

Word RewritingSystem::parse(std::string const& text) const {
  Word out;
  bool const compact = std::all_of(alphabet_.begin(), alphabet_.end(),
                                   [](std::string const& l) {
                                     return l.size() == 1;
                                   });
  if (text.find(' ') == std::string::npos && compact) {
    for (char c : text) {
      out.push_back(letter(std::string(1, c)));
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    std::size_t end = text.find(' ', pos);
    if (end == std::string::npos) end = text.size();
    out.push_back(letter(text.substr(pos, end - pos)));
    pos = end;
  }
  return out;
}

std::vector<std::pair<Word, Word>> orient_relations(
    std::vector<std::pair<Word, Word>> relations) {
  for (auto& [u, v] : relations) {
    if (u == v) {
      throw UnorientableRuleError();
    }
    if (shortlex_less(u, v)) std::swap(u, v);
  }
  return relations;
}

namespace {

bool matches_at(Word const& w, Word const& lhs, std::size_t pos) {
  if (pos + lhs.size() > w.size()) return false;
  return std::equal(lhs.begin(), lhs.end(), w.begin() + pos);
}

Word splice(Word const& w, std::size_t pos, std::size_t len, Word const& sub) {
  Word out;
  out.reserve(w.size() - len + sub.size());
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.insert(out.end(), sub.begin(), sub.end());
  out.insert(out.end(), w.begin() + pos + len, w.end());
  return out;
}

}  // namespace

Word reduce(RewritingSystem const& rs, Word const& w) {
  for (Letter l : w) {
    if (l >= rs.alphabet().size()) {
      throw UnknownLetterError(std::to_string(l));
    }
  }
  Word cur = w;
  for (;;) {
    bool applied = false;
    for (std::size_t pos = 0; pos < cur.size() && !applied; ++pos) {
      for (auto const& [lhs, rhs] : rs.rules()) {
        if (matches_at(cur, lhs, pos)) {
          cur = splice(cur, pos, lhs.size(), rhs);
          applied = true;
          break;
        }
      }
    }
    if (!applied) return cur;
  }
}

std::vector<CriticalPair> critical_pairs(RewritingSystem const& rs) {
  std::vector<CriticalPair> out;
  auto const& rules = rs.rules();
  for (std::size_t r1 = 0; r1 < rules.size(); ++r1) {
    auto const& [l1, rhs1] = rules[r1];
    for (std::size_t r2 = 0; r2 < rules.size(); ++r2) {
      auto const& [l2, rhs2] = rules[r2];
      // proper overlap: a proper suffix of l1 equals a proper prefix of l2
      for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
        if (!std::equal(l1.end() - k, l1.end(), l2.begin())) continue;
        Word peak(l1.begin(), l1.end());
        peak.insert(peak.end(), l2.begin() + k, l2.end());
        Word left = splice(peak, 0, l1.size(), rhs1);
        Word right = splice(peak, l1.size() - k, l2.size(), rhs2);
        out.push_back({std::move(peak), std::move(left), std::move(right)});
      }
      // containment: l2 occurs inside l1
      if (l2.size() <= l1.size()) {
        for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
          if (r1 == r2 && pos == 0 && l1.size() == l2.size()) continue;
          if (!matches_at(l1, l2, pos)) continue;
          Word left = rhs1;
          Word right = splice(l1, pos, l2.size(), rhs2);
          out.push_back({l1, std::move(left), std::move(right)});
        }
      }
    }
  }
  return out;
}

ConfluenceCheck is_locally_confluent(RewritingSystem const& rs) {
  for (auto const& cp : critical_pairs(rs)) {
    Word const u = reduce(rs, cp.left);
    Word const v = reduce(rs, cp.right);
    if (u != v) {
      return {false, std::make_pair(u, v)};
    }
  }
  return {true, std::nullopt};
}

CompletionResult knuth_bendix(RewritingSystem const& rs,
                              std::size_t max_rules, std::size_t max_len) {
  std::vector<std::pair<Word, Word>> rules = rs.rules();
  auto current = [&]() {
    return RewritingSystem::make(rs.alphabet(), rules);
  };
  for (;;) {
    RewritingSystem sys = current();
    // gather the reduced non-joinable pairs, deterministically ordered
    std::optional<std::pair<Word, Word>> next;
    for (auto const& cp : critical_pairs(sys)) {
      Word u = reduce(sys, cp.left);
      Word v = reduce(sys, cp.right);
      if (u == v) continue;
      if (shortlex_less(u, v)) std::swap(u, v);
      if (!next || shortlex_less(u, next->first)) {
        next = std::make_pair(std::move(u), std::move(v));
      }
    }
    if (!next) {
      return {CompletionResult::Status::Completed, std::move(sys)};
    }
    if (rules.size() >= max_rules || next->first.size() > max_len) {
      return {CompletionResult::Status::GaveUp, std::move(sys)};
    }
    rules.push_back(std::move(*next));
  }
}

FpSemigroup FpSemigroup::analyze(RewritingSystem rs) {
  bool const confluent = is_locally_confluent(rs).confluent;
  return FpSemigroup(std::move(rs), confluent);
}

std::vector<std::vector<Word>> enumerate_normal_forms(FpSemigroup const& fp,
                                                      std::size_t max_len) {
  if (!fp.confluent()) throw NotConfluentError();
  auto const& rs = fp.rs();
  std::size_t const k = rs.alphabet().size();
  // a word extending an irreducible word is irreducible iff no rule left
  // side is one of its suffixes
  auto extension_ok = [&](Word const& w) {
    for (auto const& [lhs, rhs] : rs.rules()) {
      if (lhs.size() > w.size()) continue;
      if (std::equal(lhs.begin(), lhs.end(), w.end() - lhs.size())) {
        return false;
      }
    }
    return true;
  };
  std::vector<std::vector<Word>> out(max_len + 1);
  if (max_len == 0) return out;
  for (Letter l = 0; l < k; ++l) {
    Word w{l};
    if (extension_ok(w)) out[1].push_back(std::move(w));
  }
  for (std::size_t len = 2; len <= max_len; ++len) {
    for (Word const& base : out[len - 1]) {
      for (Letter l = 0; l < k; ++l) {
        Word w = base;
        w.push_back(l);
        if (extension_ok(w)) out[len].push_back(std::move(w));
      }
    }
  }
  return out;
}

MembershipResult right_ideal_membership(FpSemigroup const& fp, Word const& u,
                                        Word const& v, std::size_t bound) {
  if (!fp.confluent()) throw NotConfluentError();
  Word const nu = reduce(fp.rs(), u);
  Word const nv = reduce(fp.rs(), v);
  if (nu == nv) {
    return {MembershipResult::Kind::Equal, {}, bound};
  }
  if (fp.rs().rules().empty()) {
    // free semigroup: membership is the proper-prefix relation
    if (nv.size() < nu.size() &&
        std::equal(nv.begin(), nv.end(), nu.begin())) {
      Word tail(nu.begin() + nv.size(), nu.end());
      if (tail.size() <= bound) {
        return {MembershipResult::Kind::Yes, std::move(tail), bound};
      }
    }
    return {MembershipResult::Kind::NoUpTo, {}, bound};
  }
  // multipliers range over the irreducible words; every element of S with
  // a representative of length <= bound has one among them
  auto const nfs = enumerate_normal_forms(fp, bound);
  for (auto const& level : nfs) {
    for (Word const& s : level) {
      Word vs = nv;
      vs.insert(vs.end(), s.begin(), s.end());
      if (reduce(fp.rs(), vs) == nu) {
        return {MembershipResult::Kind::Yes, s, bound};
      }
    }
  }
  return {MembershipResult::Kind::NoUpTo, {}, bound};
}

FpSemigroup example_41() {
  // rules a b b -> b and a b a -> a a b over a < b
  Word const a{0}, b{1};
  Word abb{0, 1, 1}, aba{0, 1, 0}, aab{0, 0, 1};
  std::vector<std::pair<Word, Word>> rules;
  rules.emplace_back(abb, b);
  rules.emplace_back(aba, aab);
  return FpSemigroup::analyze(
      RewritingSystem::make({"a", "b"}, std::move(rules)));
}

FpSemigroup free_fp(std::size_t k) {
  if (k == 0) throw InvalidArgumentError("alphabet must be non-empty");
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < k; ++i) {
    if (i < 26) {
      alphabet.emplace_back(1, static_cast<char>('a' + i));
    } else {
      alphabet.push_back("g" + std::to_string(i));
    }
  }
  return FpSemigroup::analyze(RewritingSystem::make(std::move(alphabet), {}));
}

}  // namespace sgchain

#include "sgchain/chains.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sgchain/errors.hpp"
#include "sgchain/ideals.hpp"

namespace sgchain {

SymbolicReesZ SymbolicReesZ::make(
    std::size_t i_count, std::size_t j_count,
    std::vector<std::vector<std::optional<std::int64_t>>> p) {
  if (i_count == 0 || j_count == 0) {
    throw BadSandwichMatrixError("index sets must be non-empty");
  }
  if (p.size() != j_count) {
    throw BadSandwichMatrixError("P must have one row per column index");
  }
  for (std::size_t j = 0; j < j_count; ++j) {
    if (p[j].size() != i_count) {
      throw BadSandwichMatrixError("P row has wrong length");
    }
    if (std::none_of(p[j].begin(), p[j].end(),
                     [](auto const& e) { return e.has_value(); })) {
      throw BadSandwichMatrixError("row " + std::to_string(j + 1) +
                                   " of P has no integer entry");
    }
  }
  for (std::size_t i = 0; i < i_count; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < j_count; ++j) any = any || p[j][i].has_value();
    if (!any) {
      throw BadSandwichMatrixError("column " + std::to_string(i + 1) +
                                   " of P has no integer entry");
    }
  }
  return {i_count, j_count, std::move(p)};
}

namespace {

std::string exp_string(std::int64_t e) {
  if (e == 0) return "e";
  if (e == 1) return "g";
  return "g^" + std::to_string(e);
}

class FiniteBackend final : public ExplorableSemigroup {
 public:
  explicit FiniteBackend(FiniteSemigroup s) : s_(std::move(s)) {}

  std::vector<Elem> enumerate(std::size_t) const override {
    std::vector<Elem> out;
    out.reserve(s_.size());
    for (element a = 0; a < s_.size(); ++a) out.emplace_back(a);
    return out;
  }

  Elem multiply(Elem const& x, Elem const& y) const override {
    return Elem(s_.mul(std::get<element>(x), std::get<element>(y)));
  }

  Membership in_principal_right_ideal(Elem const& xe, Elem const& ye,
                                      std::size_t bound) const override {
    element const x = std::get<element>(xe);
    element const y = std::get<element>(ye);
    if (x == y) return {Membership::Kind::Equal, std::nullopt, bound};
    for (element s = 0; s < s_.size(); ++s) {
      if (s_.mul(y, s) == x) {
        return {Membership::Kind::Yes, Elem(s), bound};
      }
    }
    return {Membership::Kind::ExactNo, std::nullopt, bound};
  }

  std::string display(Elem const& e) const override {
    return s_.label(std::get<element>(e));
  }

 private:
  FiniteSemigroup s_;
};

class FpBackend final : public ExplorableSemigroup {
 public:
  FpBackend(FpSemigroup fp, std::size_t bound,
            std::function<bool(Word const&)> filter)
      : fp_(std::move(fp)), bound_(bound), filter_(std::move(filter)) {
    if (!fp_.confluent()) throw NotConfluentError();
    free_ = fp_.rs().rules().empty();
    for (auto const& level : enumerate_normal_forms(fp_, bound_)) {
      for (Word const& w : level) {
        if (!filter_ || filter_(w)) multipliers_.push_back(w);
      }
    }
  }

  std::vector<Elem> enumerate(std::size_t radius) const override {
    std::vector<Elem> out;
    for (auto const& level : enumerate_normal_forms(fp_, radius)) {
      for (Word const& w : level) {
        if (!filter_ || filter_(w)) out.emplace_back(w);
      }
    }
    return out;
  }

  Elem multiply(Elem const& x, Elem const& y) const override {
    Word w = std::get<Word>(x);
    Word const& v = std::get<Word>(y);
    w.insert(w.end(), v.begin(), v.end());
    return Elem(reduce(fp_.rs(), w));
  }

  Membership in_principal_right_ideal(Elem const& xe, Elem const& ye,
                                      std::size_t bound) const override {
    Word const x = reduce(fp_.rs(), std::get<Word>(xe));
    Word const y = reduce(fp_.rs(), std::get<Word>(ye));
    if (x == y) return {Membership::Kind::Equal, std::nullopt, bound};
    if (free_ && !filter_) {
      // membership in a free semigroup is the proper-prefix relation
      if (y.size() < x.size() && std::equal(y.begin(), y.end(), x.begin())) {
        return {Membership::Kind::Yes,
                Elem(Word(x.begin() + y.size(), x.end())), bound};
      }
      return {Membership::Kind::ExactNo, std::nullopt, bound};
    }
    for (Word const& s : multipliers_) {
      if (s.size() > bound) break;
      Word ys = y;
      ys.insert(ys.end(), s.begin(), s.end());
      if (reduce(fp_.rs(), ys) == x) {
        return {Membership::Kind::Yes, Elem(s), bound};
      }
    }
    return {Membership::Kind::NoUpTo, std::nullopt, std::min(bound, bound_)};
  }

  std::string display(Elem const& e) const override {
    return fp_.rs().display(std::get<Word>(e));
  }

 private:
  FpSemigroup fp_;
  std::size_t bound_;
  std::function<bool(Word const&)> filter_;
  std::vector<Word> multipliers_;  // shortlex order, length <= bound_
  bool free_ = false;
};

class ReesZBackend final : public ExplorableSemigroup {
 public:
  // row < i_count restricts to the subsemigroup R_row; i_count means the
  // whole semigroup
  ReesZBackend(SymbolicReesZ spec, std::size_t row)
      : spec_(std::move(spec)), row_(row) {}

  std::vector<Elem> enumerate(std::size_t radius) const override {
    std::vector<Elem> out;
    out.emplace_back(SymbolicZero{});
    auto push_row = [&](std::size_t i) {
      for (std::int64_t m = 0; m <= static_cast<std::int64_t>(radius); ++m) {
        for (std::int64_t g : {m, -m}) {
          if (g == 0 && m != 0) continue;
          for (std::size_t j = 0; j < spec_.j_count; ++j) {
            out.emplace_back(SymbolicTriple{static_cast<std::int64_t>(i), g,
                                            static_cast<std::int64_t>(j)});
          }
          if (m == 0) break;
        }
      }
    };
    if (row_ < spec_.i_count) {
      push_row(row_);
    } else {
      // same exponent sweep, all rows inside it for a stable order
      for (std::int64_t m = 0; m <= static_cast<std::int64_t>(radius); ++m) {
        for (std::int64_t g : {m, -m}) {
          if (g == 0 && m != 0) continue;
          for (std::size_t i = 0; i < spec_.i_count; ++i) {
            for (std::size_t j = 0; j < spec_.j_count; ++j) {
              out.emplace_back(SymbolicTriple{static_cast<std::int64_t>(i), g,
                                              static_cast<std::int64_t>(j)});
            }
          }
          if (m == 0) break;
        }
      }
    }
    return out;
  }

  Elem multiply(Elem const& xe, Elem const& ye) const override {
    if (std::holds_alternative<SymbolicZero>(xe) ||
        std::holds_alternative<SymbolicZero>(ye)) {
      return Elem(SymbolicZero{});
    }
    auto const& x = std::get<SymbolicTriple>(xe);
    auto const& y = std::get<SymbolicTriple>(ye);
    auto const& p = spec_.p[static_cast<std::size_t>(x.col)]
                           [static_cast<std::size_t>(y.row)];
    if (!p) return Elem(SymbolicZero{});
    return Elem(SymbolicTriple{x.row, x.exp + *p + y.exp, y.col});
  }

  // Membership is exact.  In the full semigroup, x lies in yS^1 iff x = y,
  // x = 0, or x and y share their row (the row condition on P supplies a
  // usable multiplier).  Within R_row the multiplier's row is forced, so a
  // non-zero x lies in yR^1 iff x = y or p[y.col][row] is an integer.
  Membership in_principal_right_ideal(Elem const& xe, Elem const& ye,
                                      std::size_t bound) const override {
    if (xe == ye) return {Membership::Kind::Equal, std::nullopt, bound};
    if (std::holds_alternative<SymbolicZero>(xe)) {
      return {Membership::Kind::Yes, Elem(SymbolicZero{}), bound};
    }
    if (std::holds_alternative<SymbolicZero>(ye)) {
      return {Membership::Kind::ExactNo, std::nullopt, bound};
    }
    auto const& x = std::get<SymbolicTriple>(xe);
    auto const& y = std::get<SymbolicTriple>(ye);
    if (x.row != y.row) {
      return {Membership::Kind::ExactNo, std::nullopt, bound};
    }
    if (row_ < spec_.i_count) {
      auto const& p = spec_.p[static_cast<std::size_t>(y.col)][row_];
      if (!p) return {Membership::Kind::ExactNo, std::nullopt, bound};
      return {Membership::Kind::Yes,
              Elem(SymbolicTriple{static_cast<std::int64_t>(row_),
                                  x.exp - y.exp - *p, x.col}),
              bound};
    }
    for (std::size_t m = 0; m < spec_.i_count; ++m) {
      auto const& p = spec_.p[static_cast<std::size_t>(y.col)][m];
      if (!p) continue;
      return {Membership::Kind::Yes,
              Elem(SymbolicTriple{static_cast<std::int64_t>(m),
                                  x.exp - y.exp - *p, x.col}),
              bound};
    }
    return {Membership::Kind::ExactNo, std::nullopt, bound};
  }

  std::string display(Elem const& e) const override {
    if (std::holds_alternative<SymbolicZero>(e)) return "0";
    auto const& t = std::get<SymbolicTriple>(e);
    return "(" + std::to_string(t.row + 1) + "," + exp_string(t.exp) + "," +
           std::to_string(t.col + 1) + ")";
  }

 private:
  SymbolicReesZ spec_;
  std::size_t row_;
};

}  // namespace

std::unique_ptr<ExplorableSemigroup> finite_backend(FiniteSemigroup s) {
  return std::make_unique<FiniteBackend>(std::move(s));
}

std::unique_ptr<ExplorableSemigroup> fp_backend(
    FpSemigroup fp, std::size_t bound,
    std::function<bool(Word const&)> filter) {
  return std::make_unique<FpBackend>(std::move(fp), bound, std::move(filter));
}

bool uses_non_initial_letter(Word const& w) {
  return std::any_of(w.begin(), w.end(), [](Letter l) { return l != 0; });
}

std::unique_ptr<ExplorableSemigroup> rees_z_backend(SymbolicReesZ spec) {
  std::size_t const rows = spec.i_count;
  return std::make_unique<ReesZBackend>(std::move(spec), rows);
}

std::unique_ptr<ExplorableSemigroup> rees_z_row_backend(SymbolicReesZ spec,
                                                        std::size_t row) {
  if (row >= spec.i_count) {
    throw InvalidArgumentError("row index out of range");
  }
  return std::make_unique<ReesZBackend>(std::move(spec), row);
}

namespace {

// incomparability of a pair, as the greedy search and validator see it
struct PairCheck {
  bool incomparable;
  bool bounded;  // some direction answered NoUpTo
};

PairCheck check_incomparable(ExplorableSemigroup const& e, Elem const& x,
                             Elem const& y, std::size_t bound) {
  Membership const a = e.in_principal_right_ideal(x, y, bound);
  if (a.kind == Membership::Kind::Yes || a.kind == Membership::Kind::Equal) {
    return {false, false};
  }
  Membership const b = e.in_principal_right_ideal(y, x, bound);
  if (b.kind == Membership::Kind::Yes || b.kind == Membership::Kind::Equal) {
    return {false, false};
  }
  bool const bounded = a.kind == Membership::Kind::NoUpTo ||
                       b.kind == Membership::Kind::NoUpTo;
  return {true, bounded};
}

}  // namespace

SearchResult antichain_certificate(ExplorableSemigroup const& e,
                                   std::size_t target_size,
                                   std::size_t radius) {
  if (target_size < 2) {
    throw InvalidArgumentError("antichain target must be at least 2");
  }
  std::vector<Elem> const ground = e.enumerate(radius);
  for (std::size_t start = 0; start < ground.size(); ++start) {
    std::vector<Elem> chosen;
    bool any_bounded = false;
    for (std::size_t idx = start; idx < ground.size(); ++idx) {
      bool ok = true;
      bool bounded_here = false;
      for (Elem const& y : chosen) {
        PairCheck const pc = check_incomparable(e, ground[idx], y, radius);
        if (!pc.incomparable) {
          ok = false;
          break;
        }
        bounded_here = bounded_here || pc.bounded;
      }
      if (!ok) continue;
      chosen.push_back(ground[idx]);
      any_bounded = any_bounded || bounded_here;
      if (chosen.size() == target_size) {
        return {Certificate{CertKind::Antichain, std::move(chosen), radius,
                            any_bounded ? VerdictBasis::BoundedSearch
                                        : VerdictBasis::Exact},
                radius};
      }
    }
  }
  return {std::nullopt, radius};
}

SearchResult ascending_chain_certificate(ExplorableSemigroup const& e,
                                         std::size_t target_length,
                                         std::size_t radius) {
  if (target_length < 2) {
    throw InvalidArgumentError("chain target must be at least 2");
  }
  std::vector<Elem> const ground = e.enumerate(radius);
  std::size_t const n = ground.size();
  // strict[i][j]: ground[i] S^1 strictly below ground[j] S^1
  std::vector<char> strict(n * n, 0), bounded(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Membership const below =
          e.in_principal_right_ideal(ground[i], ground[j], radius);
      if (below.kind != Membership::Kind::Yes) continue;
      Membership const above =
          e.in_principal_right_ideal(ground[j], ground[i], radius);
      if (above.kind == Membership::Kind::ExactNo) {
        strict[i * n + j] = 1;
      } else if (above.kind == Membership::Kind::NoUpTo) {
        strict[i * n + j] = 1;
        bounded[i * n + j] = 1;
      }
    }
  }
  // longest chain with a given top, by capped relaxation (robust even if a
  // bounded-search misanswer were to create an apparent cycle)
  std::vector<std::size_t> len(n, 1);
  for (std::size_t round = 1; round < target_length; ++round) {
    bool changed = false;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (strict[i * n + j] && len[i] + 1 > len[j] &&
            len[i] + 1 <= target_length) {
          len[j] = len[i] + 1;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  std::size_t top = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (len[j] >= target_length) {
      top = j;
      break;
    }
  }
  if (top == n) return {std::nullopt, radius};
  std::vector<Elem> chain;
  bool any_bounded = false;
  std::size_t cur = top;
  std::size_t need = target_length;
  chain.push_back(ground[cur]);
  while (need > 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (strict[i * n + cur] && len[i] >= need - 1) {
        any_bounded = any_bounded || bounded[i * n + cur];
        chain.push_back(ground[i]);
        cur = i;
        --need;
        break;
      }
    }
  }
  std::reverse(chain.begin(), chain.end());
  return {Certificate{CertKind::AscendingChain, std::move(chain), radius,
                      any_bounded ? VerdictBasis::BoundedSearch
                                  : VerdictBasis::Exact},
          radius};
}

bool validate_certificate(ExplorableSemigroup const& e,
                          Certificate const& cert) {
  auto no_ok = [&](Membership const& m) {
    if (m.kind == Membership::Kind::ExactNo) return true;
    return cert.basis == VerdictBasis::BoundedSearch &&
           m.kind == Membership::Kind::NoUpTo;
  };
  if (cert.kind == CertKind::Antichain) {
    if (cert.elements.size() < 2) return false;
    for (std::size_t i = 0; i < cert.elements.size(); ++i) {
      for (std::size_t j = i + 1; j < cert.elements.size(); ++j) {
        Membership const a = e.in_principal_right_ideal(
            cert.elements[i], cert.elements[j], cert.checked_bound);
        Membership const b = e.in_principal_right_ideal(
            cert.elements[j], cert.elements[i], cert.checked_bound);
        if (!no_ok(a) || !no_ok(b)) return false;
      }
    }
    return true;
  }
  if (cert.elements.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < cert.elements.size(); ++i) {
    Membership const below = e.in_principal_right_ideal(
        cert.elements[i], cert.elements[i + 1], cert.checked_bound);
    if (below.kind != Membership::Kind::Yes) return false;
    Membership const above = e.in_principal_right_ideal(
        cert.elements[i + 1], cert.elements[i], cert.checked_bound);
    if (!no_ok(above)) return false;
  }
  return true;
}

Certificate kernel_antichain_41(std::size_t n, std::size_t mult_bound) {
  if (n < 2) throw InvalidArgumentError("antichain target must be at least 2");
  FpSemigroup const fp = example_41();
  auto const& rs = fp.rs();
  // the candidate family b a^i
  std::vector<Word> family(n);
  for (std::size_t i = 0; i < n; ++i) {
    Word w{1};
    w.insert(w.end(), i, 0);
    family[i] = std::move(w);
  }
  std::set<Word> targets(family.begin(), family.end());
  // kernel multipliers: normal forms containing b, up to the bound
  for (auto const& level : enumerate_normal_forms(fp, mult_bound)) {
    for (Word const& u : level) {
      if (!uses_non_initial_letter(u)) continue;
      for (std::size_t i = 0; i < n; ++i) {
        Word w = family[i];
        w.insert(w.end(), u.begin(), u.end());
        Word const red = reduce(rs, w);
        if (targets.count(red) && red != family[i]) {
          throw Error("kernel antichain violated: " + rs.display(family[i]) +
                      " * " + rs.display(u) + " = " + rs.display(red));
        }
      }
    }
  }
  std::vector<Elem> elems;
  elems.reserve(n);
  for (auto& w : family) elems.emplace_back(std::move(w));
  return {CertKind::Antichain, std::move(elems), mult_bound,
          VerdictBasis::BoundedSearch};
}

namespace {

// bounded forward closure of X S^1 in the example presentation, restricted
// to kernel multipliers of length <= radius plus X itself
std::set<Word> bounded_subact_41(FpSemigroup const& fp,
                                 std::vector<Word> const& x,
                                 std::size_t radius) {
  std::set<Word> out;
  auto const nfs = enumerate_normal_forms(fp, radius);
  for (Word const& w : x) {
    out.insert(reduce(fp.rs(), w));
    for (auto const& level : nfs) {
      for (Word const& s : level) {
        Word ws = w;
        ws.insert(ws.end(), s.begin(), s.end());
        out.insert(reduce(fp.rs(), ws));
      }
    }
  }
  return out;
}

}  // namespace

FgSubact41Result fg_subact_41(std::vector<Word> const& x, std::size_t radius) {
  if (x.empty()) throw EmptyGeneratorsError();
  FpSemigroup const fp = example_41();
  auto const& rs = fp.rs();
  for (Word const& w : x) {
    if (!uses_non_initial_letter(reduce(rs, w))) {
      throw NotInKernelError(rs.display(w));
    }
  }
  std::set<Word> const closure = bounded_subact_41(fp, x, radius);
  // i0: least i with b^i in the closure
  std::optional<std::size_t> i0;
  for (std::size_t i = 1; i <= radius + 2 && !i0; ++i) {
    if (closure.count(Word(i, 1))) i0 = i;
  }
  if (!i0) {
    throw InvalidArgumentError("radius too small: no power of b reached");
  }
  FgSubact41Result res;
  res.i0 = *i0;
  res.generators.push_back(Word(*i0, 1));
  // least j >= 1 with b^{i0-1} a^j in the closure
  for (std::size_t j = 1; j <= radius + 2; ++j) {
    Word w(*i0 - 1, 1);
    w.insert(w.end(), j, 0);
    if (closure.count(w)) {
      res.y_generator = w;
      res.generators.push_back(std::move(w));
      break;
    }
  }
  // least k >= 1 with b^{i0-1} a^k b in the closure
  for (std::size_t k = 1; k <= radius + 2; ++k) {
    Word w(*i0 - 1, 1);
    w.insert(w.end(), k, 0);
    w.push_back(1);
    if (closure.count(w)) {
      res.z_generator = w;
      res.generators.push_back(std::move(w));
      break;
    }
  }
  std::set<Word> const gen_closure = bounded_subact_41(fp, res.generators, radius);
  auto ball_filter = [&](std::set<Word> const& s) {
    std::set<Word> out;
    for (Word const& w : s) {
      if (w.size() <= radius) out.insert(w);
    }
    return out;
  };
  res.ball_equal = ball_filter(closure) == ball_filter(gen_closure);
  return res;
}

ZeroMinRightIdealReport zero_min_right_ideal_report(FiniteSemigroup const& s,
                                                    ElementSet const& r) {
  if (!s.zero()) throw NoZeroError();
  element const z = *s.zero();
  {
    bool zero_minimal = !r.empty() && r.contains(z) && r.count() > 1;
    if (zero_minimal) {
      for (element b : r.members()) {
        if (b == z) continue;
        if (principal_right_ideal(s, b) != r) {
          zero_minimal = false;
          break;
        }
      }
    }
    if (!zero_minimal) {
      throw NotZeroMinimalError("R is not a 0-minimal right ideal");
    }
  }
  ZeroMinRightIdealReport rep;
  rep.infinite = false;
  auto [rsg, back] = subsemigroup(s, r);
  element const rz = *rsg.zero();
  std::vector<element> annihilator;
  for (element a = 0; a < rsg.size(); ++a) {
    if (a == rz) continue;
    bool zeroes = true;
    for (element b = 0; b < rsg.size(); ++b) {
      if (rsg.mul(a, b) != rz) {
        zeroes = false;
        break;
      }
    }
    if (zeroes) annihilator.push_back(a);
  }
  rep.annihilator_size = annihilator.size();
  for (element a : annihilator) rep.annihilator.emplace_back(a);
  if (annihilator.size() >= 2) {
    std::vector<Elem> elems;
    for (element a : annihilator) elems.emplace_back(a);
    Certificate cert{CertKind::Antichain, std::move(elems), rsg.size(),
                     VerdictBasis::Exact};
    auto backend = finite_backend(rsg);
    if (!validate_certificate(*backend, cert)) {
      throw Error("annihilator antichain failed validation");
    }
    rep.certificate = std::move(cert);
  }
  return rep;
}

ZeroMinRightIdealReport zero_min_right_ideal_report(
    SymbolicReesZ const& spec, std::size_t row, std::size_t antichain_target) {
  if (row >= spec.i_count) {
    throw NotZeroMinimalError("row index out of range");
  }
  ZeroMinRightIdealReport rep;
  std::vector<std::size_t> zero_cols;
  for (std::size_t j = 0; j < spec.j_count; ++j) {
    if (!spec.p[j][row]) zero_cols.push_back(j);
  }
  rep.infinite = !zero_cols.empty();
  rep.annihilator_size = 0;
  if (!rep.infinite) return rep;
  // the annihilator is {row} x Z x zero_cols; draw the antichain from it
  std::vector<Elem> elems;
  for (std::int64_t m = 0; elems.size() < antichain_target; ++m) {
    for (std::int64_t g : {m, -m}) {
      if (g == 0 && m != 0) continue;
      for (std::size_t j : zero_cols) {
        if (elems.size() == antichain_target) break;
        elems.emplace_back(SymbolicTriple{static_cast<std::int64_t>(row), g,
                                          static_cast<std::int64_t>(j)});
      }
      if (m == 0) break;
    }
  }
  rep.annihilator = elems;
  Certificate cert{CertKind::Antichain, std::move(elems), antichain_target,
                   VerdictBasis::Exact};
  auto backend = rees_z_row_backend(spec, row);
  if (!validate_certificate(*backend, cert)) {
    throw Error("annihilator antichain failed validation");
  }
  rep.certificate = std::move(cert);
  return rep;
}

bool is_example_41_presentation(FpSemigroup const& fp) {
  FpSemigroup const ref = example_41();
  if (fp.rs().alphabet().size() != 2) return false;
  auto as_set = [](RewritingSystem const& rs) {
    return std::set<std::pair<Word, Word>>(rs.rules().begin(),
                                           rs.rules().end());
  };
  return as_set(fp.rs()) == as_set(ref.rs());
}

}  // namespace sgchain

#include "sgchain/ideals.hpp"

#include <algorithm>
#include <set>

#include "sgchain/constructions.hpp"
#include "sgchain/errors.hpp"

namespace sgchain {

ElementSet principal_right_ideal(FiniteSemigroup const& s, element a) {
  ElementSet out(s.size());
  out.add(a);
  for (element x = 0; x < s.size(); ++x) out.add(s.mul(a, x));
  return out;
}

ElementSet principal_left_ideal(FiniteSemigroup const& s, element a) {
  ElementSet out(s.size());
  out.add(a);
  for (element x = 0; x < s.size(); ++x) out.add(s.mul(x, a));
  return out;
}

ElementSet principal_ideal(FiniteSemigroup const& s, element a) {
  ElementSet out = principal_right_ideal(s, a) | principal_left_ideal(s, a);
  for (element x = 0; x < s.size(); ++x) {
    element const xa = s.mul(x, a);
    for (element y = 0; y < s.size(); ++y) out.add(s.mul(xa, y));
  }
  return out;
}

ElementSet generated_right_ideal(FiniteSemigroup const& s,
                                 ElementSet const& x) {
  if (x.empty()) throw EmptyGeneratorsError();
  ElementSet out = x;
  out |= product_set(s, x, s.all());
  return out;
}

ElementSet generated_left_ideal(FiniteSemigroup const& s,
                                ElementSet const& x) {
  if (x.empty()) throw EmptyGeneratorsError();
  ElementSet out = x;
  out |= product_set(s, s.all(), x);
  return out;
}

ElementSet generated_ideal(FiniteSemigroup const& s, ElementSet const& x) {
  if (x.empty()) throw EmptyGeneratorsError();
  ElementSet out = x;
  ElementSet const sx = product_set(s, s.all(), x);
  out |= product_set(s, x, s.all());
  out |= sx;
  out |= product_set(s, sx, s.all());
  return out;
}

IdealCheck is_right_ideal(FiniteSemigroup const& s, ElementSet const& i) {
  if (i.empty()) throw InvalidArgumentError("ideal candidate is empty");
  for (element a : i.members()) {
    for (element x = 0; x < s.size(); ++x) {
      if (!i.contains(s.mul(a, x))) {
        return {false, std::make_pair(a, x), false};
      }
    }
  }
  return {true, std::nullopt, false};
}

IdealCheck is_left_ideal(FiniteSemigroup const& s, ElementSet const& i) {
  if (i.empty()) throw InvalidArgumentError("ideal candidate is empty");
  for (element a : i.members()) {
    for (element x = 0; x < s.size(); ++x) {
      if (!i.contains(s.mul(x, a))) {
        return {false, std::make_pair(a, x), true};
      }
    }
  }
  return {true, std::nullopt, false};
}

IdealCheck is_ideal(FiniteSemigroup const& s, ElementSet const& i) {
  IdealCheck right = is_right_ideal(s, i);
  if (!right.ok) return right;
  return is_left_ideal(s, i);
}

MnIdealCheck is_mn_ideal(FiniteSemigroup const& s, ElementSet const& a,
                         std::size_t m, std::size_t n) {
  if (a.empty()) throw EmptyGeneratorsError();
  if (m == 0 || n == 0) throw InvalidArgumentError("m, n must be positive");
  if (!product_set(s, a, a).is_subset_of(a)) {
    throw NotASubsemigroupError("A is not a subsemigroup");
  }
  ElementSet am = a;
  for (std::size_t i = 1; i < m; ++i) am = product_set(s, am, a);
  ElementSet an = a;
  for (std::size_t i = 1; i < n; ++i) an = product_set(s, an, a);
  ElementSet prod = product_set(s, product_set(s, am, s.all()), an);
  if (prod.is_subset_of(a)) return {true, std::nullopt};
  for (element x : prod.members()) {
    if (!a.contains(x)) return {false, x};
  }
  return {true, std::nullopt};  // unreachable
}

namespace {

// distinct values among the principal right ideals, sorted
std::vector<ElementSet> distinct_principal_right(FiniteSemigroup const& s) {
  std::set<ElementSet> seen;
  for (element a = 0; a < s.size(); ++a) {
    seen.insert(principal_right_ideal(s, a));
  }
  return {seen.begin(), seen.end()};
}

std::vector<ElementSet> minimal_among(std::vector<ElementSet> const& sets) {
  std::vector<ElementSet> out;
  for (auto const& i : sets) {
    bool minimal = true;
    for (auto const& j : sets) {
      if (j != i && j.is_subset_of(i)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<ElementSet> minimal_right_ideals(FiniteSemigroup const& s) {
  return minimal_among(distinct_principal_right(s));
}

std::vector<ElementSet> minimal_left_ideals(FiniteSemigroup const& s) {
  std::set<ElementSet> seen;
  for (element a = 0; a < s.size(); ++a) {
    seen.insert(principal_left_ideal(s, a));
  }
  std::vector<ElementSet> all(seen.begin(), seen.end());
  return minimal_among(all);
}

std::vector<ElementSet> minimal_ideals(FiniteSemigroup const& s) {
  std::set<ElementSet> seen;
  for (element a = 0; a < s.size(); ++a) {
    seen.insert(principal_ideal(s, a));
  }
  std::vector<ElementSet> all(seen.begin(), seen.end());
  return minimal_among(all);
}

// A right ideal I != 0 of a semigroup with zero is 0-minimal iff bS^1 = I
// for every non-zero b in I (bS^1 is never {0} since it contains b).
std::vector<ElementSet> zero_minimal_right_ideals(FiniteSemigroup const& s) {
  if (!s.zero()) throw NoZeroError();
  element const z = *s.zero();
  std::set<ElementSet> candidates;
  for (element a = 0; a < s.size(); ++a) {
    if (a != z) candidates.insert(principal_right_ideal(s, a));
  }
  std::vector<ElementSet> out;
  for (auto const& i : candidates) {
    bool zero_minimal = true;
    for (element b : i.members()) {
      if (b == z) continue;
      if (principal_right_ideal(s, b) != i) {
        zero_minimal = false;
        break;
      }
    }
    if (zero_minimal) out.push_back(i);
  }
  return out;
}

std::vector<ElementSet> zero_minimal_left_ideals(FiniteSemigroup const& s) {
  if (!s.zero()) throw NoZeroError();
  element const z = *s.zero();
  std::set<ElementSet> candidates;
  for (element a = 0; a < s.size(); ++a) {
    if (a != z) candidates.insert(principal_left_ideal(s, a));
  }
  std::vector<ElementSet> out;
  for (auto const& i : candidates) {
    bool zero_minimal = true;
    for (element b : i.members()) {
      if (b == z) continue;
      if (principal_left_ideal(s, b) != i) {
        zero_minimal = false;
        break;
      }
    }
    if (zero_minimal) out.push_back(i);
  }
  return out;
}

std::vector<ElementSet> zero_minimal_ideals(FiniteSemigroup const& s) {
  if (!s.zero()) throw NoZeroError();
  element const z = *s.zero();
  std::set<ElementSet> candidates;
  for (element a = 0; a < s.size(); ++a) {
    if (a != z) candidates.insert(principal_ideal(s, a));
  }
  std::vector<ElementSet> out;
  for (auto const& i : candidates) {
    bool zero_minimal = true;
    for (element b : i.members()) {
      if (b == z) continue;
      if (principal_ideal(s, b) != i) {
        zero_minimal = false;
        break;
      }
    }
    if (zero_minimal) out.push_back(i);
  }
  return out;
}

ElementSet kernel(FiniteSemigroup const& s) {
  ElementSet k = ElementSet::full(s.size());
  for (element a = 0; a < s.size(); ++a) {
    k &= principal_ideal(s, a);
  }
  return k;
}

bool is_globally_idempotent(FiniteSemigroup const& s, ElementSet const& r) {
  return product_set(s, r, r) == r;
}

std::vector<ElementSet> all_right_ideals(FiniteSemigroup const& s,
                                         std::size_t limit) {
  GreenStructure const g = compute_green(s);
  std::size_t const c = g.r.count();
  if (c > 20 || (std::size_t(1) << c) > limit) {
    throw TooLargeError("too many R-classes for exhaustive enumeration");
  }
  // a union of R-classes is a right ideal iff it is down-closed in r_poset
  std::vector<std::uint32_t> down(c, 0);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (g.r_poset.leq(j, i)) down[i] |= std::uint32_t(1) << j;
    }
  }
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << c); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < c && closed; ++i) {
      if ((mask >> i) & 1) closed = (down[i] & ~mask) == 0;
    }
    if (!closed) continue;
    ElementSet ideal(s.size());
    for (std::size_t i = 0; i < c; ++i) {
      if ((mask >> i) & 1) ideal |= g.r.classes[i];
    }
    out.push_back(std::move(ideal));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SRDecomposition::all_pass() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](ClauseVerdict const& c) { return c.pass; });
}

bool SocleReport::all_pass() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](ClauseVerdict const& c) { return c.pass; });
}

namespace {

std::string set_to_string(FiniteSemigroup const& s, ElementSet const& x) {
  std::string out = "{";
  bool first = true;
  x.for_each([&](element a) {
    if (!first) out += ", ";
    out += s.label(a);
    first = false;
  });
  return out + "}";
}

bool is_0_simple_set(FiniteSemigroup const& s, ElementSet const& b,
                     std::string& why) {
  auto [t, back] = subsemigroup(s, b);
  if (!t.zero()) {
    why = "no zero in the restriction";
    return false;
  }
  element const z = *t.zero();
  ElementSet const sq = product_set(t, t.all(), t.all());
  if (sq == t.singleton(z)) {
    why = "square is zero";
    return false;
  }
  for (element a = 0; a < t.size(); ++a) {
    if (a == z) continue;
    if (principal_ideal(t, a) != t.all()) {
      why = "proper non-zero ideal generated by " + t.label(a);
      return false;
    }
  }
  return true;
}

}  // namespace

SRDecomposition decompose_SR(FiniteSemigroup const& s, ElementSet const& r) {
  if (!s.zero()) throw NoZeroError();
  element const z = *s.zero();
  {
    auto const zmri = zero_minimal_right_ideals(s);
    if (std::find(zmri.begin(), zmri.end(), r) == zmri.end()) {
      throw PreconditionError("R is not a 0-minimal right ideal");
    }
  }
  if (!is_globally_idempotent(s, r)) {
    throw PreconditionError("R is not globally idempotent");
  }
  SRDecomposition d;
  d.sr = product_set(s, s.all(), r);
  ElementSet a_part(s.size());
  a_part.add(z);
  ElementSet b_part(s.size());
  b_part.add(z);
  for (auto const& i : zero_minimal_right_ideals(s)) {
    if (!i.is_subset_of(d.sr)) continue;
    if (product_set(s, i, i) == i) {
      b_part |= i;
    } else {
      a_part |= i;
    }
  }
  d.a_part = a_part;
  d.b_part = b_part;

  auto clause = [&](std::string name, bool pass, std::string witness) {
    d.clauses.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
  };

  ElementSet meet = a_part & b_part;
  bool const disjoint = (a_part | b_part) == d.sr && meet == s.singleton(z);
  clause("SR is the 0-disjoint union of its null and globally idempotent parts",
         disjoint, set_to_string(s, meet));

  ElementSet const a_sq = product_set(s, a_part, a_part);
  IdealCheck const a_ideal = is_ideal(s, a_part);
  clause("the null part is a null semigroup and an ideal",
         a_sq == s.singleton(z) && a_ideal.ok,
         a_sq == s.singleton(z) ? "not an ideal" : "square is not zero");

  std::string why;
  bool const b_right = is_right_ideal(s, b_part).ok;
  bool const b_0simple = is_0_simple_set(s, b_part, why);
  clause("the globally idempotent part is a 0-simple right ideal",
         b_right && b_0simple, b_right ? why : "not a right ideal");

  // right ideals of B coincide with right ideals of S inside B; checked via
  // the principal right ideals, which generate them all
  {
    auto [bsg, back] = subsemigroup(s, b_part);
    bool ok = true;
    std::string wit;
    for (element i = 0; i < bsg.size() && ok; ++i) {
      ElementSet const inner = principal_right_ideal(bsg, i);
      ElementSet mapped(s.size());
      inner.for_each([&](element x) { mapped.add(back[x]); });
      if (mapped != principal_right_ideal(s, back[i])) {
        ok = false;
        wit = s.label(back[i]);
      }
    }
    if (ok && bsg.zero()) {
      // the 0-minimal right ideals must also correspond
      std::set<ElementSet> inner_min;
      for (auto const& i : zero_minimal_right_ideals(bsg)) {
        ElementSet mapped(s.size());
        i.for_each([&](element x) { mapped.add(back[x]); });
        inner_min.insert(mapped);
      }
      std::set<ElementSet> outer_min;
      for (auto const& i : zero_minimal_right_ideals(s)) {
        if (i.is_subset_of(b_part)) outer_min.insert(i);
      }
      if (inner_min != outer_min) {
        ok = false;
        wit = "0-minimal right ideals differ";
      }
    }
    clause("right ideals of the globally idempotent part are its right ideals in S",
           ok, wit);
  }
  return d;
}

SocleReport socle(FiniteSemigroup const& s, Side side) {
  if (!s.zero()) throw NoZeroError();
  if (side == Side::Left) {
    // left-sided notions are right-sided notions of the transpose
    SocleReport rep = socle(transpose(s), Side::Right);
    rep.side = Side::Left;
    return rep;
  }
  element const z = *s.zero();
  SocleReport rep;
  rep.side = Side::Right;
  ElementSet sigma(s.size()), a_part(s.size()), b_part(s.size());
  sigma.add(z);
  a_part.add(z);
  b_part.add(z);
  std::vector<ElementSet> gi;
  for (auto const& i : zero_minimal_right_ideals(s)) {
    sigma |= i;
    if (product_set(s, i, i) == i) {
      b_part |= i;
      gi.push_back(i);
    } else {
      a_part |= i;
    }
  }
  rep.sigma = sigma;
  rep.null_part = a_part;
  rep.gi_part = b_part;
  {
    std::set<ElementSet> blocks;
    for (auto const& r : gi) {
      blocks.insert(decompose_SR(s, r).b_part);
    }
    rep.blocks.assign(blocks.begin(), blocks.end());
  }

  auto clause = [&](std::string name, bool pass, std::string witness) {
    rep.clauses.push_back(
        {std::move(name), pass, pass ? "" : std::move(witness)});
  };

  clause("the socle is a two-sided ideal", is_ideal(s, sigma).ok, "");
  ElementSet const meet = a_part & b_part;
  clause("the socle is the 0-disjoint union of its null and globally idempotent parts",
         (a_part | b_part) == sigma && meet == s.singleton(z),
         set_to_string(s, meet));
  clause("the null part is a null semigroup and an ideal",
         product_set(s, a_part, a_part) == s.singleton(z) &&
             is_ideal(s, a_part).ok,
         "");
  clause("the globally idempotent part is a right ideal",
         is_right_ideal(s, b_part).ok, "");
  {
    bool ok = true;
    std::string wit;
    if (b_part != s.singleton(z)) {
      ElementSet covered(s.size());
      covered.add(z);
      for (auto const& blk : rep.blocks) covered |= blk;
      if (covered != b_part) {
        ok = false;
        wit = "blocks do not cover the globally idempotent part";
      }
      for (std::size_t i = 0; i < rep.blocks.size() && ok; ++i) {
        std::string why;
        if (!is_0_simple_set(s, rep.blocks[i], why)) {
          ok = false;
          wit = "block " + std::to_string(i) + ": " + why;
        }
        for (std::size_t j = i + 1; j < rep.blocks.size() && ok; ++j) {
          if ((rep.blocks[i] & rep.blocks[j]) != s.singleton(z)) {
            ok = false;
            wit = "blocks intersect beyond zero";
          } else if (product_set(s, rep.blocks[i], rep.blocks[j]) !=
                         s.singleton(z) ||
                     product_set(s, rep.blocks[j], rep.blocks[i]) !=
                         s.singleton(z)) {
            ok = false;
            wit = "cross product of blocks is not zero";
          }
        }
      }
    }
    clause("the globally idempotent part is the 0-direct union of 0-simple blocks",
           ok, wit);
  }
  return rep;
}

bool is_decomposable_right_ideal(FiniteSemigroup const& a,
                                 ElementSet const& i) {
  IdealCheck const chk = is_right_ideal(a, i);
  if (!chk.ok) {
    throw NotARightIdealError("I is not a right ideal");
  }
  return product_set(a, i, a.all()) == i;
}

bool tri_true(Tri t) { return t == Tri::True; }

StructureReport classify(FiniteSemigroup const& s) {
  std::size_t const n = s.size();
  StructureReport rep;
  auto const all = s.all();

  auto right_simple_fail = [&]() -> std::optional<element> {
    for (element a = 0; a < n; ++a) {
      if (principal_right_ideal(s, a) != all) return a;
    }
    return std::nullopt;
  };
  auto left_simple_fail = [&]() -> std::optional<element> {
    for (element a = 0; a < n; ++a) {
      if (principal_left_ideal(s, a) != all) return a;
    }
    return std::nullopt;
  };
  auto simple_fail = [&]() -> std::optional<element> {
    for (element a = 0; a < n; ++a) {
      if (principal_ideal(s, a) != all) return a;
    }
    return std::nullopt;
  };

  if (auto w = right_simple_fail()) {
    rep.is_right_simple = false;
    rep.witnesses["is_right_simple"] = s.label(*w) + "S^1 is proper";
  } else {
    rep.is_right_simple = true;
  }
  if (auto w = left_simple_fail()) {
    rep.is_left_simple = false;
    rep.witnesses["is_left_simple"] = "S^1" + s.label(*w) + " is proper";
  } else {
    rep.is_left_simple = true;
  }
  if (auto w = simple_fail()) {
    rep.is_simple = false;
    rep.witnesses["is_simple"] =
        "principal ideal of " + s.label(*w) + " is proper";
  } else {
    rep.is_simple = true;
  }

  rep.is_completely_simple = rep.is_simple && !minimal_right_ideals(s).empty() &&
                             !minimal_left_ideals(s).empty();
  if (!rep.is_completely_simple && rep.is_simple) {
    rep.witnesses["is_completely_simple"] = "missing minimal one-sided ideals";
  } else if (!rep.is_completely_simple) {
    rep.witnesses["is_completely_simple"] = "not simple";
  }

  if (s.zero()) {
    element const z = *s.zero();
    bool const square_zero = product_set(s, all, all) == s.singleton(z);
    if (square_zero) {
      rep.is_null = Tri::True;
    } else {
      rep.is_null = Tri::False;
      for (element a = 0; a < n && rep.witnesses.count("is_null") == 0; ++a) {
        for (element b = 0; b < n; ++b) {
          if (s.mul(a, b) != z) {
            rep.witnesses["is_null"] =
                s.label(a) + " * " + s.label(b) + " != 0";
            break;
          }
        }
      }
    }
    auto zero_right_simple = [&]() -> bool {
      if (square_zero) return false;
      for (element a = 0; a < n; ++a) {
        if (a == z) continue;
        if (principal_right_ideal(s, a) != all) {
          rep.witnesses["is_right_0_simple"] = s.label(a) + "S^1 is proper";
          return false;
        }
      }
      return true;
    };
    auto zero_simple = [&]() -> bool {
      if (square_zero) {
        rep.witnesses["is_0_simple"] = "square is zero";
        return false;
      }
      for (element a = 0; a < n; ++a) {
        if (a == z) continue;
        if (principal_ideal(s, a) != all) {
          rep.witnesses["is_0_simple"] =
              "principal ideal of " + s.label(a) + " is proper";
          return false;
        }
      }
      return true;
    };
    rep.is_right_0_simple = zero_right_simple() ? Tri::True : Tri::False;
    bool const zs = zero_simple();
    rep.is_0_simple = zs ? Tri::True : Tri::False;
    if (zs) {
      bool const c0s = !zero_minimal_right_ideals(s).empty() &&
                       !zero_minimal_left_ideals(s).empty();
      rep.is_completely_0_simple = c0s ? Tri::True : Tri::False;
      if (!c0s) {
        rep.witnesses["is_completely_0_simple"] =
            "missing 0-minimal one-sided ideals";
      }
    } else {
      rep.is_completely_0_simple = Tri::False;
      rep.witnesses["is_completely_0_simple"] = "not 0-simple";
    }
  }

  {
    bool semisimple = true;
    GreenStructure const g = compute_green(s);
    ElementSet const k = kernel(s);
    for (auto const& jc : g.j.classes) {
      element const rep_elem = jc.members().front();
      auto const pf = principal_factor(s, rep_elem);
      bool ok = true;
      if (pf.tag == FactorTag::Null) {
        ok = false;
      } else if (pf.tag == FactorTag::Kernel) {
        // the kernel must itself be simple
        for (element a = 0; a < pf.factor.size(); ++a) {
          if (principal_ideal(pf.factor, a) != pf.factor.all()) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) {
        semisimple = false;
        rep.witnesses["is_semisimple"] =
            "principal factor of " + s.label(rep_elem) + " is not (0-)simple";
        break;
      }
    }
    rep.is_semisimple = semisimple;
    (void)k;
  }

  {
    RegularityReport const r = is_regular(s);
    rep.is_regular = r.regular;
    if (!r.regular) {
      rep.witnesses["is_regular"] = s.label(*r.failing) + " is not regular";
    }
  }
  return rep;
}

}  // namespace sgchain

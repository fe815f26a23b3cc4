#include "sgchain/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "sgchain/acts.hpp"
#include "sgchain/chains.hpp"
#include "sgchain/constructions.hpp"
#include "sgchain/errors.hpp"
#include "sgchain/green.hpp"
#include "sgchain/ideals.hpp"
#include "sgchain/zoo.hpp"

namespace sgchain {

namespace {

struct CheckOutcome {
  Verdict verdict;
  std::string witness;
};

CheckOutcome pass() { return {Verdict::Pass, ""}; }
CheckOutcome fail(std::string w) { return {Verdict::Fail, std::move(w)}; }
CheckOutcome skip() { return {Verdict::Skip, ""}; }

// Shared per-instance context so the Green structure is computed once.
struct Ctx {
  FiniteSemigroup const& s;
  GreenStructure green;
  std::vector<ElementSet> min_right, min_left;
  ElementSet kern;
  // only populated when the instance has a zero
  std::vector<ElementSet> zmri, zmli;

  explicit Ctx(FiniteSemigroup const& sg)
      : s(sg),
        green(compute_green(sg)),
        min_right(minimal_right_ideals(sg)),
        min_left(minimal_left_ideals(sg)),
        kern(kernel(sg)) {
    if (s.zero()) {
      zmri = zero_minimal_right_ideals(s);
      zmli = zero_minimal_left_ideals(s);
    }
  }
};

using CheckFn = std::function<CheckOutcome(Ctx const&)>;

struct FiniteCheck {
  std::string id;
  std::string anchor;
  CheckFn fn;
};

std::string pair_witness(FiniteSemigroup const& s, element a, element b) {
  return s.label(a) + ", " + s.label(b);
}

// ---------------------------------------------------------------------
// Green's relation laws

CheckOutcome chk_valid(Ctx const& c) {
  // independent naive re-validation of the table and declared axioms
  auto const& s = c.s;
  std::size_t const n = s.size();
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) {
      for (element k = 0; k < n; ++k) {
        if (s.mul(s.mul(i, j), k) != s.mul(i, s.mul(j, k))) {
          return fail("(" + s.label(i) + " " + s.label(j) + " " + s.label(k) +
                      ") associates differently");
        }
      }
    }
  }
  if (s.zero()) {
    for (element i = 0; i < n; ++i) {
      if (s.mul(*s.zero(), i) != *s.zero() || s.mul(i, *s.zero()) != *s.zero()) {
        return fail("zero axiom fails at " + s.label(i));
      }
    }
  }
  if (s.identity()) {
    for (element i = 0; i < n; ++i) {
      if (s.mul(*s.identity(), i) != i || s.mul(i, *s.identity()) != i) {
        return fail("identity axiom fails at " + s.label(i));
      }
    }
  }
  return pass();
}

CheckOutcome chk_h_meet(Ctx const& c) {
  auto const& g = c.green;
  for (element a = 0; a < c.s.size(); ++a) {
    for (element b = 0; b < c.s.size(); ++b) {
      bool const h = g.h.class_of[a] == g.h.class_of[b];
      bool const rl = g.r.class_of[a] == g.r.class_of[b] &&
                      g.l.class_of[a] == g.l.class_of[b];
      if (h != rl) return fail(pair_witness(c.s, a, b));
    }
  }
  return pass();
}

CheckOutcome chk_d_r_circ_l(Ctx const& c) {
  auto const& g = c.green;
  std::size_t const n = c.s.size();
  for (auto const& rclass : g.r.classes) {
    ElementSet reach(n);
    rclass.for_each(
        [&](element b) { reach |= g.l.classes[g.l.class_of[b]]; });
    element const rep = rclass.members().front();
    if (reach != g.d.classes[g.d.class_of[rep]]) {
      return fail("R-class of " + c.s.label(rep));
    }
  }
  return pass();
}

CheckOutcome chk_d_l_circ_r(Ctx const& c) {
  auto const& g = c.green;
  std::size_t const n = c.s.size();
  for (auto const& lclass : g.l.classes) {
    ElementSet reach(n);
    lclass.for_each(
        [&](element b) { reach |= g.r.classes[g.r.class_of[b]]; });
    element const rep = lclass.members().front();
    if (reach != g.d.classes[g.d.class_of[rep]]) {
      return fail("L-class of " + c.s.label(rep));
    }
  }
  return pass();
}

CheckOutcome refinement(Ctx const& c, Partition const& finer,
                        Partition const& coarser) {
  for (auto const& cls : finer.classes) {
    auto const members = cls.members();
    for (std::size_t i = 1; i < members.size(); ++i) {
      if (coarser.class_of[members[i]] != coarser.class_of[members[0]]) {
        return fail(pair_witness(c.s, members[0], members[i]));
      }
    }
  }
  return pass();
}

CheckOutcome chk_r_right_congruence(Ctx const& c) {
  auto const& g = c.green;
  for (auto const& cls : g.r.classes) {
    auto const members = cls.members();
    for (element x = 0; x < c.s.size(); ++x) {
      std::uint32_t const target = g.r.class_of[c.s.mul(members[0], x)];
      for (std::size_t i = 1; i < members.size(); ++i) {
        if (g.r.class_of[c.s.mul(members[i], x)] != target) {
          return fail(pair_witness(c.s, members[0], members[i]) + " by " +
                      c.s.label(x));
        }
      }
    }
  }
  return pass();
}

CheckOutcome chk_right_ideal_saturated(Ctx const& c) {
  auto saturated = [&](ElementSet const& ideal) -> std::optional<element> {
    for (element a : ideal.members()) {
      if (!c.green.r.classes[c.green.r.class_of[a]].is_subset_of(ideal)) {
        return a;
      }
    }
    return std::nullopt;
  };
  for (element a = 0; a < c.s.size(); ++a) {
    if (auto w = saturated(c.green.right_ideal_of[a])) {
      return fail(c.s.label(*w) + " in " + c.s.label(a) + "S^1");
    }
  }
  ElementSet gens(c.s.size());
  gens.add(0);
  gens.add(static_cast<element>(c.s.size() / 2));
  if (auto w = saturated(generated_right_ideal(c.s, gens))) {
    return fail(c.s.label(*w));
  }
  return pass();
}

CheckOutcome chk_r_poset_valid(Ctx const& c) {
  auto const& p = c.green.r_poset;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p.leq(i, i)) return fail("not reflexive");
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i != j && p.leq(i, j) && p.leq(j, i)) return fail("not antisymmetric");
      if (!p.leq(i, j)) continue;
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p.leq(j, k) && !p.leq(i, k)) return fail("not transitive");
      }
    }
  }
  return pass();
}

CheckOutcome chk_max_antichain(Ctx const& c) {
  auto const& p = c.green.r_poset;
  std::size_t const n = p.size();
  if (n > 12) return skip();
  // exhaustive oracle: lexicographically least maximum antichain
  std::vector<std::size_t> best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> mem;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1) mem.push_back(i);
    }
    bool anti = true;
    for (std::size_t i = 0; i < mem.size() && anti; ++i) {
      for (std::size_t j = i + 1; j < mem.size() && anti; ++j) {
        if (p.leq(mem[i], mem[j]) || p.leq(mem[j], mem[i])) anti = false;
      }
    }
    if (anti && (mem.size() > best.size() ||
                 (mem.size() == best.size() && mem < best))) {
      best = mem;
    }
  }
  auto const got = maximum_antichain(p);
  if (got != best) {
    return fail("expected size " + std::to_string(best.size()) + ", got " +
                std::to_string(got.size()));
  }
  return pass();
}

// ---------------------------------------------------------------------
// minimal-ideal structure

CheckOutcome chk_min_right_simple(Ctx const& c) {
  for (auto const& r : c.min_right) {
    auto [t, back] = subsemigroup(c.s, r);
    for (element a = 0; a < t.size(); ++a) {
      if (principal_right_ideal(t, a) != t.all()) {
        return fail("minimal right ideal is not right simple at " +
                    t.label(a));
      }
    }
  }
  return pass();
}

CheckOutcome chk_min_left_simple(Ctx const& c) {
  for (auto const& l : c.min_left) {
    auto [t, back] = subsemigroup(c.s, l);
    for (element a = 0; a < t.size(); ++a) {
      if (principal_left_ideal(t, a) != t.all()) {
        return fail("minimal left ideal is not left simple at " + t.label(a));
      }
    }
  }
  return pass();
}

CheckOutcome chk_kernel_simple(Ctx const& c) {
  auto [t, back] = subsemigroup(c.s, c.kern);
  for (element a = 0; a < t.size(); ++a) {
    if (principal_ideal(t, a) != t.all()) {
      return fail("kernel is not simple at " + t.label(a));
    }
  }
  return pass();
}

CheckOutcome chk_kernel_union_min_right(Ctx const& c) {
  if (c.min_right.empty()) return skip();
  ElementSet u(c.s.size());
  for (auto const& r : c.min_right) u |= r;
  if (u != c.kern) return fail("kernel differs from the union");
  return pass();
}

CheckOutcome chk_kernel_union_min_left(Ctx const& c) {
  if (c.min_left.empty()) return skip();
  ElementSet u(c.s.size());
  for (auto const& l : c.min_left) u |= l;
  if (u != c.kern) return fail("kernel differs from the union");
  return pass();
}

CheckOutcome chk_completely_simple_kernel(Ctx const& c) {
  bool const lhs = !c.min_right.empty() && !c.min_left.empty();
  auto [t, back] = subsemigroup(c.s, c.kern);
  bool simple = true;
  for (element a = 0; a < t.size() && simple; ++a) {
    simple = principal_ideal(t, a) == t.all();
  }
  bool const rhs = simple && !minimal_right_ideals(t).empty() &&
                   !minimal_left_ideals(t).empty();
  if (lhs != rhs) {
    return fail(std::string("one-sided minimal ideals ") +
                (lhs ? "exist" : "missing") + " but kernel is " +
                (rhs ? "" : "not ") + "completely simple");
  }
  return pass();
}

CheckOutcome chk_zero_min_ideal_null_or_0simple(Ctx const& c) {
  if (!c.s.zero()) return skip();
  element const z = *c.s.zero();
  for (auto const& i : zero_minimal_ideals(c.s)) {
    ElementSet const sq = product_set(c.s, i, i);
    if (sq == c.s.singleton(z)) continue;  // null
    auto [t, back] = subsemigroup(c.s, i);
    element const tz = *t.zero();
    bool zero_simple = product_set(t, t.all(), t.all()) != t.singleton(tz);
    for (element a = 0; a < t.size() && zero_simple; ++a) {
      if (a == tz) continue;
      zero_simple = principal_ideal(t, a) == t.all();
    }
    if (!zero_simple) {
      return fail("0-minimal ideal neither null nor 0-simple");
    }
  }
  return pass();
}

CheckOutcome chk_onesided_are_mn(Ctx const& c) {
  std::size_t const samples = std::min<std::size_t>(c.s.size(), 6);
  for (element a = 0; a < samples; ++a) {
    ElementSet const i = principal_right_ideal(c.s, a);
    for (auto const [m, n] : {std::pair<std::size_t, std::size_t>{1, 1},
                              {1, 2},
                              {2, 1}}) {
      if (!is_mn_ideal(c.s, i, m, n).ok) {
        return fail(c.s.label(a) + "S^1 fails as (" + std::to_string(m) +
                    "," + std::to_string(n) + ")-ideal");
      }
    }
  }
  return pass();
}

CheckOutcome chk_socle_right(Ctx const& c) {
  if (!c.s.zero()) return skip();
  SocleReport const rep = socle(c.s, Side::Right);
  for (auto const& cl : rep.clauses) {
    if (!cl.pass) return fail(cl.name + ": " + cl.witness);
  }
  return pass();
}

CheckOutcome chk_socle_left(Ctx const& c) {
  if (!c.s.zero()) return skip();
  SocleReport const rep = socle(c.s, Side::Left);
  for (auto const& cl : rep.clauses) {
    if (!cl.pass) return fail(cl.name + ": " + cl.witness);
  }
  return pass();
}

CheckOutcome chk_sr_clauses(Ctx const& c) {
  if (!c.s.zero()) return skip();
  auto run = [](FiniteSemigroup const& s,
                std::vector<ElementSet> const& zmri) -> CheckOutcome {
    for (auto const& r : zmri) {
      if (!is_globally_idempotent(s, r)) continue;
      SRDecomposition const d = decompose_SR(s, r);
      for (auto const& cl : d.clauses) {
        if (!cl.pass) return fail(cl.name + ": " + cl.witness);
      }
    }
    return pass();
  };
  CheckOutcome const right = run(c.s, c.zmri);
  if (right.verdict == Verdict::Fail) return right;
  FiniteSemigroup const t = transpose(c.s);
  return run(t, zero_minimal_right_ideals(t));
}

CheckOutcome chk_annihilator_incomparability(Ctx const& c) {
  if (!c.s.zero()) return skip();
  for (auto const& r : c.zmri) {
    auto [t, back] = subsemigroup(c.s, r);
    element const tz = *t.zero();
    for (element a = 0; a < t.size(); ++a) {
      if (a == tz) continue;
      ElementSet const pa = principal_right_ideal(t, a);
      bool a_annihilates = true;
      for (element x = 0; x < t.size() && a_annihilates; ++x) {
        a_annihilates = t.mul(a, x) == tz;
      }
      for (element b = static_cast<element>(a + 1); b < t.size(); ++b) {
        if (b == tz) continue;
        ElementSet const pb = principal_right_ideal(t, b);
        bool const incomparable =
            !pa.is_subset_of(pb) && !pb.is_subset_of(pa);
        bool b_annihilates = true;
        for (element x = 0; x < t.size() && b_annihilates; ++x) {
          b_annihilates = t.mul(b, x) == tz;
        }
        if (incomparable != (a_annihilates && b_annihilates)) {
          return fail(pair_witness(t, a, b));
        }
      }
    }
  }
  return pass();
}

// ---------------------------------------------------------------------
// acts

Act subact_as_act(FiniteSemigroup const& s, ElementSet const& x) {
  auto const members = x.members();
  std::vector<element> to_sub(s.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    to_sub[members[i]] = static_cast<element>(i);
  }
  std::vector<std::vector<element>> action(members.size(),
                                           std::vector<element>(s.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (element t = 0; t < s.size(); ++t) {
      action[i][t] = to_sub[s.mul(members[i], t)];
    }
  }
  return Act::from_table(s, std::move(action));
}

CheckOutcome chk_subacts_are_right_ideals(Ctx const& c) {
  if (c.s.size() > 12 || c.green.r.count() > 16) return skip();
  auto subacts = all_subacts(Act::regular(c.s));
  auto ideals = all_right_ideals(c.s);
  if (subacts != ideals) {
    return fail("subact and right-ideal lattices differ");
  }
  return pass();
}

CheckOutcome chk_rs_poset_matches_green(Ctx const& c) {
  RsClasses const rs = rs_class_poset(Act::regular(c.s));
  if (rs.classes.classes != c.green.r.classes) {
    return fail("class lists differ");
  }
  for (std::size_t i = 0; i < rs.poset.size(); ++i) {
    for (std::size_t j = 0; j < rs.poset.size(); ++j) {
      if (rs.poset.leq(i, j) != c.green.r_poset.leq(i, j)) {
        return fail("order differs at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
      }
    }
  }
  return pass();
}

CheckOutcome chk_quotient_lattice(Ctx const& c) {
  if (c.s.size() > 8) return skip();
  Act const a = Act::regular(c.s);
  ElementSet const b = c.kern;  // the kernel is always a subact of S_S
  ActQuotient const q = act_rees_quotient(a, b);
  element const qz = *q.quotient.zero();
  auto const quotient_subacts = all_subacts(q.quotient);
  std::set<ElementSet> with_zero;
  for (auto const& d : quotient_subacts) {
    if (d.contains(qz)) with_zero.insert(d);
  }
  // preimages inject into the subacts of A containing B
  std::set<ElementSet> preimages;
  for (auto const& d : with_zero) {
    ElementSet pre(c.s.size());
    for (element p = 0; p < c.s.size(); ++p) {
      if (d.contains(q.map[p])) pre.add(p);
    }
    if (!is_subact(a, pre) || !b.is_subset_of(pre)) {
      return fail("preimage is not a subact containing B");
    }
    if (!preimages.insert(pre).second) {
      return fail("preimage map is not injective");
    }
  }
  // images of subacts of A cover the subacts of A/B containing zero
  std::set<ElementSet> images;
  for (auto const& sub : all_subacts(a)) {
    ElementSet img(q.quotient.carrier_size());
    img.add(qz);
    sub.for_each([&](element p) { img.add(q.map[p]); });
    images.insert(img);
  }
  if (images != with_zero) {
    return fail("images do not match the zero-containing subacts");
  }
  return pass();
}

CheckOutcome chk_union_of_simple_subacts(Ctx const& c) {
  ElementSet u(c.s.size());
  for (auto const& r : c.min_right) u |= r;
  if (u.empty()) return skip();
  Act const a = subact_as_act(c.s, u);
  RsClasses const rs = rs_class_poset(a);
  for (std::size_t i = 0; i < rs.poset.size(); ++i) {
    for (std::size_t j = 0; j < rs.poset.size(); ++j) {
      if (rs.poset.lt(i, j)) {
        return fail("classes are not pairwise incomparable");
      }
    }
  }
  return pass();
}

// ---------------------------------------------------------------------
// core primitives

CheckOutcome chk_regular_witnesses(Ctx const& c) {
  RegularityReport const rep = is_regular(c.s);
  for (element a = 0; a < c.s.size(); ++a) {
    bool truly = false;
    for (element b = 0; b < c.s.size() && !truly; ++b) {
      truly = c.s.mul(c.s.mul(a, b), a) == a;
    }
    if (truly != rep.witness[a].has_value()) {
      return fail(c.s.label(a));
    }
    if (rep.witness[a] &&
        c.s.mul(c.s.mul(a, *rep.witness[a]), a) != a) {
      return fail("bad witness for " + c.s.label(a));
    }
  }
  if (rep.regular != std::all_of(rep.witness.begin(), rep.witness.end(),
                                 [](auto const& w) { return w.has_value(); })) {
    return fail("regular flag inconsistent");
  }
  return pass();
}

CheckOutcome chk_idempotents(Ctx const& c) {
  ElementSet const e = idempotents(c.s);
  for (element a = 0; a < c.s.size(); ++a) {
    if (e.contains(a) != (c.s.mul(a, a) == a)) return fail(c.s.label(a));
  }
  return pass();
}

CheckOutcome chk_local_right_identity(Ctx const& c) {
  for (element a = 0; a < c.s.size(); ++a) {
    bool direct = false;
    for (element x = 0; x < c.s.size() && !direct; ++x) {
      direct = c.s.mul(a, x) == a;
    }
    if (direct != has_local_right_identity(c.s, a)) {
      return fail(c.s.label(a));
    }
  }
  return pass();
}

CheckOutcome chk_closure_idempotent(Ctx const& c) {
  std::size_t const samples = std::min<std::size_t>(c.s.size(), 6);
  for (element a = 0; a < samples; ++a) {
    ElementSet const once = closure(c.s, c.s.singleton(a));
    if (closure(c.s, once) != once) return fail(c.s.label(a));
  }
  return pass();
}

CheckOutcome chk_adjoin_identity_idempotent(Ctx const& c) {
  FiniteSemigroup const once = adjoin_identity(c.s);
  if (!adjoin_identity(once).same_table(once)) return fail("tables differ");
  return pass();
}

CheckOutcome chk_adjoin_zero_idempotent(Ctx const& c) {
  FiniteSemigroup const once = adjoin_zero(c.s);
  if (!adjoin_zero(once).same_table(once)) return fail("tables differ");
  return pass();
}

// ---------------------------------------------------------------------
// constructions

CheckOutcome chk_principal_factor_tags(Ctx const& c) {
  if (c.s.size() > 60) return skip();
  for (auto const& jc : c.green.j.classes) {
    element const rep = jc.members().front();
    PrincipalFactor const pf = principal_factor(c.s, rep);
    bool const in_kernel = c.kern.contains(rep);
    if ((pf.tag == FactorTag::Kernel) != in_kernel) {
      return fail("kernel tag wrong at " + c.s.label(rep));
    }
    if (pf.tag == FactorTag::Kernel) continue;
    element const z = *pf.factor.zero();
    bool const square_zero =
        product_set(pf.factor, pf.factor.all(), pf.factor.all()) ==
        pf.factor.singleton(z);
    if ((pf.tag == FactorTag::Null) != square_zero) {
      return fail("null tag wrong at " + c.s.label(rep));
    }
    if (pf.tag == FactorTag::ZeroSimple) {
      for (element a = 0; a < pf.factor.size(); ++a) {
        if (a == z) continue;
        if (principal_ideal(pf.factor, a) != pf.factor.all()) {
          return fail("0-simple tag wrong at " + c.s.label(rep));
        }
      }
    }
  }
  return pass();
}

CheckOutcome chk_third_isomorphism(Ctx const& c) {
  if (c.s.size() > 60) return skip();
  ElementSet const i = c.kern;
  ElementSet j = i;
  for (element a = 0; a < c.s.size(); ++a) {
    if (!i.contains(a)) {
      j |= principal_ideal(c.s, a);
      break;
    }
  }
  ReesQuotient const by_j = rees_quotient(c.s, j);
  ReesQuotient const by_i = rees_quotient(c.s, i);
  ElementSet j_image(by_i.quotient.size());
  j.for_each([&](element a) { j_image.add(by_i.map[a]); });
  ReesQuotient const by_both = rees_quotient(by_i.quotient, j_image);
  // the composite collapse must agree with collapsing J directly
  std::vector<std::optional<element>> iso(by_j.quotient.size());
  for (element a = 0; a < c.s.size(); ++a) {
    element const lhs = by_j.map[a];
    element const rhs = by_both.map[by_i.map[a]];
    if (iso[lhs] && *iso[lhs] != rhs) {
      return fail("composite map is not well defined at " + c.s.label(a));
    }
    iso[lhs] = rhs;
  }
  std::set<element> image;
  for (auto const& v : iso) {
    if (!v) return fail("composite map is not total");
    image.insert(*v);
  }
  if (image.size() != by_both.quotient.size()) {
    return fail("composite map is not bijective");
  }
  for (element a = 0; a < by_j.quotient.size(); ++a) {
    for (element b = 0; b < by_j.quotient.size(); ++b) {
      if (*iso[by_j.quotient.mul(a, b)] !=
          by_both.quotient.mul(*iso[a], *iso[b])) {
        return fail("composite map is not multiplicative");
      }
    }
  }
  return pass();
}

CheckOutcome u_poset_isomorphism(FiniteSemigroup const& s, Act const& a) {
  UConstruction const u = u_construction(s, a);
  GreenStructure const gu = compute_green(u.u);
  RsClasses const rs = rs_class_poset(a);
  // the natural correspondence x_p -> p must identify the poset of the
  // x-classes with the R_S-class poset of A, over a strictly smaller zero
  std::vector<std::uint32_t> uclass_of_point(a.carrier_size());
  for (element p = 0; p < a.carrier_size(); ++p) {
    uclass_of_point[p] = gu.r.class_of[u.act_embedding[p]];
  }
  std::uint32_t const zclass = gu.r.class_of[u.zero];
  for (element p = 0; p < a.carrier_size(); ++p) {
    if (uclass_of_point[p] == zclass) {
      return fail("x-class collides with the zero class");
    }
    for (element q = 0; q < a.carrier_size(); ++q) {
      bool const same_u = uclass_of_point[p] == uclass_of_point[q];
      bool const same_a =
          rs.classes.class_of[p] == rs.classes.class_of[q];
      if (same_u != same_a) {
        return fail("class map is not a bijection");
      }
      bool const le_u = gu.r_poset.leq(uclass_of_point[p],
                                       uclass_of_point[q]);
      bool const le_a = rs.poset.leq(rs.classes.class_of[p],
                                     rs.classes.class_of[q]);
      if (le_u != le_a) {
        return fail("order is not preserved");
      }
    }
    if (!gu.r_poset.lt(zclass, uclass_of_point[p])) {
      return fail("zero class is not strictly below");
    }
  }
  return pass();
}

CheckOutcome chk_u_poset(Ctx const& c) {
  if (c.s.size() > 12) return skip();
  return u_poset_isomorphism(c.s, Act::regular(c.s));
}

CheckOutcome chk_zero_direct_union(Ctx const& c) {
  if (c.s.size() > 30) return skip();
  FiniteSemigroup const part = adjoin_zero(c.s);
  FiniteSemigroup const u = zero_direct_union({part, part});
  element const z = *u.zero();
  std::size_t const block = part.size() - 1;
  ElementSet first(u.size()), second(u.size());
  first.add(z);
  second.add(z);
  for (element a = 0; a < block; ++a) {
    first.add(a);
    second.add(static_cast<element>(block + a));
  }
  if (product_set(u, first, second) != u.singleton(z) ||
      product_set(u, second, first) != u.singleton(z)) {
    return fail("cross products are not zero");
  }
  if (!is_ideal(u, first).ok || !is_ideal(u, second).ok) {
    return fail("parts are not ideals of the union");
  }
  return pass();
}

// ---------------------------------------------------------------------
// chain machinery on finite instances

CheckOutcome chk_finite_chain_height(Ctx const& c) {
  if (c.s.size() > 30) return skip();
  auto backend = finite_backend(c.s);
  std::size_t const height = c.green.r_poset.height();
  std::size_t longest = 1;
  for (std::size_t t = 2; t <= c.s.size(); ++t) {
    if (!ascending_chain_certificate(*backend, t, c.s.size()).found()) break;
    longest = t;
  }
  if (longest != height) {
    return fail("longest chain " + std::to_string(longest) +
                " != poset height " + std::to_string(height));
  }
  return pass();
}

CheckOutcome chk_certificates_validate(Ctx const& c) {
  if (c.s.size() > 30) return skip();
  auto backend = finite_backend(c.s);
  auto const width = maximum_antichain(c.green.r_poset).size();
  bool ran = false;
  if (width >= 2) {
    SearchResult const res =
        antichain_certificate(*backend, width, c.s.size());
    if (!res.found()) return fail("antichain of poset width not found");
    if (res.certificate->basis != VerdictBasis::Exact) {
      return fail("finite certificate should be exact");
    }
    if (!validate_certificate(*backend, *res.certificate)) {
      return fail("antichain certificate failed validation");
    }
    ran = true;
  }
  std::size_t const height = c.green.r_poset.height();
  if (height >= 2) {
    SearchResult const res =
        ascending_chain_certificate(*backend, height, c.s.size());
    if (!res.found()) return fail("chain of poset height not found");
    if (!validate_certificate(*backend, *res.certificate)) {
      return fail("chain certificate failed validation");
    }
    ran = true;
  }
  return ran ? pass() : skip();
}

// ---------------------------------------------------------------------
// the left-socle lemma, on instances that are their own left socle

CheckOutcome chk_left_socle_lemma(Ctx const& c) {
  if (!c.s.zero()) return skip();
  SocleReport const left = socle(c.s, Side::Left);
  if (left.sigma != c.s.all()) return skip();
  SocleReport const right = socle(c.s, Side::Right);
  element const z = *c.s.zero();
  if (right.null_part != left.null_part) {
    return fail("null parts differ between the sides");
  }
  if (!right.gi_part.is_subset_of(left.gi_part)) {
    return fail("right globally idempotent part escapes the left one");
  }
  if (!is_ideal(c.s, right.gi_part).ok) {
    return fail("right globally idempotent part is not a two-sided ideal");
  }
  ElementSet const meet = right.null_part & right.gi_part;
  if ((right.null_part | right.gi_part) != right.sigma ||
      meet != c.s.singleton(z) ||
      product_set(c.s, right.null_part, right.gi_part) != c.s.singleton(z) ||
      product_set(c.s, right.gi_part, right.null_part) != c.s.singleton(z)) {
    return fail("right socle is not the 0-direct union of its parts");
  }
  // S / Sigma^r and B^l / B^r share the carrier S \ Sigma^r, so the
  // identity on it must carry one quotient onto the other
  ReesQuotient const q1 = rees_quotient(c.s, right.sigma);
  auto [bl, back] = subsemigroup(c.s, left.gi_part);
  ElementSet br_in_bl(bl.size());
  for (element i = 0; i < back.size(); ++i) {
    if (right.gi_part.contains(back[i])) br_in_bl.add(i);
  }
  ReesQuotient const q2 = rees_quotient(bl, br_in_bl);
  std::vector<std::optional<element>> iso(q1.quotient.size());
  for (element i = 0; i < back.size(); ++i) {
    element const lhs = q1.map[back[i]];
    element const rhs = q2.map[i];
    if (iso[lhs] && *iso[lhs] != rhs) return fail("iso not well defined");
    iso[lhs] = rhs;
  }
  element const q1z = *q1.quotient.zero();
  if (!iso[q1z]) iso[q1z] = *q2.quotient.zero();
  if (q1.quotient.size() != q2.quotient.size()) {
    return fail("quotients have different sizes");
  }
  for (element a = 0; a < q1.quotient.size(); ++a) {
    if (!iso[a]) return fail("iso not total");
    for (element b = 0; b < q1.quotient.size(); ++b) {
      if (*iso[q1.quotient.mul(a, b)] !=
          q2.quotient.mul(*iso[a], *iso[b])) {
        return fail("iso not multiplicative");
      }
    }
  }
  return pass();
}

std::vector<FiniteCheck> const& finite_checks() {
  static std::vector<FiniteCheck> const checks = {
      {"core.valid_instance",
       "the table is associative and declared zero/identity satisfy their axioms",
       chk_valid},
      {"green.h_is_meet", "H = R meet L", chk_h_meet},
      {"green.d_is_r_circ_l", "D = R o L", chk_d_r_circ_l},
      {"green.d_is_l_circ_r", "D = L o R", chk_d_l_circ_r},
      {"green.h_refines_r", "H is contained in R",
       [](Ctx const& c) { return refinement(c, c.green.h, c.green.r); }},
      {"green.h_refines_l", "H is contained in L",
       [](Ctx const& c) { return refinement(c, c.green.h, c.green.l); }},
      {"green.r_refines_d", "R is contained in D",
       [](Ctx const& c) { return refinement(c, c.green.r, c.green.d); }},
      {"green.l_refines_d", "L is contained in D",
       [](Ctx const& c) { return refinement(c, c.green.l, c.green.d); }},
      {"green.d_refines_j", "D is contained in J",
       [](Ctx const& c) { return refinement(c, c.green.d, c.green.j); }},
      {"green.r_is_right_congruence", "a R b implies ac R bc",
       chk_r_right_congruence},
      {"green.right_ideals_r_saturated",
       "every right ideal is a union of R-classes", chk_right_ideal_saturated},
      {"green.r_poset_is_partial_order",
       "the order on R-classes is reflexive, antisymmetric and transitive",
       chk_r_poset_valid},
      {"green.maximum_antichain_exact",
       "the reported maximum antichain matches exhaustive search",
       chk_max_antichain},
      {"ideals.minimal_right_are_right_simple",
       "minimal right ideals are right simple semigroups",
       chk_min_right_simple},
      {"ideals.minimal_left_are_left_simple",
       "minimal left ideals are left simple semigroups", chk_min_left_simple},
      {"ideals.kernel_is_simple", "the kernel is a simple semigroup",
       chk_kernel_simple},
      {"ideals.kernel_is_union_of_minimal_right",
       "the kernel equals the union of the minimal right ideals",
       chk_kernel_union_min_right},
      {"ideals.kernel_is_union_of_minimal_left",
       "the kernel equals the union of the minimal left ideals",
       chk_kernel_union_min_left},
      {"ideals.completely_simple_kernel",
       "minimal right and left ideals exist iff the kernel is completely simple",
       chk_completely_simple_kernel},
      {"ideals.zero_minimal_ideal_null_or_0simple",
       "a 0-minimal ideal is null or 0-simple",
       chk_zero_min_ideal_null_or_0simple},
      {"ideals.one_sided_ideals_are_mn_ideals",
       "every one-sided ideal is an (m,n)-ideal", chk_onesided_are_mn},
      {"ideals.right_socle_clauses",
       "the right socle splits 0-disjointly into a null ideal and a 0-direct union of 0-simple blocks",
       chk_socle_right},
      {"ideals.left_socle_clauses",
       "the left socle splits 0-disjointly into a null ideal and a 0-direct union of 0-simple blocks",
       chk_socle_left},
      {"ideals.sr_decomposition_clauses",
       "the ideal generated by a globally idempotent 0-minimal right ideal splits into null and 0-simple parts",
       chk_sr_clauses},
      {"ideals.annihilator_incomparability",
       "principal right ideals of a 0-minimal right ideal are incomparable iff both generators annihilate it",
       chk_annihilator_incomparability},
      {"acts.subacts_of_regular_act_are_right_ideals",
       "subacts of the right regular act are exactly the right ideals",
       chk_subacts_are_right_ideals},
      {"acts.rs_classes_match_green",
       "the R_S-classes of the regular act coincide with Green's R",
       chk_rs_poset_matches_green},
      {"acts.quotient_subact_correspondence",
       "subacts of A/B containing zero correspond to subacts of A containing B",
       chk_quotient_lattice},
      {"acts.union_of_simple_subacts_is_antichain",
       "in a union of simple subacts the class poset is an antichain",
       chk_union_of_simple_subacts},
      {"core.regularity_witnesses", "a = aba holds for every reported witness",
       chk_regular_witnesses},
      {"core.idempotents_exact", "the idempotent set is exactly {e : ee = e}",
       chk_idempotents},
      {"core.local_right_identity", "a has a local right identity iff a lies in aS",
       chk_local_right_identity},
      {"core.closure_is_idempotent", "closing a closed set changes nothing",
       chk_closure_idempotent},
      {"core.adjoin_identity_idempotent",
       "adjoining an identity to a monoid returns it unchanged",
       chk_adjoin_identity_idempotent},
      {"core.adjoin_zero_idempotent",
       "adjoining a zero twice equals adjoining it once",
       chk_adjoin_zero_idempotent},
      {"constructions.principal_factor_tags",
       "principal factors are the kernel, 0-simple, or null, as tagged",
       chk_principal_factor_tags},
      {"constructions.rees_quotient_third_isomorphism",
       "(S/I)/(J/I) is isomorphic to S/J for ideals I inside J",
       chk_third_isomorphism},
      {"constructions.u_extension_class_poset",
       "the x-part classes of the ideal extension mirror the act classes over a new bottom",
       chk_u_poset},
      {"constructions.zero_direct_union_blocks",
       "parts of a 0-direct union stay ideals with vanishing cross products",
       chk_zero_direct_union},
      {"chains.finite_chain_height",
       "the longest strict chain of principal right ideals equals the R-class poset height",
       chk_finite_chain_height},
      {"chains.certificates_validate",
       "searched certificates re-validate against the backend",
       chk_certificates_validate},
      {"ideals.left_socle_lemma",
       "when S is its own left socle the right socle parts align with the left ones",
       chk_left_socle_lemma},
  };
  return checks;
}

// ---------------------------------------------------------------------
// suite runner helpers

struct MutatedInstance {
  std::string id;
  std::vector<std::string> labels;
  std::vector<std::vector<element>> table;
  std::optional<element> zero, identity;
  std::string expected_error;
};

// deterministically finds the first single-entry flip that breaks
// validation, so the harness-integrity check has a guaranteed failure
MutatedInstance mutate_zoo_instance(std::size_t index) {
  auto const& entry = zoo().at(index % zoo().size());
  auto const& s = entry.semigroup;
  std::size_t const n = s.size();
  std::vector<std::vector<element>> table(n, std::vector<element>(n));
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) table[i][j] = s.mul(i, j);
  }
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) {
      for (element delta = 1; delta < n; ++delta) {
        element const old = table[i][j];
        table[i][j] = static_cast<element>((old + delta) % n);
        try {
          FiniteSemigroup::from_table(s.labels(), table, s.zero(),
                                      s.identity());
        } catch (Error const& e) {
          return {entry.id + "+mutated", s.labels(), table, s.zero(),
                  s.identity()};
        }
        table[i][j] = old;
      }
    }
  }
  throw Error("no validation-breaking mutation exists for " + entry.id);
}

void tally(VerificationReport& rep, CheckRecord rec) {
  switch (rec.verdict) {
    case Verdict::Pass:
      ++rep.passed;
      break;
    case Verdict::Fail:
      ++rep.failed;
      break;
    case Verdict::Skip:
      ++rep.skipped;
      break;
  }
  rep.checks.push_back(std::move(rec));
}

// every associative 3x3 table, validated against from_table as we go
std::vector<FiniteSemigroup> const& exhaustive_three() {
  static std::vector<FiniteSemigroup> const tables = [] {
    std::vector<FiniteSemigroup> out;
    std::vector<std::string> const labels{"0", "1", "2"};
    for (std::uint32_t code = 0; code < 19683; ++code) {
      std::uint32_t c = code;
      std::vector<std::vector<element>> t(3, std::vector<element>(3));
      for (int cell = 0; cell < 9; ++cell) {
        t[cell / 3][cell % 3] = static_cast<element>(c % 3);
        c /= 3;
      }
      try {
        out.push_back(FiniteSemigroup::from_table(labels, t));
      } catch (NonAssociativeError const&) {
      }
    }
    return out;
  }();
  return tables;
}

std::optional<std::string> exhaustive_filter_mismatch() {
  std::vector<std::string> const labels{"0", "1", "2"};
  std::size_t accepted = 0;
  for (std::uint32_t code = 0; code < 19683; ++code) {
    std::uint32_t c = code;
    std::vector<std::vector<element>> t(3, std::vector<element>(3));
    for (int cell = 0; cell < 9; ++cell) {
      t[cell / 3][cell % 3] = static_cast<element>(c % 3);
      c /= 3;
    }
    bool naive = true;
    for (int i = 0; i < 3 && naive; ++i) {
      for (int j = 0; j < 3 && naive; ++j) {
        for (int k = 0; k < 3 && naive; ++k) {
          naive = t[t[i][j]][k] == t[i][t[j][k]];
        }
      }
    }
    bool impl = true;
    try {
      FiniteSemigroup::from_table(labels, t);
    } catch (NonAssociativeError const&) {
      impl = false;
    }
    if (naive != impl) {
      return "table code " + std::to_string(code);
    }
    if (impl) ++accepted;
  }
  if (accepted != exhaustive_three().size()) {
    return "accepted count drifted";
  }
  return std::nullopt;
}

void run_finite_suite(VerificationReport& rep, VerifyOptions const& options) {
  std::optional<MutatedInstance> mutated;
  if (options.mutate_index) {
    mutated = mutate_zoo_instance(*options.mutate_index);
  }

  // per-instance contexts for the zoo
  std::vector<std::pair<std::string, Ctx>> zoo_ctx;
  for (auto const& entry : zoo()) {
    zoo_ctx.emplace_back(entry.id, Ctx(entry.semigroup));
  }
  std::vector<std::pair<std::string, Ctx>> random_ctx;
  for (std::size_t i = 0; i < options.count; ++i) {
    FiniteSemigroup s =
        random_transformation_semigroup(options.seed + i);
    random_ctx.emplace_back("random(" + std::to_string(options.seed + i) + ")",
                            Ctx(std::move(s)));
  }

  for (auto const& check : finite_checks()) {
    // the corrupted instance first: its validity check must fail and the
    // rest of the battery is skipped for it
    if (mutated) {
      if (check.id == "core.valid_instance") {
        std::string witness = "not detected";
        try {
          FiniteSemigroup::from_table(mutated->labels, mutated->table,
                                      mutated->zero, mutated->identity);
        } catch (Error const& e) {
          witness = e.what();
        }
        tally(rep, {check.id, check.anchor, mutated->id, Verdict::Fail,
                    witness});
      } else {
        tally(rep, {check.id, check.anchor, mutated->id, Verdict::Skip, ""});
      }
    }
    for (auto const& [id, ctx] : zoo_ctx) {
      CheckOutcome out = check.fn(ctx);
      tally(rep, {check.id, check.anchor, id, out.verdict, out.witness});
    }
    // exhaustive 3-element sweep, reported as one aggregated record
    {
      CheckOutcome agg = skip();
      if (check.id == "core.valid_instance") {
        auto const mismatch = exhaustive_filter_mismatch();
        agg = mismatch ? fail(*mismatch) : pass();
      } else {
        bool any = false;
        for (auto const& s : exhaustive_three()) {
          Ctx ctx(s);
          CheckOutcome out = check.fn(ctx);
          if (out.verdict == Verdict::Fail) {
            agg = fail(out.witness);
            break;
          }
          any = any || out.verdict == Verdict::Pass;
        }
        if (agg.verdict != Verdict::Fail) agg = any ? pass() : skip();
      }
      tally(rep, {check.id, check.anchor, "exhaustive-3x3", agg.verdict,
                  agg.witness});
    }
    // seeded random transformation semigroups, aggregated likewise
    {
      CheckOutcome agg = skip();
      bool any = false;
      for (auto const& [id, ctx] : random_ctx) {
        CheckOutcome out = check.fn(ctx);
        if (out.verdict == Verdict::Fail) {
          agg = fail(id + ": " + out.witness);
          break;
        }
        any = any || out.verdict == Verdict::Pass;
      }
      if (agg.verdict != Verdict::Fail) agg = any ? pass() : skip();
      tally(rep, {check.id, check.anchor,
                  "random-sweep(seed=" + std::to_string(options.seed) +
                      ",count=" + std::to_string(options.count) + ")",
                  agg.verdict, agg.witness});
    }
  }
}

// ---------------------------------------------------------------------
// the symbolic / presentation suite

using InfiniteCheck = std::function<std::optional<std::string>()>;

std::optional<std::string> inf_example_confluent() {
  FpSemigroup const fp = example_41();
  if (!fp.confluent()) return "critical pairs are not joinable";
  auto const chk = is_locally_confluent(fp.rs());
  if (!chk.confluent) return "verdict disagrees with the direct check";
  return std::nullopt;
}

std::optional<std::string> inf_completion_fixpoint() {
  FpSemigroup const fp = example_41();
  CompletionResult const res = knuth_bendix(fp.rs());
  if (!res.completed()) return "completion gave up";
  if (res.system.rules() != fp.rs().rules()) {
    return "completion changed an already complete system";
  }
  CompletionResult const comm = knuth_bendix(RewritingSystem::make(
      {"a", "b"}, orient_relations({{Word{0, 1}, Word{1, 0}}})));
  if (!comm.completed() || comm.system.rules().size() != 1) {
    return "commutativity relation should complete with one rule";
  }
  return std::nullopt;
}

std::optional<std::string> inf_normal_form_counts() {
  FpSemigroup const fp = example_41();
  auto const nfs = enumerate_normal_forms(fp, 12);
  for (std::size_t n = 1; n <= 12; ++n) {
    if (nfs[n].size() != 2 * n) {
      return "length " + std::to_string(n) + ": " +
             std::to_string(nfs[n].size()) + " normal forms";
    }
  }
  return std::nullopt;
}

std::optional<std::string> inf_normal_forms_subword_filter() {
  FpSemigroup const fp = example_41();
  auto const nfs = enumerate_normal_forms(fp, 8);
  // independent oracle: generate every word and filter by the two subwords
  auto contains = [](Word const& w, Word const& sub) {
    if (sub.size() > w.size()) return false;
    for (std::size_t p = 0; p + sub.size() <= w.size(); ++p) {
      if (std::equal(sub.begin(), sub.end(), w.begin() + p)) return true;
    }
    return false;
  };
  Word const abb{0, 1, 1}, aba{0, 1, 0};
  std::vector<Word> level{{}};
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Word> next;
    for (auto const& w : level) {
      for (Letter l = 0; l < 2; ++l) {
        Word e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    }
    level = std::move(next);
    std::vector<Word> expected;
    for (auto const& w : level) {
      if (!contains(w, abb) && !contains(w, aba)) expected.push_back(w);
    }
    if (expected != nfs[n]) {
      return "length " + std::to_string(n) + " differs from the filter";
    }
  }
  return std::nullopt;
}

std::optional<std::string> inf_reduction_identity() {
  FpSemigroup const fp = example_41();
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = 1; j <= 4; ++j) {
      Word w;
      w.insert(w.end(), i, 0);
      w.insert(w.end(), i, 1);
      w.insert(w.end(), j, 0);
      w.insert(w.end(), j + 1, 1);
      if (reduce(fp.rs(), w) != Word{1}) {
        return "a^" + std::to_string(i) + " b^" + std::to_string(i) + " a^" +
               std::to_string(j) + " b^" + std::to_string(j + 1) +
               " does not collapse to b";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> inf_congruence_property() {
  FpSemigroup const fp = example_41();
  std::vector<Word> words;
  std::vector<Word> level{{}};
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Word> next;
    for (auto const& w : level) {
      for (Letter l = 0; l < 2; ++l) {
        Word e = w;
        e.push_back(l);
        words.push_back(e);
        next.push_back(std::move(e));
      }
    }
    level = std::move(next);
  }
  for (auto const& u : words) {
    Word const ru = reduce(fp.rs(), u);
    for (auto const& v : words) {
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      Word rr = ru;
      Word const rv = reduce(fp.rs(), v);
      rr.insert(rr.end(), rv.begin(), rv.end());
      if (reduce(fp.rs(), uv) != reduce(fp.rs(), rr)) {
        return fp.rs().display(u) + " * " + fp.rs().display(v);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> inf_kernel_elements() {
  FpSemigroup const fp = example_41();
  auto const& rs = fp.rs();
  auto const nfs = enumerate_normal_forms(fp, 8);
  // products starting from a letter-bearing word stay letter-bearing, so
  // the b-containing normal forms form an ideal at bounded scale
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& u : nfs[n]) {
      for (std::size_t m = 1; m <= 6; ++m) {
        for (auto const& v : nfs[m]) {
          if (!uses_non_initial_letter(u) && !uses_non_initial_letter(v)) {
            continue;
          }
          Word uv = u;
          uv.insert(uv.end(), v.begin(), v.end());
          if (!uses_non_initial_letter(reduce(rs, uv))) {
            return rs.display(u) + " * " + rs.display(v) + " leaves the set";
          }
        }
      }
    }
  }
  // every b-containing normal form is two-sidedly equivalent to b
  for (std::size_t n = 1; n <= 8; ++n) {
    for (auto const& w : nfs[n]) {
      if (!uses_non_initial_letter(w)) continue;
      std::size_t const bcount =
          static_cast<std::size_t>(std::count(w.begin(), w.end(), Letter(1)));
      bool const ends_b = w.back() == 1;
      std::size_t const m = ends_b ? bcount - 1 : bcount;  // leading b-power
      std::size_t const acount =
          static_cast<std::size_t>(std::count(w.begin(), w.end(), Letter(0)));
      Word left(m, 0);  // a^m
      Word right(ends_b ? acount : acount + 1, 1);
      Word lwr = left;
      lwr.insert(lwr.end(), w.begin(), w.end());
      lwr.insert(lwr.end(), right.begin(), right.end());
      if (reduce(rs, lwr) != Word{1}) {
        return rs.display(w) + " does not collapse to b";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> inf_kernel_antichain() {
  Certificate const cert = kernel_antichain_41(50, 12);
  if (cert.elements.size() != 50) return "wrong size";
  auto backend = fp_backend(example_41(), 12, uses_non_initial_letter);
  if (!validate_certificate(*backend, cert)) {
    return "certificate failed validation";
  }
  return std::nullopt;
}

std::optional<std::string> inf_quotient_chain() {
  auto only_a = [](Word const& w) { return !uses_non_initial_letter(w); };
  auto backend = fp_backend(example_41(), 12, only_a);
  SearchResult const res = ascending_chain_certificate(*backend, 10, 12);
  if (!res.found()) return "chain of depth 10 not found";
  if (!validate_certificate(*backend, *res.certificate)) {
    return "chain certificate failed validation";
  }
  return std::nullopt;
}

std::optional<std::string> inf_free_monogenic() {
  auto backend = fp_backend(free_fp(1), 15);
  SearchResult const res = antichain_certificate(*backend, 2, 15);
  if (res.found()) return "an antichain appeared in a chain";
  return std::nullopt;
}

std::optional<std::string> inf_free_pair_antichain() {
  auto backend = fp_backend(free_fp(2), 6);
  SearchResult const res = antichain_certificate(*backend, 20, 6);
  if (!res.found()) return "no antichain of size 20";
  if (res.certificate->basis != VerdictBasis::Exact) {
    return "free membership should be exact";
  }
  if (!validate_certificate(*backend, *res.certificate)) {
    return "certificate failed validation";
  }
  // oracle: pairwise prefix-incomparability
  for (std::size_t i = 0; i < res.certificate->elements.size(); ++i) {
    for (std::size_t j = i + 1; j < res.certificate->elements.size(); ++j) {
      auto const& u = std::get<Word>(res.certificate->elements[i]);
      auto const& v = std::get<Word>(res.certificate->elements[j]);
      auto prefix = [](Word const& p, Word const& w) {
        return p.size() <= w.size() &&
               std::equal(p.begin(), p.end(), w.begin());
      };
      if (prefix(u, v) || prefix(v, u)) return "prefix pair slipped through";
    }
  }
  return std::nullopt;
}

std::optional<std::string> inf_free_chain() {
  auto backend = fp_backend(free_fp(1), 10);
  SearchResult const res = ascending_chain_certificate(*backend, 10, 10);
  if (!res.found()) return "chain of the radius length not found";
  if (!validate_certificate(*backend, *res.certificate)) {
    return "certificate failed validation";
  }
  return std::nullopt;
}

SymbolicReesZ identity_pattern() {
  return SymbolicReesZ::make(
      2, 2, {{std::int64_t(0), std::nullopt}, {std::nullopt, std::int64_t(0)}});
}

std::optional<std::string> inf_reesz_identity() {
  SymbolicReesZ const spec = identity_pattern();
  ZeroMinRightIdealReport const rep =
      zero_min_right_ideal_report(spec, 0, 100);
  if (!rep.infinite) return "annihilator should be infinite";
  if (!rep.certificate || rep.certificate->elements.size() != 100) {
    return "missing the size-100 antichain";
  }
  if (rep.certificate->basis != VerdictBasis::Exact) {
    return "symbolic membership is exact";
  }
  return std::nullopt;
}

std::optional<std::string> inf_reesz_all_integer() {
  SymbolicReesZ const spec = SymbolicReesZ::make(
      2, 2, {{std::int64_t(0), std::int64_t(0)},
             {std::int64_t(0), std::int64_t(0)}});
  ZeroMinRightIdealReport const rep = zero_min_right_ideal_report(spec, 0, 2);
  if (rep.infinite || rep.annihilator_size != 0) {
    return "annihilator should be empty";
  }
  auto backend = rees_z_row_backend(spec, 0);
  SearchResult const res = antichain_certificate(*backend, 2, 5);
  if (res.found()) return "no antichain should exist inside the row";
  return std::nullopt;
}

std::optional<std::string> inf_reesz_projection() {
  SymbolicReesZ const spec = identity_pattern();
  auto symbolic = rees_z_backend(spec);
  // finite oracle: the same sandwich pattern over Z/101
  FiniteGroup g = cyclic_group(101);
  ReesMatrixSpec fspec{g, 2, 2, {{element(0), std::nullopt},
                                 {std::nullopt, element(0)}}};
  FiniteSemigroup const fin = rees_matrix_zero(fspec);
  auto project = [&](Elem const& e) -> element {
    if (std::holds_alternative<SymbolicZero>(e)) {
      return *fin.zero();
    }
    auto const& t = std::get<SymbolicTriple>(e);
    std::int64_t const m = ((t.exp % 101) + 101) % 101;
    return static_cast<element>((t.row * 101 + m) * 2 + t.col);
  };
  auto fb = finite_backend(fin);
  auto const ground = symbolic->enumerate(3);
  for (auto const& x : ground) {
    for (auto const& y : ground) {
      auto const sym = symbolic->in_principal_right_ideal(x, y, 3);
      auto const f = fb->in_principal_right_ideal(Elem(project(x)),
                                                  Elem(project(y)), 3);
      bool const sym_in = sym.kind == Membership::Kind::Yes ||
                          sym.kind == Membership::Kind::Equal;
      bool const fin_in = f.kind == Membership::Kind::Yes ||
                          f.kind == Membership::Kind::Equal;
      if (sym_in != fin_in) {
        return symbolic->display(x) + " vs " + symbolic->display(y);
      }
      // products must project compatibly as well
      if (project(symbolic->multiply(x, y)) !=
          fin.mul(project(x), project(y))) {
        return "products disagree at " + symbolic->display(x) + ", " +
               symbolic->display(y);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> inf_reesz_membership_samples() {
  SymbolicReesZ const spec = identity_pattern();
  auto backend = rees_z_backend(spec);
  Elem const x(SymbolicTriple{0, 5, 1});
  Elem const y(SymbolicTriple{0, 3, 0});
  auto const a = backend->in_principal_right_ideal(x, y, 10);
  if (a.kind != Membership::Kind::Yes) return "(1,g^5,2) should lie in (1,g^3,1)S^1";
  auto const b = backend->in_principal_right_ideal(
      Elem(SymbolicTriple{1, 0, 0}), Elem(SymbolicTriple{0, 0, 0}), 10);
  if (b.kind != Membership::Kind::ExactNo) return "rows differ, membership must fail";
  auto row = rees_z_row_backend(spec, 0);
  auto const c = row->in_principal_right_ideal(
      Elem(SymbolicTriple{0, 7, 0}), Elem(SymbolicTriple{0, 0, 1}), 10);
  if (c.kind != Membership::Kind::ExactNo) {
    return "a column hitting a sandwich zero annihilates the row";
  }
  return std::nullopt;
}

std::optional<std::string> inf_example_membership_regression(
    std::uint64_t /*seed*/) {
  FpSemigroup const fp = example_41();
  auto const& rs = fp.rs();
  MembershipResult const eq =
      right_ideal_membership(fp, rs.parse("b"), rs.parse("abb"), 5);
  if (eq.kind != MembershipResult::Kind::Equal) return "b vs abb should be Equal";
  MembershipResult const yes =
      right_ideal_membership(fp, rs.parse("b"), rs.parse("ab"), 3);
  if (yes.kind != MembershipResult::Kind::Yes || yes.witness != Word{1}) {
    return "b in abS^1 should hold via multiplier b";
  }
  MembershipResult const no =
      right_ideal_membership(fp, rs.parse("ba"), rs.parse("bb"), 10);
  if (no.kind != MembershipResult::Kind::NoUpTo) {
    return "ba vs bb should stay undecided up to the bound";
  }
  return std::nullopt;
}

std::optional<std::string> inf_fg_subact(std::uint64_t seed,
                                         std::size_t count) {
  FpSemigroup const fp = example_41();
  auto const nfs = enumerate_normal_forms(fp, 6);
  std::vector<Word> kernel_words;
  for (auto const& level : nfs) {
    for (auto const& w : level) {
      if (uses_non_initial_letter(w)) kernel_words.push_back(w);
    }
  }
  std::uint64_t state = seed;
  auto next = [&state](std::size_t bound) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<std::size_t>((state >> 33) % bound);
  };
  for (std::size_t trial = 0; trial < count; ++trial) {
    std::size_t const k = 1 + next(3);
    std::vector<Word> x;
    for (std::size_t i = 0; i < k; ++i) {
      x.push_back(kernel_words[next(kernel_words.size())]);
    }
    FgSubact41Result const res = fg_subact_41(x, 9);
    if (res.generators.size() > 3) {
      return "trial " + std::to_string(trial) + ": too many generators";
    }
    if (!res.ball_equal) {
      return "trial " + std::to_string(trial) +
             ": bounded closures disagree";
    }
  }
  return std::nullopt;
}

void run_infinite_suite(VerificationReport& rep,
                        VerifyOptions const& options) {
  struct Item {
    std::string id, anchor, instance;
    InfiniteCheck fn;
  };
  std::vector<Item> const items = {
      {"rewrite.example_locally_confluent",
       "every critical pair of the two-rule system is joinable", "example-4.1",
       inf_example_confluent},
      {"rewrite.completion_fixpoint",
       "completion returns a complete system unchanged", "example-4.1",
       inf_completion_fixpoint},
      {"rewrite.normal_form_counts",
       "there are exactly 2n irreducible words of each length n up to 12",
       "example-4.1", inf_normal_form_counts},
      {"rewrite.normal_forms_match_subword_filter",
       "irreducible words are exactly those avoiding the two rule left sides",
       "example-4.1", inf_normal_forms_subword_filter},
      {"rewrite.collapse_identity",
       "a^i b^i a^j b^{j+1} reduces to b", "example-4.1",
       inf_reduction_identity},
      {"rewrite.reduction_is_congruence",
       "reduce(uv) = reduce(reduce(u) reduce(v)) for words up to length 8",
       "example-4.1", inf_congruence_property},
      {"chains.kernel_is_letter_ideal",
       "the kernel consists of the normal forms containing b", "example-4.1",
       inf_kernel_elements},
      {"chains.kernel_antichain_50",
       "the words b a^i form an antichain of principal right ideals of the kernel",
       "example-4.1", inf_kernel_antichain},
      {"chains.quotient_power_chain",
       "the powers of a descend in a strict chain of principal right ideals",
       "example-4.1", inf_quotient_chain},
      {"chains.free_monogenic_no_antichain",
       "the free semigroup on one letter has no two incomparable principal right ideals",
       "free(1)", inf_free_monogenic},
      {"chains.free_pair_antichain",
       "the free semigroup on two letters carries arbitrarily large antichains",
       "free(2)", inf_free_pair_antichain},
      {"chains.free_power_chain",
       "powers of the generator give a chain as long as the radius", "free(1)",
       inf_free_chain},
      {"chains.reesz_identity_annihilator",
       "a sandwich zero in the column makes the row annihilator infinite",
       "reesz-identity", inf_reesz_identity},
      {"chains.reesz_all_integer_annihilator",
       "with every sandwich entry a group element the row annihilator is empty",
       "reesz-all-integer", inf_reesz_all_integer},
      {"chains.reesz_matches_finite_projection",
       "symbolic membership agrees with the finite image modulo a large prime",
       "reesz-identity", inf_reesz_projection},
      {"chains.reesz_membership_samples",
       "membership in a principal right ideal fixes the row coordinate",
       "reesz-identity", inf_reesz_membership_samples},
      {"chains.example_membership_regression",
       "bounded membership answers for the worked examples stay stable",
       "example-4.1",
       [&]() { return inf_example_membership_regression(options.seed); }},
      {"chains.fg_subact_three_generators",
       "every finitely generated kernel subact is generated by at most three words",
       "example-4.1",
       [&]() { return inf_fg_subact(options.seed, std::min<std::size_t>(options.count, 100)); }},
  };
  for (auto const& item : items) {
    std::optional<std::string> witness;
    try {
      witness = item.fn();
    } catch (std::exception const& e) {
      witness = std::string("exception: ") + e.what();
    }
    tally(rep, {item.id, item.anchor, item.instance,
                witness ? Verdict::Fail : Verdict::Pass,
                witness.value_or("")});
  }
}

}  // namespace

VerificationReport run_verify(VerifyOptions const& options) {
  auto const t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.seed = options.seed;
  rep.count = options.count;
  switch (options.suite) {
    case SuiteKind::PaperFinite:
      rep.suite = "paper-finite";
      break;
    case SuiteKind::PaperInfinite:
      rep.suite = "paper-infinite";
      break;
    case SuiteKind::All:
      rep.suite = "all";
      break;
  }
  if (options.suite != SuiteKind::PaperInfinite) {
    run_finite_suite(rep, options);
  }
  if (options.suite != SuiteKind::PaperFinite) {
    run_infinite_suite(rep, options);
  }
  rep.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return rep;
}

std::string verify_report_json(VerificationReport const& report) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["command"] = "verify";
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["count"] = report.count;
  j["summary"] = {{"pass", report.passed},
                  {"fail", report.failed},
                  {"skip", report.skipped}};
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (auto const& rec : report.checks) {
    nlohmann::ordered_json r;
    r["id"] = rec.id;
    r["anchor"] = rec.anchor;
    r["instance"] = rec.instance;
    r["verdict"] = rec.verdict == Verdict::Pass
                       ? "pass"
                       : (rec.verdict == Verdict::Fail ? "fail" : "skip");
    if (rec.verdict == Verdict::Fail) r["witness"] = rec.witness;
    checks.push_back(std::move(r));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

}  // namespace sgchain

#include "sgchain/acts.hpp"

#include <algorithm>

#include "sgchain/errors.hpp"

namespace sgchain {

Act Act::from_table(FiniteSemigroup s,
                    std::vector<std::vector<element>> action,
                    std::optional<element> zero) {
  std::size_t const carrier = action.size();
  std::size_t const ns = s.size();
  if (carrier == 0) {
    throw ShapeError("act carrier is empty");
  }
  std::vector<element> flat;
  flat.reserve(carrier * ns);
  for (auto const& row : action) {
    if (row.size() != ns) {
      throw ShapeError("action row length does not match the semigroup");
    }
    for (element p : row) {
      if (p >= carrier) throw ShapeError("action entry out of range");
      flat.push_back(p);
    }
  }
  auto act = [&](element p, element x) { return flat[p * ns + x]; };
  for (element p = 0; p < carrier; ++p) {
    for (element x = 0; x < ns; ++x) {
      element const px = act(p, x);
      for (element y = 0; y < ns; ++y) {
        if (act(px, y) != act(p, s.mul(x, y))) {
          throw NotAnActionError(p, x, y);
        }
      }
    }
  }
  if (zero) {
    if (*zero >= carrier) throw ShapeError("act zero out of range");
    for (element x = 0; x < ns; ++x) {
      if (act(*zero, x) != *zero) {
        throw ShapeError("declared act zero is not fixed by the action");
      }
    }
  }
  return Act(std::move(s), carrier, std::move(flat), zero);
}

Act Act::regular(FiniteSemigroup s) {
  std::size_t const n = s.size();
  std::vector<std::vector<element>> action(n, std::vector<element>(n));
  for (element a = 0; a < n; ++a) {
    for (element x = 0; x < n; ++x) action[a][x] = s.mul(a, x);
  }
  return from_table(std::move(s), std::move(action));
}

bool Act::same_table(Act const& other) const {
  return carrier_ == other.carrier_ && action_ == other.action_ &&
         zero_ == other.zero_ && over_.same_table(other.over_);
}

ElementSet generated_subact(Act const& a, ElementSet const& x) {
  if (x.empty()) throw EmptyGeneratorsError();
  ElementSet out = x;
  x.for_each([&](element p) {
    for (element s = 0; s < a.over().size(); ++s) out.add(a.act(p, s));
  });
  return out;
}

bool is_subact(Act const& a, ElementSet const& b) {
  if (b.empty()) return false;
  bool ok = true;
  b.for_each([&](element p) {
    for (element s = 0; s < a.over().size(); ++s) {
      if (!b.contains(a.act(p, s))) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

ActQuotient act_rees_quotient(Act const& a, ElementSet const& b) {
  if (!is_subact(a, b)) {
    throw NotASubactError("B is not a subact");
  }
  std::size_t const keep = a.carrier_size() - b.count();
  element const qzero = static_cast<element>(keep);
  std::vector<element> map(a.carrier_size());
  element next = 0;
  for (element p = 0; p < a.carrier_size(); ++p) {
    map[p] = b.contains(p) ? qzero : next++;
  }
  std::vector<std::vector<element>> action(keep + 1,
                                           std::vector<element>(a.over().size()));
  for (element p = 0; p < a.carrier_size(); ++p) {
    if (b.contains(p)) continue;
    for (element s = 0; s < a.over().size(); ++s) {
      element const img = a.act(p, s);
      action[map[p]][s] = b.contains(img) ? qzero : map[img];
    }
  }
  for (element s = 0; s < a.over().size(); ++s) action[qzero][s] = qzero;
  return {Act::from_table(a.over(), std::move(action), qzero),
          std::move(map)};
}

RsClasses rs_class_poset(Act const& a) {
  std::size_t const m = a.carrier_size();
  RsClasses out;
  out.subact_of.reserve(m);
  for (element p = 0; p < m; ++p) {
    ElementSet sub(m);
    sub.add(p);
    for (element s = 0; s < a.over().size(); ++s) sub.add(a.act(p, s));
    out.subact_of.push_back(std::move(sub));
  }
  out.classes = partition_from_keys(m, out.subact_of);
  std::size_t const c = out.classes.count();
  std::vector<bool> leq(c * c, false);
  std::vector<element> rep(c);
  for (std::size_t i = 0; i < c; ++i) {
    rep[i] = out.classes.classes[i].members().front();
  }
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      leq[i * c + j] =
          out.subact_of[rep[i]].is_subset_of(out.subact_of[rep[j]]);
    }
  }
  out.poset = Poset::from_leq(c, std::move(leq));
  return out;
}

std::vector<ElementSet> all_subacts(Act const& a) {
  if (a.carrier_size() > 20) {
    throw TooLargeError("carrier too large for subact enumeration");
  }
  RsClasses const rs = rs_class_poset(a);
  std::size_t const c = rs.classes.count();
  std::vector<std::uint32_t> down(c, 0);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (rs.poset.leq(j, i)) down[i] |= std::uint32_t(1) << j;
    }
  }
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << c); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < c && closed; ++i) {
      if ((mask >> i) & 1) closed = (down[i] & ~mask) == 0;
    }
    if (!closed) continue;
    ElementSet sub(a.carrier_size());
    for (std::size_t i = 0; i < c; ++i) {
      if ((mask >> i) & 1) sub |= rs.classes.classes[i];
    }
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_simple_act(Act const& a) {
  for (element p = 0; p < a.carrier_size(); ++p) {
    if (generated_subact(a, ElementSet::of(a.carrier_size(), {p})) !=
        ElementSet::full(a.carrier_size())) {
      return false;
    }
  }
  return true;
}

bool is_0_simple_act(Act const& a) {
  if (!a.zero()) throw NoZeroError();
  if (a.carrier_size() == 1) return false;  // no proper subact at all
  for (element p = 0; p < a.carrier_size(); ++p) {
    if (p == *a.zero()) continue;
    if (generated_subact(a, ElementSet::of(a.carrier_size(), {p})) !=
        ElementSet::full(a.carrier_size())) {
      return false;
    }
  }
  return true;
}

}  // namespace sgchain

#include "sgchain/constructions.hpp"

#include <algorithm>
#include <set>

#include "sgchain/errors.hpp"
#include "sgchain/ideals.hpp"

namespace sgchain {

FiniteGroup FiniteGroup::from_semigroup(FiniteSemigroup s) {
  std::size_t const n = s.size();
  // rows and columns must be permutations
  for (element i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (element j = 0; j < n; ++j) {
      row[s.mul(i, j)] = true;
      col[s.mul(j, i)] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end()) {
      throw NotAGroupError("table is not a Latin square at " + s.label(i));
    }
  }
  std::optional<element> id;
  for (element e = 0; e < n; ++e) {
    bool ok = true;
    for (element i = 0; i < n && ok; ++i) {
      ok = s.mul(e, i) == i && s.mul(i, e) == i;
    }
    if (ok) {
      id = e;
      break;
    }
  }
  if (!id) throw NotAGroupError("no identity element");
  std::vector<element> inverse(n);
  for (element g = 0; g < n; ++g) {
    bool found = false;
    for (element h = 0; h < n; ++h) {
      if (s.mul(g, h) == *id && s.mul(h, g) == *id) {
        inverse[g] = h;
        found = true;
        break;
      }
    }
    if (!found) throw NotAGroupError("no inverse for " + s.label(g));
  }
  FiniteGroup out{std::move(s), *id, std::move(inverse)};
  return out;
}

FiniteGroup trivial_group() { return cyclic_group(1); }

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidArgumentError("group order must be positive");
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i));
  }
  std::vector<std::vector<element>> table(n, std::vector<element>(n));
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) {
      table[i][j] = static_cast<element>((i + j) % n);
    }
  }
  return FiniteGroup::from_semigroup(FiniteSemigroup::from_table(
      std::move(labels), std::move(table), std::nullopt, 0));
}

FiniteSemigroup rees_matrix_zero(ReesMatrixSpec const& spec) {
  std::size_t const ni = spec.i_count;
  std::size_t const nj = spec.j_count;
  std::size_t const ng = spec.group.sg.size();
  if (ni == 0 || nj == 0) {
    throw BadSandwichMatrixError("index sets must be non-empty");
  }
  if (spec.p.size() != nj) {
    throw BadSandwichMatrixError("P must have one row per column index");
  }
  for (auto const& row : spec.p) {
    if (row.size() != ni) {
      throw BadSandwichMatrixError("P row has wrong length");
    }
    for (auto const& entry : row) {
      if (entry && *entry >= ng) {
        throw BadSandwichMatrixError("P entry out of the group");
      }
    }
  }
  for (std::size_t j = 0; j < nj; ++j) {
    if (std::none_of(spec.p[j].begin(), spec.p[j].end(),
                     [](PEntry const& e) { return e.has_value(); })) {
      throw BadSandwichMatrixError("row " + std::to_string(j + 1) +
                                   " of P has no group entry");
    }
  }
  for (std::size_t i = 0; i < ni; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < nj; ++j) any = any || spec.p[j][i].has_value();
    if (!any) {
      throw BadSandwichMatrixError("column " + std::to_string(i + 1) +
                                   " of P has no group entry");
    }
  }
  std::size_t const n = ni * ng * nj + 1;
  element const zero = static_cast<element>(n - 1);
  auto idx = [&](std::size_t i, std::size_t g, std::size_t j) {
    return static_cast<element>((i * ng + g) * nj + j);
  };
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < ni; ++i) {
    for (std::size_t g = 0; g < ng; ++g) {
      for (std::size_t j = 0; j < nj; ++j) {
        labels[idx(i, g, j)] = "(" + std::to_string(i + 1) + "," +
                               spec.group.sg.label(static_cast<element>(g)) +
                               "," + std::to_string(j + 1) + ")";
      }
    }
  }
  labels[zero] = "0";
  std::vector<std::vector<element>> table(n, std::vector<element>(n, zero));
  for (std::size_t i = 0; i < ni; ++i) {
    for (std::size_t g = 0; g < ng; ++g) {
      for (std::size_t j = 0; j < nj; ++j) {
        for (std::size_t k = 0; k < ni; ++k) {
          PEntry const& p = spec.p[j][k];
          if (!p) continue;
          for (std::size_t h = 0; h < ng; ++h) {
            element const gph = spec.group.sg.mul(
                spec.group.sg.mul(static_cast<element>(g), *p),
                static_cast<element>(h));
            for (std::size_t l = 0; l < nj; ++l) {
              table[idx(i, g, j)][idx(k, h, l)] = idx(i, gph, l);
            }
          }
        }
      }
    }
  }
  return FiniteSemigroup::from_table(std::move(labels), std::move(table),
                                     zero, std::nullopt);
}

namespace {

std::string dedupe_label(std::set<std::string>& used, std::string base) {
  while (used.count(base)) base += "'";
  used.insert(base);
  return base;
}

}  // namespace

ReesQuotient rees_quotient(FiniteSemigroup const& s, ElementSet const& i) {
  {
    IdealCheck const chk = is_ideal(s, i);
    if (!chk.ok) {
      throw NotAnIdealError(chk.witness->first, chk.witness->second,
                            chk.left_failure);
    }
  }
  std::size_t const keep = s.size() - i.count();
  element const qzero = static_cast<element>(keep);
  std::vector<element> map(s.size());
  std::vector<std::string> labels(keep + 1);
  std::set<std::string> used;
  element next = 0;
  for (element a = 0; a < s.size(); ++a) {
    if (i.contains(a)) {
      map[a] = qzero;
    } else {
      map[a] = next;
      labels[next] = s.label(a);
      used.insert(s.label(a));
      ++next;
    }
  }
  // the zero keeps the old zero's label when it was collapsed, and gets a
  // primed fresh one otherwise
  if (s.zero() && i.contains(*s.zero())) {
    labels[qzero] = dedupe_label(used, s.label(*s.zero()));
  } else {
    labels[qzero] = dedupe_label(used, "0'");
  }
  std::vector<std::vector<element>> table(keep + 1,
                                          std::vector<element>(keep + 1, qzero));
  for (element a = 0; a < s.size(); ++a) {
    if (i.contains(a)) continue;
    for (element b = 0; b < s.size(); ++b) {
      if (i.contains(b)) continue;
      element const ab = s.mul(a, b);
      table[map[a]][map[b]] = i.contains(ab) ? qzero : map[ab];
    }
  }
  std::optional<element> identity;
  if (s.identity() && !i.contains(*s.identity())) {
    identity = map[*s.identity()];
  }
  return {FiniteSemigroup::from_table(std::move(labels), std::move(table),
                                      qzero, identity),
          std::move(map)};
}

FiniteSemigroup zero_direct_union(std::vector<FiniteSemigroup> const& parts) {
  if (parts.empty()) {
    throw InvalidArgumentError("union of no parts");
  }
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (!parts[p].zero()) throw MissingZeroError(p);
  }
  if (parts.size() == 1) return parts.front();
  std::size_t n = 1;  // the shared zero
  for (auto const& part : parts) n += part.size() - 1;
  element const zero = static_cast<element>(n - 1);
  // offsets into the combined carrier, skipping each part's zero
  std::vector<std::vector<element>> embed(parts.size());
  std::vector<std::string> labels(n);
  std::set<std::string> used;
  element next = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    embed[p].resize(parts[p].size());
    for (element a = 0; a < parts[p].size(); ++a) {
      if (a == *parts[p].zero()) {
        embed[p][a] = zero;
        continue;
      }
      embed[p][a] = next;
      std::string base = parts[p].label(a);
      if (used.count(base)) base += "#" + std::to_string(p);
      labels[next] = dedupe_label(used, base);
      ++next;
    }
  }
  labels[zero] = dedupe_label(used, "0");
  std::vector<std::vector<element>> table(n, std::vector<element>(n, zero));
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (element a = 0; a < parts[p].size(); ++a) {
      for (element b = 0; b < parts[p].size(); ++b) {
        table[embed[p][a]][embed[p][b]] = embed[p][parts[p].mul(a, b)];
      }
    }
  }
  return FiniteSemigroup::from_table(std::move(labels), std::move(table),
                                     zero, std::nullopt);
}

UConstruction u_construction(FiniteSemigroup const& s, Act const& a) {
  if (!a.over().same_table(s)) {
    throw ActMismatchError("act is not over the given semigroup");
  }
  std::size_t const ns = s.size();
  std::size_t const na = a.carrier_size();
  std::size_t const n = ns + na + 1;
  element const zero = static_cast<element>(n - 1);
  std::vector<std::string> labels(n);
  std::set<std::string> used;
  for (element i = 0; i < ns; ++i) {
    labels[i] = dedupe_label(used, s.label(i));
  }
  for (element p = 0; p < na; ++p) {
    labels[ns + p] = dedupe_label(used, "x" + std::to_string(p));
  }
  labels[zero] = dedupe_label(used, "0");
  std::vector<std::vector<element>> table(n, std::vector<element>(n, zero));
  for (element i = 0; i < ns; ++i) {
    for (element j = 0; j < ns; ++j) table[i][j] = s.mul(i, j);
  }
  for (element p = 0; p < na; ++p) {
    for (element i = 0; i < ns; ++i) {
      table[ns + p][i] = static_cast<element>(ns + a.act(p, i));
    }
  }
  UConstruction out{FiniteSemigroup::from_table(std::move(labels),
                                                std::move(table), zero,
                                                std::nullopt),
                    {}, {}, zero};
  out.s_embedding.resize(ns);
  for (element i = 0; i < ns; ++i) out.s_embedding[i] = i;
  out.act_embedding.resize(na);
  for (element p = 0; p < na; ++p) {
    out.act_embedding[p] = static_cast<element>(ns + p);
  }
  return out;
}

FiniteSemigroup null_semigroup(std::size_t k) {
  std::size_t const n = k + 1;
  element const zero = static_cast<element>(k);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < k; ++i) labels[i] = "n" + std::to_string(i + 1);
  labels[zero] = "0";
  std::vector<std::vector<element>> table(n, std::vector<element>(n, zero));
  return FiniteSemigroup::from_table(std::move(labels), std::move(table),
                                     zero, std::nullopt);
}

PrincipalFactor principal_factor(FiniteSemigroup const& s, element a) {
  ElementSet const k = kernel(s);
  if (k.contains(a)) {
    auto [sub, back] = subsemigroup(s, k);
    std::vector<std::optional<element>> map(s.size());
    for (element i = 0; i < back.size(); ++i) map[back[i]] = i;
    return {std::move(sub), FactorTag::Kernel, std::move(map)};
  }
  ElementSet const p = principal_ideal(s, a);
  ElementSet below = p;
  for (element b : p.members()) {
    if (principal_ideal(s, b) == p) below.remove(b);
  }
  auto [psub, back] = subsemigroup(s, p);
  ElementSet below_sub(psub.size());
  for (element i = 0; i < back.size(); ++i) {
    if (below.contains(back[i])) below_sub.add(i);
  }
  ReesQuotient rq = rees_quotient(psub, below_sub);
  std::vector<std::optional<element>> map(s.size());
  for (element i = 0; i < back.size(); ++i) map[back[i]] = rq.map[i];
  element const qz = *rq.quotient.zero();
  ElementSet const sq =
      product_set(rq.quotient, rq.quotient.all(), rq.quotient.all());
  FactorTag const tag = sq == rq.quotient.singleton(qz) ? FactorTag::Null
                                                        : FactorTag::ZeroSimple;
  return {std::move(rq.quotient), tag, std::move(map)};
}

}  // namespace sgchain

#include "sgchain/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sgchain/errors.hpp"

namespace sgchain {

FiniteSemigroup FiniteSemigroup::from_table(
    std::vector<std::string> labels, std::vector<std::vector<element>> table,
    std::optional<element> zero, std::optional<element> identity) {
  std::size_t const n = table.size();
  if (n == 0) {
    throw ShapeError("empty table");
  }
  if (n > kMaxSize) {
    throw SizeLimitError(n);
  }
  if (labels.size() != n) {
    throw ShapeError("label count does not match table size");
  }
  std::vector<element> flat;
  flat.reserve(n * n);
  for (auto const& row : table) {
    if (row.size() != n) {
      throw ShapeError("table is not square");
    }
    for (element e : row) {
      if (e >= n) {
        throw ShapeError("table entry out of range");
      }
      flat.push_back(e);
    }
  }
  {
    std::set<std::string> seen;
    for (auto const& lab : labels) {
      if (!seen.insert(lab).second) {
        throw DuplicateLabelError(lab);
      }
    }
  }
  auto mul = [&](element a, element b) { return flat[a * n + b]; };
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) {
      element const ij = mul(i, j);
      for (element k = 0; k < n; ++k) {
        if (mul(ij, k) != mul(i, mul(j, k))) {
          throw NonAssociativeError(i, j, k);
        }
      }
    }
  }
  if (zero) {
    if (*zero >= n) throw ShapeError("zero index out of range");
    for (element i = 0; i < n; ++i) {
      if (mul(*zero, i) != *zero || mul(i, *zero) != *zero) {
        throw BadZeroError(i);
      }
    }
  }
  if (identity) {
    if (*identity >= n) throw ShapeError("identity index out of range");
    for (element i = 0; i < n; ++i) {
      if (mul(*identity, i) != i || mul(i, *identity) != i) {
        throw BadIdentityError(i);
      }
    }
  }
  return FiniteSemigroup(n, std::move(flat), std::move(labels), zero,
                         identity);
}

std::optional<element> FiniteSemigroup::find_label(
    std::string const& lab) const {
  for (element i = 0; i < n_; ++i) {
    if (labels_[i] == lab) return i;
  }
  return std::nullopt;
}

ElementSet FiniteSemigroup::singleton(element a) const {
  ElementSet s(n_);
  s.add(a);
  return s;
}

bool FiniteSemigroup::same_table(FiniteSemigroup const& other) const {
  return n_ == other.n_ && table_ == other.table_ && labels_ == other.labels_ &&
         zero_ == other.zero_ && identity_ == other.identity_;
}

namespace {

// picks a label not yet used, starting from `base` and appending primes
std::string fresh_label(std::vector<std::string> const& used,
                        std::string base) {
  while (std::find(used.begin(), used.end(), base) != used.end()) {
    base += "'";
  }
  return base;
}

}  // namespace

FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
  if (s.identity()) return s;
  std::size_t const n = s.size();
  std::vector<std::vector<element>> table(n + 1,
                                          std::vector<element>(n + 1));
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) table[i][j] = s.mul(i, j);
  }
  for (element i = 0; i <= n; ++i) {
    table[i][n] = i;
    table[n][i] = i;
  }
  std::vector<std::string> labels = s.labels();
  labels.push_back(fresh_label(labels, "1"));
  return FiniteSemigroup::from_table(std::move(labels), std::move(table),
                                     s.zero(), static_cast<element>(n));
}

FiniteSemigroup adjoin_zero(FiniteSemigroup const& s) {
  if (s.zero()) return s;
  std::size_t const n = s.size();
  std::vector<std::vector<element>> table(n + 1,
                                          std::vector<element>(n + 1));
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) table[i][j] = s.mul(i, j);
  }
  for (element i = 0; i <= n; ++i) {
    table[i][n] = static_cast<element>(n);
    table[n][i] = static_cast<element>(n);
  }
  std::vector<std::string> labels = s.labels();
  labels.push_back(fresh_label(labels, "0"));
  return FiniteSemigroup::from_table(std::move(labels), std::move(table),
                                     static_cast<element>(n), s.identity());
}

ElementSet product_set(FiniteSemigroup const& s, ElementSet const& x,
                       ElementSet const& y) {
  ElementSet out(s.size());
  x.for_each([&](element a) {
    y.for_each([&](element b) { out.add(s.mul(a, b)); });
  });
  return out;
}

ElementSet closure(FiniteSemigroup const& s, ElementSet const& x) {
  if (x.empty()) {
    throw EmptyGeneratorsError();
  }
  ElementSet cur = x;
  for (;;) {
    ElementSet next = cur | product_set(s, cur, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

FiniteSemigroup from_transformations(
    std::size_t k, std::vector<std::vector<element>> const& maps) {
  if (maps.empty()) {
    throw EmptyGeneratorsError();
  }
  if (k == 0) {
    throw ShapeError("domain must be non-empty");
  }
  for (auto const& m : maps) {
    if (m.size() != k) {
      throw ShapeError("map is not total on the domain");
    }
    for (element im : m) {
      if (im >= k) throw ShapeError("map image out of range");
    }
  }
  // right action: apply f first, then g
  auto compose = [k](std::vector<element> const& f,
                     std::vector<element> const& g) {
    std::vector<element> h(k);
    for (std::size_t p = 0; p < k; ++p) h[p] = g[f[p]];
    return h;
  };
  std::vector<std::vector<element>> elems;
  std::map<std::vector<element>, element> index;
  for (auto const& m : maps) {
    if (index.emplace(m, static_cast<element>(elems.size())).second) {
      elems.push_back(m);
    }
  }
  // BFS closure under right multiplication by the generators
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (auto const& g : maps) {
      auto prod = compose(elems[head], g);
      if (index.emplace(prod, static_cast<element>(elems.size())).second) {
        elems.push_back(prod);
        if (elems.size() > FiniteSemigroup::kMaxSize) {
          throw SizeLimitError(elems.size());
        }
      }
    }
  }
  std::size_t const n = elems.size();
  std::vector<std::vector<element>> table(n, std::vector<element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i][j] = index.at(compose(elems[i], elems[j]));
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string lab;
    for (std::size_t p = 0; p < k; ++p) {
      if (k > 10 && p > 0) lab += '-';
      lab += std::to_string(elems[i][p]);
    }
    labels[i] = lab;
  }
  std::optional<element> zero, identity;
  for (element c = 0; c < n; ++c) {
    bool is_zero = true, is_id = true;
    for (element i = 0; i < n && (is_zero || is_id); ++i) {
      if (table[c][i] != c || table[i][c] != c) is_zero = false;
      if (table[c][i] != i || table[i][c] != i) is_id = false;
    }
    if (is_zero) zero = c;
    if (is_id) identity = c;
  }
  return FiniteSemigroup::from_table(std::move(labels), std::move(table),
                                     zero, identity);
}

RegularityReport is_regular(FiniteSemigroup const& s) {
  std::size_t const n = s.size();
  RegularityReport rep;
  rep.regular = true;
  rep.witness.resize(n);
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      if (s.mul(s.mul(a, b), a) == a) {
        rep.witness[a] = b;
        break;
      }
    }
    if (!rep.witness[a] && !rep.failing) {
      rep.regular = false;
      rep.failing = a;
    }
  }
  return rep;
}

ElementSet idempotents(FiniteSemigroup const& s) {
  ElementSet out(s.size());
  for (element a = 0; a < s.size(); ++a) {
    if (s.mul(a, a) == a) out.add(a);
  }
  return out;
}

bool has_local_right_identity(FiniteSemigroup const& s, element a) {
  for (element x = 0; x < s.size(); ++x) {
    if (s.mul(a, x) == a) return true;
  }
  return false;
}

std::pair<FiniteSemigroup, std::vector<element>> subsemigroup(
    FiniteSemigroup const& s, ElementSet const& closed) {
  if (closed.empty()) {
    throw EmptyGeneratorsError();
  }
  std::vector<element> to_s = closed.members();
  std::vector<element> to_sub(s.size(), 0);
  for (std::size_t i = 0; i < to_s.size(); ++i) {
    to_sub[to_s[i]] = static_cast<element>(i);
  }
  std::size_t const n = to_s.size();
  std::vector<std::vector<element>> table(n, std::vector<element>(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = s.label(to_s[i]);
    for (std::size_t j = 0; j < n; ++j) {
      element const prod = s.mul(to_s[i], to_s[j]);
      if (!closed.contains(prod)) {
        throw NotASubsemigroupError("subset is not closed at (" +
                                    s.label(to_s[i]) + ", " +
                                    s.label(to_s[j]) + ")");
      }
      table[i][j] = to_sub[prod];
    }
  }
  std::optional<element> zero, identity;
  for (element c = 0; c < n; ++c) {
    bool is_zero = true, is_id = true;
    for (element i = 0; i < n && (is_zero || is_id); ++i) {
      if (table[c][i] != c || table[i][c] != c) is_zero = false;
      if (table[c][i] != i || table[i][c] != i) is_id = false;
    }
    if (is_zero) zero = c;
    if (is_id) identity = c;
  }
  return {FiniteSemigroup::from_table(std::move(labels), std::move(table),
                                      zero, identity),
          std::move(to_s)};
}

FiniteSemigroup transpose(FiniteSemigroup const& s) {
  std::size_t const n = s.size();
  std::vector<std::vector<element>> table(n, std::vector<element>(n));
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) table[i][j] = s.mul(j, i);
  }
  return FiniteSemigroup::from_table(s.labels(), std::move(table), s.zero(),
                                     s.identity());
}

}  // namespace sgchain

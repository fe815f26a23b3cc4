#include "sgchain/zoo.hpp"

#include <random>

#include "sgchain/constructions.hpp"
#include "sgchain/errors.hpp"

namespace sgchain {

namespace {

ZooEntry from_document(std::string id, std::string const& text) {
  InstanceSpec spec = parse_instance(text);
  FiniteSemigroup sg = resolve_finite(spec);
  return {std::move(id), std::move(spec), std::move(sg)};
}

// U = S u T u {x} u {0} for S with a single L-class and T with a single
// R-class, glued by s x = x and all other mixed products zero.
ZooEntry final_example() {
  FiniteGroup c2 = cyclic_group(2);
  ReesMatrixSpec sspec{c2, 4, 1, {{element(0), element(0), element(0), element(0)}}};
  ReesMatrixSpec tspec{c2, 1, 4, {{element(0)}, {element(0)}, {element(0)}, {element(0)}}};
  FiniteSemigroup const s = rees_matrix_zero(sspec);
  FiniteSemigroup const t = rees_matrix_zero(tspec);
  std::size_t const ns = s.size() - 1;  // non-zero part
  std::size_t const nt = t.size() - 1;
  std::size_t const n = ns + nt + 2;
  element const x = static_cast<element>(ns + nt);
  element const zero = static_cast<element>(n - 1);
  element const sz = *s.zero();
  element const tz = *t.zero();
  auto s_embed = [&](element a) { return a == sz ? zero : a; };
  auto t_embed = [&](element a) {
    return a == tz ? zero : static_cast<element>(ns + a);
  };
  std::vector<std::string> labels(n);
  for (element a = 0; a < ns; ++a) labels[a] = "s" + s.label(a);
  for (element a = 0; a < nt; ++a) labels[ns + a] = "t" + t.label(a);
  labels[x] = "x";
  labels[zero] = "0";
  std::vector<std::vector<element>> table(n, std::vector<element>(n, zero));
  for (element a = 0; a < ns; ++a) {
    for (element b = 0; b < ns; ++b) table[a][b] = s_embed(s.mul(a, b));
    table[a][x] = x;
  }
  for (element a = 0; a < nt; ++a) {
    for (element b = 0; b < nt; ++b) {
      table[ns + a][ns + b] = t_embed(t.mul(a, b));
    }
  }
  FiniteSemigroup u = FiniteSemigroup::from_table(labels, table, zero,
                                                  std::nullopt);
  TablePayload payload{std::move(labels), std::move(table), zero,
                       std::nullopt};
  return {"final_ex", InstanceSpec{InstanceKind::Table, std::move(payload)},
          std::move(u)};
}

std::vector<ZooEntry> build_zoo() {
  std::vector<ZooEntry> out;
  out.push_back(from_document("lz2",
                              "kind: table\n"
                              "labels: x y\n"
                              "row: x x\n"
                              "row: y y\n"));
  out.push_back(from_document("rz2",
                              "kind: table\n"
                              "labels: x y\n"
                              "row: x y\n"
                              "row: x y\n"));
  out.push_back(from_document("n2",
                              "kind: table\n"
                              "labels: u 0\n"
                              "row: 0 0\n"
                              "row: 0 0\n"
                              "zero: 0\n"));
  out.push_back(from_document("chain2",
                              "kind: table\n"
                              "labels: 1 0\n"
                              "row: 1 0\n"
                              "row: 0 0\n"
                              "zero: 0\n"
                              "identity: 1\n"));
  out.push_back(from_document("chain3",
                              "kind: table\n"
                              "labels: 2 1 0\n"
                              "row: 2 1 0\n"
                              "row: 1 1 0\n"
                              "row: 0 0 0\n"
                              "zero: 0\n"
                              "identity: 2\n"));
  out.push_back(from_document("c2",
                              "kind: table\n"
                              "labels: e g\n"
                              "row: e g\n"
                              "row: g e\n"
                              "identity: e\n"));
  out.push_back(from_document("c3",
                              "kind: table\n"
                              "labels: e g g2\n"
                              "row: e g g2\n"
                              "row: g g2 e\n"
                              "row: g2 e g\n"
                              "identity: e\n"));
  out.push_back(from_document("c2_0",
                              "kind: construction\n"
                              "root: c2z\n"
                              "instance: c2\n"
                              "kind: table\n"
                              "labels: e g\n"
                              "row: e g\n"
                              "row: g e\n"
                              "identity: e\n"
                              "instance: c2z\n"
                              "kind: adjoin_zero\n"
                              "of: c2\n"));
  out.push_back(from_document("rees2",
                              "kind: rees\n"
                              "group: trivial\n"
                              "rows: 1\n"
                              "cols: 1\n"
                              "p: e\n"));
  out.push_back(from_document("brandt5",
                              "kind: rees\n"
                              "group: trivial\n"
                              "rows: 2\n"
                              "cols: 2\n"
                              "p: e .\n"
                              "p: . e\n"));
  out.push_back(from_document("rees9",
                              "kind: rees\n"
                              "group: cyclic 2\n"
                              "rows: 2\n"
                              "cols: 2\n"
                              "p: e .\n"
                              "p: . e\n"));
  out.push_back(from_document("rees9_left",
                              "kind: rees\n"
                              "group: cyclic 2\n"
                              "rows: 4\n"
                              "cols: 1\n"
                              "p: e e e e\n"));
  out.push_back(from_document("rees9_right",
                              "kind: rees\n"
                              "group: cyclic 2\n"
                              "rows: 1\n"
                              "cols: 4\n"
                              "p: e\n"
                              "p: e\n"
                              "p: e\n"
                              "p: e\n"));
  out.push_back(from_document("u_triv_onept",
                              "kind: construction\n"
                              "root: u\n"
                              "instance: triv\n"
                              "kind: table\n"
                              "labels: e\n"
                              "row: e\n"
                              "identity: e\n"
                              "instance: u\n"
                              "kind: u_act\n"
                              "base: triv\n"
                              "act: table\n"
                              "act-points: p\n"
                              "act-row: p\n"
                              "act-zero: none\n"));
  out.push_back(from_document("u_c2_self",
                              "kind: construction\n"
                              "root: u\n"
                              "instance: c2\n"
                              "kind: table\n"
                              "labels: e g\n"
                              "row: e g\n"
                              "row: g e\n"
                              "identity: e\n"
                              "instance: u\n"
                              "kind: u_act\n"
                              "base: c2\n"
                              "act: self\n"));
  out.push_back(from_document("u_rz2_self",
                              "kind: construction\n"
                              "root: u\n"
                              "instance: rz2\n"
                              "kind: table\n"
                              "labels: x y\n"
                              "row: x y\n"
                              "row: x y\n"
                              "instance: u\n"
                              "kind: u_act\n"
                              "base: rz2\n"
                              "act: self\n"));
  out.push_back(final_example());
  return out;
}

}  // namespace

std::vector<ZooEntry> const& zoo() {
  static std::vector<ZooEntry> const entries = build_zoo();
  return entries;
}

FiniteSemigroup random_transformation_semigroup(std::uint64_t seed,
                                                std::size_t max_size) {
  std::mt19937_64 rng(seed);
  auto next = [&](std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
  };
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::size_t const k = 3 + next(3);
    std::size_t const m = 2 + next(2);
    std::vector<std::vector<element>> maps(m, std::vector<element>(k));
    for (auto& map : maps) {
      for (auto& img : map) img = static_cast<element>(next(k));
    }
    FiniteSemigroup s = from_transformations(k, maps);
    if (s.size() <= max_size) return s;
  }
  // tiny domains always fit
  std::vector<std::vector<element>> maps(2, std::vector<element>(3));
  for (auto& map : maps) {
    for (auto& img : map) img = static_cast<element>(next(3));
  }
  return from_transformations(3, maps);
}

}  // namespace sgchain

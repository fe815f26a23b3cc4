#include "sgchain/instance.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sgchain/acts.hpp"
#include "sgchain/constructions.hpp"
#include "sgchain/errors.hpp"

namespace sgchain {

bool operator==(ConstructionPayload const& a, ConstructionPayload const& b) {
  return a.root == b.root && a.def_names == b.def_names && a.defs == b.defs;
}

bool operator==(InstanceSpec const& a, InstanceSpec const& b) {
  return a.kind == b.kind && a.payload == b.payload;
}

namespace {

struct Line {
  std::size_t number;
  std::string key;
  std::string value;
};

std::vector<std::string> split_ws(std::string const& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string trim(std::string const& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Line> tokenize(std::string const& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = raw;
    std::size_t const hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t const colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError(number, "expected 'key: value'");
    }
    out.push_back(
        {number, trim(line.substr(0, colon)), trim(line.substr(colon + 1))});
  }
  return out;
}

std::map<std::string, ConstructionOp> const kOpNames = {
    {"rees_quotient", ConstructionOp::ReesQuotient},
    {"zero_direct_union", ConstructionOp::ZeroDirectUnion},
    {"u_act", ConstructionOp::UAct},
    {"adjoin_zero", ConstructionOp::AdjoinZero},
    {"adjoin_identity", ConstructionOp::AdjoinIdentity},
    {"principal_factor", ConstructionOp::PrincipalFactor},
};

std::string op_name(ConstructionOp op) {
  for (auto const& [name, val] : kOpNames) {
    if (val == op) return name;
  }
  return "?";
}

InstanceKind infer_kind(std::vector<Line> const& lines) {
  for (auto const& l : lines) {
    if (l.key == "kind") {
      std::string const& v = l.value;
      if (v == "table") return InstanceKind::Table;
      if (v == "presentation") return InstanceKind::Presentation;
      if (v == "rees") return InstanceKind::ReesFinite;
      if (v == "reesz") return InstanceKind::ReesZ;
      if (v == "construction") return InstanceKind::Construction;
      if (kOpNames.count(v)) return InstanceKind::Op;
      throw ParseError(l.number, "unknown kind \"" + v + "\"");
    }
  }
  for (auto const& l : lines) {
    if (l.key == "labels") return InstanceKind::Table;
    if (l.key == "gens") return InstanceKind::Presentation;
    if (l.key == "group") return InstanceKind::ReesFinite;
    if (l.key == "root" || l.key == "instance") {
      return InstanceKind::Construction;
    }
  }
  for (auto const& l : lines) {
    if (l.key == "p") return InstanceKind::ReesZ;
  }
  throw ParseError(lines.empty() ? 0 : lines.front().number,
                   "cannot infer the instance kind");
}

TablePayload parse_table(std::vector<Line> const& lines) {
  TablePayload out;
  std::vector<std::vector<std::string>> rows;
  std::optional<std::string> zero_label, identity_label;
  for (auto const& l : lines) {
    if (l.key == "kind") continue;
    if (l.key == "labels") {
      out.labels = split_ws(l.value);
    } else if (l.key == "row") {
      rows.push_back(split_ws(l.value));
    } else if (l.key == "zero") {
      if (l.value != "none") zero_label = l.value;
    } else if (l.key == "identity") {
      if (l.value != "none") identity_label = l.value;
    } else {
      throw ParseError(l.number, "unexpected key \"" + l.key + "\"");
    }
  }
  if (out.labels.empty()) {
    throw ParseError(0, "table document needs a labels line");
  }
  auto index_of = [&](std::string const& lab, std::size_t line) -> element {
    auto const it = std::find(out.labels.begin(), out.labels.end(), lab);
    if (it == out.labels.end()) {
      throw ParseError(line, "unknown label \"" + lab + "\"");
    }
    return static_cast<element>(it - out.labels.begin());
  };
  for (auto const& row : rows) {
    std::vector<element> r;
    for (auto const& lab : row) r.push_back(index_of(lab, 0));
    out.table.push_back(std::move(r));
  }
  if (zero_label) out.zero = index_of(*zero_label, 0);
  if (identity_label) out.identity = index_of(*identity_label, 0);
  return out;
}

PresentationPayload parse_presentation(std::vector<Line> const& lines) {
  PresentationPayload out;
  for (auto const& l : lines) {
    if (l.key == "kind") continue;
    if (l.key == "gens") {
      out.gens = split_ws(l.value);
    } else if (l.key == "order") {
      out.order = split_ws(l.value);
    } else if (l.key == "rel") {
      std::size_t const eq = l.value.find('=');
      if (eq == std::string::npos) {
        throw ParseError(l.number, "relation needs '='");
      }
      out.rels.emplace_back(split_ws(l.value.substr(0, eq)),
                            split_ws(l.value.substr(eq + 1)));
    } else {
      throw ParseError(l.number, "unexpected key \"" + l.key + "\"");
    }
  }
  if (out.gens.empty()) {
    throw ParseError(0, "presentation needs a gens line");
  }
  if (out.order.empty()) out.order = out.gens;
  return out;
}

ReesFinitePayload parse_rees(std::vector<Line> const& lines) {
  ReesFinitePayload out;
  for (auto const& l : lines) {
    if (l.key == "kind") continue;
    if (l.key == "group") {
      auto const toks = split_ws(l.value);
      if (toks.size() == 1 && toks[0] == "trivial") {
        out.group_kind = "trivial";
        out.group_order = 1;
      } else if (toks.size() == 2 && toks[0] == "cyclic") {
        out.group_kind = "cyclic";
        out.group_order = std::stoul(toks[1]);
      } else {
        throw ParseError(l.number, "group must be 'trivial' or 'cyclic N'");
      }
    } else if (l.key == "rows") {
      out.rows = std::stoul(l.value);
    } else if (l.key == "cols") {
      out.cols = std::stoul(l.value);
    } else if (l.key == "p") {
      std::vector<std::optional<std::string>> row;
      for (auto const& tok : split_ws(l.value)) {
        if (tok == ".") {
          row.emplace_back(std::nullopt);
        } else {
          row.emplace_back(tok);
        }
      }
      out.p.push_back(std::move(row));
    } else {
      throw ParseError(l.number, "unexpected key \"" + l.key + "\"");
    }
  }
  if (out.group_kind.empty()) {
    throw ParseError(0, "rees document needs a group line");
  }
  return out;
}

ReesZPayload parse_reesz(std::vector<Line> const& lines) {
  ReesZPayload out;
  for (auto const& l : lines) {
    if (l.key == "kind") continue;
    if (l.key == "rows") {
      out.rows = std::stoul(l.value);
    } else if (l.key == "cols") {
      out.cols = std::stoul(l.value);
    } else if (l.key == "p") {
      std::vector<std::optional<std::int64_t>> row;
      for (auto const& tok : split_ws(l.value)) {
        if (tok == ".") {
          row.emplace_back(std::nullopt);
        } else {
          row.emplace_back(std::stoll(tok));
        }
      }
      out.p.push_back(std::move(row));
    } else {
      throw ParseError(l.number, "unexpected key \"" + l.key + "\"");
    }
  }
  return out;
}

OpPayload parse_op(std::vector<Line> const& lines) {
  OpPayload out;
  bool kind_seen = false;
  for (auto const& l : lines) {
    if (l.key == "kind") {
      auto const it = kOpNames.find(l.value);
      if (it == kOpNames.end()) {
        throw ParseError(l.number, "unknown construction \"" + l.value + "\"");
      }
      out.op = it->second;
      kind_seen = true;
    } else if (l.key == "of" || l.key == "base") {
      out.operands = {l.value};
    } else if (l.key == "parts") {
      out.operands = split_ws(l.value);
    } else if (l.key == "ideal") {
      out.ideal_labels = split_ws(l.value);
    } else if (l.key == "at") {
      out.at_label = l.value;
    } else if (l.key == "act") {
      if (l.value == "self") {
        out.act_self = true;
      } else if (l.value != "table") {
        throw ParseError(l.number, "act must be 'self' or 'table'");
      }
    } else if (l.key == "act-points") {
      out.act_points = split_ws(l.value);
    } else if (l.key == "act-row") {
      out.act_rows.push_back(split_ws(l.value));
    } else if (l.key == "act-zero") {
      if (l.value != "none") out.act_zero = l.value;
    } else {
      throw ParseError(l.number, "unexpected key \"" + l.key + "\"");
    }
  }
  if (!kind_seen) throw ParseError(0, "construction step needs a kind line");
  return out;
}

InstanceSpec parse_section(std::vector<Line> const& lines);

ConstructionPayload parse_construction(std::vector<Line> const& lines) {
  ConstructionPayload out;
  std::vector<Line> header;
  std::size_t i = 0;
  while (i < lines.size() && lines[i].key != "instance") {
    if (lines[i].key == "root") {
      out.root = lines[i].value;
    } else if (lines[i].key != "kind") {
      throw ParseError(lines[i].number,
                       "unexpected key \"" + lines[i].key + "\"");
    }
    ++i;
  }
  if (out.root.empty()) {
    throw ParseError(0, "construction needs a root line");
  }
  while (i < lines.size()) {
    std::string name = lines[i].value;
    if (name.empty()) {
      throw ParseError(lines[i].number, "instance needs a name");
    }
    ++i;
    std::vector<Line> section;
    while (i < lines.size() && lines[i].key != "instance") {
      section.push_back(lines[i]);
      ++i;
    }
    if (std::find(out.def_names.begin(), out.def_names.end(), name) !=
        out.def_names.end()) {
      throw ParseError(section.empty() ? 0 : section.front().number,
                       "duplicate instance name \"" + name + "\"");
    }
    out.def_names.push_back(std::move(name));
    out.defs.push_back(parse_section(section));
  }
  return out;
}

InstanceSpec parse_section(std::vector<Line> const& lines) {
  if (lines.empty()) {
    throw ParseError(0, "empty instance section");
  }
  InstanceKind const kind = infer_kind(lines);
  switch (kind) {
    case InstanceKind::Table:
      return {kind, parse_table(lines)};
    case InstanceKind::Presentation:
      return {kind, parse_presentation(lines)};
    case InstanceKind::ReesFinite:
      return {kind, parse_rees(lines)};
    case InstanceKind::ReesZ:
      return {kind, parse_reesz(lines)};
    case InstanceKind::Construction:
      return {kind, parse_construction(lines)};
    case InstanceKind::Op:
      return {kind, parse_op(lines)};
  }
  throw ParseError(lines.front().number, "unreachable");
}

}  // namespace

InstanceSpec parse_instance(std::string const& text) {
  return parse_section(tokenize(text));
}

namespace {

void print_section(std::ostringstream& out, InstanceSpec const& spec);

void print_table(std::ostringstream& out, TablePayload const& t) {
  out << "kind: table\n";
  out << "labels:";
  for (auto const& l : t.labels) out << ' ' << l;
  out << '\n';
  for (auto const& row : t.table) {
    out << "row:";
    for (element e : row) out << ' ' << t.labels[e];
    out << '\n';
  }
  if (t.zero) out << "zero: " << t.labels[*t.zero] << '\n';
  if (t.identity) out << "identity: " << t.labels[*t.identity] << '\n';
}

void print_presentation(std::ostringstream& out,
                        PresentationPayload const& p) {
  out << "kind: presentation\n";
  out << "gens:";
  for (auto const& g : p.gens) out << ' ' << g;
  out << '\n';
  out << "order:";
  for (auto const& g : p.order) out << ' ' << g;
  out << '\n';
  for (auto const& [lhs, rhs] : p.rels) {
    out << "rel:";
    for (auto const& t : lhs) out << ' ' << t;
    out << " =";
    for (auto const& t : rhs) out << ' ' << t;
    out << '\n';
  }
}

void print_rees(std::ostringstream& out, ReesFinitePayload const& r) {
  out << "kind: rees\n";
  if (r.group_kind == "trivial") {
    out << "group: trivial\n";
  } else {
    out << "group: cyclic " << r.group_order << '\n';
  }
  out << "rows: " << r.rows << '\n';
  out << "cols: " << r.cols << '\n';
  for (auto const& row : r.p) {
    out << "p:";
    for (auto const& e : row) out << ' ' << (e ? *e : ".");
    out << '\n';
  }
}

void print_reesz(std::ostringstream& out, ReesZPayload const& r) {
  out << "kind: reesz\n";
  out << "rows: " << r.rows << '\n';
  out << "cols: " << r.cols << '\n';
  for (auto const& row : r.p) {
    out << "p:";
    for (auto const& e : row) {
      if (e) {
        out << ' ' << *e;
      } else {
        out << " .";
      }
    }
    out << '\n';
  }
}

void print_op(std::ostringstream& out, OpPayload const& o) {
  out << "kind: " << op_name(o.op) << '\n';
  switch (o.op) {
    case ConstructionOp::ReesQuotient:
      out << "of: " << o.operands.at(0) << '\n';
      out << "ideal:";
      for (auto const& l : o.ideal_labels) out << ' ' << l;
      out << '\n';
      break;
    case ConstructionOp::ZeroDirectUnion:
      out << "parts:";
      for (auto const& l : o.operands) out << ' ' << l;
      out << '\n';
      break;
    case ConstructionOp::UAct:
      out << "base: " << o.operands.at(0) << '\n';
      if (o.act_self) {
        out << "act: self\n";
      } else {
        out << "act: table\n";
        out << "act-points:";
        for (auto const& p : o.act_points) out << ' ' << p;
        out << '\n';
        for (auto const& row : o.act_rows) {
          out << "act-row:";
          for (auto const& p : row) out << ' ' << p;
          out << '\n';
        }
        out << "act-zero: " << (o.act_zero ? *o.act_zero : "none") << '\n';
      }
      break;
    case ConstructionOp::AdjoinZero:
    case ConstructionOp::AdjoinIdentity:
    case ConstructionOp::PrincipalFactor:
      out << "of: " << o.operands.at(0) << '\n';
      if (o.op == ConstructionOp::PrincipalFactor) {
        out << "at: " << o.at_label << '\n';
      }
      break;
  }
}

void print_construction(std::ostringstream& out,
                        ConstructionPayload const& c) {
  out << "kind: construction\n";
  out << "root: " << c.root << '\n';
  for (std::size_t i = 0; i < c.defs.size(); ++i) {
    out << "\ninstance: " << c.def_names[i] << '\n';
    print_section(out, c.defs[i]);
  }
}

void print_section(std::ostringstream& out, InstanceSpec const& spec) {
  switch (spec.kind) {
    case InstanceKind::Table:
      print_table(out, std::get<TablePayload>(spec.payload));
      break;
    case InstanceKind::Presentation:
      print_presentation(out, std::get<PresentationPayload>(spec.payload));
      break;
    case InstanceKind::ReesFinite:
      print_rees(out, std::get<ReesFinitePayload>(spec.payload));
      break;
    case InstanceKind::ReesZ:
      print_reesz(out, std::get<ReesZPayload>(spec.payload));
      break;
    case InstanceKind::Construction:
      print_construction(out, std::get<ConstructionPayload>(spec.payload));
      break;
    case InstanceKind::Op:
      print_op(out, std::get<OpPayload>(spec.payload));
      break;
  }
}

}  // namespace

std::string print_instance(InstanceSpec const& spec) {
  std::ostringstream out;
  print_section(out, spec);
  return out.str();
}

namespace {

FiniteSemigroup resolve_table(TablePayload const& t) {
  return FiniteSemigroup::from_table(t.labels, t.table, t.zero, t.identity);
}

FpSemigroup resolve_presentation(PresentationPayload const& p) {
  // the letter order line fixes the shortlex order
  std::set<std::string> gens(p.gens.begin(), p.gens.end());
  std::set<std::string> order(p.order.begin(), p.order.end());
  if (gens != order || p.order.size() != p.gens.size()) {
    throw SemanticError("order line must be a permutation of gens");
  }
  std::vector<std::string> alphabet = p.order;
  auto letter = [&](std::string const& tok) -> Letter {
    auto const it = std::find(alphabet.begin(), alphabet.end(), tok);
    if (it == alphabet.end()) throw UnknownLetterError(tok);
    return static_cast<Letter>(it - alphabet.begin());
  };
  std::vector<std::pair<Word, Word>> relations;
  for (auto const& [lhs, rhs] : p.rels) {
    Word u, v;
    for (auto const& t : lhs) u.push_back(letter(t));
    for (auto const& t : rhs) v.push_back(letter(t));
    if (u.empty() || v.empty()) {
      throw SemanticError("relation sides must be non-empty");
    }
    relations.emplace_back(std::move(u), std::move(v));
  }
  return FpSemigroup::analyze(
      RewritingSystem::make(std::move(alphabet), orient_relations(relations)));
}

FiniteGroup resolve_group(ReesFinitePayload const& r) {
  if (r.group_kind == "trivial") return trivial_group();
  if (r.group_kind == "cyclic") return cyclic_group(r.group_order);
  throw SemanticError("unknown group kind \"" + r.group_kind + "\"");
}

FiniteSemigroup resolve_rees(ReesFinitePayload const& r) {
  FiniteGroup group = resolve_group(r);
  std::vector<std::vector<PEntry>> p;
  for (auto const& row : r.p) {
    std::vector<PEntry> prow;
    for (auto const& e : row) {
      if (!e) {
        prow.emplace_back(std::nullopt);
      } else {
        auto const idx = group.sg.find_label(*e);
        if (!idx) throw SemanticError("unknown group element \"" + *e + "\"");
        prow.emplace_back(*idx);
      }
    }
    p.push_back(std::move(prow));
  }
  ReesMatrixSpec spec{std::move(group), r.rows, r.cols, std::move(p)};
  return rees_matrix_zero(spec);
}

SymbolicReesZ resolve_reesz(ReesZPayload const& r) {
  return SymbolicReesZ::make(r.rows, r.cols, r.p);
}

class ConstructionResolver {
 public:
  explicit ConstructionResolver(ConstructionPayload const& c) : c_(c) {}

  FiniteSemigroup root() { return resolve_name(c_.root); }

 private:
  FiniteSemigroup resolve_name(std::string const& name) {
    if (auto const it = done_.find(name); it != done_.end()) {
      return it->second;
    }
    if (visiting_.count(name)) {
      throw SemanticError("construction cycle through \"" + name + "\"");
    }
    auto const it =
        std::find(c_.def_names.begin(), c_.def_names.end(), name);
    if (it == c_.def_names.end()) {
      throw SemanticError("undefined instance \"" + name + "\"");
    }
    visiting_.insert(name);
    InstanceSpec const& spec = c_.defs[it - c_.def_names.begin()];
    FiniteSemigroup result = resolve_def(spec);
    visiting_.erase(name);
    done_.emplace(name, result);
    return result;
  }

  FiniteSemigroup resolve_def(InstanceSpec const& spec) {
    if (spec.kind != InstanceKind::Op) {
      return resolve_finite(spec);
    }
    auto const& op = std::get<OpPayload>(spec.payload);
    switch (op.op) {
      case ConstructionOp::ReesQuotient: {
        FiniteSemigroup base = resolve_name(op.operands.at(0));
        ElementSet ideal(base.size());
        for (auto const& lab : op.ideal_labels) {
          auto const idx = base.find_label(lab);
          if (!idx) throw SemanticError("unknown label \"" + lab + "\"");
          ideal.add(*idx);
        }
        return rees_quotient(base, ideal).quotient;
      }
      case ConstructionOp::ZeroDirectUnion: {
        std::vector<FiniteSemigroup> parts;
        for (auto const& name : op.operands) {
          parts.push_back(resolve_name(name));
        }
        return zero_direct_union(parts);
      }
      case ConstructionOp::UAct: {
        FiniteSemigroup base = resolve_name(op.operands.at(0));
        if (op.act_self) {
          return u_construction(base, Act::regular(base)).u;
        }
        auto point = [&](std::string const& lab) -> element {
          auto const it2 =
              std::find(op.act_points.begin(), op.act_points.end(), lab);
          if (it2 == op.act_points.end()) {
            throw SemanticError("unknown act point \"" + lab + "\"");
          }
          return static_cast<element>(it2 - op.act_points.begin());
        };
        std::vector<std::vector<element>> action;
        for (auto const& row : op.act_rows) {
          std::vector<element> r;
          for (auto const& lab : row) r.push_back(point(lab));
          action.push_back(std::move(r));
        }
        std::optional<element> zero;
        if (op.act_zero) zero = point(*op.act_zero);
        return u_construction(base,
                              Act::from_table(base, std::move(action), zero))
            .u;
      }
      case ConstructionOp::AdjoinZero:
        return adjoin_zero(resolve_name(op.operands.at(0)));
      case ConstructionOp::AdjoinIdentity:
        return adjoin_identity(resolve_name(op.operands.at(0)));
      case ConstructionOp::PrincipalFactor: {
        FiniteSemigroup base = resolve_name(op.operands.at(0));
        auto const idx = base.find_label(op.at_label);
        if (!idx) {
          throw SemanticError("unknown label \"" + op.at_label + "\"");
        }
        return principal_factor(base, *idx).factor;
      }
    }
    throw SemanticError("unreachable");
  }

  ConstructionPayload const& c_;
  std::set<std::string> visiting_;
  std::map<std::string, FiniteSemigroup> done_;
};

}  // namespace

Resolved resolve(InstanceSpec const& spec) {
  switch (spec.kind) {
    case InstanceKind::Table:
      return resolve_table(std::get<TablePayload>(spec.payload));
    case InstanceKind::Presentation:
      return resolve_presentation(
          std::get<PresentationPayload>(spec.payload));
    case InstanceKind::ReesFinite:
      return resolve_rees(std::get<ReesFinitePayload>(spec.payload));
    case InstanceKind::ReesZ:
      return resolve_reesz(std::get<ReesZPayload>(spec.payload));
    case InstanceKind::Construction:
      return ConstructionResolver(std::get<ConstructionPayload>(spec.payload))
          .root();
    case InstanceKind::Op:
      throw SemanticError(
          "a construction step cannot stand alone; wrap it in a construction");
  }
  throw SemanticError("unreachable");
}

FiniteSemigroup resolve_finite(InstanceSpec const& spec) {
  Resolved r = resolve(spec);
  if (auto* s = std::get_if<FiniteSemigroup>(&r)) {
    return std::move(*s);
  }
  throw SemanticError("this operation needs a finite instance");
}

}  // namespace sgchain

#ifndef SGCHAIN_INSTANCE_HPP_
#define SGCHAIN_INSTANCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sgchain/chains.hpp"
#include "sgchain/rewrite.hpp"
#include "sgchain/semigroup.hpp"

namespace sgchain {

// Instance documents are line-oriented plain text; reports are JSON.
// A document describes a multiplication table, a presentation, a finite
// or symbolic Rees matrix semigroup, or a tree of constructions over
// named sub-instances.

enum class InstanceKind {
  Table,
  Presentation,
  ReesFinite,
  ReesZ,
  Construction,
  Op,  // a construction step; only valid inside a construction document
};

struct TablePayload {
  std::vector<std::string> labels;
  std::vector<std::vector<element>> table;
  std::optional<element> zero, identity;
  bool operator==(TablePayload const&) const = default;
};

struct PresentationPayload {
  std::vector<std::string> gens;
  std::vector<std::string> order;  // shortlex letter order; defaults to gens
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
      rels;
  bool operator==(PresentationPayload const&) const = default;
};

struct ReesFinitePayload {
  std::string group_kind;  // "trivial" or "cyclic"
  std::size_t group_order = 1;
  std::size_t rows = 0, cols = 0;
  // entries are group-element labels, or nullopt for the sandwich zero
  std::vector<std::vector<std::optional<std::string>>> p;  // p[j][i]
  bool operator==(ReesFinitePayload const&) const = default;
};

struct ReesZPayload {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::optional<std::int64_t>>> p;  // p[j][i]
  bool operator==(ReesZPayload const&) const = default;
};

enum class ConstructionOp {
  ReesQuotient,
  ZeroDirectUnion,
  UAct,
  AdjoinZero,
  AdjoinIdentity,
  PrincipalFactor,
};

struct OpPayload {
  ConstructionOp op;
  std::vector<std::string> operands;       // referenced definition names
  std::vector<std::string> ideal_labels;   // rees_quotient
  std::string at_label;                    // principal_factor
  bool act_self = false;                   // u_act over the regular act
  std::vector<std::string> act_points;
  std::vector<std::vector<std::string>> act_rows;
  std::optional<std::string> act_zero;
  bool operator==(OpPayload const&) const = default;
};

struct InstanceSpec;

bool operator==(InstanceSpec const& a, InstanceSpec const& b);

struct ConstructionPayload {
  std::string root;
  std::vector<std::string> def_names;
  std::vector<InstanceSpec> defs;  // parallel to def_names

  friend bool operator==(ConstructionPayload const& a,
                         ConstructionPayload const& b);
};

struct InstanceSpec {
  InstanceKind kind;
  std::variant<TablePayload, PresentationPayload, ReesFinitePayload,
               ReesZPayload, ConstructionPayload, OpPayload>
      payload;
};

InstanceSpec parse_instance(std::string const& text);
std::string print_instance(InstanceSpec const& spec);

using Resolved = std::variant<FiniteSemigroup, FpSemigroup, SymbolicReesZ>;

// Validates and builds the instance; table and construction errors from
// the core modules surface here.
Resolved resolve(InstanceSpec const& spec);

// As resolve, but rejects the symbolic kinds with a SemanticError.
FiniteSemigroup resolve_finite(InstanceSpec const& spec);

}  // namespace sgchain

#endif  // SGCHAIN_INSTANCE_HPP_

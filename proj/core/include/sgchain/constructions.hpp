#ifndef SGCHAIN_CONSTRUCTIONS_HPP_
#define SGCHAIN_CONSTRUCTIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sgchain/acts.hpp"
#include "sgchain/semigroup.hpp"

namespace sgchain {

// A finite group presented through its semigroup table, with the identity
// and the inverse map made explicit.
struct FiniteGroup {
  FiniteSemigroup sg;
  element identity;
  std::vector<element> inverse;

  // Checks that the table is a group table (Latin square with identity and
  // inverses; associativity comes from the semigroup validation).
  static FiniteGroup from_semigroup(FiniteSemigroup s);
};

FiniteGroup trivial_group();
// Z/n written multiplicatively; labels e, g, g2, ..., g{n-1}.
FiniteGroup cyclic_group(std::size_t n);

// Sandwich matrix entry: a group element or the sandwich zero.
using PEntry = std::optional<element>;

struct ReesMatrixSpec {
  FiniteGroup group;
  std::size_t i_count;  // rows of the element grid
  std::size_t j_count;  // columns
  // p[j][i], a j_count x i_count matrix
  std::vector<std::vector<PEntry>> p;
};

// M^0(G; I, J; P): carrier (I x G x J) u {0} with sandwich multiplication.
// Every row and column of P must contain a group entry.
FiniteSemigroup rees_matrix_zero(ReesMatrixSpec const& spec);

struct ReesQuotient {
  FiniteSemigroup quotient;
  std::vector<element> map;  // S -> S/I, ideal elements land on the zero
};

// Rees quotient of s by the two-sided ideal i (checked).
ReesQuotient rees_quotient(FiniteSemigroup const& s, ElementSet const& i);

// 0-direct union: zeros identified, cross products zero.
FiniteSemigroup zero_direct_union(std::vector<FiniteSemigroup> const& parts);

struct UConstruction {
  FiniteSemigroup u;
  std::vector<element> s_embedding;    // S -> U
  std::vector<element> act_embedding;  // points of A -> the x_a elements
  element zero;
};

// The ideal extension of S by the null semigroup on the points of A:
// x_a s = x_{a s}, while s x_a, x_a x_b and all products with 0 vanish.
UConstruction u_construction(FiniteSemigroup const& s, Act const& a);

// k non-zero elements with all products equal to zero.
FiniteSemigroup null_semigroup(std::size_t k);

enum class FactorTag { Kernel, ZeroSimple, Null };

struct PrincipalFactor {
  FiniteSemigroup factor;
  FactorTag tag;
  // S -> factor for elements of the principal ideal; others unmapped
  std::vector<std::optional<element>> map;
};

// The principal factor of the J-class of a: the kernel itself when a lies
// in the kernel, otherwise the Rees quotient of S^1 a S^1 by the part
// below the J-class, tagged by whether its square vanishes.
PrincipalFactor principal_factor(FiniteSemigroup const& s, element a);

}  // namespace sgchain

#endif  // SGCHAIN_CONSTRUCTIONS_HPP_

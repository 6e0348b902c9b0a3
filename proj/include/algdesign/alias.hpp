#pragma once

#include <variant>
#include <vector>

#include "algdesign/design.hpp"

namespace algdesign {

/// f and g agree on every design point, i.e. NF(f) = NF(g).
bool algebraic_aliased(const Polynomial& f, const Polynomial& g, const Design& d, const TermOrder& order);

/// span{supp_D(f) : f in F} == span{supp_D(g) : g in G}, decided by exact ranks.
bool statistical_aliased(std::span<const Polynomial> F, std::span<const Polynomial> G, const Design& d);

struct SquareFreeUniverse {};
struct UpToDegree {
    unsigned max_degree;
};
using AliasUniverse = std::variant<SquareFreeUniverse, UpToDegree>;

/// One member of an alias row: on the design, monomial == sign * row key.
struct AliasEntry {
    Monomial monomial;
    int sign;
};

struct AliasRow {
    Monomial key;  // quotient-basis monomial
    std::vector<AliasEntry> members;
};

/// Partition of a monomial universe by normal form over a two-level design.
/// Rows are sorted ascending by key under the active order, members ascending
/// within a row; the key is a member whenever it lies in the universe.
struct AliasTable {
    TermOrder order;
    std::vector<AliasRow> rows;
};

/// Throws UnsupportedError unless every coordinate is +-1 and every universe
/// monomial reduces to a signed single monomial (regular fractions).
AliasTable alias_table(const Design& d, const TermOrder& order, AliasUniverse universe = SquareFreeUniverse{});

/// Monomials of the universe in canonical order.
std::vector<Monomial> alias_universe(std::size_t k, const AliasUniverse& universe);

}  // namespace algdesign

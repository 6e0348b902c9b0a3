#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algdesign/monomial.hpp"
#include "algdesign/rational.hpp"

namespace algdesign {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// True iff `rows` is square, of full rank, and the first nonzero entry of
/// every column is positive. Throws DimensionError for a non-square matrix.
bool validate_matrix_order(const RationalMatrix& rows);

/// A monomial term order. Variables are ranked by index: x_0 > x_1 > ... as
/// fixed by the ring the monomials live in.
class TermOrder {
public:
    enum class Kind { Lex, DegLex, DegRevLex, Matrix, Weight };

    static TermOrder lex();
    static TermOrder deglex();
    static TermOrder degrevlex();
    /// Throws InvalidArgument unless `validate_matrix_order(rows)`.
    static TermOrder matrix(RationalMatrix rows);
    /// Refines the partial order of `w` by `tiebreak`; entries must be >= 0.
    static TermOrder weight(std::vector<Rational> w, TermOrder tiebreak = degrevlex());

    Kind kind() const { return kind_; }
    /// Number of variables the order is tied to, or nullopt for the named orders.
    std::optional<std::size_t> arity() const;
    const RationalMatrix& matrix_rows() const { return rows_; }
    /// Weight vector of a Weight order (empty otherwise).
    const std::vector<Rational>& weights() const;
    const TermOrder* tiebreak() const { return tiebreak_.get(); }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    /// Stable textual key: `lex`, `deglex`, `degrevlex`, `matrix:1,0;0,1`,
    /// `weight:1,2,3/2+degrevlex`.
    std::string to_string() const;

private:
    TermOrder() = default;

    Kind kind_ = Kind::DegRevLex;
    RationalMatrix rows_;  // Matrix: k rows; Weight: a single row
    std::shared_ptr<const TermOrder> tiebreak_;
};

/// Comparator adaptor for ordered containers, ascending under the order.
struct MonomialLess {
    const TermOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
};

/// Parses `lex`, `deglex`, `degrevlex`, `matrix:r1;r2;...` (rows of
/// comma-separated rationals) or `weight:w1,...,wk[+tiebreak]`.
TermOrder parse_term_order(const std::string& spec);

}  // namespace algdesign

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algdesign/polynomial.hpp"

namespace algdesign {

/// Named variables of a polynomial ring, ranked x_0 > x_1 > ... in
/// declaration order. Owns the text syntax for monomials and polynomials.
class Ring {
public:
    explicit Ring(std::vector<std::string> names);
    /// Variables `prefix1 .. prefixK`.
    static Ring numbered(std::size_t k, const std::string& prefix = "x");

    std::size_t arity() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// Grammar: sums of products of rationals, variables, `^` with a
    /// non-negative integer exponent, unary minus, and parentheses;
    /// `/` only by a nonzero constant. Example: `3/2*x1^2*x3 - x2 + 1`.
    Polynomial parse(std::string_view text) const;
    /// A single monomial with coefficient 1, e.g. `x*y^2` or `1`.
    Monomial parse_monomial(std::string_view text) const;
    /// Comma-separated list of polynomials.
    std::vector<Polynomial> parse_list(std::string_view text) const;

    std::string format(const Monomial& m) const;
    /// Terms in descending order under `order`; the zero polynomial is `0`.
    std::string format(const Polynomial& f, const TermOrder& order) const;

private:
    std::vector<std::string> names_;
};

}  // namespace algdesign

#pragma once

#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algdesign/groebner.hpp"
#include "algdesign/linalg.hpp"
#include "algdesign/ring.hpp"

namespace algdesign {

using Point = std::vector<Rational>;

/// An experimental design: n pairwise distinct points in Q^k with named
/// variables. Reduced Gröbner bases of the design ideal are memoised per
/// term order and shared between copies.
class Design {
public:
    Design(Ring ring, std::vector<Point> points);

    const Ring& ring() const { return ring_; }
    std::size_t arity() const { return ring_.arity(); }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }

    /// Cached `design_ideal(*this, order)`.
    std::shared_ptr<const GroebnerBasis> groebner(const TermOrder& order) const;

    /// Same points with the variables re-ranked; `names` must be a
    /// permutation of the current variable names, highest-ranked first.
    Design with_ranking(const std::vector<std::string>& names) const;

    /// Values of a polynomial at each point (its design support vector).
    RationalVector evaluate(const Polynomial& f) const;
    RationalVector evaluate(const Monomial& m) const;

    /// True iff every coordinate is -1 or +1.
    bool is_two_level() const;

private:
    Ring ring_;
    std::vector<Point> points_;
    std::shared_ptr<GroebnerCache> cache_;
};

/// Reduced Gröbner basis of I(D) by the Buchberger–Möller algorithm.
GroebnerBasis design_ideal(const Design& d, const TermOrder& order);

/// Reduced basis of <base_gens, fraction_gens> by Buchberger. Throws
/// EmptyDesignError when the generators have no common zero and
/// NotZeroDimensionalError when the zero set is not finite.
GroebnerBasis ideal_sum_design(std::span<const Polynomial> base_gens,
                               std::span<const Polynomial> fraction_gens, const TermOrder& order);

Staircase model_for_order(const Design& d, const TermOrder& order);

/// Rows indexed by design points, columns by `columns`.
Matrix evaluation_matrix(const Design& d, std::span<const Monomial> columns);
/// Columns in the staircase's canonical order.
Matrix evaluation_matrix(const Design& d, const Staircase& model);

/// Unique polynomial supported on the quotient basis taking `values` on the points.
Polynomial interpolate(const Design& d, std::span<const Rational> values, const TermOrder& order);

// Constructors for design families.

/// Cartesian product; the first factor varies slowest.
Design full_factorial(const std::vector<std::vector<Rational>>& levels);
/// Points of {-1,1}^k whose contrast products equal the given signs. Words
/// name factors by letters (`ABCD`, A = x1) or as monomials (`x1*x2*x3*x4`).
Design regular_fraction(std::size_t k, const std::vector<std::string>& words,
                        const std::vector<int>& signs);
/// 7 circular shifts of `+++-+--` followed by `+++++++`.
Design plackett_burman_8();
/// Each generator row (`+`, `-`, `0`), its negation, then the origin.
Design foldover_plus_center(const std::vector<std::string>& rows);

/// CSV with a header of variable names, `#` comments and rational entries.
Design parse_design_csv(std::string_view text);
Design read_design_csv(const std::filesystem::path& path);
std::string format_design_csv(const Design& d);

}  // namespace algdesign

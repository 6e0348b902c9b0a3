#pragma once

#include <vector>

#include "algdesign/design.hpp"

namespace algdesign {

/// Indicator of a fraction D inside a base design N: the interpolator of the
/// 0/1 membership values over the base quotient basis.
class IndicatorFunction {
public:
    IndicatorFunction(Design base, std::vector<Point> fraction, TermOrder order, Polynomial g);

    const Design& base() const { return base_; }
    const std::vector<Point>& fraction() const { return fraction_; }
    const TermOrder& order() const { return order_; }
    const Polynomial& polynomial() const { return g_; }

private:
    Design base_;
    std::vector<Point> fraction_;
    TermOrder order_;
    Polynomial g_;
};

/// Throws InvalidArgument if a fraction point is not a base point. The
/// fraction may be empty (g = 0).
IndicatorFunction indicator_of(const Design& base, std::span<const Point> fraction, const TermOrder& order);

struct OrthogonalityResult {
    Rational sum;  // sum over the base of x^(a+b) g(x)
    bool orthogonal;
};

/// Requires a +-1 base design.
OrthogonalityResult orthogonality_check(const Monomial& a, const Monomial& b, const IndicatorFunction& ind);

enum class SetOp { Intersect, Union };

/// Boolean algebra of indicators, reduced modulo the base design ideal.
IndicatorFunction combine(const IndicatorFunction& a, const IndicatorFunction& b, SetOp op);

}  // namespace algdesign

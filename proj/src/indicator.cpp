#include "algdesign/indicator.hpp"

#include <set>

#include "algdesign/errors.hpp"

namespace algdesign {

IndicatorFunction::IndicatorFunction(Design base, std::vector<Point> fraction, TermOrder order, Polynomial g)
    : base_(std::move(base)), fraction_(std::move(fraction)), order_(std::move(order)), g_(std::move(g)) {}

IndicatorFunction indicator_of(const Design& base, std::span<const Point> fraction, const TermOrder& order) {
    std::set<Point> wanted;
    for (const auto& p : fraction) {
        if (p.size() != base.arity()) throw DimensionError("fraction point arity mismatch");
        wanted.insert(p);
    }
    std::vector<Rational> values;
    std::size_t found = 0;
    std::vector<Point> members;
    for (const auto& p : base.points()) {
        bool in = wanted.contains(p);
        values.emplace_back(in ? 1 : 0);
        if (in) {
            ++found;
            members.push_back(p);
        }
    }
    if (found != wanted.size()) throw InvalidArgument("fraction contains points outside the base design");
    Polynomial g = interpolate(base, values, order);
    return IndicatorFunction(base, std::move(members), order, std::move(g));
}

OrthogonalityResult orthogonality_check(const Monomial& a, const Monomial& b, const IndicatorFunction& ind) {
    const Design& base = ind.base();
    if (!base.is_two_level()) throw UnsupportedError("orthogonality audit needs a +-1 coded base design");
    if (a.arity() != base.arity() || b.arity() != base.arity()) throw DimensionError("monomial arity mismatch");
    Monomial ab = a * b;
    Rational sum = 0;
    for (const auto& p : base.points()) sum += evaluate(ab, p) * ind.polynomial().evaluate(p);
    return {sum, is_zero(sum)};
}

IndicatorFunction combine(const IndicatorFunction& a, const IndicatorFunction& b, SetOp op) {
    if (a.base().ring().names() != b.base().ring().names() || a.base().points() != b.base().points())
        throw InvalidArgument("indicators are defined over different base designs");
    const TermOrder& order = a.order();
    auto gb = a.base().groebner(order);
    const Polynomial& ga = a.polynomial();
    Polynomial gb_poly = b.order().to_string() == order.to_string()
                             ? b.polynomial()
                             : normal_form(b.polynomial(), *gb);
    Polynomial product = normal_form(ga * gb_poly, *gb);
    Polynomial g = op == SetOp::Intersect ? product : normal_form(ga + gb_poly - product, *gb);

    std::set<Point> sa(a.fraction().begin(), a.fraction().end());
    std::set<Point> sb(b.fraction().begin(), b.fraction().end());
    std::vector<Point> members;
    for (const auto& p : a.base().points()) {
        bool in = op == SetOp::Intersect ? (sa.contains(p) && sb.contains(p)) : (sa.contains(p) || sb.contains(p));
        if (in) members.push_back(p);
    }
    return IndicatorFunction(a.base(), std::move(members), order, std::move(g));
}

}  // namespace algdesign

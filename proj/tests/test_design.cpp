#include <random>
#include <set>

#include "algdesign/design.hpp"
#include "algdesign/errors.hpp"
#include "algdesign/linalg.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace algdesign;
using support::formatted;

namespace {

std::set<Point> point_set(const Design& d) { return {d.points().begin(), d.points().end()}; }

bool vanishes(const GroebnerBasis& gb, const Design& d) {
    for (const auto& g : gb.elements())
        for (const auto& p : d.points())
            if (!is_zero(g.evaluate(p))) return false;
    return true;
}

// Product of (x_i - a) over the grid levels a other than `keep`.
Polynomial lagrange_factor(std::size_t k, std::size_t i, const std::vector<Rational>& levels, const Rational& keep) {
    Polynomial f = Polynomial::constant(k, 1);
    for (const auto& a : levels)
        if (a != keep) f = f * (Polynomial::variable(k, i) - Polynomial::constant(k, a));
    return f;
}

Design random_design(std::mt19937& rng) {
    std::size_t k = 2 + rng() % 2;
    std::size_t n = 1 + rng() % 10;
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    std::set<Point> pts;
    while (pts.size() < n) {
        Point p;
        for (std::size_t i = 0; i < k; ++i) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            p.push_back(q);
        }
        pts.insert(p);
    }
    return Design(Ring::numbered(k), {pts.begin(), pts.end()});
}

}  // namespace

TEST_CASE("full factorial ideal is generated by x_i^2 - 1") {
    auto d = full_factorial({{-1, 1}, {-1, 1}, {-1, 1}});
    CHECK(d.size() == 8);
    for (const auto& order : {TermOrder::lex(), TermOrder::degrevlex()}) {
        auto gb = design_ideal(d, order);
        std::set<std::string> got;
        for (const auto& g : gb.elements()) got.insert(d.ring().format(g, order));
        CHECK(got == std::set<std::string>{"x1^2 - 1", "x2^2 - 1", "x3^2 - 1"});
    }
}

TEST_CASE("single point ideal") {
    Design d(Ring::numbered(3), {{Rational(1, 2), Rational(-3), Rational(0)}});
    auto gb = design_ideal(d, TermOrder::lex());
    REQUIRE(gb.elements().size() == 3);
    CHECK(gb.elements()[0] == d.ring().parse("x3"));
    CHECK(gb.elements()[1] == d.ring().parse("x2 + 3"));
    CHECK(gb.elements()[2] == d.ring().parse("x1 - 1/2"));
}

TEST_CASE("L1 degrevlex model") {
    auto d = support::load("l1.csv");
    auto model = model_for_order(d, TermOrder::degrevlex());
    CHECK(formatted(d.ring(), model) == std::set<std::string>{"1", "x1", "x2", "x3", "x2*x3", "x3^2"});
    auto x = evaluation_matrix(d, model);
    CHECK(rank(x) == 6);
}

TEST_CASE("ideal sum for a regular fraction and a half fraction") {
    Ring r6 = Ring::numbered(6);
    auto base = r6.parse_list("x1^2-1, x2^2-1, x3^2-1, x4^2-1, x5^2-1, x6^2-1");
    auto frac = r6.parse_list("x1*x2*x3*x4-1, x3*x4*x5*x6-1");
    auto gb = ideal_sum_design(base, frac, TermOrder::degrevlex());
    CHECK(quotient_basis(gb).size() == 16);
    CHECK(gb == design_ideal(support::load("frac262.csv"), TermOrder::degrevlex()));

    Ring r3 = Ring::numbered(3);
    auto half = ideal_sum_design(r3.parse_list("x1^2-1, x2^2-1, x3^2-1"), r3.parse_list("x1*x2*x3+1"),
                                 TermOrder::degrevlex());
    CHECK(quotient_basis(half).size() == 4);

    Ring r1 = Ring::numbered(1);
    auto single = ideal_sum_design(r1.parse_list("x1^2-1"), r1.parse_list("x1-1"), TermOrder::lex());
    REQUIRE(single.elements().size() == 1);
    CHECK(single.elements()[0] == r1.parse("x1-1"));
    CHECK_THROWS_AS(ideal_sum_design(r1.parse_list("x1^2-1"), r1.parse_list("x1-2"), TermOrder::lex()),
                    EmptyDesignError);
}

TEST_CASE("Buchberger-Moller agrees with Buchberger on random 3x3 grid subsets") {
    const std::vector<Rational> levels{-1, 0, 1};
    const std::size_t k = 2;
    Ring ring = Ring::numbered(k);
    auto base = ring.parse_list("x1^3 - x1, x2^3 - x2");
    std::vector<Point> grid;
    for (const auto& a : levels)
        for (const auto& b : levels) grid.push_back({a, b});

    std::mt19937 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Point> kept, dropped;
        for (const auto& p : grid) (rng() % 2 ? kept : dropped).push_back(p);
        if (kept.empty()) kept.push_back(grid[rng() % grid.size()]);
        if (dropped.empty()) dropped.push_back(grid[0] == kept[0] ? grid[1] : grid[0]);
        std::erase_if(kept, [&](const Point& p) { return std::find(dropped.begin(), dropped.end(), p) != dropped.end(); });
        if (kept.empty()) continue;

        std::vector<Polynomial> vanish;
        for (const auto& p : dropped) vanish.push_back(lagrange_factor(k, 0, levels, p[0]) * lagrange_factor(k, 1, levels, p[1]));
        Design d(ring, kept);
        auto order = support::random_order(rng, k);
        CHECK(design_ideal(d, order) == ideal_sum_design(base, vanish, order));
    }
}

TEST_CASE("design ideal invariants on 100 random design/order pairs") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        auto d = random_design(rng);
        auto order = support::random_order(rng, d.arity());
        auto gb = d.groebner(order);
        REQUIRE(vanishes(*gb, d));
        auto model = quotient_basis(*gb);
        CHECK(model.size() == d.size());
        CHECK(is_downward_closed(model.monomials()));
        CHECK(rank(evaluation_matrix(d, model)) == d.size());
    }
}

TEST_CASE("evaluation matrices") {
    auto d = full_factorial({{-1, 1}, {-1, 1}});
    auto ones = evaluation_matrix(d, Staircase(2, {Monomial{0, 0}}));
    CHECK(ones.cols() == 1);
    for (std::size_t r = 0; r < 4; ++r) CHECK(ones(r, 0) == 1);
    auto x = evaluation_matrix(d, support::staircase(d.ring(), "1, x1, x2, x1*x2"));
    auto det = determinant(x);
    CHECK(abs(det) == 16);
}

TEST_CASE("interpolation") {
    auto d = full_factorial({{-1, 1}});
    CHECK(interpolate(d, RationalVector{0, 0}, TermOrder::lex()).is_zero());
    CHECK(interpolate(d, RationalVector{1, 1}, TermOrder::lex()) == Polynomial::constant(1, 1));
    CHECK(interpolate(d, RationalVector{0, 2}, TermOrder::lex()) == d.ring().parse("1 + x1"));
    CHECK_THROWS_AS(interpolate(d, RationalVector{1}, TermOrder::lex()), DimensionError);
}

TEST_CASE("interpolation of values equals the normal form") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        auto d = random_design(rng);
        auto order = support::random_order(rng, d.arity());
        auto f = support::random_polynomial(rng, d.arity(), 5, 4);
        CHECK(interpolate(d, d.evaluate(f), order) == normal_form(f, *d.groebner(order)));
    }
}

TEST_CASE("constructors") {
    auto pb = plackett_burman_8();
    CHECK(pb.size() == 8);
    CHECK(point_set(pb) == point_set(support::load("pb8.csv")));
    auto scr = foldover_plus_center({"0+-+-+-", "-0+-++-", "+-0++++", "+--0+--", "--++0--", "-+-++0+", "+++++-0"});
    CHECK(scr.size() == 15);
    CHECK(point_set(scr) == point_set(support::load("screening7.csv")));
    CHECK(full_factorial({{-1, 1}, {-1, 1}}).size() == 4);
    auto frac = regular_fraction(6, {"ABCD", "CDEF"}, {1, 1});
    CHECK(point_set(frac) == point_set(support::load("frac262.csv")));
    CHECK_THROWS_AS(regular_fraction(3, {"AB", "AB"}, {1, -1}), EmptyDesignError);
    CHECK_THROWS_AS(foldover_plus_center({"+-x"}), ParseError);
}

TEST_CASE("design validation") {
    CHECK_THROWS_AS(Design(Ring::numbered(2), {{1, 1}, {1, 1}}), DuplicatePointError);
    CHECK_THROWS_AS(Design(Ring::numbered(2), {{1, 1, 1}}), DimensionError);
    CHECK_THROWS_AS(Design(Ring::numbered(2), {}), InvalidArgument);
}

TEST_CASE("CSV parsing and round trip") {
    auto d = parse_design_csv("# comment\na,b\n0.4,2/5\n-1,1.25\n");
    REQUIRE(d.size() == 2);
    CHECK(d.ring().names() == std::vector<std::string>{"a", "b"});
    CHECK(d.points()[0][0] == Rational(2, 5));
    CHECK(d.points()[0][1] == Rational(2, 5));
    CHECK(d.points()[1][1] == Rational(5, 4));
    auto again = parse_design_csv(format_design_csv(d));
    CHECK(again.points() == d.points());
    CHECK_THROWS_AS(parse_design_csv("a,b\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_design_csv("a,b\n1,zz\n"), ParseError);
    CHECK_THROWS_AS(read_design_csv(support::data("missing.csv")), IoError);
}

TEST_CASE("variable ranking changes the lex model") {
    auto d = support::load("pb8.csv");
    auto lex = model_for_order(d, TermOrder::lex());
    CHECK(formatted(d.ring(), lex) ==
          std::set<std::string>{"1", "x4", "x5", "x6", "x7", "x5*x6", "x5*x7", "x6*x7"});
    auto reversed = d.with_ranking({"x7", "x6", "x5", "x4", "x3", "x2", "x1"});
    auto rev = model_for_order(reversed, TermOrder::lex());
    CHECK(formatted(reversed.ring(), rev) != formatted(d.ring(), lex));
    CHECK(rev.size() == 8);
    CHECK_THROWS_AS(d.with_ranking({"x1"}), InvalidArgument);
}

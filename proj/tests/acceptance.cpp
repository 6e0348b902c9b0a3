// Acceptance run: one PASS/FAIL line per criterion. Wall-clock limits are part
// of each verdict. Set ALGDESIGN_DEEP=1 to include the multi-hour screening fan.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "algdesign/alias.hpp"
#include "algdesign/fan.hpp"
#include "algdesign/hilbert.hpp"
#include "algdesign/indicator.hpp"
#include "support.hpp"

using namespace algdesign;
using support::formatted;

namespace {

struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

int failed = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > limit_seconds) c.failures.push_back("over the time limit");
    bool ok = c.failures.empty();
    if (!ok) ++failed;
    std::cout << "criterion " << std::setw(2) << id << "  " << (ok ? "PASS" : "FAIL") << "  " << title << "  ("
              << std::fixed << std::setprecision(3) << elapsed * 1e3 << " ms, limit " << limit_seconds * 1e3
              << " ms)\n";
    for (const auto& f : c.failures) std::cout << "    - " << f << "\n";
    std::cout.flush();
}

std::set<std::string> names(const std::string& list) {
    std::set<std::string> out;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
        item.erase(0, item.find_first_not_of(' '));
        out.insert(item);
    }
    return out;
}

std::set<std::string> model_names(const Design& d, const TermOrder& order) {
    return formatted(d.ring(), model_for_order(d, order));
}

std::vector<std::uint64_t> sorted_desc(std::vector<std::uint64_t> v) {
    std::sort(v.rbegin(), v.rend());
    return v;
}

std::set<Staircase> model_set(const FanReport& r) {
    std::set<Staircase> out;
    for (const auto& m : r.models) out.insert(m.model);
    return out;
}

void fan_properties(Check& c, const Design& d, const FanReport& fan, std::mt19937& rng, const std::string& label) {
    for (const auto& m : fan.models)
        c.expect(quotient_basis(gb_for_weight(d, m.witness)) == m.model, label + ": witness does not certify a model");
    auto models = model_set(fan);
    std::uniform_int_distribution<int> num(1, 1000), den(1, 97);
    for (int i = 0; i < 200; ++i) {
        RationalVector w(d.arity());
        for (auto& x : w) {
            x = Rational(num(rng), den(rng));
            x.canonicalize();
        }
        c.expect(models.contains(quotient_basis(gb_for_weight(d, w))), label + ": random weight model missing");
    }
}

}  // namespace

int main() {
    criterion(1, "division golden test", 1e-3, [](Check& c) {
        Ring r({"x"});
        std::vector<Polynomial> divisor{r.parse("x+2")};
        auto res = poly_divide(r.parse("x^3+2*x^2+3*x+1"), divisor, TermOrder::lex());
        c.expect(res.quotients.size() == 1 && res.quotients[0] == r.parse("x^2+3"), "quotient is not x^2+3");
        c.expect(res.remainder == r.parse("-5"), "remainder is not -5");
    });

    criterion(2, "ordering oracle", 1e-3, [](Check& c) {
        Ring r({"x", "y", "z"});
        auto a = r.parse_monomial("x*y^2"), b = r.parse_monomial("x^2*z");
        c.expect(!TermOrder::deglex().less(b, a), "deglex: xy^2 > x^2z should be false");
        c.expect(TermOrder::degrevlex().less(b, a), "degrevlex: xy^2 > x^2z should be true");
    });

    criterion(3, "regular fraction 2^(6-2): model, NF, alias table, lex swap", 5, [](Check& c) {
        auto d = support::load("frac262.csv");
        const auto& ring = d.ring();
        const auto grl = model_names(d, TermOrder::degrevlex());
        c.expect(grl == names("1, x6, x5, x5*x6, x4, x4*x6, x3, x3*x6, x2, x2*x6, x2*x4, x2*x4*x6, x1, x1*x6, x1*x4, "
                              "x1*x4*x6"),
                 "degrevlex quotient basis differs");
        auto nf = normal_form(ring.parse("x2*x3*x6"), *d.groebner(TermOrder::degrevlex()));
        c.expect(nf == ring.parse("x1*x4*x6"), "NF(x2*x3*x6) is not x1*x4*x6");

        const char* table2[16] = {
            "1, x1*x2*x3*x4, x3*x4*x5*x6, x1*x2*x5*x6",    "x1, x2*x3*x4, x1*x3*x4*x5*x6, x2*x5*x6",
            "x2, x1*x3*x4, x2*x3*x4*x5*x6, x1*x5*x6",      "x3, x1*x2*x4, x4*x5*x6, x1*x2*x3*x5*x6",
            "x4, x1*x2*x3, x3*x5*x6, x1*x2*x4*x5*x6",      "x5, x1*x2*x3*x4*x5, x3*x4*x6, x1*x2*x6",
            "x6, x1*x2*x3*x4*x6, x3*x4*x5, x1*x2*x5",      "x1*x4, x2*x3, x1*x3*x5*x6, x2*x4*x5*x6",
            "x1*x6, x2*x3*x4*x6, x1*x3*x4*x5, x2*x5",      "x2*x4, x1*x3, x2*x3*x5*x6, x1*x4*x5*x6",
            "x2*x6, x1*x3*x4*x6, x2*x3*x4*x5, x1*x5",      "x3*x6, x1*x2*x4*x6, x4*x5, x1*x2*x3*x5",
            "x4*x6, x1*x2*x3*x6, x3*x5, x1*x2*x4*x5",      "x5*x6, x1*x2*x3*x4*x5*x6, x3*x4, x1*x2",
            "x1*x4*x6, x2*x3*x6, x1*x3*x5, x2*x4*x5",      "x2*x4*x6, x1*x3*x6, x2*x3*x5, x1*x4*x5",
        };
        std::set<std::set<std::string>> expected, got;
        for (const char* row : table2) expected.insert(names(row));
        auto table = alias_table(d, TermOrder::degrevlex());
        for (const auto& row : table.rows) {
            std::set<std::string> cell;
            for (const auto& e : row.members) cell.insert(ring.format(e.monomial));
            got.insert(cell);
        }
        c.expect(table.rows.size() == 16 && got == expected, "alias table differs from the published table");

        auto lex = model_names(d, TermOrder::lex());
        auto removed = names("x1, x3, x1*x4, x1*x6, x3*x6, x1*x4*x6");
        auto added = names("x2*x5*x6, x4*x5*x6, x2*x4*x5*x6, x2*x5, x4*x5, x2*x4*x5");
        std::set<std::string> predicted;
        for (const auto& m : grl)
            if (!removed.contains(m)) predicted.insert(m);
        predicted.insert(added.begin(), added.end());
        c.expect(lex == predicted, "lex model does not swap exactly the six listed terms");
        for (const auto& row : got) {
            std::size_t out = 0, in = 0;
            for (const auto& m : row) {
                out += removed.contains(m);
                in += added.contains(m);
            }
            c.expect(out == in, "a replacement term sits in a different alias row");
        }
    });

    criterion(4, "16-point design: GB under every order, single model, fan of one", 30, [](Check& c) {
        auto d = support::load("rsm16.csv");
        const std::set<std::string> listed{"x2^5 - 5*x2^3 + 4*x2", "x1^5 - 5*x1^3 + 4*x1",
                                           "x1^2*x2^2 - 4*x1^2 - 4*x2^2 + 16"};
        std::vector<TermOrder> orders{TermOrder::lex(), TermOrder::deglex(), TermOrder::degrevlex()};
        std::mt19937 rng(101);
        while (orders.size() < 23) {
            auto o = support::random_order(rng, 2);
            if (o.kind() == TermOrder::Kind::Matrix) orders.push_back(o);
        }
        const auto model = names("1, x2, x2^2, x2^3, x2^4, x1, x1*x2, x1*x2^2, x1*x2^3, x1*x2^4, x1^2, x1^2*x2, x1^3, "
                                 "x1^3*x2, x1^4, x1^4*x2");
        for (const auto& o : orders) {
            auto gb = d.groebner(o);
            std::set<std::string> got;
            for (const auto& g : gb->elements()) got.insert(d.ring().format(g, TermOrder::degrevlex()));
            c.expect(got == listed, "GB differs under " + o.to_string());
            c.expect(formatted(d.ring(), quotient_basis(*gb)) == model, "model differs under " + o.to_string());
        }
        c.expect(enumerate_fan(d).models.size() == 1, "fan is not a single model");
    });

    criterion(5, "normal forms and statistical aliasing on the 16-point design", 1, [](Check& c) {
        auto d = support::load("rsm16.csv");
        const auto& r = d.ring();
        auto gb = d.groebner(TermOrder::degrevlex());
        std::vector<std::pair<const char*, const char*>> cases{
            {"x1^2*x2^2", "4*x1^2+4*x2^2-16"},
            {"x1^4*x2^4", "16*x1^4+16*x2^4-256"},
            {"x1^6*x2^6", "320*x1^4+320*x2^4-256*x1^2-256*x2^2-4096"},
            {"x1^8*x2^8", "5376*x1^4+5376*x2^4-5120*x1^2-5120*x2^2-65536"},
            {"x1^3*x2^3", "4*x1^3*x2+4*x1*x2^3-16*x1*x2"},
        };
        for (const auto& [f, nf] : cases)
            c.expect(normal_form(r.parse(f), *gb) == r.parse(nf), std::string("NF(") + f + ") differs");
        c.expect(statistical_aliased(r.parse_list("1, x1^2*x2^2, x1^4*x2^4"), r.parse_list("1, x1^6*x2^6, x1^8*x2^8"), d),
                 "even powers are not statistically aliased");
    });

    criterion(6, "PB(8): named models and fan classes", 120, [](Check& c) {
        auto d = support::load("pb8.csv");
        c.expect(model_names(d, TermOrder::degrevlex()) == names("1, x1, x2, x3, x4, x5, x6, x7"), "degrevlex model");
        c.expect(model_names(d, TermOrder::lex()) == names("1, x4, x5, x6, x7, x5*x6, x5*x7, x6*x7"), "lex model");
        auto fan = enumerate_fan(d);
        c.expect(fan.models.size() == 610, "fan size " + std::to_string(fan.models.size()) + " != 610");
        std::vector<std::size_t> sizes;
        std::vector<bool> closed;
        std::vector<std::string> hs;
        std::vector<std::uint64_t> deg;
        for (const auto& cl : fan.classes) {
            sizes.push_back(cl.members.size());
            closed.push_back(cl.closed);
            hs.push_back(cl.hilbert);
            deg.push_back(cl.total_degree);
        }
        c.expect(sizes == std::vector<std::size_t>{1, 105, 420, 84}, "class sizes");
        c.expect(closed == std::vector<bool>{true, true, false, false}, "closed flags");
        c.expect(hs == std::vector<std::string>{"1 + 7s", "1 + 6s + s^2", "1 + 5s + 2s^2", "1 + 4s + 3s^2"},
                 "class Hilbert series");
        c.expect(deg == std::vector<std::uint64_t>{7, 8, 9, 10}, "class total degrees");
    });

    criterion(7, "Latin hypercubes L1 and L2: models, fans, state vectors, corner cuts", 30, [](Check& c) {
        auto l1 = support::load("l1.csv");
        c.expect(model_names(l1, TermOrder::degrevlex()) == names("1, x1, x2, x3, x2*x3, x3^2"), "L1 model");
        auto fan = enumerate_fan(l1);
        c.expect(fan.models.size() == 27, "L1 fan size");
        std::multiset<std::size_t> sizes;
        for (const auto& cl : fan.classes) {
            sizes.insert(cl.members.size());
            c.expect(cl.closed, "L1 class not closed");
        }
        c.expect(fan.classes.size() == 6 && sizes == std::multiset<std::size_t>{3, 6, 6, 3, 3, 6}, "L1 class sizes");
        std::map<std::vector<std::uint64_t>, std::size_t> families;
        for (const auto& m : fan.models) ++families[sorted_desc(m.state)];
        std::map<std::vector<std::uint64_t>, std::size_t> expected{{{15, 0, 0}, 3}, {{10, 1, 0}, 6}, {{7, 2, 0}, 6},
                                                                   {{4, 2, 1}, 6},  {{4, 4, 0}, 3},  {{6, 1, 1}, 3}};
        c.expect(families == expected, "L1 state vector families");
        auto geometry = state_geometry(fan);
        c.expect(geometry.vertices.size() == 27, "L1 polytope vertices");
        auto cc = corner_cut_analysis(fan);
        c.expect(cc.corner_cuts.size() == 27, "L1: not every model is a corner cut");
        c.expect(cc.generic, "L1 is not generic");

        auto l2 = support::load("l2.csv");
        c.expect(model_names(l2, TermOrder::degrevlex()) == names("1, x2, x3, x2*x3, x3^2, x3^3"), "L2 model");
        auto fan2 = enumerate_fan(l2);
        c.expect(fan2.models.size() == 11, "L2 fan size");
        c.expect(std::count_if(fan2.classes.begin(), fan2.classes.end(), [](const OrbitClass& x) { return x.closed; }) == 1,
                 "L2 closed classes");
        c.expect(!corner_cut_analysis(fan2).generic, "L2 is generic");
    });

    criterion(8, "central composite fixtures (axial 2, derived counts): 9 models / 2 classes, 3 models / 1 class", 60, [](Check& c) {
        auto fan14 = enumerate_fan(support::load("ccd14.csv"));
        c.expect(fan14.models.size() == 9, "n=14 fan size " + std::to_string(fan14.models.size()));
        c.expect(fan14.classes.size() == 2, "n=14 class count");
        bool swap = false;
        if (fan14.classes.size() == 2) {
            for (auto i : fan14.classes[0].members)
                for (auto j : fan14.classes[1].members) {
                    const auto& a = fan14.models[i].model.monomials();
                    const auto& b = fan14.models[j].model.monomials();
                    std::vector<Monomial> only_a, only_b;
                    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
                    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
                    auto pure = [](const std::vector<Monomial>& v, unsigned p) {
                        return v.size() == 1 && v[0].degree() == p &&
                               std::count(v[0].exponents().begin(), v[0].exponents().end(), 0u) == 2;
                    };
                    swap = swap || (pure(only_a, 2) && pure(only_b, 4)) || (pure(only_a, 4) && pure(only_b, 2));
                }
        }
        c.expect(swap, "classes do not differ by a square / fourth-power swap");
        auto fan15 = enumerate_fan(support::load("ccd15.csv"));
        c.expect(fan15.models.size() == 3, "n=15 fan size " + std::to_string(fan15.models.size()));
        c.expect(fan15.classes.size() == 1, "n=15 class count");
    });

    criterion(9, "Hilbert series examples", 1e-3, [](Check& c) {
        Ring r({"x", "y"});
        auto hs = hilbert_series(support::monomials(r, "x^3, x*y^2, y^4"), 2);
        c.expect(hs.finite() && format_series(*hs.coefficients) == "1 + 2s + 3s^2 + 2s^3", "series");
        c.expect(format_series(hs.inside_numerator) == "2s^3 + s^4 - 2s^5", "inside numerator");
        auto pb = support::staircase(Ring::numbered(7), "1, x1, x2, x3, x4, x5, x6, x7");
        c.expect(format_series(*staircase_series(pb).coefficients) == "1 + 7s", "PB(8) staircase series");
    });

    criterion(10, "indicator of the half fraction and its orthogonality sum", 1e-3, [](Check& c) {
        auto base = full_factorial({{-1, 1}, {-1, 1}, {-1, 1}});
        std::vector<Point> half;
        for (const auto& p : base.points())
            if (p[0] * p[1] * p[2] == -1) half.push_back(p);
        auto ind = indicator_of(base, half, TermOrder::degrevlex());
        c.expect(ind.polynomial() == base.ring().parse("1/2 - 1/2*x1*x2*x3"), "indicator");
        auto r = orthogonality_check(base.ring().parse_monomial("x1*x2*x3"), Monomial::one(3), ind);
        c.expect(r.sum == -4 && !r.orthogonal, "orthogonality sum");
    });

    const bool deep = std::getenv("ALGDESIGN_DEEP") != nullptr;
    criterion(11, std::string("screening designs: named models") + (deep ? " and k=7 fan" : " (deep fan skipped)"),
              deep ? 6 * 3600.0 : 10.0, [&](Check& c) {
                  auto s7 = support::load("screening7.csv");
                  auto grl = model_for_order(s7, TermOrder::degrevlex());
                  c.expect(formatted(s7.ring(), grl) == names("1, x1, x2, x3, x4, x5, x6, x7, x6^2, x7^2, x2*x7, "
                                                              "x3*x7, x4*x7, x5*x7, x6*x7") &&
                               grl.total_degree() == 21,
                           "k=7 degrevlex model");
                  auto dl = model_for_order(s7, TermOrder::deglex());
                  c.expect(formatted(s7.ring(), dl) == names("1, x1, x2, x3, x4, x5, x6, x7, x5^2, x6^2, x7^2, "
                                                             "x5*x6, x4*x7, x5*x7, x6*x7") &&
                               dl.total_degree() == 21,
                           "k=7 deglex model");
                  auto lx = model_for_order(s7, TermOrder::lex());
                  c.expect(formatted(s7.ring(), lx) == names("1, x7, x7^2, x6, x6*x7, x6*x7^2, x6^2, x6^2*x7, "
                                                             "x6^2*x7^2, x5, x5*x7, x5*x6, x5*x6*x7, x5^2, x5^2*x7") &&
                               lx.total_degree() == 31,
                           "k=7 lex model");

                  auto s10 = support::load("screening10.csv");
                  auto g10 = model_for_order(s10, TermOrder::degrevlex());
                  std::set<std::string> composition{"1", "x9^2", "x10^2"};
                  for (int i = 1; i <= 10; ++i) composition.insert("x" + std::to_string(i));
                  for (int i = 2; i <= 9; ++i) composition.insert("x" + std::to_string(i) + "*x10");
                  c.expect(formatted(s10.ring(), g10) == composition && g10.total_degree() == 30,
                           "k=10 degrevlex model");
                  auto l10 = model_for_order(s10, TermOrder::lex());
                  c.expect(formatted(s10.ring(), l10) ==
                                   names("1, x10, x10^2, x9, x9*x10, x9*x10^2, x9^2, x9^2*x10, x9^2*x10^2, x8, "
                                         "x8*x10, x8*x9, x8*x9*x10, x8^2, x8^2*x10, x6, x6*x10, x6*x9, x6*x9*x10, "
                                         "x6*x8, x6*x8*x10") &&
                               l10.total_degree() == 44,
                           "k=10 lex model");
                  if (deep) {
                      auto fan = enumerate_fan(s7, FanLimits::unlimited());
                      c.expect(fan.models.size() == 18368, "k=7 fan size " + std::to_string(fan.models.size()));
                      c.expect(fan.classes.size() == 25, "k=7 class count " + std::to_string(fan.classes.size()));
                  }
              });

    criterion(12, "Graeco-Latin square and BIBD under the documented variable rankings", 5, [](Check& c) {
        auto g = support::load("graeco16.csv");
        auto gm = model_for_order(g, TermOrder::deglex());
        c.expect(formatted(g.ring(), gm) == names("1, u4, u3, u2, t4, t3, t2, c4, c3, c2, r4, r3, r2, t4*u4, t4*u3, "
                                                  "t4*u2"),
                 "Graeco-Latin model");
        std::map<std::string, int> anova;
        for (const auto& m : gm.monomials()) {
            std::string source;
            for (std::size_t i = 0; i < m.arity(); ++i)
                if (m[i] > 0 && source.find(g.ring().names()[i][0]) == std::string::npos)
                    source += g.ring().names()[i][0];
            std::sort(source.begin(), source.end());
            ++anova[source.empty() ? "mean" : source];
        }
        c.expect(anova == std::map<std::string, int>{{"mean", 1}, {"u", 3}, {"t", 3}, {"r", 3}, {"c", 3}, {"tu", 3}},
                 "ANOVA decomposition");
        auto b = support::load("bibd12.csv");
        auto listed = names("1, t6, t5, t4, t3, t2, b6, b6*t6, b5, b4, b3, b2");
        c.expect(model_names(b, TermOrder::degrevlex()) == listed, "BIBD degrevlex model");
        c.expect(model_names(b, TermOrder::lex()) == listed, "BIBD lex model");
    });

    criterion(13, "property suites", 600, [](Check& c) {
        std::mt19937 rng(103);
        // Buchberger-Moller against Buchberger on 3x3 grid subsets
        const std::vector<Rational> levels{-1, 0, 1};
        Ring ring = Ring::numbered(2);
        auto base = ring.parse_list("x1^3 - x1, x2^3 - x2");
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Point> kept;
            std::vector<Polynomial> vanish;
            for (const auto& a : levels)
                for (const auto& b : levels) {
                    if (rng() % 2) {
                        kept.push_back({a, b});
                        continue;
                    }
                    Polynomial f = Polynomial::constant(2, 1);
                    for (const auto& l : levels) {
                        if (l != a) f = f * (Polynomial::variable(2, 0) - Polynomial::constant(2, l));
                        if (l != b) f = f * (Polynomial::variable(2, 1) - Polynomial::constant(2, l));
                    }
                    vanish.push_back(f);
                }
            if (kept.empty() || vanish.empty()) continue;
            auto order = support::random_order(rng, 2);
            c.expect(design_ideal(Design(ring, kept), order) == ideal_sum_design(base, vanish, order),
                     "BM and Buchberger disagree");
        }
        // staircase invariants on random designs and orders
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t k = 2 + rng() % 2, n = 1 + rng() % 10;
            std::set<Point> pts;
            while (pts.size() < n) {
                Point p;
                for (std::size_t i = 0; i < k; ++i) p.push_back(support::random_rational(rng, 6));
                pts.insert(p);
            }
            Design d(Ring::numbered(k), {pts.begin(), pts.end()});
            auto order = support::random_order(rng, k);
            auto model = model_for_order(d, order);
            c.expect(model.size() == n, "|L| != n");
            c.expect(is_downward_closed(model.monomials()), "staircase not downward closed");
            c.expect(rank(evaluation_matrix(d, model)) == n, "singular evaluation matrix");
            // normal form idempotence and linearity
            auto gb = d.groebner(order);
            auto f = support::random_polynomial(rng, k, 4, 4), h = support::random_polynomial(rng, k, 4, 4);
            auto a = support::random_rational(rng), b = support::random_rational(rng);
            auto nf = normal_form(f, *gb);
            c.expect(normal_form(nf, *gb) == nf, "NF not idempotent");
            c.expect(normal_form(a * f + b * h, *gb) == a * nf + b * normal_form(h, *gb), "NF not linear");
        }
        // fan soundness and completeness spot checks
        for (const char* name : {"l1.csv", "pb8.csv"}) {
            auto d = support::load(name);
            fan_properties(c, d, enumerate_fan(d), rng, name);
        }
    });

    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria did not pass") << "\n";
    return failed == 0 ? 0 : 1;
}

#include "algdesign/groebner.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <tuple>

#include "algdesign/errors.hpp"

namespace algdesign {

Ideal::Ideal(std::vector<Polynomial> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw InvalidArgument("an ideal needs at least one generator");
    arity_ = gens_.front().arity();
    for (const auto& g : gens_) {
        if (g.arity() != arity_) throw DimensionError("ideal generators differ in arity");
        if (g.is_zero()) throw InvalidArgument("ideal generators must be nonzero");
    }
}

bool is_downward_closed(std::span<const Monomial> monomials) {
    std::set<Monomial> present(monomials.begin(), monomials.end());
    for (const auto& m : monomials) {
        for (std::size_t i = 0; i < m.arity(); ++i) {
            if (m[i] == 0) continue;
            Monomial lower = m;
            --lower[i];
            if (!present.contains(lower)) return false;
        }
    }
    return true;
}

Staircase::Staircase(std::size_t arity, std::vector<Monomial> monomials)
    : arity_(arity), monos_(std::move(monomials)) {
    for (const auto& m : monos_)
        if (m.arity() != arity_) throw DimensionError("staircase monomials differ in arity");
    std::sort(monos_.begin(), monos_.end());
    monos_.erase(std::unique(monos_.begin(), monos_.end()), monos_.end());
    if (monos_.empty()) throw InvalidArgument("a staircase must contain 1");
    if (!is_downward_closed(monos_)) throw InvalidArgument("monomial set is not downward closed");
}

bool Staircase::contains(const Monomial& m) const {
    return std::binary_search(monos_.begin(), monos_.end(), m);
}

std::uint64_t Staircase::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& m : monos_) d += m.degree();
    return d;
}

std::vector<std::uint64_t> Staircase::state_vector() const {
    std::vector<std::uint64_t> s(arity_, 0);
    for (const auto& m : monos_)
        for (std::size_t i = 0; i < arity_; ++i) s[i] += m[i];
    return s;
}

std::vector<Monomial> Staircase::sorted(const TermOrder& order) const {
    std::vector<Monomial> out = monos_;
    std::sort(out.begin(), out.end(), MonomialLess{&order});
    return out;
}

GroebnerBasis::GroebnerBasis(TermOrder order, std::vector<Polynomial> elements, bool reduced)
    : order_(std::move(order)), elements_(std::move(elements)), reduced_(reduced) {
    if (elements_.empty()) throw InvalidArgument("empty Groebner basis");
    arity_ = elements_.front().arity();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements_.size());
    for (const auto& g : elements_) out.push_back(g.leading_monomial(order_));
    return out;
}

bool GroebnerBasis::is_unit() const {
    for (const auto& g : elements_)
        if (g.leading_monomial(order_).is_one()) return true;
    return false;
}

DivisionResult poly_divide(const Polynomial& f, std::span<const Polynomial> divisors,
                           const TermOrder& order) {
    if (divisors.empty()) throw InvalidArgument("division needs at least one divisor");
    std::vector<Term> leads;
    leads.reserve(divisors.size());
    for (const auto& g : divisors) {
        if (g.arity() != f.arity()) throw DimensionError("divisor arity mismatch");
        leads.push_back(g.leading_term(order));
    }
    DivisionResult out{std::vector<Polynomial>(divisors.size(), Polynomial(f.arity())),
                       Polynomial(f.arity())};
    Polynomial p = f;
    while (!p.is_zero()) {
        Term lt = p.leading_term(order);
        bool divided = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!leads[i].monomial.divides(lt.monomial)) continue;
            Monomial q = lt.monomial / leads[i].monomial;
            Rational c = lt.coefficient / leads[i].coefficient;
            out.quotients[i].add_term(q, c);
            p -= divisors[i].mul_term(q, c);
            divided = true;
            break;
        }
        if (!divided) {
            out.remainder.add_term(lt.monomial, lt.coefficient);
            p.add_term(lt.monomial, -lt.coefficient);
        }
    }
    return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
    if (f.arity() != g.arity()) throw DimensionError("S-polynomial arity mismatch");
    Term lf = f.leading_term(order);
    Term lg = g.leading_term(order);
    Monomial l = lcm(lf.monomial, lg.monomial);
    return f.mul_term(l / lf.monomial, Rational(1 / lf.coefficient)) -
           g.mul_term(l / lg.monomial, Rational(1 / lg.coefficient));
}

namespace {

// Remainder of f modulo a list of polynomials, with full tail reduction.
Polynomial reduce_fully(const Polynomial& f, std::span<const Polynomial> basis,
                        std::span<const Term> leads, const TermOrder& order) {
    Polynomial p = f;
    Polynomial r(f.arity());
    while (!p.is_zero()) {
        Term lt = p.leading_term(order);
        bool divided = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!leads[i].monomial.divides(lt.monomial)) continue;
            p -= basis[i].mul_term(lt.monomial / leads[i].monomial, lt.coefficient / leads[i].coefficient);
            divided = true;
            break;
        }
        if (!divided) {
            r.add_term(lt.monomial, lt.coefficient);
            p.add_term(lt.monomial, -lt.coefficient);
        }
    }
    return r;
}

}  // namespace

GroebnerBasis reduce_basis(std::vector<Polynomial> basis, const TermOrder& order) {
    std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
    if (basis.empty()) throw InvalidArgument("cannot reduce an empty basis");
    for (auto& g : basis) g = g.monic(order);

    // keep only elements whose leading monomial is minimal; first one wins on ties
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = basis[i].leading_monomial(order);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = basis[j].leading_monomial(order);
            if (lj.divides(li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });

    std::vector<Term> leads;
    for (const auto& g : minimal) leads.push_back(g.leading_term(order));
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        std::vector<Term> other_leads;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j == i) continue;
            others.push_back(minimal[j]);
            other_leads.push_back(leads[j]);
        }
        Polynomial tail = minimal[i];
        tail.add_term(leads[i].monomial, -leads[i].coefficient);
        Polynomial g = others.empty() ? tail : reduce_fully(tail, others, other_leads, order);
        g.add_term(leads[i].monomial, Rational(1));
        reduced.push_back(std::move(g));
    }
    return GroebnerBasis(order, std::move(reduced), true);
}

GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order) {
    std::vector<Polynomial> basis;
    for (const auto& g : ideal.generators()) basis.push_back(g.monic(order));
    std::vector<Term> leads;
    for (const auto& g : basis) leads.push_back(g.leading_term(order));

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (coprime(leads[i].monomial, leads[j].monomial)) continue;
            pairs.push_back({i, j, lcm(leads[i].monomial, leads[j].monomial)});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

    while (!pairs.empty()) {
        // normal strategy: smallest lcm first, ties broken by pair indices
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            auto c = order.compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return std::tie(a.j, a.i) < std::tie(b.j, b.i);
        });
        Pair p = *best;
        pairs.erase(best);
        Polynomial s = s_polynomial(basis[p.i], basis[p.j], order);
        Polynomial r = reduce_fully(s, basis, leads, order);
        if (r.is_zero()) continue;
        r = r.monic(order);
        if (r.leading_monomial(order).is_one()) {
            return GroebnerBasis(order, {Polynomial::constant(ideal.arity(), 1)}, true);
        }
        basis.push_back(r);
        leads.push_back(r.leading_term(order));
        add_pairs_for(basis.size() - 1);
    }
    return reduce_basis(std::move(basis), order);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.arity() != gb.arity()) throw DimensionError("normal form: arity mismatch");
    std::vector<Term> leads;
    for (const auto& g : gb.elements()) leads.push_back(g.leading_term(gb.order()));
    return reduce_fully(f, gb.elements(), leads, gb.order());
}

Staircase quotient_basis(const GroebnerBasis& gb) {
    const std::size_t k = gb.arity();
    if (gb.is_unit()) throw EmptyDesignError("the ideal is the whole ring");
    auto leads = gb.leading_monomials();
    for (std::size_t i = 0; i < k; ++i) {
        bool bounded = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
            return m[i] > 0 && m.degree() == m[i];
        });
        if (!bounded)
            throw NotZeroDimensionalError("quotient basis is infinite: no pure power of variable " +
                                          std::to_string(i + 1) + " among leading terms");
    }
    auto standard = [&](const Monomial& m) {
        return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    std::vector<Monomial> out;
    std::set<Monomial> seen{Monomial::one(k)};
    std::deque<Monomial> queue{Monomial::one(k)};
    while (!queue.empty()) {
        Monomial m = std::move(queue.front());
        queue.pop_front();
        out.push_back(m);
        for (std::size_t i = 0; i < k; ++i) {
            Monomial up = m;
            ++up[i];
            if (seen.contains(up) || !standard(up)) continue;
            seen.insert(up);
            queue.push_back(std::move(up));
        }
    }
    return Staircase(k, std::move(out));
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
    const auto& els = gb.elements();
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = i + 1; j < els.size(); ++j)
            if (!normal_form(s_polynomial(els[i], els[j], gb.order()), gb).is_zero()) return false;
    return true;
}

std::shared_ptr<const GroebnerBasis> GroebnerCache::find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : it->second;
}

std::shared_ptr<const GroebnerBasis> GroebnerCache::store(const std::string& key, GroebnerBasis gb) {
    auto value = std::make_shared<const GroebnerBasis>(std::move(gb));
    std::unique_lock lock(mutex_);
    entries_[key] = value;
    return value;
}

}  // namespace algdesign

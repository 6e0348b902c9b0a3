#include "algdesign/alias.hpp"

#include <algorithm>
#include <map>

#include "algdesign/errors.hpp"

namespace algdesign {

bool algebraic_aliased(const Polynomial& f, const Polynomial& g, const Design& d, const TermOrder& order) {
    if (f.arity() != d.arity() || g.arity() != d.arity()) throw DimensionError("alias check: arity mismatch");
    auto gb = d.groebner(order);
    return normal_form(f - g, *gb).is_zero();
}

bool statistical_aliased(std::span<const Polynomial> F, std::span<const Polynomial> G, const Design& d) {
    if (F.empty() || G.empty()) throw InvalidArgument("statistical aliasing needs nonempty collections");
    std::vector<RationalVector> fs, gs;
    for (const auto& f : F) fs.push_back(d.evaluate(f));
    for (const auto& g : G) gs.push_back(d.evaluate(g));
    std::vector<RationalVector> both = fs;
    both.insert(both.end(), gs.begin(), gs.end());
    const std::size_t rf = span_rank(fs);
    return rf == span_rank(gs) && rf == span_rank(both);
}

std::vector<Monomial> alias_universe(std::size_t k, const AliasUniverse& universe) {
    std::vector<Monomial> out;
    if (std::holds_alternative<SquareFreeUniverse>(universe)) {
        if (k > 20) throw UnsupportedError("square-free universe too large");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            Monomial m(k);
            for (std::size_t i = 0; i < k; ++i) m[i] = (mask >> i) & 1U;
            out.push_back(std::move(m));
        }
    } else {
        const unsigned cap = std::get<UpToDegree>(universe).max_degree;
        Monomial m(k);
        // odometer over exponent vectors of total degree <= cap
        for (;;) {
            out.push_back(m);
            std::size_t i = 0;
            while (i < k) {
                ++m[i];
                if (m.degree() <= cap) break;
                m[i] = 0;
                ++i;
            }
            if (i == k) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

AliasTable alias_table(const Design& d, const TermOrder& order, AliasUniverse universe) {
    if (!d.is_two_level()) throw UnsupportedError("alias tables need a +-1 coded design; use pairwise alias checks");
    auto gb = d.groebner(order);
    std::map<Monomial, std::vector<AliasEntry>> rows;
    for (auto& m : alias_universe(d.arity(), universe)) {
        Polynomial nf = normal_form(Polynomial(m), *gb);
        if (nf.size() != 1 || abs(nf.terms().begin()->second) != 1)
            throw UnsupportedError("normal form of " + d.ring().format(m) +
                                   " is not a signed monomial; the design is not a regular fraction");
        const auto& [key, c] = *nf.terms().begin();
        rows[key].push_back({m, sgn(c)});
    }
    AliasTable table{order, {}};
    for (auto& [key, members] : rows) {
        std::sort(members.begin(), members.end(),
                  [&](const AliasEntry& a, const AliasEntry& b) { return order.less(a.monomial, b.monomial); });
        table.rows.push_back({key, std::move(members)});
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [&](const AliasRow& a, const AliasRow& b) { return order.less(a.key, b.key); });
    return table;
}

}  // namespace algdesign

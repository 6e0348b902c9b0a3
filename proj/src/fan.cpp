#include "algdesign/fan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include <omp.h>

#include "algdesign/hilbert.hpp"
#include "algdesign/lp.hpp"

namespace algdesign {

namespace {

using Clock = std::chrono::steady_clock;

// Exceptions must not escape an OpenMP region: the first one is kept and
// rethrown after the loop.
class ExceptionSink {
public:
    template <class F>
    void run(F&& f) {
        try {
            f();
        } catch (...) {
#pragma omp critical(algdesign_exception_sink)
            if (!first_) first_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (first_) std::rethrow_exception(first_);
    }

private:
    std::exception_ptr first_;
};

RationalVector difference(const Monomial& beta, const Monomial& alpha) {
    RationalVector r(beta.arity());
    for (std::size_t i = 0; i < beta.arity(); ++i)
        r[i] = Rational(static_cast<long>(beta[i])) - Rational(static_cast<long>(alpha[i]));
    return r;
}

std::vector<Monomial> maximal_elements(const Staircase& model) {
    std::vector<Monomial> out;
    for (const auto& a : model.monomials()) {
        bool maximal = true;
        for (std::size_t i = 0; i < a.arity() && maximal; ++i) {
            Monomial up = a;
            ++up[i];
            maximal = !model.contains(up);
        }
        if (maximal) out.push_back(a);
    }
    return out;
}

Staircase permuted(const Staircase& s, const std::vector<std::size_t>& perm) {
    std::vector<Monomial> monos;
    monos.reserve(s.size());
    for (const auto& m : s.monomials()) {
        Monomial p(m.arity());
        for (std::size_t i = 0; i < m.arity(); ++i) p[perm[i]] = m[i];
        monos.push_back(std::move(p));
    }
    return Staircase(s.arity(), std::move(monos));
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
    return r >= kPrime ? r - kPrime : r;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a))
        if (e & 1) r = mul_mod(r, a);
    return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::optional<std::uint64_t> to_mod(const Rational& q) {
    auto reduce = [](const mpz_class& z) {
        mpz_class r = z % mpz_class(static_cast<unsigned long>(kPrime));
        if (r < 0) r += static_cast<unsigned long>(kPrime);
        return static_cast<std::uint64_t>(r.get_ui());
    };
    std::uint64_t den = reduce(q.get_den());
    if (den == 0) return std::nullopt;
    return mul_mod(reduce(q.get_num()), inv_mod(den));
}

// Exponent vectors that can occur in an estimable staircase of size n:
// alpha_i below the number of levels of factor i and at most n divisors.
struct Universe {
    std::vector<Monomial> monos;                      // DegRevLex ascending
    std::vector<std::vector<std::uint32_t>> lower;    // indices of alpha - e_i
    std::vector<RationalVector> exact;                // evaluation vectors
    std::vector<std::vector<std::uint64_t>> modular;  // same, modulo the prime
    bool use_modular = false;
};

Universe build_universe(const Design& d) {
    const std::size_t k = d.arity();
    const std::size_t n = d.size();
    std::vector<std::size_t> levels(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::set<Rational> values;
        for (const auto& p : d.points()) values.insert(p[i]);
        levels[i] = values.size();
    }

    Universe u;
    Monomial cur(k);
    auto rec = [&](auto&& self, std::size_t i, std::size_t divisors) -> void {
        if (i == k) {
            u.monos.push_back(cur);
            return;
        }
        for (std::size_t e = 0; e < levels[i] && divisors * (e + 1) <= n; ++e) {
            cur[i] = static_cast<Exponent>(e);
            self(self, i + 1, divisors * (e + 1));
        }
        cur[i] = 0;
    };
    rec(rec, 0, 1);

    const TermOrder order = TermOrder::degrevlex();
    std::sort(u.monos.begin(), u.monos.end(), [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    for (std::uint32_t j = 0; j < u.monos.size(); ++j) index.emplace(u.monos[j], j);

    u.lower.resize(u.monos.size());
    u.exact.resize(u.monos.size());
    for (std::size_t j = 0; j < u.monos.size(); ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            if (u.monos[j][i] == 0) continue;
            Monomial down = u.monos[j];
            --down[i];
            u.lower[j].push_back(index.at(down));
        }
        u.exact[j] = d.evaluate(u.monos[j]);
    }

    // Modular rank is exact when every nonzero minor of the integer-scaled
    // evaluation columns is below the prime (Hadamard bound).
    std::vector<double> log_norms;
    bool representable = true;
    u.modular.resize(u.monos.size());
    for (std::size_t j = 0; j < u.monos.size() && representable; ++j) {
        mpz_class den = 1;
        for (const auto& v : u.exact[j]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
        mpz_class norm2 = 0;
        for (const auto& v : u.exact[j]) {
            mpz_class s = v.get_num() * (den / v.get_den());
            norm2 += s * s;
        }
        log_norms.push_back(0.5 * std::log(norm2.get_d()));
        for (const auto& v : u.exact[j]) {
            auto m = to_mod(v);
            if (!m) {
                representable = false;
                break;
            }
            u.modular[j].push_back(*m);
        }
    }
    if (representable) {
        std::sort(log_norms.rbegin(), log_norms.rend());
        double bound = 0;
        for (std::size_t j = 0; j < std::min(n, log_norms.size()); ++j) bound += log_norms[j];
        u.use_modular = bound < std::log(static_cast<double>(kPrime)) - 1.0;
    }
    if (!u.use_modular) u.modular.clear();
    return u;
}

struct SharedState {
    const Design& design;
    const Universe& universe;
    const FanLimits& limits;
    Clock::time_point start;
    std::atomic<std::size_t> accepted{0};
    std::atomic<bool> abort{false};
    std::atomic<int> reason{0};  // 1 = model cap, 2 = time
};

class Walker {
public:
    explicit Walker(SharedState& shared)
        : s_(shared), in_(shared.universe.monos.size(), 0) {}

    // Enumerates extensions of the current set using elements >= start.
    void run(std::size_t start) { dfs(start); }

    bool push(std::uint32_t j) {
        if (!independent(j)) return false;
        in_[j] = 1;
        chosen_.push_back(j);
        return true;
    }

    void pop() {
        in_[chosen_.back()] = 0;
        chosen_.pop_back();
        if (s_.universe.use_modular) {
            mod_rows_.pop_back();
            mod_pivots_.pop_back();
        } else {
            exact_.pop_back();
        }
    }

    // Stop at `depth`, recording the partial sets instead of descending.
    void collect_frontier(std::size_t depth, std::vector<std::vector<std::uint32_t>>* out) {
        frontier_depth_ = depth;
        frontier_ = out;
    }

    std::vector<FanModel>& found() { return found_; }

private:
    bool independent(std::uint32_t j) {
        const Universe& u = s_.universe;
        if (u.use_modular) {
            std::vector<std::uint64_t> v = u.modular[j];
            for (std::size_t r = 0; r < mod_rows_.size(); ++r) {
                std::uint64_t f = v[mod_pivots_[r]];
                if (f == 0) continue;
                const auto& row = mod_rows_[r];
                for (std::size_t c = 0; c < v.size(); ++c)
                    if (row[c]) v[c] = (v[c] + kPrime - mul_mod(f, row[c])) % kPrime;
            }
            std::size_t pivot = 0;
            while (pivot < v.size() && v[pivot] == 0) ++pivot;
            if (pivot == v.size()) return false;
            std::uint64_t inv = inv_mod(v[pivot]);
            for (auto& x : v) x = mul_mod(x, inv);
            mod_rows_.push_back(std::move(v));
            mod_pivots_.push_back(pivot);
            return true;
        }
        EchelonBasis next = exact_.empty() ? EchelonBasis(s_.design.size()) : exact_.back();
        if (!next.insert(u.exact[j])) return false;
        exact_.push_back(std::move(next));
        return true;
    }

    bool over_budget() {
        if (s_.abort.load(std::memory_order_relaxed)) return true;
        if (++ticks_ % 256 == 0 && Clock::now() - s_.start > s_.limits.time_budget) {
            s_.reason = 2;
            s_.abort = true;
        }
        return s_.abort.load(std::memory_order_relaxed);
    }

    void dfs(std::size_t start) {
        if (over_budget()) return;
        if (chosen_.size() == s_.design.size()) {
            leaf();
            return;
        }
        if (frontier_ && chosen_.size() == frontier_depth_) {
            std::vector<std::uint32_t> node = chosen_;
            node.push_back(static_cast<std::uint32_t>(start));  // resume position
            frontier_->push_back(std::move(node));
            return;
        }
        const Universe& u = s_.universe;
        for (std::size_t j = start; j < u.monos.size(); ++j) {
            bool addable = std::all_of(u.lower[j].begin(), u.lower[j].end(), [&](std::uint32_t l) { return in_[l]; });
            if (!addable || !push(static_cast<std::uint32_t>(j))) continue;
            dfs(j + 1);
            pop();
            if (s_.abort.load(std::memory_order_relaxed)) return;
        }
    }

    void leaf() {
        std::vector<Monomial> monos;
        monos.reserve(chosen_.size());
        for (auto j : chosen_) monos.push_back(s_.universe.monos[j]);
        Staircase model(s_.design.arity(), std::move(monos));
        MembershipResult r = model_membership(s_.design, model);
        if (!r.member) return;
        FanModel fm;
        fm.state = model.state_vector();
        fm.total_degree = model.total_degree();
        fm.model = std::move(model);
        fm.witness = std::move(r.witness);
        found_.push_back(std::move(fm));
        if (s_.accepted.fetch_add(1) + 1 > s_.limits.max_models) {
            s_.reason = 1;
            s_.abort = true;
        }
    }

    SharedState& s_;
    std::vector<char> in_;
    std::vector<std::uint32_t> chosen_;
    std::vector<std::vector<std::uint64_t>> mod_rows_;
    std::vector<std::size_t> mod_pivots_;
    std::vector<EchelonBasis> exact_;
    std::vector<FanModel> found_;
    std::size_t ticks_ = 0;
    std::size_t frontier_depth_ = 0;
    std::vector<std::vector<std::uint32_t>>* frontier_ = nullptr;
};

bool model_less(const FanModel& a, const FanModel& b) { return a.model < b.model; }

}  // namespace

std::vector<Monomial> border(const Staircase& model) {
    std::set<Monomial> out;
    for (const auto& a : model.monomials()) {
        for (std::size_t i = 0; i < model.arity(); ++i) {
            Monomial b = a;
            ++b[i];
            if (model.contains(b)) continue;
            bool minimal = true;
            for (std::size_t j = 0; j < b.arity() && minimal; ++j) {
                if (b[j] == 0) continue;
                Monomial down = b;
                --down[j];
                minimal = model.contains(down);
            }
            if (minimal) out.insert(b);
        }
    }
    return {out.begin(), out.end()};
}

GroebnerBasis gb_for_weight(const Design& d, std::span<const Rational> w) {
    if (w.size() != d.arity()) throw DimensionError("weight vector length differs from the number of factors");
    return design_ideal(d, TermOrder::weight({w.begin(), w.end()}, TermOrder::degrevlex()));
}

MembershipResult model_membership(const Design& d, const Staircase& model) {
    if (model.arity() != d.arity()) throw DimensionError("model arity differs from the design");
    if (model.size() != d.size())
        throw InvalidArgument("model has " + std::to_string(model.size()) + " terms but the design has " +
                              std::to_string(d.size()) + " points");
    MembershipResult result;
    auto inv = inverse(evaluation_matrix(d, model));
    if (!inv) {
        result.reason = "evaluation matrix is singular";
        return result;
    }

    const auto& monos = model.monomials();
    std::vector<RationalVector> rows;
    for (const auto& beta : border(model)) {
        RationalVector c = multiply(*inv, d.evaluate(beta));
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) rows.push_back(difference(beta, monos[i]));
    }
    auto w = covering_solution(rows, d.arity());
    if (!w) {
        result.reason = "no term order makes every border monomial leading";
        return result;
    }
    if (std::any_of(w->begin(), w->end(), [](const Rational& v) { return v == 0; })) {
        std::uint64_t maxdeg = 1;
        for (const auto& m : monos) maxdeg = std::max(maxdeg, m.degree());
        Rational eps(1, 2 * static_cast<unsigned long>(d.arity() * maxdeg));
        for (auto& v : *w) v += eps;
    }
    for (const auto& r : rows) {
        Rational dot = 0;
        for (std::size_t i = 0; i < r.size(); ++i) dot += r[i] * (*w)[i];
        if (dot <= 0) throw InternalError("perturbed weight vector left the cone");
    }
    if (quotient_basis(gb_for_weight(d, *w)) != model)
        throw InternalError("weight witness does not reproduce the model");
    result.member = true;
    result.witness = std::move(*w);
    return result;
}

std::vector<OrbitClass> classify_orbits(std::span<const Staircase> models) {
    std::map<Staircase, std::size_t> index;
    for (std::size_t i = 0; i < models.size(); ++i) index.emplace(models[i], i);
    std::vector<char> assigned(models.size(), 0);
    std::vector<OrbitClass> classes;

    for (const auto& [seed, seed_idx] : index) {
        if (assigned[seed_idx]) continue;
        const std::size_t k = seed.arity();
        std::set<Staircase> orbit{seed};
        std::vector<Staircase> queue{seed};
        while (!queue.empty()) {
            Staircase cur = std::move(queue.back());
            queue.pop_back();
            for (std::size_t i = 0; i + 1 < k; ++i) {
                std::vector<std::size_t> perm(k);
                std::iota(perm.begin(), perm.end(), 0);
                std::swap(perm[i], perm[i + 1]);
                Staircase next = permuted(cur, perm);
                if (orbit.insert(next).second) queue.push_back(std::move(next));
            }
        }
        OrbitClass c;
        c.orbit_size = orbit.size();
        c.closed = true;
        for (const auto& s : orbit) {
            auto it = index.find(s);
            if (it == index.end()) {
                c.closed = false;
                continue;
            }
            assigned[it->second] = 1;
            c.members.push_back(it->second);
        }
        std::sort(c.members.begin(), c.members.end());
        c.representative = seed;  // index iterates canonically, so the seed is the smallest member
        c.total_degree = seed.total_degree();
        c.hilbert = format_series(*staircase_series(seed).coefficients);
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [](const OrbitClass& a, const OrbitClass& b) {
        if (a.total_degree != b.total_degree) return a.total_degree < b.total_degree;
        return a.representative < b.representative;
    });
    return classes;
}

FanReport enumerate_fan(const Design& d, const FanLimits& limits, Execution exec) {
    const Universe universe = build_universe(d);
    SharedState shared{d, universe, limits, Clock::now()};
    std::vector<FanModel> found;

    if (exec == Execution::Serial) {
        Walker w(shared);
        w.run(0);
        found = std::move(w.found());
    } else {
        // Split the search tree at a shallow depth and walk the subtrees in parallel.
        std::vector<std::vector<std::uint32_t>> frontier;
        Walker root(shared);
        root.collect_frontier(std::min<std::size_t>(3, d.size()), &frontier);
        root.run(0);
        found = std::move(root.found());

        std::vector<std::vector<FanModel>> results(frontier.size());
        ExceptionSink sink;
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t f = 0; f < frontier.size(); ++f) {
            sink.run([&] {
                Walker w(shared);
                const auto& node = frontier[f];
                for (std::size_t i = 0; i + 1 < node.size(); ++i)
                    if (!w.push(node[i])) throw InternalError("frontier replay failed");
                w.run(node.back());
                results[f] = std::move(w.found());
            });
        }
        sink.rethrow();
        for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(found));
    }
    std::sort(found.begin(), found.end(), model_less);

    if (shared.abort) {
        std::string why = shared.reason == 1 ? "model limit of " + std::to_string(limits.max_models) + " exceeded"
                                             : "time budget exhausted";
        throw BudgetExceeded("fan enumeration stopped: " + why, std::move(found));
    }

    FanReport report;
    report.arity = d.arity();
    report.design_size = d.size();
    std::vector<Staircase> staircases;
    for (const auto& m : found) staircases.push_back(m.model);
    report.models = std::move(found);
    report.classes = classify_orbits(staircases);
    return report;
}

StateGeometry state_geometry(const FanReport& report, Execution exec) {
    if (report.models.empty()) throw InvalidArgument("state geometry of an empty fan");
    StateGeometry g;
    std::set<StateVector> distinct;
    g.min_total_degree = report.models.front().total_degree;
    g.max_total_degree = g.min_total_degree;
    for (const auto& m : report.models) {
        g.states.push_back(m.state);
        distinct.insert(m.state);
        g.min_total_degree = std::min(g.min_total_degree, m.total_degree);
        g.max_total_degree = std::max(g.max_total_degree, m.total_degree);
    }
    std::vector<StateVector> points(distinct.begin(), distinct.end());
    std::vector<char> vertex(points.size(), 0);
    std::map<StateVector, const RationalVector*> witness_of;
    for (const auto& m : report.models)
        if (!m.witness.empty()) witness_of.emplace(m.state, &m.witness);
    auto weigh = [&](const RationalVector& w, const StateVector& s) {
        Rational v = 0;
        for (std::size_t i = 0; i < s.size(); ++i) v += w[i] * static_cast<unsigned long>(s[i]);
        return v;
    };
    auto test = [&](std::size_t p) {
        // The model's own witness usually minimises its state vector strictly.
        if (auto it = witness_of.find(points[p]); it != witness_of.end()) {
            const Rational own = weigh(*it->second, points[p]);
            bool strict = true;
            for (std::size_t q = 0; q < points.size() && strict; ++q)
                strict = q == p || weigh(*it->second, points[q]) > own;
            if (strict) {
                vertex[p] = 1;
                return;
            }
        }
        std::vector<RationalVector> rows;
        for (std::size_t q = 0; q < points.size(); ++q) {
            if (q == p) continue;
            RationalVector r(report.arity);
            for (std::size_t i = 0; i < report.arity; ++i)
                r[i] = Rational(static_cast<long>(points[q][i])) - Rational(static_cast<long>(points[p][i]));
            rows.push_back(std::move(r));
        }
        vertex[p] = free_covering_solution(rows, report.arity).has_value();
    };
    if (exec == Execution::Serial) {
        for (std::size_t p = 0; p < points.size(); ++p) test(p);
    } else {
        ExceptionSink sink;
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t p = 0; p < points.size(); ++p) sink.run([&] { test(p); });
        sink.rethrow();
    }
    for (std::size_t p = 0; p < points.size(); ++p)
        if (vertex[p]) g.vertices.push_back(points[p]);
    return g;
}

namespace {

// True iff the strictly positive w puts every model element strictly below
// every border monomial.
bool separates(const Staircase& model, const RationalVector& w) {
    auto weigh = [&](const Monomial& m) {
        Rational v = 0;
        for (std::size_t i = 0; i < m.arity(); ++i) v += w[i] * static_cast<unsigned long>(m[i]);
        return v;
    };
    Rational top = 0;
    for (const auto& a : model.monomials()) top = std::max(top, weigh(a));
    for (const auto& b : border(model))
        if (weigh(b) <= top) return false;
    return true;
}

}  // namespace

std::optional<RationalVector> corner_cut_witness(const Staircase& model) {
    const std::size_t k = model.arity();
    std::vector<RationalVector> rows;
    for (std::size_t i = 0; i < k; ++i) {
        RationalVector e(k, 0);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    auto tops = maximal_elements(model);
    std::vector<std::vector<long>> ints;
    for (const auto& beta : border(model))
        for (const auto& alpha : tops) {
            std::vector<long> r(k);
            for (std::size_t i = 0; i < k; ++i) r[i] = static_cast<long>(beta[i]) - static_cast<long>(alpha[i]);
            ints.push_back(std::move(r));
        }
    // Two rows summing to a non-positive vector cannot both reach 1.
    for (std::size_t a = 0; a < ints.size(); ++a)
        for (std::size_t b = a + 1; b < ints.size(); ++b) {
            bool nonpositive = true;
            for (std::size_t i = 0; i < k && nonpositive; ++i) nonpositive = ints[a][i] + ints[b][i] <= 0;
            if (nonpositive) return std::nullopt;
        }
    for (const auto& r : ints) {
        RationalVector q(k);
        for (std::size_t i = 0; i < k; ++i) q[i] = r[i];
        rows.push_back(std::move(q));
    }
    return covering_solution(rows, k);
}

std::vector<Staircase> corner_cut_staircases(std::size_t k, std::size_t n, const FanLimits& limits) {
    if (k == 0 || n == 0) throw InvalidArgument("corner cuts need k >= 1 and n >= 1");
    const auto start = Clock::now();
    // Dropping the heaviest element of a corner cut leaves a corner cut, so
    // every corner cut grows from a smaller one by a single border monomial.
    // Each level keeps a separating weight per staircase; a child separated by
    // its parent's weight needs no LP.
    std::vector<std::pair<Staircase, RationalVector>> level{{Staircase(k, {Monomial::one(k)}), RationalVector(k, 1)}};
    for (std::size_t size = 1; size < n; ++size) {
        std::map<Staircase, const RationalVector*> candidates;
        for (const auto& [s, w] : level)
            for (const auto& b : border(s)) {
                std::vector<Monomial> monos = s.monomials();
                monos.push_back(b);
                candidates.emplace(Staircase(k, std::move(monos)), &w);
            }
        std::vector<std::pair<Staircase, RationalVector>> pool;
        std::vector<const RationalVector*> hints;
        for (auto& [s, w] : candidates) {
            pool.emplace_back(s, RationalVector{});
            hints.push_back(w);
        }
        std::vector<char> keep(pool.size(), 0);
        ExceptionSink sink;
#pragma omp parallel for schedule(dynamic, 4)
        for (std::size_t i = 0; i < pool.size(); ++i)
            sink.run([&] {
                if (separates(pool[i].first, *hints[i])) {
                    pool[i].second = *hints[i];
                    keep[i] = 1;
                } else if (auto w = corner_cut_witness(pool[i].first)) {
                    pool[i].second = std::move(*w);
                    keep[i] = 1;
                }
            });
        sink.rethrow();
        level.clear();
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (keep[i]) level.push_back(std::move(pool[i]));
        if (level.size() > limits.max_models || Clock::now() - start > limits.time_budget)
            throw BudgetExceeded("corner-cut enumeration exceeded its budget", {});
    }
    std::vector<Staircase> out;
    for (auto& [s, w] : level) out.push_back(std::move(s));
    return out;
}

CornerCutReport corner_cut_analysis(const FanReport& report, const FanLimits& limits) {
    CornerCutReport out;
    std::vector<char> cut(report.models.size(), 0);
    ExceptionSink sink;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t i = 0; i < report.models.size(); ++i)
        sink.run([&] { cut[i] = corner_cut_witness(report.models[i].model).has_value(); });
    sink.rethrow();
    for (std::size_t i = 0; i < cut.size(); ++i)
        if (cut[i]) out.corner_cuts.push_back(i);

    auto all = corner_cut_staircases(report.arity, report.design_size, limits);
    out.corner_cut_count = all.size();
    std::set<Staircase> fan;
    for (const auto& m : report.models) fan.insert(m.model);
    out.generic = std::all_of(all.begin(), all.end(), [&](const Staircase& s) { return fan.contains(s); });
    return out;
}

}  // namespace algdesign

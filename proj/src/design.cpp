#include "algdesign/design.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "algdesign/errors.hpp"

namespace algdesign {

Design::Design(Ring ring, std::vector<Point> points)
    : ring_(std::move(ring)), points_(std::move(points)), cache_(std::make_shared<GroebnerCache>()) {
    if (points_.empty()) throw InvalidArgument("a design needs at least one point");
    std::set<Point> seen;
    for (const auto& p : points_) {
        if (p.size() != ring_.arity()) throw DimensionError("design point arity mismatch");
        if (!seen.insert(p).second) {
            std::string text;
            for (std::size_t i = 0; i < p.size(); ++i) text += (i ? "," : "") + to_string(p[i]);
            throw DuplicatePointError("duplicate design point (" + text + ")");
        }
    }
}

std::shared_ptr<const GroebnerBasis> Design::groebner(const TermOrder& order) const {
    const std::string key = order.to_string();
    if (auto hit = cache_->find(key)) return hit;
    return cache_->store(key, design_ideal(*this, order));
}

Design Design::with_ranking(const std::vector<std::string>& names) const {
    if (names.size() != arity()) throw InvalidArgument("ranking must list every variable once");
    std::vector<std::size_t> source;
    for (const auto& n : names) {
        auto i = ring_.index_of(n);
        if (!i) throw InvalidArgument("unknown variable '" + n + "' in ranking");
        source.push_back(*i);
    }
    std::vector<Point> pts;
    pts.reserve(points_.size());
    for (const auto& p : points_) {
        Point q(p.size());
        for (std::size_t j = 0; j < source.size(); ++j) q[j] = p[source[j]];
        pts.push_back(std::move(q));
    }
    return Design(Ring(names), std::move(pts));
}

RationalVector Design::evaluate(const Polynomial& f) const {
    RationalVector v;
    v.reserve(points_.size());
    for (const auto& p : points_) v.push_back(f.evaluate(p));
    return v;
}

RationalVector Design::evaluate(const Monomial& m) const {
    RationalVector v;
    v.reserve(points_.size());
    for (const auto& p : points_) v.push_back(algdesign::evaluate(m, p));
    return v;
}

bool Design::is_two_level() const {
    for (const auto& p : points_)
        for (const auto& x : p)
            if (x != 1 && x != -1) return false;
    return true;
}

GroebnerBasis design_ideal(const Design& d, const TermOrder& order) {
    const std::size_t k = d.arity();
    EchelonBasis echelon(d.size());
    std::vector<Monomial> staircase;
    std::vector<Polynomial> basis;
    std::vector<Monomial> leads;

    // candidates are visited in increasing order
    std::set<Monomial, MonomialLess> candidates(MonomialLess{&order});
    candidates.insert(Monomial::one(k));
    while (!candidates.empty()) {
        Monomial t = *candidates.begin();
        candidates.erase(candidates.begin());
        if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(t); }))
            continue;
        auto reduction = echelon.reduce(d.evaluate(t));
        if (!reduction.independent()) {
            Polynomial g(t);
            for (std::size_t i = 0; i < staircase.size(); ++i)
                g.add_term(staircase[i], -reduction.coefficients[i]);
            leads.push_back(t);
            basis.push_back(std::move(g));
            continue;
        }
        echelon.insert(std::move(reduction));
        staircase.push_back(t);
        for (std::size_t j = 0; j < k; ++j) {
            Monomial up = t;
            ++up[j];
            candidates.insert(std::move(up));
        }
    }
    if (staircase.size() != d.size()) throw InternalError("Buchberger-Moller: staircase size mismatch");
    // leads were found in increasing order, so `basis` is already sorted
    return GroebnerBasis(order, std::move(basis), true);
}

GroebnerBasis ideal_sum_design(std::span<const Polynomial> base_gens,
                               std::span<const Polynomial> fraction_gens, const TermOrder& order) {
    std::vector<Polynomial> gens(base_gens.begin(), base_gens.end());
    gens.insert(gens.end(), fraction_gens.begin(), fraction_gens.end());
    GroebnerBasis gb = buchberger(Ideal(std::move(gens)), order);
    if (gb.is_unit()) throw EmptyDesignError("generators have no common zero: the design is empty");
    quotient_basis(gb);  // throws when not zero-dimensional
    return gb;
}

Staircase model_for_order(const Design& d, const TermOrder& order) {
    return quotient_basis(*d.groebner(order));
}

Matrix evaluation_matrix(const Design& d, std::span<const Monomial> columns) {
    Matrix x(d.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].arity() != d.arity()) throw DimensionError("model arity does not match design");
        for (std::size_t r = 0; r < d.size(); ++r) x(r, c) = evaluate(columns[c], d.points()[r]);
    }
    return x;
}

Matrix evaluation_matrix(const Design& d, const Staircase& model) {
    if (model.size() > d.size()) throw InvalidArgument("model has more terms than the design has points");
    return evaluation_matrix(d, std::span<const Monomial>(model.monomials()));
}

Polynomial interpolate(const Design& d, std::span<const Rational> values, const TermOrder& order) {
    if (values.size() != d.size()) throw DimensionError("need one value per design point");
    Staircase model = model_for_order(d, order);
    auto theta = solve(evaluation_matrix(d, model), RationalVector(values.begin(), values.end()));
    if (!theta) throw InternalError("evaluation matrix on the quotient basis is singular");
    Polynomial f(d.arity());
    for (std::size_t i = 0; i < model.size(); ++i) f.add_term(model.monomials()[i], (*theta)[i]);
    return f;
}

Design full_factorial(const std::vector<std::vector<Rational>>& levels) {
    if (levels.empty()) throw InvalidArgument("full factorial needs at least one factor");
    for (const auto& l : levels)
        if (l.empty()) throw InvalidArgument("every factor needs at least one level");
    std::vector<Point> points{Point{}};
    for (const auto& factor : levels) {
        std::vector<Point> next;
        for (const auto& p : points)
            for (const auto& level : factor) {
                Point q = p;
                q.push_back(level);
                next.push_back(std::move(q));
            }
        points = std::move(next);
    }
    return Design(Ring::numbered(levels.size()), std::move(points));
}

namespace {

Monomial parse_word(std::size_t k, const std::string& word, const Ring& ring) {
    bool letters = !word.empty() && std::all_of(word.begin(), word.end(), [](char c) {
        return std::isupper(static_cast<unsigned char>(c));
    });
    if (!letters) {
        try {
            return ring.parse_monomial(word);
        } catch (const ParseError& e) {
            throw ParseError("malformed contrast word '" + word + "': " + e.what());
        }
    }
    Monomial m(k);
    for (char c : word) {
        std::size_t i = static_cast<std::size_t>(c - 'A');
        if (i >= k) throw InvalidArgument("contrast word '" + word + "' references an unknown factor");
        if (m[i] != 0) throw ParseError("contrast word '" + word + "' repeats a factor");
        m[i] = 1;
    }
    return m;
}

Point parse_sign_row(const std::string& row) {
    Point p;
    for (char c : row) {
        switch (c) {
            case '+':
                p.emplace_back(1);
                break;
            case '-':
                p.emplace_back(-1);
                break;
            case '0':
                p.emplace_back(0);
                break;
            default:
                throw ParseError("malformed generator row '" + row + "': expected +, - or 0");
        }
    }
    if (p.empty()) throw ParseError("empty generator row");
    return p;
}

}  // namespace

Design regular_fraction(std::size_t k, const std::vector<std::string>& words,
                        const std::vector<int>& signs) {
    if (k == 0) throw InvalidArgument("regular fraction needs k >= 1");
    if (words.size() != signs.size()) throw InvalidArgument("one sign per contrast word");
    Ring ring = Ring::numbered(k);
    std::vector<Monomial> contrasts;
    for (const auto& w : words) contrasts.push_back(parse_word(k, w, ring));
    for (int s : signs)
        if (s != 1 && s != -1) throw InvalidArgument("contrast signs must be +1 or -1");

    std::vector<std::vector<Rational>> levels(k, {Rational(-1), Rational(1)});
    Design full = full_factorial(levels);
    std::vector<Point> kept;
    for (const auto& p : full.points()) {
        bool ok = true;
        for (std::size_t i = 0; i < contrasts.size() && ok; ++i)
            ok = evaluate(contrasts[i], p) == signs[i];
        if (ok) kept.push_back(p);
    }
    if (kept.empty()) throw EmptyDesignError("contrast equations have no common solution");
    return Design(std::move(ring), std::move(kept));
}

Design plackett_burman_8() {
    const Point g = parse_sign_row("+++-+--");
    std::vector<Point> points;
    for (std::size_t shift = 0; shift < 7; ++shift) {
        Point p(7);
        for (std::size_t j = 0; j < 7; ++j) p[(j + shift) % 7] = g[j];
        points.push_back(std::move(p));
    }
    points.push_back(Point(7, Rational(1)));
    return Design(Ring::numbered(7), std::move(points));
}

Design foldover_plus_center(const std::vector<std::string>& rows) {
    if (rows.empty()) throw InvalidArgument("foldover needs at least one generator row");
    std::vector<Point> points;
    std::size_t k = 0;
    for (const auto& r : rows) {
        Point p = parse_sign_row(r);
        if (k == 0) k = p.size();
        if (p.size() != k) throw ParseError("generator rows differ in length");
        Point neg = p;
        for (auto& x : neg) x = -x;
        points.push_back(std::move(p));
        points.push_back(std::move(neg));
    }
    points.push_back(Point(k, Rational(0)));
    return Design(Ring::numbered(k), std::move(points));
}

namespace {

std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

Design parse_design_csv(std::string_view text) {
    std::stringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> header;
    std::vector<Point> points;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto cells = split_csv(line);
        if (header.empty()) {
            header = cells;
            continue;
        }
        if (cells.size() != header.size())
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(header.size()) + " values, found " +
                             std::to_string(cells.size()));
        Point p;
        for (const auto& c : cells) {
            try {
                p.push_back(parse_rational(c));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        points.push_back(std::move(p));
    }
    if (header.empty()) throw ParseError("design file has no header row");
    if (points.empty()) throw ParseError("design file has no points");
    return Design(Ring(header), std::move(points));
}

Design read_design_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read design file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_design_csv(buf.str());
}

std::string format_design_csv(const Design& d) {
    std::string out;
    const auto& names = d.ring().names();
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
    out += '\n';
    for (const auto& p : d.points()) {
        for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + to_string(p[i]);
        out += '\n';
    }
    return out;
}

}  // namespace algdesign

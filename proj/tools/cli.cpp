#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "algdesign/alias.hpp"
#include "algdesign/errors.hpp"
#include "algdesign/fan.hpp"
#include "algdesign/hilbert.hpp"
#include "algdesign/indicator.hpp"

namespace algdesign::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string order = "degrevlex";
    std::string order_file;
    std::string ranking;
    std::string format = "text";
    std::string design;
    std::string base;
    std::string poly;
    std::string other;
    std::string ideal;
    std::string vars;
    std::string a;
    std::string b;
    unsigned max_degree = 0;
    int degree = -1;
    std::size_t max_models = FanLimits{}.max_models;
    double time_budget = FanLimits{}.time_budget.count();
    bool deep = false;
    bool serial = false;
    bool list = false;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// An order file holds either an order spec or the rows of a matrix order,
// one row per line with comma or blank separated entries.
TermOrder order_from_file(const std::string& path) {
    std::vector<std::string> lines;
    std::stringstream ss(read_text(path));
    for (std::string line; std::getline(ss, line);) {
        line = line.substr(0, line.find('#'));
        line.erase(0, line.find_first_not_of(" \t\r"));
        line.erase(line.find_last_not_of(" \t\r") + 1);
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("order file '" + path + "' is empty");
    if (std::isalpha(static_cast<unsigned char>(lines.front()[0]))) return parse_term_order(join(lines, ""));
    std::vector<std::string> rows;
    for (auto line : lines) {
        std::replace(line.begin(), line.end(), '\t', ' ');
        std::stringstream fields(line);
        std::vector<std::string> entries;
        for (std::string f; fields >> f;)
            for (auto& e : split_names(f)) entries.push_back(e);
        rows.push_back(join(entries, ","));
    }
    return parse_term_order("matrix:" + join(rows, ";"));
}

TermOrder resolve_order(const Options& o) {
    return o.order_file.empty() ? parse_term_order(o.order) : order_from_file(o.order_file);
}

void check_order_arity(const TermOrder& order, std::size_t k) {
    if (auto n = order.arity(); n && *n != k)
        throw DimensionError("order '" + order.to_string() + "' is for " + std::to_string(*n) +
                             " variables but the design has " + std::to_string(k));
}

Design load_design(const std::string& path, const Options& o) {
    Design d = read_design_csv(path);
    if (!o.ranking.empty()) d = d.with_ranking(split_names(o.ranking));
    return d;
}

std::vector<Monomial> ascending(const Staircase& s, const TermOrder& order) { return s.sorted(order); }

std::vector<std::string> monomial_strings(const Ring& ring, const std::vector<Monomial>& monos) {
    std::vector<std::string> out;
    for (const auto& m : monos) out.push_back(ring.format(m));
    return out;
}

json exponents(const std::vector<Monomial>& monos) {
    json arr = json::array();
    for (const auto& m : monos) arr.push_back(std::vector<Exponent>(m.exponents().begin(), m.exponents().end()));
    return arr;
}

json staircase_json(const Ring& ring, const Staircase& s, const TermOrder& order) {
    auto monos = ascending(s, order);
    return json{{"staircase", exponents(monos)}, {"monomials", monomial_strings(ring, monos)}};
}

std::string state_text(const StateVector& s) {
    std::vector<std::string> parts;
    for (auto v : s) parts.push_back(std::to_string(v));
    return "(" + join(parts, ",") + ")";
}

std::vector<std::string> rationals(const RationalVector& v) {
    std::vector<std::string> out;
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

std::string roman(std::size_t n) {
    static const std::pair<std::size_t, const char*> table[] = {
        {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"}, {90, "XC"}, {50, "L"},
        {40, "XL"},  {10, "X"},   {9, "IX"},  {5, "V"},   {4, "IV"},  {1, "I"}};
    std::string out;
    for (const auto& [value, glyph] : table)
        for (; n >= value; n -= value) out += glyph;
    return out;
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        width.resize(std::max(width.size(), r.size()), 0);
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            line += r[c];
            if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
        }
        out << line << "\n";
    }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

FanLimits limits_of(const Options& o) {
    if (o.deep) return FanLimits::unlimited();
    FanLimits l;
    l.max_models = o.max_models;
    l.time_budget = std::chrono::duration<double>(o.time_budget);
    return l;
}

Execution execution_of(const Options& o) { return o.serial ? Execution::Serial : Execution::Parallel; }

const TermOrder kDisplay = TermOrder::degrevlex();

// ---- subcommands ------------------------------------------------------------

int cmd_gbasis(const Options& o, std::ostream& out) {
    TermOrder order = resolve_order(o);
    Design d = load_design(o.design, o);
    check_order_arity(order, d.arity());
    auto gb = d.groebner(order);
    std::vector<std::string> polys;
    for (const auto& g : gb->elements()) polys.push_back(d.ring().format(g, order));
    if (o.format == "json") {
        emit(out, json{{"order", order.to_string()}, {"variables", d.ring().names()}, {"basis", polys}});
    } else {
        out << "order: " << order.to_string() << "\n";
        for (const auto& p : polys) out << p << "\n";
    }
    return kSuccess;
}

int cmd_model(const Options& o, std::ostream& out) {
    TermOrder order = resolve_order(o);
    Design d = load_design(o.design, o);
    check_order_arity(order, d.arity());
    Staircase model = model_for_order(d, order);
    auto monos = ascending(model, order);
    std::string hs = format_series(*staircase_series(model).coefficients);
    if (o.format == "json") {
        json j{{"order", order.to_string()}, {"variables", d.ring().names()}};
        j.update(staircase_json(d.ring(), model, order));
        j["total_degree"] = model.total_degree();
        j["hilbert_series"] = hs;
        emit(out, j);
    } else {
        out << "order: " << order.to_string() << "\n";
        out << "size: " << model.size() << "\n";
        out << "model: " << join(monomial_strings(d.ring(), monos), ", ") << "\n";
        out << "total degree: " << model.total_degree() << "\n";
        out << "hilbert series: " << hs << "\n";
    }
    return kSuccess;
}

int cmd_nf(const Options& o, std::ostream& out) {
    TermOrder order = resolve_order(o);
    Design d = load_design(o.design, o);
    check_order_arity(order, d.arity());
    Polynomial f = d.ring().parse(o.poly);
    std::string nf = d.ring().format(normal_form(f, *d.groebner(order)), order);
    if (o.format == "json")
        emit(out, json{{"order", order.to_string()}, {"input", d.ring().format(f, order)}, {"normal_form", nf}});
    else
        out << nf << "\n";
    return kSuccess;
}

int cmd_alias_table(const Options& o, std::ostream& out) {
    TermOrder order = resolve_order(o);
    Design d = load_design(o.design, o);
    check_order_arity(order, d.arity());
    AliasUniverse universe = o.max_degree == 0 ? AliasUniverse{SquareFreeUniverse{}} : AliasUniverse{UpToDegree{o.max_degree}};
    AliasTable table = alias_table(d, order, universe);
    const Ring& ring = d.ring();
    auto signed_name = [&](const AliasEntry& e) { return (e.sign < 0 ? "-" : "") + ring.format(e.monomial); };

    if (o.format == "json") {
        json rows = json::array();
        for (const auto& row : table.rows) {
            json members = json::array();
            for (const auto& e : row.members) members.push_back({{"monomial", ring.format(e.monomial)}, {"sign", e.sign}});
            rows.push_back({{"key", ring.format(row.key)}, {"members", members}});
        }
        emit(out, json{{"order", order.to_string()},
                       {"universe", o.max_degree == 0 ? "square-free" : "degree<=" + std::to_string(o.max_degree)},
                       {"rows", rows}});
    } else {
        for (const auto& row : table.rows) {
            std::vector<std::string> parts{ring.format(row.key)};
            for (const auto& e : row.members)
                if (e.monomial != row.key) parts.push_back(signed_name(e));
            out << join(parts, " = ") << "\n";
        }
    }
    return kSuccess;
}

int cmd_alias(const Options& o, std::ostream& out) {
    TermOrder order = resolve_order(o);
    Design d = load_design(o.design, o);
    check_order_arity(order, d.arity());
    Polynomial f = d.ring().parse(o.poly);
    Polynomial g = d.ring().parse(o.other);
    bool algebraic = algebraic_aliased(f, g, d, order);
    std::vector<Polynomial> F{f}, G{g};
    bool statistical = statistical_aliased(F, G, d);
    if (o.format == "json") {
        emit(out, json{{"order", order.to_string()},
                       {"f", d.ring().format(f, order)},
                       {"g", d.ring().format(g, order)},
                       {"algebraic", algebraic},
                       {"statistical", statistical}});
    } else {
        out << "algebraically aliased: " << (algebraic ? "yes" : "no") << "\n";
        out << "statistically aliased: " << (statistical ? "yes" : "no") << "\n";
    }
    return kSuccess;
}

struct IndicatorInputs {
    TermOrder order;
    Design base;
    IndicatorFunction ind;
};

IndicatorInputs load_indicator(const Options& o) {
    TermOrder order = resolve_order(o);
    Design base = load_design(o.base, o);
    Design fraction = load_design(o.design, o);
    check_order_arity(order, base.arity());
    if (fraction.ring().names() != base.ring().names())
        throw InvalidArgument("fraction and base designs declare different variables");
    IndicatorFunction ind = indicator_of(base, fraction.points(), order);
    return {order, base, ind};
}

int cmd_indicator(const Options& o, std::ostream& out) {
    auto [order, base, ind] = load_indicator(o);
    const Ring& ring = base.ring();
    auto terms = ind.polynomial().sorted_terms(order);
    if (o.format == "json") {
        json coeffs = json::object();
        for (const auto& [m, c] : terms) coeffs[ring.format(m)] = to_string(c);
        emit(out, json{{"order", order.to_string()},
                       {"variables", ring.names()},
                       {"base_size", base.size()},
                       {"fraction_size", ind.fraction().size()},
                       {"polynomial", ring.format(ind.polynomial(), order)},
                       {"coefficients", coeffs}});
    } else {
        out << "base points: " << base.size() << "\n";
        out << "fraction points: " << ind.fraction().size() << "\n";
        out << "indicator: " << ring.format(ind.polynomial(), order) << "\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& [m, c] : terms) rows.push_back({"  " + ring.format(m), to_string(c)});
        out << "coefficients:\n";
        print_table(out, rows);
    }
    return kSuccess;
}

int cmd_orth(const Options& o, std::ostream& out) {
    auto [order, base, ind] = load_indicator(o);
    const Ring& ring = base.ring();
    std::vector<std::pair<Monomial, Monomial>> pairs;
    if (!o.a.empty() || !o.b.empty()) {
        if (o.a.empty() || o.b.empty()) throw InvalidArgument("--a and --b must be given together");
        pairs.emplace_back(ring.parse_monomial(o.a), ring.parse_monomial(o.b));
    } else {
        auto monos = alias_universe(base.arity(), UpToDegree{std::max(1u, o.max_degree)});
        std::erase_if(monos, [](const Monomial& m) {
            return std::any_of(m.exponents().begin(), m.exponents().end(), [](Exponent e) { return e > 1; });
        });
        std::sort(monos.begin(), monos.end(), [&](const Monomial& x, const Monomial& y) { return kDisplay.less(x, y); });
        for (std::size_t i = 0; i < monos.size(); ++i)
            for (std::size_t j = i; j < monos.size(); ++j) pairs.emplace_back(monos[i], monos[j]);
    }
    json arr = json::array();
    std::vector<std::vector<std::string>> rows{{"a", "b", "sum", "orthogonal"}};
    for (const auto& [x, y] : pairs) {
        auto r = orthogonality_check(x, y, ind);
        arr.push_back({{"a", ring.format(x)}, {"b", ring.format(y)}, {"sum", to_string(r.sum)}, {"orthogonal", r.orthogonal}});
        rows.push_back({ring.format(x), ring.format(y), to_string(r.sum), r.orthogonal ? "yes" : "no"});
    }
    if (o.format == "json")
        emit(out, json{{"order", order.to_string()}, {"fraction_size", ind.fraction().size()}, {"pairs", arr}});
    else
        print_table(out, rows);
    return kSuccess;
}

json poly_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p) arr.push_back(c.get_str());
    return arr;
}

int cmd_hilbert(const Options& o, std::ostream& out) {
    std::vector<std::string> names = split_names(o.vars);
    if (names.empty()) {
        static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
        std::set<std::string> seen;
        for (std::sregex_iterator it(o.ideal.begin(), o.ideal.end(), ident), end; it != end; ++it)
            if (seen.insert(it->str()).second) names.push_back(it->str());
    }
    if (names.empty()) throw ParseError("no variables: pass --vars or use them in the generators");
    Ring ring(names);
    std::vector<Monomial> gens;
    for (const auto& p : ring.parse_list(o.ideal)) {
        if (p.terms().size() != 1) throw ParseError("Hilbert series needs monomial generators");
        gens.push_back(p.terms().begin()->first);
    }
    HilbertSeries hs = hilbert_series(gens, ring.arity());
    std::vector<Monomial> minimal = minimalize(gens);
    std::sort(minimal.begin(), minimal.end(), [](const Monomial& x, const Monomial& y) { return kDisplay.less(x, y); });
    std::optional<mpz_class> value;
    if (o.degree >= 0) value = hilbert_function(gens, ring.arity(), static_cast<unsigned>(o.degree));

    if (o.format == "json") {
        json j{{"variables", names},
               {"generators", monomial_strings(ring, minimal)},
               {"quotient_numerator", poly_json(hs.quotient_numerator)},
               {"inside_numerator", poly_json(hs.inside_numerator)},
               {"finite", hs.finite()},
               {"coefficients", hs.finite() ? poly_json(*hs.coefficients) : json(nullptr)}};
        if (value) j["hilbert_function"] = {{"degree", o.degree}, {"value", value->get_str()}};
        emit(out, j);
    } else {
        const std::string denom = "(1-s)^" + std::to_string(ring.arity());
        out << "variables: " << join(names, ", ") << "\n";
        out << "generators: " << join(monomial_strings(ring, minimal), ", ") << "\n";
        out << "numerator: " << format_series(hs.quotient_numerator) << "  over " << denom << "\n";
        out << "inside numerator: " << format_series(hs.inside_numerator) << "  over " << denom << "\n";
        if (hs.finite()) {
            mpz_class dim = 0;
            for (const auto& c : *hs.coefficients) dim += c;
            out << "series: " << format_series(*hs.coefficients) << "\n";
            out << "dimension: " << dim.get_str() << "\n";
        } else {
            out << "series: infinite\n";
        }
        if (value) out << "HF(" << o.degree << "): " << value->get_str() << "\n";
    }
    return kSuccess;
}

json fan_json(const Design& d, const FanReport& r, const StateGeometry& g) {
    json models = json::array();
    for (const auto& m : r.models) {
        json jm = staircase_json(d.ring(), m.model, kDisplay);
        jm["state"] = m.state;
        jm["total_degree"] = m.total_degree;
        jm["witness"] = rationals(m.witness);
        models.push_back(jm);
    }
    json classes = json::array();
    for (std::size_t c = 0; c < r.classes.size(); ++c) {
        const auto& cl = r.classes[c];
        json jc{{"label", roman(c + 1)}};
        jc["representative"] = staircase_json(d.ring(), cl.representative, kDisplay);
        jc["size"] = cl.members.size();
        jc["orbit_size"] = cl.orbit_size;
        jc["closed"] = cl.closed;
        jc["total_degree"] = cl.total_degree;
        jc["hilbert_series"] = cl.hilbert;
        jc["members"] = cl.members;
        classes.push_back(jc);
    }
    return json{{"variables", d.ring().names()},
                {"design_size", r.design_size},
                {"model_count", r.models.size()},
                {"models", models},
                {"classes", classes},
                {"state_vectors", g.states},
                {"vertices", g.vertices},
                {"min_total_degree", g.min_total_degree},
                {"max_total_degree", g.max_total_degree}};
}

int cmd_fan(const Options& o, std::ostream& out) {
    Design d = load_design(o.design, o);
    FanReport r = enumerate_fan(d, limits_of(o), execution_of(o));
    StateGeometry g = state_geometry(r, execution_of(o));
    if (o.format == "json") {
        emit(out, fan_json(d, r, g));
        return kSuccess;
    }
    out << "factors: " << join(d.ring().names(), ", ") << "\n";
    out << "design points: " << r.design_size << "\n";
    out << "models: " << r.models.size() << "\n";
    out << "classes: " << r.classes.size() << "\n";
    out << "total degree: " << g.min_total_degree << " to " << g.max_total_degree << "\n\n";
    std::vector<std::vector<std::string>> rows{{"class", "size", "closed", "degree", "hilbert series", "representative"}};
    for (std::size_t c = 0; c < r.classes.size(); ++c) {
        const auto& cl = r.classes[c];
        rows.push_back({roman(c + 1), std::to_string(cl.members.size()) + (cl.closed ? "*" : ""),
                        cl.closed ? "yes" : "no", std::to_string(cl.total_degree), cl.hilbert,
                        join(monomial_strings(d.ring(), ascending(cl.representative, kDisplay)), ", ")});
    }
    print_table(out, rows);
    if (o.list) {
        out << "\n";
        for (std::size_t i = 0; i < r.models.size(); ++i) {
            const auto& m = r.models[i];
            out << "model " << i + 1 << ": " << join(monomial_strings(d.ring(), ascending(m.model, kDisplay)), ", ")
                << "  state " << state_text(m.state) << "  witness (" << join(rationals(m.witness), ",") << ")\n";
        }
    }
    return kSuccess;
}

int cmd_state_polytope(const Options& o, std::ostream& out) {
    Design d = load_design(o.design, o);
    FanReport r = enumerate_fan(d, limits_of(o), execution_of(o));
    StateGeometry g = state_geometry(r, execution_of(o));
    std::set<StateVector> distinct(g.states.begin(), g.states.end());
    if (o.format == "json") {
        emit(out, json{{"variables", d.ring().names()},
                       {"model_count", r.models.size()},
                       {"state_vectors", g.states},
                       {"vertices", g.vertices},
                       {"min_total_degree", g.min_total_degree},
                       {"max_total_degree", g.max_total_degree}});
        return kSuccess;
    }
    out << "models: " << r.models.size() << "\n";
    out << "distinct state vectors: " << distinct.size() << "\n";
    out << "vertices: " << g.vertices.size() << "\n";
    out << "min total degree: " << g.min_total_degree << "\n";
    out << "max total degree: " << g.max_total_degree << "\n";
    for (const auto& v : g.vertices) out << "vertex " << state_text(v) << "\n";
    return kSuccess;
}

int cmd_corner_cuts(const Options& o, std::ostream& out) {
    Design d = load_design(o.design, o);
    FanLimits limits = limits_of(o);
    FanReport r = enumerate_fan(d, limits, execution_of(o));
    CornerCutReport c = corner_cut_analysis(r, limits);
    if (o.format == "json") {
        json cuts = json::array();
        for (auto i : c.corner_cuts) cuts.push_back(staircase_json(d.ring(), r.models[i].model, kDisplay));
        emit(out, json{{"variables", d.ring().names()},
                       {"model_count", r.models.size()},
                       {"corner_cuts", cuts},
                       {"corner_cut_count", c.corner_cut_count},
                       {"generic", c.generic}});
        return kSuccess;
    }
    out << "fan models: " << r.models.size() << "\n";
    out << "corner cuts in fan: " << c.corner_cuts.size() << "\n";
    out << "corner cuts with " << r.design_size << " terms in " << r.arity << " variables: " << c.corner_cut_count << "\n";
    out << "generic: " << (c.generic ? "yes" : "no") << "\n";
    for (auto i : c.corner_cuts)
        out << "corner cut: " << join(monomial_strings(d.ring(), ascending(r.models[i].model, kDisplay)), ", ") << "\n";
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Algebraic analysis of experimental designs", "algdesign"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "algdesign 1.0.0");
    Options o;

    auto order_opts = [&](CLI::App* s) {
        s->add_option("--order", o.order, "lex | deglex | degrevlex | matrix:r1;r2;... | weight:w1,...,wk[+tiebreak]")
            ->capture_default_str();
        s->add_option("--order-file", o.order_file, "file holding an order spec or matrix rows")->check(CLI::ExistingFile);
    };
    auto common = [&](CLI::App* s) {
        s->add_option("--rank", o.ranking, "variable ranking override, highest first (comma separated)");
        s->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    };
    auto budget = [&](CLI::App* s) {
        s->add_option("--max-models", o.max_models, "stop after this many fan models")->capture_default_str();
        s->add_option("--time-budget", o.time_budget, "seconds before giving up")
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str();
        s->add_flag("--deep", o.deep, "lift the model and time limits");
        s->add_flag("--serial", o.serial, "use the single-threaded reference enumeration");
    };
    auto design_arg = [&](CLI::App* s) { s->add_option("design", o.design, "design CSV file")->required(); };

    auto* gbasis = app.add_subcommand("gbasis", "reduced Groebner basis of the design ideal");
    design_arg(gbasis), order_opts(gbasis), common(gbasis);
    auto* model = app.add_subcommand("model", "quotient basis (identified saturated model)");
    design_arg(model), order_opts(model), common(model);
    auto* nf = app.add_subcommand("nf", "normal form of a polynomial over the design");
    nf->add_option("poly", o.poly, "polynomial")->required();
    design_arg(nf), order_opts(nf), common(nf);
    auto* alias_tab = app.add_subcommand("alias-table", "alias table of a two-level design");
    design_arg(alias_tab), order_opts(alias_tab), common(alias_tab);
    alias_tab->add_option("--max-degree", o.max_degree, "use all monomials up to this degree (default: square-free)");
    auto* alias = app.add_subcommand("alias", "algebraic and statistical aliasing of two polynomials");
    alias->add_option("f", o.poly, "first polynomial")->required();
    alias->add_option("g", o.other, "second polynomial")->required();
    design_arg(alias), order_opts(alias), common(alias);
    auto* indicator = app.add_subcommand("indicator", "indicator function of a fraction");
    indicator->add_option("fraction", o.design, "fraction CSV file")->required();
    indicator->add_option("--base", o.base, "base design CSV file")->required();
    order_opts(indicator), common(indicator);
    auto* orth = app.add_subcommand("orth", "orthogonality audit from the indicator function");
    orth->add_option("fraction", o.design, "fraction CSV file")->required();
    orth->add_option("--base", o.base, "base design CSV file")->required();
    orth->add_option("--max-degree", o.max_degree, "degree cap of the square-free monomials audited (default 1)");
    orth->add_option("--a", o.a, "first monomial of a single pair");
    orth->add_option("--b", o.b, "second monomial of a single pair");
    order_opts(orth), common(orth);
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of a monomial ideal");
    hilbert->add_option("ideal", o.ideal, "comma-separated monomial generators, e.g. \"x^3, x*y^2, y^4\"")->required();
    hilbert->add_option("--vars", o.vars, "variables (comma separated); default: as they appear");
    hilbert->add_option("--degree", o.degree, "also evaluate the Hilbert function at this degree")
        ->check(CLI::NonNegativeNumber);
    hilbert->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
    auto* fan = app.add_subcommand("fan", "algebraic fan: all identifiable models");
    design_arg(fan), common(fan), budget(fan);
    fan->add_flag("--list", o.list, "list every model with its state vector and witness");
    auto* state = app.add_subcommand("state-polytope", "state vectors and state polytope vertices");
    design_arg(state), common(state), budget(state);
    auto* corner = app.add_subcommand("corner-cuts", "corner-cut models and genericity");
    design_arg(corner), common(corner), budget(corner);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        if (*gbasis) return cmd_gbasis(o, out);
        if (*model) return cmd_model(o, out);
        if (*nf) return cmd_nf(o, out);
        if (*alias_tab) return cmd_alias_table(o, out);
        if (*alias) return cmd_alias(o, out);
        if (*indicator) return cmd_indicator(o, out);
        if (*orth) return cmd_orth(o, out);
        if (*hilbert) return cmd_hilbert(o, out);
        if (*fan) return cmd_fan(o, out);
        if (*state) return cmd_state_polytope(o, out);
        if (*corner) return cmd_corner_cuts(o, out);
    } catch (const BudgetExceeded& e) {
        err << "error: budget exhausted: " << e.what() << " (" << e.partial().size()
            << " models found; raise --max-models/--time-budget or pass --deep)\n";
        return kBudgetExceeded;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const IoError& e) {
        err << "error: unreadable input: " << e.what() << "\n";
        return kInputError;
    } catch (const ParseError& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace algdesign::cli

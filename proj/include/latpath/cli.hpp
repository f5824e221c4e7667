#pragma once

// Command-line front end: argument parsing, dispatch and document emission.

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "appell.hpp"
#include "certifier.hpp"
#include "closed_forms.hpp"
#include "ogf_converter.hpp"
#include "oracle_enum.hpp"
#include "serialization.hpp"

namespace latpath::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Format { Json, Csv };

struct CommandRequest {
    std::string subcommand;
    std::optional<Boundary> boundary;
    /// (c, d) when the boundary came from --arith.
    std::optional<std::pair<Term, Term>> arith;
    std::optional<StepShape> shape;
    /// Empty means symbolic.
    std::optional<Rational> sigma;
    std::size_t n = 10;
    Format format = Format::Json;
    bool oracle = false;
    Term x = 0;
    std::optional<std::size_t> section;
    unsigned k = 0;
    unsigned l = 0;
    std::size_t dz = 6;
    std::size_t dy = 6;
    bool product = false;
    std::string meta_path;
};

struct Outcome {
    int status = 0;
    std::string document;
};

inline int exit_status(Errc c) {
    switch (c) {
        case Errc::ParseError: return 2;
        case Errc::PrecisionFault:
        case Errc::NonRationalOutput:
        case Errc::SingularWithinPrecision:
        case Errc::BranchResidualNonzero:
        case Errc::OracleMismatch:
        case Errc::ResidualNonzero:
        case Errc::InexactDivision: return 4;
        default: return 3;
    }
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

inline std::pair<Term, Term> parse_pair(const std::string& s, const char* what) {
    auto parts = split(s, ',');
    if (parts.size() != 2) throw Error(Errc::ParseError, std::string(what) + " expects two comma-separated integers, got '" + s + "'");
    auto a = parse_integer(parts[0]), b = parse_integer(parts[1]);
    if (!a.fits_slong_p() || !b.fits_slong_p()) throw Error(Errc::ParseError, std::string(what) + " value out of range");
    return {a.get_si(), b.get_si()};
}

struct RawOptions {
    std::string boundary, tennis, arith, staircase, shape, sigma = "symbolic", format = "json", meta;
    std::size_t n = 10;
    bool oracle = false, product = false;
    long x = 0;
    std::optional<std::size_t> section;
    unsigned k = 0, l = 0;
    std::size_t dz = 6, dy = 6;
};

inline void add_boundary_options(CLI::App* app, RawOptions& o) {
    app->add_option("--boundary", o.boundary, "boundary as JSON {\"prefix\":[...],\"period\":[...]}");
    app->add_option("--tennis", o.tennis, "tennis-ball boundary k,l");
    app->add_option("--arith", o.arith, "arithmetic boundary c,d (s_i = c + i d)");
    app->add_option("--staircase", o.staircase, "staircase boundary of slope p/q");
}

inline void add_common_options(CLI::App* app, RawOptions& o) {
    app->add_option("--shape", o.shape, "diagonal step a,b");
    app->add_option("--sigma", o.sigma, "diagonal weight: a rational value or 'symbolic'");
    app->add_option("--n,--order", o.n, "largest index or order");
    app->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_flag("--oracle", o.oracle, "cross-check against the brute-force oracle");
    app->add_option("--meta", o.meta, "write a metadata sidecar to this path");
}

}  // namespace detail

/// Parses argv (without the program name). Throws Error(ParseError).
inline CommandRequest parse(const std::vector<std::string>& args) {
    CLI::App app{"Exact enumeration of lattice paths under ultimately periodic boundaries", "latpath"};
    app.require_subcommand(1);
    detail::RawOptions o;
    struct Sub {
        const char* name;
        const char* help;
        bool boundary;
    };
    const std::vector<Sub> subs{{"count", "LP or SP tables by recursion", true},
                                {"rect", "rectangle counts", false},
                                {"appell-check", "verify the Appell identity", true},
                                {"sections", "section generating functions", true},
                                {"tennis", "tennis-ball sections", false},
                                {"closed-form", "explicit formulas for arithmetic boundaries", true},
                                {"parking", "parking-function counts", true},
                                {"certify", "guess and verify an annihilating polynomial", true},
                                {"decompose-check", "check the rectangle decomposition", true}};
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        if (s.boundary) detail::add_boundary_options(sub, o);
        detail::add_common_options(sub, o);
        const std::string name = s.name;
        if (name == "rect" || name == "decompose-check") sub->add_option("--x", o.x, "rectangle width")->required();
        if (name == "sections" || name == "tennis" || name == "certify") sub->add_option("--section", o.section, "section index j");
        if (name == "tennis") {
            sub->add_option("--k", o.k, "period height")->required();
            sub->add_option("--l", o.l, "period width")->required();
            sub->add_flag("--product", o.product, "use the product formula (section 0 only)");
        }
        if (name == "certify") {
            sub->add_option("--dz", o.dz, "largest z-degree tried");
            sub->add_option("--dy", o.dy, "largest y-degree tried");
        }
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        throw;
    } catch (const CLI::ParseError& e) {
        throw Error(Errc::ParseError, e.what());
    }

    CommandRequest r;
    r.subcommand = app.get_subcommands().front()->get_name();
    r.n = o.n;
    r.format = o.format == "csv" ? Format::Csv : Format::Json;
    r.oracle = o.oracle;
    r.x = o.x;
    r.section = o.section;
    r.k = o.k;
    r.l = o.l;
    r.dz = o.dz;
    r.dy = o.dy;
    r.product = o.product;
    r.meta_path = o.meta;

    int specs = !o.boundary.empty() + !o.tennis.empty() + !o.arith.empty() + !o.staircase.empty();
    if (specs > 1) throw Error(Errc::ParseError, "give at most one of --boundary, --tennis, --arith, --staircase");
    if (!o.boundary.empty()) r.boundary = parse_boundary(o.boundary);
    if (!o.tennis.empty()) {
        auto [k, l] = detail::parse_pair(o.tennis, "--tennis");
        r.boundary = make_tennis(k, l);
    }
    if (!o.arith.empty()) {
        r.arith = detail::parse_pair(o.arith, "--arith");
        r.boundary = make_arithmetic(r.arith->first, r.arith->second);
    }
    if (!o.staircase.empty()) r.boundary = make_staircase(parse_rational(o.staircase));
    const bool needs_boundary = r.subcommand != "rect" && r.subcommand != "tennis";
    if (needs_boundary && !r.boundary) throw Error(Errc::ParseError, r.subcommand + " needs a boundary");
    if (!o.shape.empty()) {
        auto [a, b] = detail::parse_pair(o.shape, "--shape");
        r.shape = StepShape{a, b};
    }
    if (o.sigma != "symbolic") r.sigma = parse_rational(o.sigma);
    return r;
}

namespace detail {

inline Json sigma_value(const SigmaPoly& p, const std::optional<Rational>& sigma) {
    if (sigma) return to_json(p.evaluate(*sigma));
    return to_json(p);
}

inline std::string csv_cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_cell(v[i]);
        return s;
    }
    return v.dump();
}

// Renders {"values": [...]} or {"sections": [[...]...]} documents as CSV.
inline std::string render(const Json& doc, Format f) {
    if (f == Format::Json) return doc.dump() + "\n";
    std::string out;
    if (doc.contains("values")) {
        out = "n,value\n";
        const auto& v = doc.at("values");
        for (std::size_t i = 0; i < v.size(); ++i) out += std::to_string(i) + "," + csv_cell(v[i]) + "\n";
    } else if (doc.contains("series")) {
        out = "q,value\n";
        const auto& v = doc.at("series");
        for (std::size_t i = 0; i < v.size(); ++i) out += std::to_string(i) + "," + csv_cell(v[i]) + "\n";
    } else if (doc.contains("sections")) {
        out = "j,q,value\n";
        const auto& s = doc.at("sections");
        for (std::size_t j = 0; j < s.size(); ++j)
            for (std::size_t q = 0; q < s[j].size(); ++q) out += std::to_string(j) + "," + std::to_string(q) + "," + csv_cell(s[j][q]) + "\n";
    } else {
        out = "key,value\n";
        for (auto it = doc.begin(); it != doc.end(); ++it) out += it.key() + "," + csv_cell(it.value()) + "\n";
    }
    return out;
}

inline Json shape_json(const std::optional<StepShape>& s) {
    if (!s) return nullptr;
    return Json::array({s->a, s->b});
}

inline Json sigma_json(const std::optional<Rational>& s) { return s ? Json(to_string(*s)) : Json("symbolic"); }

inline Rational numeric_sigma(const CommandRequest& r) {
    if (!r.shape) return Rational(1);
    if (!r.sigma) throw Error(Errc::PreconditionViolated, r.subcommand + " needs a numeric --sigma with --shape");
    return *r.sigma;
}

// Counts as rationals (sigma specialized), for the converter and certifier.
inline std::vector<Rational> numeric_counts(const CommandRequest& r, std::size_t max_n) {
    std::vector<Rational> out;
    if (r.shape) {
        const Rational s = numeric_sigma(r);
        for (const auto& p : sp_recursion(*r.boundary, *r.shape, max_n).values) out.push_back(p.evaluate(s));
    } else {
        for (const auto& v : lp_recursion(*r.boundary, max_n).values) out.emplace_back(v);
    }
    return out;
}

inline Json cmd_count(const CommandRequest& r) {
    const Boundary& b = *r.boundary;
    Json values = Json::array();
    if (!r.shape) {
        auto lp = lp_recursion(b, r.n).values;
        for (std::size_t i = 0; i < lp.size(); ++i) {
            if (r.oracle && count_lp_dp(b, i) != lp[i])
                throw Error(Errc::OracleMismatch, "recursion disagrees with the DP at n = " + std::to_string(i), static_cast<std::int64_t>(i));
            values.push_back(to_json(lp[i]));
        }
        return Json{{"kind", "lattice"}, {"boundary", to_json(b)}, {"values", values}};
    }
    auto sp = sp_recursion(b, *r.shape, r.n).values;
    for (std::size_t i = 0; i < sp.size(); ++i) {
        if (r.oracle && !(count_sp_dp(b, *r.shape, i) == sp[i]))
            throw Error(Errc::OracleMismatch, "recursion disagrees with the DP at n = " + std::to_string(i), static_cast<std::int64_t>(i));
        values.push_back(sigma_value(sp[i], r.sigma));
    }
    return Json{{"kind", "ab_path"}, {"boundary", to_json(b)}, {"shape", shape_json(r.shape)}, {"sigma", sigma_json(r.sigma)}, {"values", values}};
}

inline Json cmd_rect(const CommandRequest& r) {
    Json values = Json::array();
    for (std::size_t i = 0; i <= r.n; ++i) {
        if (r.shape) values.push_back(sigma_value(count_rect_ab(*r.shape, r.x, i), r.sigma));
        else values.push_back(to_json(count_rect_lattice(r.x, i)));
    }
    return Json{{"kind", r.shape ? "rect_ab" : "rect_lattice"}, {"x", r.x}, {"shape", shape_json(r.shape)}, {"values", values}};
}

inline Json cmd_appell(const CommandRequest& r) {
    const std::size_t order = appell_residual(*r.boundary, r.shape, r.n);
    return Json{{"boundary", to_json(*r.boundary)}, {"shape", shape_json(r.shape)}, {"ok", true}, {"order", order}};
}

inline Json sections_doc(const SectionGF& sg, const std::optional<std::size_t>& section) {
    Json doc{{"boundary", to_json(sg.boundary)}, {"k", sg.sections.size()}};
    Json prefix = Json::array();
    for (const auto& c : sg.prefix_counts) prefix.push_back(to_json(c));
    doc["prefix_counts"] = prefix;
    if (section) {
        if (*section >= sg.sections.size()) throw Error(Errc::PreconditionViolated, "section index out of range");
        doc["section"] = *section;
        doc["series"] = to_json(sg.sections[*section]);
    } else {
        Json all = Json::array();
        for (const auto& s : sg.sections) all.push_back(to_json(s));
        doc["sections"] = all;
    }
    doc["det_valuation"] = sg.diagnostics.det_valuation;
    doc["vandermonde_leading"] = sg.diagnostics.vandermonde_leading;
    return doc;
}

inline Json cmd_sections(const CommandRequest& r) {
    auto sg = section_gfs(*r.boundary, r.shape, numeric_sigma(r), r.n);
    if (r.oracle) {
        const std::size_t k = sg.sections.size(), rr = sg.prefix_length;
        auto counts = numeric_counts(r, rr + k * (r.n + 1));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t q = 0; q <= r.n; ++q)
                if (sg.sections[j][q] != counts[rr + j + k * q])
                    throw Error(Errc::OracleMismatch, "section " + std::to_string(j) + " disagrees with the recursion", static_cast<std::int64_t>(q));
    }
    return sections_doc(sg, r.section);
}

inline Json cmd_tennis(const CommandRequest& r) {
    const std::size_t j = r.section.value_or(0);
    if (r.k < 1 || r.l < 1) throw Error(Errc::InvalidBoundary, "tennis boundary needs k, l >= 1");
    if (j >= r.k) throw Error(Errc::PreconditionViolated, "section index out of range");
    TruncatedSeries<Rational> series = TruncatedSeries<Rational>::zero(0);
    if (r.product) {
        if (j != 0) throw Error(Errc::PreconditionViolated, "the product formula gives section 0 only");
        series = tennis_q0_product(r.k, r.l, r.n);
    } else {
        series = section_gfs(make_tennis(r.k, r.l), std::nullopt, Rational(1), r.n).sections[j];
    }
    if (r.oracle) {
        Boundary b = make_tennis(r.k, r.l);
        for (std::size_t q = 0; q <= r.n; ++q)
            if (series[q] != Rational(count_lp_dp(b, 1 + j + r.k * q)))
                throw Error(Errc::OracleMismatch, "tennis section disagrees with the DP", static_cast<std::int64_t>(q));
    }
    return Json{{"k", r.k}, {"l", r.l}, {"section", j}, {"series", to_json(series)}};
}

inline Json cmd_closed_form(const CommandRequest& r) {
    if (!r.arith) throw Error(Errc::PreconditionViolated, "closed-form needs --arith c,d");
    const auto [c, d] = *r.arith;
    Json values = Json::array();
    if (!r.shape) {
        for (std::size_t i = 0; i <= r.n; ++i) values.push_back(to_json(lp_arith_closed(c, d, i)));
        if (r.oracle) {
            auto lp = lp_recursion(*r.boundary, r.n).values;
            for (std::size_t i = 0; i <= r.n; ++i)
                if (lp_arith_closed(c, d, i) != lp[i])
                    throw Error(Errc::OracleMismatch, "closed form disagrees with the recursion", static_cast<std::int64_t>(i));
        }
        return Json{{"kind", "lattice"}, {"c", c}, {"d", d}, {"values", values}};
    }
    if (r.shape->a != 1) throw Error(Errc::UnsupportedShape, "closed forms cover shapes (1,b)");
    std::vector<SigmaPoly> sp;
    for (std::size_t i = 0; i <= r.n; ++i) sp.push_back(sp1b_closed(r.shape->b, c, d, i));
    if (r.oracle) {
        auto rec = sp_recursion(*r.boundary, *r.shape, r.n).values;
        for (std::size_t i = 0; i <= r.n; ++i)
            if (!(rec[i] == sp[i])) throw Error(Errc::OracleMismatch, "closed form disagrees with the recursion", static_cast<std::int64_t>(i));
    }
    for (const auto& p : sp) values.push_back(sigma_value(p, r.sigma));
    return Json{{"kind", "ab_path"}, {"c", c}, {"d", d}, {"shape", shape_json(r.shape)}, {"sigma", sigma_json(r.sigma)}, {"values", values}};
}

inline Json cmd_parking(const CommandRequest& r) {
    auto p = parking_recursion(*r.boundary, r.n).values;
    Json values = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (r.oracle && count_parking_bf(*r.boundary, i) != p[i])
            throw Error(Errc::OracleMismatch, "recursion disagrees with enumeration", static_cast<std::int64_t>(i));
        values.push_back(to_json(p[i]));
    }
    return Json{{"kind", "parking"}, {"boundary", to_json(*r.boundary)}, {"values", values}};
}

inline Json cmd_certify(const CommandRequest& r) {
    const std::size_t need = 2 * guess_order(r.dz, r.dy);
    const Boundary& b = *r.boundary;
    const std::size_t k = b.height(), rr = b.prefix_length();
    std::vector<Rational> target;
    if (r.section) {
        if (*r.section >= k) throw Error(Errc::PreconditionViolated, "section index out of range");
        auto counts = numeric_counts(r, rr + *r.section + k * need);
        for (std::size_t q = 0; q <= need; ++q) target.push_back(counts[rr + *r.section + k * q]);
    } else {
        target = numeric_counts(r, need);
    }
    auto cand = find_annihilator(TruncatedSeries<Rational>(std::move(target)), r.dz, r.dy);
    if (!cand) throw Error(Errc::InsufficientOrder, "no annihilating polynomial within the degree budget");
    return to_json(*cand);
}

inline Json cmd_decompose(const CommandRequest& r) {
    const bool ok = decomposition_check(*r.boundary, r.shape, r.x, r.n);
    if (!ok) throw Error(Errc::OracleMismatch, "rectangle decomposition fails");
    return Json{{"boundary", to_json(*r.boundary)}, {"shape", shape_json(r.shape)}, {"x", r.x}, {"n", r.n}, {"ok", true}};
}

}  // namespace detail

/// Runs a parsed request. Errors become a nonzero status with a JSON
/// error object as the document.
inline Outcome execute(const CommandRequest& r) {
    using Handler = std::function<Json(const CommandRequest&)>;
    const std::vector<std::pair<std::string, Handler>> table{
        {"count", detail::cmd_count},       {"rect", detail::cmd_rect},         {"appell-check", detail::cmd_appell},
        {"sections", detail::cmd_sections}, {"tennis", detail::cmd_tennis},     {"closed-form", detail::cmd_closed_form},
        {"parking", detail::cmd_parking},   {"certify", detail::cmd_certify},   {"decompose-check", detail::cmd_decompose}};
    try {
        for (const auto& [name, fn] : table)
            if (name == r.subcommand) {
                Json doc = fn(r);
                if (!r.meta_path.empty()) {
                    std::ofstream meta(r.meta_path);
                    meta << Json{{"tool", "latpath"}, {"version", kVersion}, {"subcommand", r.subcommand}}.dump() << "\n";
                }
                return {0, detail::render(doc, r.format)};
            }
        throw Error(Errc::ParseError, "unknown subcommand " + r.subcommand);
    } catch (const Error& e) {
        Json err{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}};
        if (e.index()) err["index"] = *e.index();
        return {exit_status(e.code()), err.dump() + "\n"};
    }
}

/// Parses and executes; the document goes to `out` on success and to `err`
/// on failure.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandRequest req;
    try {
        req = parse(args);
    } catch (const CLI::CallForHelp&) {
        CLI::App app{"latpath"};
        out << "usage: latpath <count|rect|appell-check|sections|tennis|closed-form|parking|certify|decompose-check> [options]\n"
               "run 'latpath <subcommand> --help' for subcommand options\n";
        return 0;
    } catch (const Error& e) {
        err << Json{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
        return exit_status(e.code());
    }
    Outcome o = execute(req);
    (o.status == 0 ? out : err) << o.document;
    return o.status;
}

}  // namespace latpath::cli

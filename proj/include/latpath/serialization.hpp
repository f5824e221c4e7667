#pragma once

// JSON interchange. Integers and rationals travel as decimal strings;
// sigma-polynomials as coefficient arrays, lowest degree first.

#include <string>
#include <vector>

#include <json.hpp>

#include "boundary.hpp"
#include "certifier.hpp"
#include "ramified_series.hpp"
#include "sigma_poly.hpp"
#include "truncated_series.hpp"

namespace latpath {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& z) { return z.get_str(); }
inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const SigmaPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coefficients()) a.push_back(c.get_str());
    return a;
}

inline Json to_json(const CycloNum& c) {
    Json a = Json::array();
    for (const auto& x : c.residue()) a.push_back(to_string(x));
    return a;
}

template <Coefficient R>
Json to_json(const TruncatedSeries<R>& s) {
    Json a = Json::array();
    for (const auto& c : s.coefficients()) a.push_back(to_json(c));
    return a;
}

template <Coefficient R>
Json to_json(const RamifiedSeries<R>& s) {
    Json a = Json::array();
    for (const auto& c : s.coefficients()) a.push_back(to_json(c));
    return Json{{"ramification", s.ramification()}, {"pole_order", s.pole_order()}, {"coefficients", a}};
}

inline Json to_json(const Boundary& b) { return Json{{"prefix", b.prefix()}, {"period", b.period()}}; }

inline Json to_json(const AnnihilatorCandidate& c) {
    Json rows = Json::array();
    for (const auto& row : c.coeffs) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        rows.push_back(r);
    }
    return Json{{"dz", c.dz}, {"dy", c.dy}, {"coeffs", rows}, {"verified_order", c.verified_order}};
}

namespace detail {

inline std::vector<Term> term_array(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw Error(Errc::ParseError, std::string("boundary needs an array \"") + key + "\"");
    std::vector<Term> out;
    for (const auto& x : j.at(key)) {
        if (!x.is_number_integer()) throw Error(Errc::ParseError, std::string("\"") + key + "\" must hold integers");
        out.push_back(x.get<Term>());
    }
    return out;
}

}  // namespace detail

inline Boundary boundary_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Errc::ParseError, "boundary must be a JSON object");
    return Boundary(detail::term_array(j, "prefix"), detail::term_array(j, "period"));
}

inline Boundary parse_boundary(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::ParseError, std::string("invalid boundary JSON: ") + e.what());
    }
    return boundary_from_json(j);
}

inline AnnihilatorCandidate certificate_from_json(const Json& j) {
    try {
        AnnihilatorCandidate c;
        c.dz = j.at("dz").get<std::size_t>();
        c.dy = j.at("dy").get<std::size_t>();
        c.verified_order = j.at("verified_order").get<std::size_t>();
        for (const auto& row : j.at("coeffs")) {
            std::vector<Integer> r;
            for (const auto& x : row) r.push_back(parse_integer(x.get<std::string>()));
            if (r.size() != c.dy + 1) throw Error(Errc::ParseError, "certificate row has the wrong length");
            c.coeffs.push_back(std::move(r));
        }
        if (c.coeffs.size() != c.dz + 1) throw Error(Errc::ParseError, "certificate has the wrong number of rows");
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("invalid certificate JSON: ") + e.what());
    }
}

}  // namespace latpath

#pragma once

#include <json.hpp>

#include <string>

#include "casimir/central_polys.hpp"
#include "casimir/render.hpp"

// JSON serialization of engine objects. Every number is emitted as an exact
// rational string ("p/q", integers as "p"); no value ever passes through
// floating point.

namespace casimir {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson uea_json(const UEAElement& x) {
    OrderedJson terms = OrderedJson::array();
    for (const auto& [mono, c] : x.terms()) {
        OrderedJson factors = OrderedJson::array();
        for (const auto& [idx, pow] : mono) {
            auto [i, j] = pbw_gen_pair(x.rank(), idx);
            factors.push_back({{"gen", {i, j}}, {"power", pow}});
        }
        terms.push_back({{"monomial", factors}, {"value", rat_str(c)}});
    }
    return {{"display", uea_str(x)}, {"terms", terms}};
}

inline OrderedJson upoly_json(const UPoly& p) {
    OrderedJson coeffs = OrderedJson::array();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        coeffs.push_back({{"degree", it->first}, {"coefficient", uea_json(it->second)}});
    return {{"display", upoly_str(p)}, {"coefficients", coeffs}};
}

inline OrderedJson weight_poly_json(const WeightPolynomial& p) {
    OrderedJson terms = OrderedJson::array();
    for (const auto& [expo, c] : p.terms())
        terms.push_back({{"exponents", expo}, {"value", rat_str(c)}});
    return {{"display", p.to_string()}, {"terms", terms}};
}

inline OrderedJson hc_poly_json(const HCImagePoly& p) {
    OrderedJson coeffs = OrderedJson::array();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        coeffs.push_back(
            {{"degree", it->first}, {"coefficient", weight_poly_json(it->second)}});
    return {{"display", hc_poly_str(p)}, {"coefficients", coeffs}};
}

// Matrix of constant-in-u entries renders one string per entry; a genuinely
// u-dependent entry falls back to the polynomial rendering.
inline OrderedJson uea_matrix_json(const UEAMatrix& m) {
    OrderedJson rows = OrderedJson::array();
    for (int r = 0; r < m.rows(); ++r) {
        OrderedJson row = OrderedJson::array();
        for (int c = 0; c < m.cols(); ++c) {
            const UPoly& e = m.at(r, c);
            if (e.is_zero())
                row.push_back("0");
            else if (e.degree() == 0)
                row.push_back(uea_str(*e.coeff(0)));
            else
                row.push_back(upoly_str(e));
        }
        rows.push_back(row);
    }
    return rows;
}

inline OrderedJson central_poly_json(const CentralPolynomial& cp) {
    OrderedJson centrality = OrderedJson::object();
    for (const auto& [deg, ok] : cp.centrality) centrality[std::to_string(deg)] = ok;
    return {{"lambda", cp.weight.comps()},
            {"kind", cp.kind == CentralKind::ShiftedDeterminant ? "shifted_determinant"
                                                                : "characteristic"},
            {"polynomial", upoly_json(cp.poly)},
            {"centrality", centrality},
            {"all_central", cp.all_central()}};
}

}  // namespace casimir

#pragma once

#include <string>

#include "casimir/noncomm_linalg.hpp"
#include "casimir/pbw.hpp"
#include "casimir/weight_poly.hpp"

// Plain-text rendering of engine objects. Numbers always appear as exact
// rational strings; nothing here touches floating point.

namespace casimir {

// "E11*E21^2" style monomial rendering; the empty monomial renders as "1".
inline std::string mono_str(int n, const Mono& mono) {
    if (mono.empty()) return "1";
    std::string out;
    for (const auto& [idx, pow] : mono) {
        if (!out.empty()) out += "*";
        auto [i, j] = pbw_gen_pair(n, idx);
        out += "E" + std::to_string(i) + std::to_string(j);
        if (pow > 1) out += "^" + std::to_string(pow);
    }
    return out;
}

inline std::string uea_str(const UEAElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [mono, c] : x.terms()) {
        Rat a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (mono.empty())
            out += rat_str(a);
        else {
            if (a != 1) out += rat_str(a) + "*";
            out += mono_str(x.rank(), mono);
        }
    }
    return out;
}

// "(c2)*u^2 + (c1)*u + (c0)" with ring coefficients; single-term nonnegative
// coefficients drop the parentheses.
namespace detail {
template <class CoeffStr, class P>
std::string poly_str(const P& p, CoeffStr&& coeff_str) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        const auto& [deg, c] = *it;
        if (!out.empty()) out += " + ";
        std::string cs = coeff_str(c);
        bool bare = c.terms().size() == 1 && cs.find(' ') == std::string::npos &&
                    cs[0] != '-';
        if (deg == 0) {
            out += bare ? cs : "(" + cs + ")";
        } else {
            std::string up = deg == 1 ? "u" : "u^" + std::to_string(deg);
            if (cs == "1")
                out += up;
            else
                out += (bare ? cs : "(" + cs + ")") + "*" + up;
        }
    }
    return out;
}
}  // namespace detail

inline std::string upoly_str(const UPoly& p) {
    return detail::poly_str(p, [](const UEAElement& c) { return uea_str(c); });
}

inline std::string hc_poly_str(const HCImagePoly& p) {
    return detail::poly_str(p, [](const WeightPolynomial& c) { return c.to_string(); });
}

}  // namespace casimir

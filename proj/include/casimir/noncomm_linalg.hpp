#pragma once

#include <vector>

#include "casimir/pbw.hpp"
#include "casimir/poly.hpp"
#include "casimir/ringmat.hpp"

namespace casimir {

// Polynomials in one central variable u with enveloping-algebra coefficients.
using UPoly = Poly<UEAElement>;
using UEAMatrix = RingMat<UPoly>;

inline UPoly upoly_of(const UEAElement& x) {
    return x.term_count() == 0 ? UPoly() : UPoly::monomial(0, x);
}
inline UPoly upoly_u(int n) { return UPoly::monomial(1, UEAElement::constant(n, Rat(1))); }
inline UPoly upoly_const(int n, const Rat& c) {
    return c == 0 ? UPoly() : UPoly::monomial(0, UEAElement::constant(n, c));
}

// Column determinant: sum over permutations with the factor for column k in
// the k-th position of the product. Entries need not commute.
UPoly column_det(const UEAMatrix& a);

// Column expansion drawing the k-th factor (column k) from mats[k]. With all
// matrices equal this is the column determinant.
UPoly alpha_det(const std::vector<UEAMatrix>& mats);

// Determinant of the tridiagonal matrix with diagonal a_m..a_0 (top-left to
// bottom-right), superdiagonal b_m..b_1 and subdiagonal c_m..c_1 (top to
// bottom). Arguments are indexed from the bottom right: a = {a_0,..,a_m},
// b = {b_1,..,b_m}, c = {c_1,..,c_m}. Multiplications keep the later rows on
// the right, matching the column determinant of the same matrix.
template <class R>
R tridiag_det(const std::vector<R>& a, const std::vector<R>& b, const std::vector<R>& c) {
    if (a.empty() || b.size() + 1 != a.size() || c.size() != b.size())
        throw std::invalid_argument("tridiagonal data sizes mismatch");
    R prev = a[0];
    if (a.size() == 1) return prev;
    R cur = a[1] * prev - c[0] * b[0];
    for (std::size_t k = 2; k < a.size(); ++k) {
        R next = a[k] * cur - c[k - 1] * (b[k - 1] * prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace casimir

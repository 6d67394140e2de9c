#pragma once

#include <vector>

#include "casimir/central_polys.hpp"
#include "casimir/irreps.hpp"
#include "casimir/noncomm_linalg.hpp"
#include "casimir/poly.hpp"
#include "casimir/tensorop.hpp"

namespace casimir {

// Tensor operators whose entries are u-polynomials with enveloping-algebra
// coefficients: the legs carry numeric slots of C^n, the symbol algebra rides
// in the entries. Composition never mixes the two.
using MixedOperator = SparseOp<UPoly>;

// Polynomials in a second central variable v over u-polynomials, for the RTT
// relation. The outer variable is v, the inner u.
using BiPoly = Poly<UPoly>;

template <>
inline RatPoly ring_one<RatPoly>() { return RatPoly::constant(Rat(1)); }

// sum_ij E_ij (x) e_ij with the matrix unit acting on the given leg (0-based):
// entry (r, c) is E_{a+1, b+1} for row digit a and column digit b at that leg,
// all other digits equal.
MixedOperator mixed_s(int n, int legs, int leg);

// sum_ij E_ij (x) e_ji, the split-Casimir form with swapped matrix indices:
// entry (r, c) is E_{b+1, a+1}.
MixedOperator mixed_p(int n, int legs, int leg);

// The ordered product ((S_1 - u - c_1) ... (S_M - u - c_M)) (id (x) F_lambda)
// on M = |shape| legs, S_k the split form on leg k-1 and c_k the contents of
// the row-filled tableau. The shape must be a partition with at most n rows
// and at least one box.
MixedOperator s_lambda(const std::vector<long>& shape, int n);

// Trace of s_lambda over all legs. Every u-coefficient must pass the
// centrality test; NonCentralError otherwise.
UPoly capelli_poly(const std::vector<long>& shape, int n);

// Fusion identity on M+1 numeric legs, leg 0 auxiliary:
//   prod_k (1 - P_{0,k}/(u - c_k)) F  ==  (1 - sum_k P_{0,k}/u) F
// compared exactly after cross-multiplication by u prod_k (u - c_k).
bool fusion_check(const std::vector<long>& shape, int n);

// The braided Casimir as the compressed coproduct image: the matrix of
// (sum_k P_k) (id (x) F_lambda) on the symmetrizer-image basis must equal
// braided_casimir of the tensor-power representation entry by entry.
bool coproduct_casimir_check(const std::vector<long>& shape, int n);

// Composition with X -> -X^T, realizing the dual representation on the same
// index set: gen(i, j) = -rep.gen(i, j)^T, basis weights negate in place.
Representation transpose_dual(const Representation& rep);

struct TransposeRelation {
    bool intertwiner_found = false;   // transpose_dual(V_lambda) ~ V_{lambda*}
    bool antidiagonal_signs = false;  // the intertwiner is the alternating index reversal
    bool conjugate_holds = false;     // h (Omega^T + u) = (u - Omega*) h
};

// Relates the transposed braided Casimir of lambda to the braided Casimir of
// the reversed negation lambda*: an intertwiner h from transpose_dual of the
// tensor-power representation to the reference realization of lambda* is
// solved for exactly, and h (Omega^T + u) = (u - Omega*) h is checked. At
// rank 2 the reference is the closed tridiagonal form and h is expected to be
// the antidiagonal sign matrix; at higher rank the shape of h is reported
// without being asserted.
TransposeRelation transpose_relation_check(const std::vector<long>& shape, int n);

// Dual-side product formula on an auxiliary numeric slot, checked exactly at
// two levels after cross-multiplication:
//   tensor:     (u - sum_k S_{0k}) F prod_k (u - c_k)
//                   == u (u - c_M - S_{0M}) ... (u - c_1 - S_{01}) F
//   compressed: (Omega* + u) prod_k (u - c_k) == (-1)^M u [reversed product
//               compressed to aux (x) image]
// with Omega* the braided Casimir of the dual-star representation realized on
// the auxiliary slot. Transposing that slot is an antiautomorphism, so the
// product order is reversed relative to the direct fusion identity. At rank 2
// the transpose relation must also hold.
bool omega_star_check(const std::vector<long>& shape, int n);

// Trace formula for the shifted determinant at rank 2: lambda has two
// components, m the spread and M the box count of the trimmed shape. The
// right side lives on (m+1)M legs split into m+1 copies of the image space;
// the factor for copy s is the sum of the copy's S couplings compressed by
// that copy's symmetrizer, shifted by u - m + s, and the ordered product of
// the factors is traced against F^{(x)(m+1)} times the signed average of
// whole-copy permutations. Polynomial identity, compared exactly.
bool plethysm_check(const DominantWeight& lambda);

// Evaluation image of the quantum determinant: the column expansion drawing
// factor k from Omega + (u - n + k) must reproduce the shifted determinant of
// the vector representation; for n <= 3 the flip u -> -u is also checked at
// the Harish-Chandra level against the interpolated characteristic polynomial
// (the built-in sample grids stop at rank 3).
bool qdet_ev_check(int n);

// Which evaluation image of the generating matrix to use: entries of u T(u)
// are delta_ij u + E_ij (Ev), delta_ij u - E_ji (EvCheck), or delta_ij u
// (Unit, the trivial image).
enum class EvalMap { Ev, EvCheck, Unit };

// Defining exchange relation on two legs, cross-multiplied by u v (u - v):
//   ((u-v) - P) (u T_1) (v T_2) - (v T_2) (u T_1) ((u-v) - P)
// normal-ordered entry by entry.
SparseOp<BiPoly> rtt_residual(int n, EvalMap map);

bool rtt_check(int n, EvalMap map);

}  // namespace casimir

#include "casimir/capelli.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "casimir/pbw.hpp"

namespace casimir {

namespace {

std::vector<long> trimmed_shape(const std::vector<long>& shape, int n) {
    std::vector<long> t = shape;
    while (!t.empty() && t.back() == 0) t.pop_back();
    if (t.empty()) throw std::invalid_argument("shape has no boxes");
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] < 0 || (i + 1 < t.size() && t[i] < t[i + 1]))
            throw std::invalid_argument("shape is not a partition");
    if (static_cast<int>(t.size()) > n) throw std::invalid_argument("shape has more rows than the rank");
    return t;
}

int box_count(const std::vector<long>& t) {
    return static_cast<int>(std::accumulate(t.begin(), t.end(), 0L));
}

DominantWeight padded_weight(const std::vector<long>& t, int n) {
    std::vector<long> c = t;
    c.resize(n, 0);
    return DominantWeight(std::move(c));
}

// u + c
UPoly upoly_shift(int n, const Rat& c) { return upoly_u(n) + upoly_const(n, c); }

UPoly upoly_lift(const RatPoly& p, int n) {
    UPoly q;
    for (const auto& [d, c] : p.coeffs()) q.add_term(d, UEAElement::constant(n, c));
    return q;
}

MixedOperator lift_to_mixed(const SparseOp<Rat>& a) {
    int n = a.rank_n();
    return map_entries<UPoly>(a, [n](const Rat& v) { return upoly_const(n, v); });
}

SparseOp<RatPoly> lift_to_ratpoly(const SparseOp<Rat>& a) {
    return map_entries<RatPoly>(a, [](const Rat& v) { return RatPoly::constant(v); });
}

SparseOp<BiPoly> lift_to_bipoly(const SparseOp<Rat>& a) {
    int n = a.rank_n();
    return map_entries<BiPoly>(a, [n](const Rat& v) { return BiPoly::constant(upoly_const(n, v)); });
}

// Matrix-unit coupling sum_ij e_ij (x) e_ij between numeric legs a and b.
SparseOp<Rat> s_coupling(int n, int legs, int a, int b) {
    SparseOp<Rat> op(n, legs);
    TIdx sa = op.stride(a);
    TIdx sb = op.stride(b);
    for (TIdx r = 0; r < op.dim(); ++r) {
        int da = op.digit(r, a);
        if (da != op.digit(r, b)) continue;
        TIdx base = r - static_cast<TIdx>(da) * sa - static_cast<TIdx>(da) * sb;
        for (int j = 0; j < n; ++j)
            op.add(r, base + static_cast<TIdx>(j) * sa + static_cast<TIdx>(j) * sb, Rat(1));
    }
    return op;
}

// Realize a matrix with entries linear in the generators on aux (x) space:
// the unit acts as the identity on the auxiliary slot, E_ij as the matrix
// unit e_ij. Entries of higher PBW degree have no single-slot realization.
RingMat<RatPoly> realize_on_aux(const UEAMatrix& mat, int n) {
    int d = mat.rows();
    RingMat<RatPoly> out(n * d, n * d);
    for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s)
            for (const auto& [deg, elem] : mat.at(r, s).coeffs())
                for (const auto& [mono, c] : elem.terms()) {
                    if (mono.empty()) {
                        for (int i = 0; i < n; ++i)
                            out.at(i * d + r, i * d + s) =
                                out.at(i * d + r, i * d + s) + RatPoly::monomial(deg, c);
                    } else if (mono.size() == 1 && mono[0].second == 1) {
                        auto [i, j] = pbw_gen_pair(n, mono[0].first);
                        out.at((i - 1) * d + r, (j - 1) * d + s) =
                            out.at((i - 1) * d + r, (j - 1) * d + s) + RatPoly::monomial(deg, c);
                    } else {
                        throw std::invalid_argument("entry is not linear in the generators");
                    }
                }
    return out;
}

// tr(a * b) without forming the product.
UPoly trace_product(const MixedOperator& a, const SparseOp<Rat>& b) {
    UPoly t;
    for (const auto& [r, row] : a.entries())
        for (const auto& [k, v] : row)
            if (const Rat* w = b.entry(k, r)) t = t + v.scale(*w);
    return t;
}

// Signed average of the block permutations: blocks of M consecutive legs are
// permuted whole, weighted by the sign of the block permutation.
SparseOp<Rat> block_antisymmetrizer(int n, int blocks, int m_legs) {
    SparseOp<Rat> acc(n, blocks * m_legs);
    long count = 0;
    for_each_permutation(blocks, [&](const std::vector<int>& sigma, int sign) {
        std::vector<int> legmap(static_cast<std::size_t>(blocks) * m_legs);
        for (int s = 0; s < blocks; ++s)
            for (int t = 0; t < m_legs; ++t) legmap[s * m_legs + t] = sigma[s] * m_legs + t;
        acc = acc + SparseOp<Rat>::leg_permutation(n, legmap).scale(Rat(sign));
        ++count;
    });
    return acc.scale(Rat(1) / Rat(count));
}

}  // namespace

MixedOperator mixed_s(int n, int legs, int leg) {
    MixedOperator a(n, legs);
    TIdx stride = a.stride(leg);
    for (TIdx r = 0; r < a.dim(); ++r) {
        int row_digit = a.digit(r, leg);
        TIdx base = r - static_cast<TIdx>(row_digit) * stride;
        for (int b = 0; b < n; ++b)
            a.add(r, base + static_cast<TIdx>(b) * stride,
                  upoly_of(UEAElement::generator(n, row_digit + 1, b + 1)));
    }
    return a;
}

MixedOperator mixed_p(int n, int legs, int leg) {
    MixedOperator a(n, legs);
    TIdx stride = a.stride(leg);
    for (TIdx r = 0; r < a.dim(); ++r) {
        int row_digit = a.digit(r, leg);
        TIdx base = r - static_cast<TIdx>(row_digit) * stride;
        for (int b = 0; b < n; ++b)
            a.add(r, base + static_cast<TIdx>(b) * stride,
                  upoly_of(UEAElement::generator(n, b + 1, row_digit + 1)));
    }
    return a;
}

MixedOperator s_lambda(const std::vector<long>& shape, int n) {
    std::vector<long> t = trimmed_shape(shape, n);
    int boxes = box_count(t);
    std::vector<long> contents = tableau_contents(t);
    std::optional<MixedOperator> acc;
    for (int k = 0; k < boxes; ++k) {
        MixedOperator fac =
            mixed_s(n, boxes, k) - MixedOperator::scalar_op(n, boxes, upoly_shift(n, Rat(contents[k])));
        acc = acc ? *acc * fac : fac;
    }
    return *acc * lift_to_mixed(young_symmetrizer(t, n));
}

UPoly capelli_poly(const std::vector<long>& shape, int n) {
    UPoly tr = s_lambda(shape, n).trace();
    for (const auto& [deg, coeff] : tr.coeffs())
        if (!is_central(coeff))
            throw NonCentralError("capelli coefficient at degree " + std::to_string(deg) +
                                  " is not central");
    return tr;
}

bool fusion_check(const std::vector<long>& shape, int n) {
    std::vector<long> t = trimmed_shape(shape, n);
    int boxes = box_count(t);
    std::vector<long> contents = tableau_contents(t);
    int legs = boxes + 1;
    using POp = SparseOp<RatPoly>;
    RatPoly u = RatPoly::monomial(1, Rat(1));

    POp f = lift_to_ratpoly(lift_offset(young_symmetrizer(t, n), 1, 0));
    auto swap_aux = [&](int k) {
        std::vector<int> sigma(legs);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::swap(sigma[0], sigma[k]);
        return POp::leg_permutation(n, sigma);
    };

    POp lhs = POp::scalar_op(n, legs, u);
    for (int k = 1; k <= boxes; ++k)
        lhs = lhs * (POp::scalar_op(n, legs, u - RatPoly::constant(Rat(contents[k - 1]))) - swap_aux(k));
    lhs = lhs * f;

    POp swap_sum(n, legs);
    RatPoly denom = RatPoly::constant(Rat(1));
    for (int k = 1; k <= boxes; ++k) {
        swap_sum = swap_sum + swap_aux(k);
        denom = denom * (u - RatPoly::constant(Rat(contents[k - 1])));
    }
    POp rhs = (POp::scalar_op(n, legs, u) - swap_sum) * f * POp::scalar_op(n, legs, denom);
    return lhs == rhs;
}

bool coproduct_casimir_check(const std::vector<long>& shape, int n) {
    std::vector<long> t = trimmed_shape(shape, n);
    int boxes = box_count(t);
    DominantWeight lam = padded_weight(t, n);
    Representation rep = tensor_power_rep(lam, n);
    RatMat basis = young_image_basis(lam, n);
    RatMat linv = left_inverse(basis);

    MixedOperator swap_sum(n, boxes);
    for (int l = 0; l < boxes; ++l) swap_sum = swap_sum + mixed_p(n, boxes, l);
    MixedOperator op = swap_sum * lift_to_mixed(young_symmetrizer(t, n));
    std::optional<UEAMatrix> comp = compress_to_basis_ring(op, basis, linv);
    if (!comp) return false;
    return *comp == braided_casimir(rep);
}

Representation transpose_dual(const Representation& rep) {
    std::vector<long> star = rep.weight.comps();
    std::reverse(star.begin(), star.end());
    for (long& c : star) c = -c;
    Representation d{DominantWeight(std::move(star)), rep.n, rep.dim, {}, rep.basis_weights};
    for (auto& w : d.basis_weights)
        for (long& c : w) c = -c;
    for (const auto& [ij, m] : rep.matrices) d.matrices.emplace(ij, m.transpose().scale(Rat(-1)));
    return d;
}

TransposeRelation transpose_relation_check(const std::vector<long>& shape, int n) {
    std::vector<long> t = trimmed_shape(shape, n);
    DominantWeight lam = padded_weight(t, n);
    Representation rep = tensor_power_rep(lam, n);

    std::vector<long> star = lam.comps();
    std::reverse(star.begin(), star.end());
    for (long& c : star) c = -c;
    DominantWeight dual_weight(std::move(star));
    Representation ref = n == 2 ? gl2_rep(dual_weight) : build_rep(dual_weight, n);

    TransposeRelation out;
    std::optional<RatMat> h = solve_intertwiner(transpose_dual(rep), ref);
    if (!h) return out;
    out.intertwiner_found = true;

    int d = rep.dim;
    bool anti = true;
    const Rat& corner = h->at(0, d - 1);
    if (sgn(corner) == 0) anti = false;
    for (int i = 0; anti && i < d; ++i)
        for (int j = 0; anti && j < d; ++j) {
            if (j == d - 1 - i)
                anti = h->at(i, j) == (i % 2 ? -corner : corner);
            else
                anti = sgn(h->at(i, j)) == 0;
        }
    out.antidiagonal_signs = anti;

    UEAMatrix left = braided_casimir(rep).transpose();
    UEAMatrix right = braided_casimir(ref).scale(Rat(-1));
    for (int i = 0; i < d; ++i) {
        left.at(i, i) = left.at(i, i) + upoly_u(n);
        right.at(i, i) = right.at(i, i) + upoly_u(n);
    }
    out.conjugate_holds = mul(*h, left) == mul(right, *h);
    return out;
}

bool omega_star_check(const std::vector<long>& shape, int n) {
    std::vector<long> t = trimmed_shape(shape, n);
    int boxes = box_count(t);
    std::vector<long> contents = tableau_contents(t);
    int legs = boxes + 1;  // auxiliary slot is leg 0
    SparseOp<Rat> f = young_symmetrizer(t, n);
    SparseOp<RatPoly> fhat = lift_to_ratpoly(lift_offset(f, 1, 0));
    RatPoly u = RatPoly::monomial(1, Rat(1));
    auto sc = [&](const RatPoly& p) { return SparseOp<RatPoly>::scalar_op(n, legs, p); };
    auto coupling = [&](int k) { return lift_to_ratpoly(s_coupling(n, legs, 0, k + 1)); };
    RatPoly shifts = RatPoly::constant(Rat(1));
    for (long c : contents) shifts = shifts * (u - RatPoly::constant(Rat(c)));

    // Tensor level. Transposing the auxiliary slot of the fusion identity is
    // an antiautomorphism of that slot, so each P coupling becomes an S
    // coupling and the factor order reverses.
    SparseOp<RatPoly> s_sum(n, legs);
    for (int k = 0; k < boxes; ++k) s_sum = s_sum + coupling(k);
    SparseOp<RatPoly> lhs = (sc(u) - s_sum) * fhat * sc(shifts);
    SparseOp<RatPoly> rhs = sc(u);
    for (int k = boxes - 1; k >= 0; --k)
        rhs = rhs * (sc(u - RatPoly::constant(Rat(contents[k]))) - coupling(k));
    rhs = rhs * fhat;
    if (!(lhs == rhs)) return false;

    // Compressed level: the braided Casimir of the dual-star representation,
    // shifted by u, against the reversed product compressed to aux (x) image.
    DominantWeight lam = padded_weight(t, n);
    Representation star = dual_star(build_rep(lam, n));
    int d = star.dim;
    RingMat<RatPoly> left = realize_on_aux(braided_casimir(star), n);
    for (int q = 0; q < n * d; ++q) left.at(q, q) = left.at(q, q) + u;
    for (int r = 0; r < n * d; ++r)
        for (int s = 0; s < n * d; ++s) left.at(r, s) = left.at(r, s) * shifts;

    RatMat basis = young_image_basis(lam, n);
    RatMat bigbasis(static_cast<int>(fhat.dim()), n * d);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < basis.rows(); ++r)
            for (int s = 0; s < d; ++s)
                bigbasis.at(i * basis.rows() + r, i * d + s) = basis.at(r, s);
    RatMat biglinv = left_inverse(bigbasis);
    SparseOp<RatPoly> prod = sc(u.scale(boxes % 2 ? Rat(-1) : Rat(1)));
    for (int k = boxes - 1; k >= 0; --k)
        prod = prod * (coupling(k) - sc(u - RatPoly::constant(Rat(contents[k]))));
    prod = prod * fhat;
    RingMat<RatPoly> right = mul(biglinv, apply_dense(prod, bigbasis));
    if (!(left == right)) return false;

    if (n == 2) {
        TransposeRelation rel = transpose_relation_check(t, n);
        return rel.intertwiner_found && rel.antidiagonal_signs && rel.conjugate_holds;
    }
    return true;
}

bool plethysm_check(const DominantWeight& lambda) {
    if (lambda.n() != 2) throw std::invalid_argument("trace formula is rank-2 only");
    if (!lambda.is_partition()) throw std::invalid_argument("weight must be a partition");
    const int n = 2;
    std::vector<long> t = trimmed_shape(lambda.comps(), n);
    int boxes = box_count(t);
    int m = static_cast<int>(lambda.spread());
    int legs = (m + 1) * boxes;

    UPoly lhs = shifted_determinant(build_rep(lambda, n)).poly;

    // One factor per copy of the image space: the copy's S couplings
    // compressed by its own symmetrizer, plus the shift u - m + s. The
    // ordered product of the factors is traced against the tensor of all
    // symmetrizers times the signed average of whole-copy permutations.
    SparseOp<Rat> f = young_symmetrizer(t, n);
    std::optional<MixedOperator> acc;
    for (int s = 0; s <= m; ++s) {
        MixedOperator blk(n, legs);
        for (int k = 0; k < boxes; ++k) blk = blk + mixed_s(n, legs, s * boxes + k);
        MixedOperator fac = blk * lift_to_mixed(lift_offset(f, s * boxes, (m - s) * boxes)) +
                            MixedOperator::scalar_op(n, legs, upoly_shift(n, Rat(s - m)));
        acc = acc ? *acc * fac : fac;
    }

    SparseOp<Rat> g = lift_offset(f, 0, m * boxes);
    for (int s = 1; s <= m; ++s) g = g * lift_offset(f, s * boxes, (m - s) * boxes);
    g = g * block_antisymmetrizer(n, m + 1, boxes);

    return lhs == trace_product(*acc, g);
}

bool qdet_ev_check(int n) {
    std::vector<long> e1(static_cast<std::size_t>(n), 0);
    e1[0] = 1;
    DominantWeight vec(std::move(e1));
    Representation rep = build_rep(vec, n);
    CentralPolynomial det = shifted_determinant(rep);

    UEAMatrix omega = braided_casimir(rep);
    std::vector<UEAMatrix> mats;
    mats.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        UEAMatrix m = omega;
        for (int i = 0; i < n; ++i) m.at(i, i) = m.at(i, i) + upoly_shift(n, Rat(k - n));
        mats.push_back(std::move(m));
    }
    if (!(alpha_det(mats) == det.poly)) return false;

    if (n <= 3) {
        HCImagePoly flipped = hc_image_poly(det.poly).flip_sign();
        InterpolationResult ir = charpoly_interpolate(vec, n);
        return flipped == ir.hc;
    }
    return true;
}

namespace {

// One leg of the cross-multiplied generating matrix: entry (a, b) of u T(u),
// or of v T(v) when in_v is set.
SparseOp<BiPoly> eval_t_matrix(int n, EvalMap map, bool in_v) {
    SparseOp<BiPoly> t(n, 1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            BiPoly v;
            if (a == b)
                v = in_v ? BiPoly::monomial(1, upoly_const(n, Rat(1))) : BiPoly::constant(upoly_u(n));
            if (map == EvalMap::Ev)
                v = v + BiPoly::constant(upoly_of(UEAElement::generator(n, a + 1, b + 1)));
            else if (map == EvalMap::EvCheck)
                v = v - BiPoly::constant(upoly_of(UEAElement::generator(n, b + 1, a + 1)));
            t.add(static_cast<TIdx>(a), static_cast<TIdx>(b), v);
        }
    return t;
}

}  // namespace

SparseOp<BiPoly> rtt_residual(int n, EvalMap map) {
    SparseOp<BiPoly> a = lift_offset(eval_t_matrix(n, map, false), 0, 1);
    SparseOp<BiPoly> b = lift_offset(eval_t_matrix(n, map, true), 1, 0);
    BiPoly u_minus_v =
        BiPoly::constant(upoly_u(n)) - BiPoly::monomial(1, upoly_const(n, Rat(1)));
    SparseOp<BiPoly> r = SparseOp<BiPoly>::scalar_op(n, 2, u_minus_v) -
                         lift_to_bipoly(SparseOp<Rat>::leg_permutation(n, {1, 0}));
    return r * a * b - b * a * r;
}

bool rtt_check(int n, EvalMap map) { return rtt_residual(n, map).is_zero(); }

}  // namespace casimir

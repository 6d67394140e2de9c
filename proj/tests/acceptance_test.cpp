// Acceptance battery: every contract the engine ships with, one line per
// criterion. Exact arithmetic end to end; a FAIL on any gating criterion
// fails the binary. Criterion 12 records experimental evidence and never
// gates.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "casimir/capelli.hpp"
#include "casimir/central_polys.hpp"
#include "test_util.hpp"

using namespace casimir;
using casimir::testutil::Lcg;

namespace {

std::vector<std::vector<long>> partitions_of(int M, int max_rows) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, int rest, long cap) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_rows) return;
        for (long p = std::min<long>(cap, rest); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - static_cast<int>(p), p);
            cur.pop_back();
        }
    };
    rec(rec, M, M);
    return out;
}

// Rank-2 sweep weights: every spread up to the bound, once as a partition
// with bottom 0 and once shifted by one determinant twist.
std::vector<DominantWeight> gl2_sweep(long max_spread) {
    std::vector<DominantWeight> out;
    for (long m = 0; m <= max_spread; ++m) {
        out.push_back(DominantWeight({m, 0}));
        out.push_back(DominantWeight({m + 1, 1}));
    }
    return out;
}

const std::vector<DominantWeight>& mu_samples() {
    static const std::vector<DominantWeight> ws = {
        DominantWeight({5, 1}), DominantWeight({7, 2}), DominantWeight({4, 0}),
        DominantWeight({9, 3}), DominantWeight({6, 2})};
    return ws;
}

bool criterion_determinant_product() {
    for (const DominantWeight& lam : gl2_sweep(4)) {
        CentralPolynomial cp = shifted_determinant(gl2_rep(lam));
        if (!cp.all_central()) return false;
        if (hc_image_poly(cp.poly) != gl2_hc_formula(Gl2Kind::D, lam)) return false;
    }
    return true;
}

bool criterion_charpoly_annihilation() {
    for (const DominantWeight& lam : gl2_sweep(3)) {
        HCImagePoly hc = gl2_hc_formula(Gl2Kind::P, lam);
        for (const DominantWeight& mu : mu_samples())
            if (!verify_annihilation(lam, mu, hc)) return false;
        if (charpoly_interpolate(lam, 2).hc != hc) return false;
    }
    return true;
}

bool criterion_root_separation() {
    DominantWeight lam({2, 0});
    std::vector<WeightPolynomial> d = gl2_hc_shifts(Gl2Kind::D, lam);
    std::vector<WeightPolynomial> p = gl2_hc_shifts(Gl2Kind::P, lam);
    if (d.size() != 3 || p.size() != 3) return false;
    WeightPolynomial mid = WeightPolynomial::variable(2, 1) +
                           WeightPolynomial::variable(2, 2) -
                           WeightPolynomial::constant(2, Rat(1));
    return d[0] == p[0] && d[2] == p[2] && d[1] == mid &&
           p[1] == mid - WeightPolynomial::constant(2, Rat(1));
}

bool criterion_vector_representation() {
    for (int n : {2, 3, 4}) {
        std::vector<long> e1(static_cast<std::size_t>(n), 0);
        e1[0] = 1;
        if (!shifted_determinant(build_rep(DominantWeight(e1), n)).all_central())
            return false;
    }
    return qdet_ev_check(2) && qdet_ev_check(3);
}

bool criterion_rtt() {
    for (int n : {2, 3})
        for (EvalMap map : {EvalMap::Ev, EvalMap::EvCheck, EvalMap::Unit})
            if (!rtt_check(n, map)) return false;
    return true;
}

bool criterion_fusion() {
    for (int M = 1; M <= 4; ++M)
        for (const auto& shape : partitions_of(M, 2))
            if (!fusion_check(shape, 2)) return false;
    for (int M = 1; M <= 3; ++M)
        for (const auto& shape : partitions_of(M, 3))
            if (!fusion_check(shape, 3)) return false;
    return true;
}

bool criterion_dual_product() {
    for (int n : {2, 3})
        for (int M = 1; M <= 3; ++M)
            for (const auto& shape : partitions_of(M, n)) {
                if (!coproduct_casimir_check(shape, n)) return false;
                if (!omega_star_check(shape, n)) return false;
            }
    for (int M = 1; M <= 3; ++M)
        for (const auto& shape : partitions_of(M, 2)) {
            TransposeRelation t = transpose_relation_check(shape, 2);
            if (!t.intertwiner_found || !t.antidiagonal_signs || !t.conjugate_holds)
                return false;
        }
    return true;
}

bool criterion_trace_formula() {
    return plethysm_check(DominantWeight({1, 0})) &&
           plethysm_check(DominantWeight({1, 1})) &&
           plethysm_check(DominantWeight({2, 0}));
}

UPoly random_upoly(Lcg& rng, int n, int maxdeg) {
    UPoly p;
    for (int d = 0; d <= maxdeg; ++d)
        p = p + UPoly::monomial(d, casimir::testutil::random_element(rng, n, 2, 1));
    return p;
}

// a runs down the antidiagonal order of the ladder: a[m] sits in the top-left
// corner, b on the superdiagonal, c on the subdiagonal.
UEAMatrix assemble_tridiag(const std::vector<UPoly>& a, const std::vector<UPoly>& b,
                           const std::vector<UPoly>& c) {
    int sz = static_cast<int>(a.size());
    UEAMatrix x(sz, sz);
    for (int r = 0; r < sz; ++r) x.at(r, r) = a[sz - 1 - r];
    for (int r = 0; r + 1 < sz; ++r) {
        x.at(r, r + 1) = b[sz - 1 - r - 1];
        x.at(r + 1, r) = c[sz - 1 - r - 1];
    }
    return x;
}

bool criterion_tridiagonal_lemmas() {
    Lcg rng(271828);
    // replacing (b_k, c_k) by (b'_k, c'_k) with c_k b_k = c'_k b'_k fixes the
    // column determinant even for noncommuting entries
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<UPoly> a, b, c, b2, c2;
        for (int k = 0; k <= 2; ++k) a.push_back(random_upoly(rng, 2, 1));
        for (int k = 1; k <= 2; ++k) {
            UPoly v = random_upoly(rng, 2, 0);
            UPoly w = random_upoly(rng, 2, 0);
            UPoly x = random_upoly(rng, 2, 0);
            c.push_back(v * w);
            b.push_back(x);
            c2.push_back(v);
            b2.push_back(w * x);
        }
        if (column_det(assemble_tridiag(a, b, c)) !=
            column_det(assemble_tridiag(a, b2, c2)))
            return false;
    }
    // ladder family with rational entries and a closed-form product value
    for (int m = 1; m <= 5; ++m)
        for (int trial = 0; trial < 4; ++trial) {
            Rat s = rng.rat();
            std::vector<Rat> a, b, c;
            for (int k = 0; k <= m; ++k) a.push_back(Rat(k - m));
            for (int k = 1; k <= m; ++k) {
                b.push_back(Rat(k) * s);
                c.push_back(Rat(m + 1 - k) * (s - 1));
            }
            Rat expected = 1;
            for (int k = 0; k <= m; ++k) expected *= Rat(m - 2 * k) * s - m + k;
            if (tridiag_det(a, b, c) != expected) return false;
        }
    return true;
}

bool criterion_sqrt_form() {
    for (const DominantWeight& lam : gl2_sweep(4))
        if (!gl2_sqrt_form_check(lam)) return false;
    return true;
}

bool rep_brackets_hold(const Representation& rep) {
    int n = rep.n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    RatMat lhs = rep.gen(i, j) * rep.gen(k, l) -
                                 rep.gen(k, l) * rep.gen(i, j);
                    RatMat want(rep.dim, rep.dim);
                    if (j == k) want = want + rep.gen(i, l);
                    if (l == i) want = want - rep.gen(k, j);
                    if (lhs != want) return false;
                }
    return true;
}

bool criterion_property_suites() {
    Lcg rng(314159);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.range(0, 1));
        UEAElement x = casimir::testutil::random_element(rng, n, 3, 3);
        UEAElement y = casimir::testutil::random_element(rng, n, 3, 3);
        UEAElement z = casimir::testutil::random_element(rng, n, 3, 3);
        if ((x * y) * z != x * (y * z)) return false;
    }
    for (int n : {2, 3})
        for (int M = 1; M <= 4; ++M)
            for (const auto& shape : partitions_of(M, n)) {
                SparseOp<Rat> f = young_symmetrizer(shape, n);
                if (f * f != f) return false;
                std::vector<long> padded = shape;
                padded.resize(static_cast<std::size_t>(n), 0);
                DominantWeight lam(padded);
                if (young_image_basis(lam, n).cols() != weyl_dim(lam)) return false;
                if (!rep_brackets_hold(build_rep(lam, n))) return false;
            }
    return true;
}

// Experimental: reports per-coefficient centrality of the rank-3 scan
// weights; the outcome is printed and recorded but never gates.
bool criterion_scan(std::string& note) {
    for (const DominantWeight& lam : {DominantWeight({1, 1, 0}), DominantWeight({2, 0, 0})}) {
        ScanReport rep = conjecture_scan(lam);
        note += " " + lam.to_string() + ":";
        for (const auto& [deg, ok] : rep.default_basis.centrality)
            note += std::string(" u^") + std::to_string(deg) + (ok ? "=central" : "=NOT");
    }
    return true;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool()> run;
    bool gating;
};

}  // namespace

int main() {
    std::string scan_note;
    const std::vector<Criterion> criteria = {
        {1, "rank-2 shifted determinants: centrality and closed product (spread <= 4)",
         criterion_determinant_product, true},
        {2, "rank-2 characteristic polynomials: annihilation and interpolation (spread <= 3)",
         criterion_charpoly_annihilation, true},
        {3, "determinant vs characteristic roots differ in the middle for (2,0)",
         criterion_root_separation, true},
        {4, "vector representation: centrality (ranks 2-4) and determinant expansions (2-3)",
         criterion_vector_representation, true},
        {5, "exchange-relation residual vanishes (ranks 2-3, all evaluation maps)",
         criterion_rtt, true},
        {6, "fusion factorization (boxes <= 4 at rank 2, <= 3 at rank 3)",
         criterion_fusion, true},
        {7, "dual product, coproduct compression, transpose relation (boxes <= 3)",
         criterion_dual_product, true},
        {8, "trace formula for rank-2 shifted determinants", criterion_trace_formula, true},
        {9, "tridiagonal substitution and closed-form product lemmas",
         criterion_tridiagonal_lemmas, true},
        {10, "square-root closed form expands to the determinant product (spread <= 4)",
         criterion_sqrt_form, true},
        {11, "property suites: associativity, brackets, symmetrizer idempotence and rank",
         criterion_property_suites, true},
        {12, "experimental rank-3 centrality scan (recorded, non-gating)",
         [&scan_note] { return criterion_scan(scan_note); }, false},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const char* verdict = !c.gating ? "RECORDED" : ok ? "PASS" : "FAIL";
        std::printf("criterion %2d %-8s (%6.2f s)  %s%s%s%s\n", c.id, verdict, secs,
                    c.name, error.empty() ? "" : "  [", error.c_str(),
                    error.empty() ? "" : "]");
        if (c.id == 12 && !scan_note.empty()) std::printf("             %s\n", scan_note.c_str());
        if (c.gating && !ok) ++failures;
    }
    if (failures > 0) {
        std::printf("%d gating criteria failed\n", failures);
        return 1;
    }
    std::printf("all gating criteria passed\n");
    return 0;
}

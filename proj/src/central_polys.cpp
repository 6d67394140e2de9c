#include "casimir/central_polys.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace casimir {

namespace {

// acc[r*dim+s] += coeff * pi(E_ji)_{rs} * E_ij summed over the given (i,j).
void accumulate_pairing(std::vector<UEAElement>& acc, const Representation& rep,
                        int i, int j, const UEAElement& lhs) {
    const RatMat& g = rep.gen(j, i);
    const int dim = rep.dim;
    for (int r = 0; r < dim; ++r)
        for (int s = 0; s < dim; ++s) {
            const Rat& c = g.at(r, s);
            if (sgn(c) != 0) acc[std::size_t(r) * dim + s].add_scaled(lhs, c);
        }
}

UEAMatrix wrap_entries(std::vector<UEAElement>&& acc, int dim) {
    UEAMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int s = 0; s < dim; ++s) m.at(r, s) = upoly_of(acc[std::size_t(r) * dim + s]);
    return m;
}

}  // namespace

UEAMatrix braided_casimir(const Representation& rep) {
    std::vector<UEAElement> acc(std::size_t(rep.dim) * rep.dim, UEAElement(rep.n));
    for (int i = 1; i <= rep.n; ++i)
        for (int j = 1; j <= rep.n; ++j)
            accumulate_pairing(acc, rep, i, j, UEAElement::generator(rep.n, i, j));
    return wrap_entries(std::move(acc), rep.dim);
}

CentralPolynomial shifted_determinant(const Representation& rep) {
    for (std::size_t r = 1; r < rep.basis_weights.size(); ++r)
        if (rep.basis_weights[r - 1] < rep.basis_weights[r])
            throw std::invalid_argument("basis is not weight-descending");
    UEAMatrix m = braided_casimir(rep);
    for (int r = 0; r < rep.dim; ++r)
        m.at(r, r) = m.at(r, r) + upoly_u(rep.n) - upoly_const(rep.n, Rat(rep.dim - 1 - r));
    UPoly det = column_det(m);
    CentralPolynomial out{rep.weight, CentralKind::ShiftedDeterminant, det, {}};
    for (const auto& [deg, c] : det.coeffs()) out.centrality.emplace(deg, is_central(c));
    return out;
}

HCImagePoly hc_image_poly(const UPoly& p) {
    HCImagePoly h;
    for (const auto& [deg, c] : p.coeffs()) h.add_term(deg, hc_image(c));
    return h;
}

RatPoly hc_eval(const HCImagePoly& hc, const std::vector<Rat>& mu) {
    RatPoly p;
    for (const auto& [deg, w] : hc.coeffs()) p.add_term(deg, w.eval(mu));
    return p;
}

UEAMatrix sln_casimir_element(const Representation& rep) {
    const int n = rep.n;
    const int dim = rep.dim;
    UEAMatrix a = braided_casimir(rep);
    UPoly shift = upoly_of(UEAElement::delta1(n).scale(rat_of(rep.weight.total(), n)));
    for (int r = 0; r < dim; ++r) a.at(r, r) = a.at(r, r) - shift;

    std::vector<UEAElement> acc(std::size_t(dim) * dim, UEAElement(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) accumulate_pairing(acc, rep, i, j, UEAElement::generator(n, i, j));
    RatMat diag_total(dim, dim);
    for (int k = 1; k <= n; ++k) diag_total = diag_total + rep.gen(k, k);
    RatMat partial(dim, dim);
    for (int i = 1; i < n; ++i) {
        partial = partial + rep.gen(i, i);
        RatMat hstar = partial - diag_total.scale(rat_of(i, n));
        UEAElement h = UEAElement::generator(n, i, i) - UEAElement::generator(n, i + 1, i + 1);
        for (int r = 0; r < dim; ++r)
            for (int s = 0; s < dim; ++s) {
                const Rat& c = hstar.at(r, s);
                if (sgn(c) != 0) acc[std::size_t(r) * dim + s].add_scaled(h, c);
            }
    }
    UEAMatrix b = wrap_entries(std::move(acc), dim);
    if (!(a == b)) throw std::logic_error("sl_n Casimir constructions disagree");
    return a;
}

RatMat casimir_action(const Representation& rep_mu, const Representation& rep_lambda) {
    if (rep_mu.n != rep_lambda.n) throw std::invalid_argument("rank mismatch");
    const int n = rep_mu.n;
    RatMat acc(rep_mu.dim * rep_lambda.dim, rep_mu.dim * rep_lambda.dim);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            acc = acc + kron(rep_mu.gen(i, j), rep_lambda.gen(j, i));
    return acc;
}

Representation sample_rep(const DominantWeight& mu) {
    if (mu.n() == 2) return gl2_rep(mu);
    const auto& c = mu.comps();
    long direct = 0;
    long dual = 0;
    for (long x : c) {
        direct += x - c.back();
        dual += c.front() - x;
    }
    if (dual < direct) {
        std::vector<long> rev(c.rbegin(), c.rend());
        for (long& x : rev) x = -x;
        return dual_star(build_rep(DominantWeight(std::move(rev)), mu.n()));
    }
    return build_rep(mu, mu.n());
}

std::vector<WeightPolynomial> gl2_hc_shifts(Gl2Kind kind, const DominantWeight& lambda) {
    if (lambda.n() != 2) throw std::invalid_argument("rank-2 weight required");
    const long l1 = lambda[0];
    const long l2 = lambda[1];
    const long m = l1 - l2;
    std::vector<WeightPolynomial> out;
    out.reserve(m + 1);
    for (long k = 0; k <= m; ++k) {
        Rat tail = kind == Gl2Kind::D ? Rat(-k) : Rat(-k * (m + 1 - k));
        WeightPolynomial w = WeightPolynomial::variable(2, 1).scale(Rat(l1 - k)) +
                             WeightPolynomial::variable(2, 2).scale(Rat(l2 + k)) +
                             WeightPolynomial::constant(2, tail);
        out.push_back(std::move(w));
    }
    return out;
}

HCImagePoly gl2_hc_formula(Gl2Kind kind, const DominantWeight& lambda) {
    const Rat usign = kind == Gl2Kind::D ? 1 : -1;
    HCImagePoly acc = HCImagePoly::constant(WeightPolynomial::constant(2, 1));
    for (const WeightPolynomial& s : gl2_hc_shifts(kind, lambda)) {
        HCImagePoly f;
        f.add_term(1, WeightPolynomial::constant(2, usign));
        f.add_term(0, s);
        acc = acc * f;
    }
    return acc;
}

bool gl2_sqrt_form_check(const DominantWeight& lambda) {
    if (lambda.n() != 2) throw std::invalid_argument("rank-2 weight required");
    const UEAElement one = UEAElement::constant(2, 1);
    const UEAElement diff = UEAElement::generator(2, 1, 1) - UEAElement::generator(2, 2, 2) - one;
    const UEAElement cross = UEAElement::generator(2, 1, 2) * UEAElement::generator(2, 2, 1);
    const UEAElement d1s = UEAElement::delta1(2) - one;
    const UEAElement disc = d1s * d1s - UEAElement::delta2().scale(4);
    if (!(diff * diff + cross.scale(4) == disc)) return false;

    const WeightPolynomial rho = WeightPolynomial::variable(2, 1) -
                                 WeightPolynomial::variable(2, 2) +
                                 WeightPolynomial::constant(2, 1);
    if (!(hc_image(disc) == rho * rho)) return false;

    const long m = lambda.spread();
    const WeightPolynomial half_trace = hc_image(UEAElement::delta1(2)).scale(rat_of(lambda.total(), 2));
    const std::vector<WeightPolynomial> shifts = gl2_hc_shifts(Gl2Kind::D, lambda);
    HCImagePoly prod = HCImagePoly::constant(WeightPolynomial::constant(2, 1));
    for (long k = 0; k <= m; ++k) {
        WeightPolynomial f = half_trace + WeightPolynomial::constant(2, rat_of(-m, 2)) +
                             rho.scale(rat_of(m - 2 * k, 2));
        if (!(f == shifts[k])) return false;
        HCImagePoly factor;
        factor.add_term(1, WeightPolynomial::constant(2, 1));
        factor.add_term(0, f);
        prod = prod * factor;
    }
    return prod == gl2_hc_formula(Gl2Kind::D, lambda);
}

namespace {

// Exponent vectors of length nvars with total degree <= bound, lex order.
std::vector<WeightPolynomial::Expo> monomials_up_to(int nvars, int bound) {
    std::vector<WeightPolynomial::Expo> out;
    WeightPolynomial::Expo e(nvars, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == nvars) {
            out.push_back(e);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[pos] = static_cast<unsigned>(v);
            rec(pos + 1, left - v);
        }
        e[pos] = 0;
    };
    rec(0, std::max(bound, 0));
    return out;
}

Rat monomial_value(const WeightPolynomial::Expo& e, const std::vector<Rat>& mu) {
    Rat v = 1;
    for (std::size_t k = 0; k < e.size(); ++k)
        for (unsigned p = 0; p < e[k]; ++p) v *= mu[k];
    return v;
}

std::vector<Rat> weight_rats(const DominantWeight& w) {
    std::vector<Rat> out;
    out.reserve(w.n());
    for (long c : w.comps()) out.emplace_back(c);
    return out;
}

// Box grid mu = (t + delta, t) with delta >= spread: unisolvent for total
// degree <= dim as soon as each axis carries > dim points.
std::vector<DominantWeight> grid_rank2(const DominantWeight& lambda, int dim, int unknowns) {
    const long m = lambda.spread();
    int side = dim;
    while ((side + 1) * (side + 1) < unknowns + 3) ++side;
    std::vector<DominantWeight> out;
    for (long delta = m; delta <= m + side; ++delta)
        for (long t = 0; t <= side; ++t) out.push_back(DominantWeight({t + delta, t}));
    return out;
}

// Principal lattice of gaps d_i >= 1 with sum <= dim + n - 1 (unisolvent for
// bivariate-and-up total degree <= dim), crossed with determinant twists.
std::vector<DominantWeight> grid_rankn(int n, int dim, int unknowns) {
    const int cap = dim + n - 1;
    std::vector<std::vector<long>> gaps;
    std::vector<long> d(n - 1, 1);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            gaps.push_back(d);
            return;
        }
        for (int v = 1; v <= left - (n - 2 - pos); ++v) {
            d[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, cap);
    int twists = dim;
    while (static_cast<long>(gaps.size()) * (twists + 1) < unknowns + 3) ++twists;
    std::vector<DominantWeight> out;
    for (const auto& g : gaps)
        for (long t = 0; t <= twists; ++t) {
            std::vector<long> mu(n, t);
            for (int i = n - 2; i >= 0; --i) mu[i] = mu[i + 1] + g[i];
            out.push_back(DominantWeight(std::move(mu)));
        }
    return out;
}

}  // namespace

InterpolationResult charpoly_interpolate(const DominantWeight& lambda, int n,
                                         std::vector<DominantWeight> mu_samples,
                                         int degree_bound) {
    if (lambda.n() != n) throw std::invalid_argument("weight rank mismatch");
    const Representation rep_l = sample_rep(lambda);
    const int dim = rep_l.dim;
    if (degree_bound < 0) degree_bound = dim;
    const int unknowns = static_cast<int>(monomials_up_to(n, degree_bound).size());
    if (mu_samples.empty())
        mu_samples = n == 2 ? grid_rank2(lambda, dim, unknowns) : grid_rankn(n, dim, unknowns);

    InterpolationResult res;
    std::vector<RatPoly> annihilators;
    for (const DominantWeight& mu : mu_samples) {
        if (mu.n() != n) throw std::invalid_argument("sample rank mismatch");
        RatMat act = casimir_action(sample_rep(mu), rep_l);
        RatPoly p = minimal_poly(act, dim);
        if (p.degree() < dim) {
            res.samples_discarded.push_back(mu);
            continue;
        }
        res.samples_used.push_back(mu);
        annihilators.push_back(dim % 2 ? p.scale(Rat(-1)) : std::move(p));
    }

    const int used = static_cast<int>(res.samples_used.size());
    if (used < unknowns) throw std::invalid_argument("insufficient generic samples");
    const int holdouts = std::min(2, used - unknowns);
    const int solve_count = used - holdouts;

    for (int k = 0; k <= dim; ++k) {
        const auto monos = monomials_up_to(n, degree_bound - k);
        RatMat a(solve_count, static_cast<int>(monos.size()));
        RatMat b(solve_count, 1);
        for (int s = 0; s < solve_count; ++s) {
            const std::vector<Rat> mu = weight_rats(res.samples_used[s]);
            for (std::size_t col = 0; col < monos.size(); ++col)
                a.at(s, static_cast<int>(col)) = monomial_value(monos[col], mu);
            b.at(s, 0) = annihilators[s].coeff_or(k, Rat(0));
        }
        // the k=0 monomial set is the largest; full column rank there implies
        // full column rank for every subset used at higher degrees
        if (k == 0 && rank_of(a) < static_cast<int>(monos.size()))
            throw std::invalid_argument("degenerate sample set");
        const auto x = solve_exact(a, b);
        if (!x) throw std::invalid_argument("degenerate sample set");
        WeightPolynomial w(n);
        for (std::size_t col = 0; col < monos.size(); ++col)
            w.add_term(monos[col], x->at(static_cast<int>(col), 0));
        res.hc.add_term(k, w);
    }

    for (int h = solve_count; h < used; ++h) {
        const DominantWeight& mu = res.samples_used[h];
        RatPoly q = hc_eval(res.hc, weight_rats(mu));
        RatMat act = casimir_action(sample_rep(mu), rep_l);
        if (!eval_poly(q, act).is_zero())
            throw std::logic_error("holdout annihilation failed");
        ++res.holdouts_checked;
    }
    return res;
}

bool verify_annihilation(const DominantWeight& lambda, const DominantWeight& mu,
                         const HCImagePoly& hc) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("rank mismatch");
    const RatMat act = casimir_action(sample_rep(mu), sample_rep(lambda));
    const RatPoly q = hc_eval(hc, weight_rats(mu));
    return eval_poly(q, act).is_zero();
}

ScanReport conjecture_scan(const DominantWeight& lambda, bool exhaustive, int store_cap) {
    const Representation rep = build_rep(lambda, lambda.n());
    const UEAMatrix omega = braided_casimir(rep);
    const int dim = rep.dim;
    const int n = rep.n;

    auto scan_order = [&](const std::vector<int>& ord) {
        UEAMatrix m(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) m.at(r, c) = omega.at(ord[r], ord[c]);
        for (int r = 0; r < dim; ++r)
            m.at(r, r) = m.at(r, r) + upoly_u(n) - upoly_const(n, Rat(dim - 1 - r));
        UPoly det = column_det(m);
        BasisScan s;
        s.order = ord;
        s.all_central = true;
        for (const auto& [deg, c] : det.coeffs()) {
            const bool ok = is_central(c);
            s.centrality.emplace(deg, ok);
            if (!ok) s.all_central = false;
        }
        return s;
    };

    std::vector<int> order(dim);
    std::iota(order.begin(), order.end(), 0);
    ScanReport report{lambda, rep.basis_weights, scan_order(order)};
    if (!exhaustive) return report;

    if (dim > 6) throw std::invalid_argument("exhaustive scan limited to dim <= 6");
    report.exhaustive = true;
    do {
        BasisScan s = scan_order(order);
        ++report.permutations_tried;
        if (s.all_central) {
            ++report.permutations_all_central;
            if (static_cast<int>(report.all_central_orders.size()) < store_cap)
                report.all_central_orders.push_back(std::move(s));
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return report;
}

}  // namespace casimir

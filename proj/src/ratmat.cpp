#include "casimir/ratmat.hpp"

#include <stdexcept>

namespace casimir {

RatMat RatMat::identity(int d) {
    RatMat m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RatMat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RatMat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (sgn(v) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& w = o.at(k, j);
                if (sgn(w) != 0) r.at(i, j) += v * w;
            }
        }
    return r;
}

RatMat RatMat::scale(const Rat& k) const {
    RatMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * k;
    return r;
}

RatMat RatMat::transpose() const {
    RatMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RatMat::is_zero() const {
    for (const Rat& v : a_)
        if (sgn(v) != 0) return false;
    return true;
}

Rat RatMat::trace() const {
    Rat t = 0;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

RatMat kron(const RatMat& a, const RatMat& b) {
    RatMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (sgn(a.at(i, j)) == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (sgn(b.at(k, l)) == 0) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
                }
        }
    return r;
}

std::vector<int> rref_inplace(RatMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int r = row; r < m.rows(); ++r)
            if (sgn(m.at(r, col)) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int c = col; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
        Rat inv = 1 / m.at(row, col);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m.at(r, col)) == 0) continue;
            Rat f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank_of(RatMat m) { return static_cast<int>(rref_inplace(m).size()); }

std::optional<RatMat> solve_exact(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("shape mismatch");
    RatMat aug(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    std::vector<int> pivots = rref_inplace(aug);
    // consistency: no pivot in the augmented block
    for (int p : pivots)
        if (p >= a.cols()) return std::nullopt;
    RatMat x(a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j) x.at(pivots[r], j) = aug.at(static_cast<int>(r), a.cols() + j);
    return x;
}

RatMat nullspace(const RatMat& a) {
    RatMat m = a;
    std::vector<int> pivots = rref_inplace(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMat basis(a.cols(), static_cast<int>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(fc, static_cast<int>(k)) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis.at(pivots[r], static_cast<int>(k)) = -m.at(static_cast<int>(r), fc);
    }
    return basis;
}

std::optional<RatMat> inverse(const RatMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    auto x = solve_exact(a, RatMat::identity(a.rows()));
    if (!x) return std::nullopt;
    if (!((a * *x) == RatMat::identity(a.rows()))) return std::nullopt;
    return x;
}

RatPoly ratpoly_monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    return p.scale(1 / *p.coeff(p.degree()));
}

std::pair<RatPoly, RatPoly> ratpoly_divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    RatPoly q, r = a;
    Rat lead = *b.coeff(b.degree());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        Rat c = *r.coeff(r.degree()) / lead;
        RatPoly t = RatPoly::monomial(d, c);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

RatPoly ratpoly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = ratpoly_divmod(a, b).second;
        a = b;
        b = r;
    }
    return ratpoly_monic(a);
}

RatPoly ratpoly_lcm(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    RatPoly g = ratpoly_gcd(a, b);
    return ratpoly_monic(ratpoly_divmod(a * b, g).first);
}

namespace {

std::vector<Rat> matvec(const RatMat& a, const std::vector<Rat>& v) {
    std::vector<Rat> w(a.rows(), Rat(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (sgn(a.at(i, j)) != 0 && sgn(v[j]) != 0) w[i] += a.at(i, j) * v[j];
    return w;
}

bool vec_zero(const std::vector<Rat>& v) {
    for (const Rat& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

// p(A) e_i via Horner with matrix-vector products only.
std::vector<Rat> apply_poly(const RatPoly& p, const RatMat& a, std::vector<Rat> v) {
    std::vector<Rat> acc(v.size(), Rat(0));
    int top = p.degree();
    for (int d = top; d >= 0; --d) {
        acc = matvec(a, acc);
        if (const Rat* c = p.coeff(d))
            for (std::size_t k = 0; k < v.size(); ++k) acc[k] += *c * v[k];
    }
    return acc;
}

// Monic annihilator of the Krylov orbit of v.
RatPoly krylov_annihilator(const RatMat& a, std::vector<Rat> v) {
    int d = a.rows();
    // reduced pivot rows with the polynomial combination they represent
    std::vector<std::vector<Rat>> basis;
    std::vector<int> pivot_pos;
    std::vector<RatPoly> combos;
    std::vector<Rat> w = std::move(v);
    RatPoly q = RatPoly::monomial(0, 1);
    for (int step = 0; step <= d; ++step) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Rat& lead = w[pivot_pos[b]];
            if (sgn(lead) == 0) continue;
            Rat f = lead;  // basis rows are normalized to pivot 1
            for (int k = 0; k < d; ++k) w[k] -= f * basis[b][k];
            q = q - combos[b].scale(f);
        }
        if (vec_zero(w)) return q;
        int piv = 0;
        while (sgn(w[piv]) == 0) ++piv;
        Rat inv = 1 / w[piv];
        std::vector<Rat> row(d);
        for (int k = 0; k < d; ++k) row[k] = w[k] * inv;
        basis.push_back(std::move(row));
        pivot_pos.push_back(piv);
        combos.push_back(q.scale(inv));
        w = matvec(a, w);
        q = RatPoly::monomial(1, 1) * q;
    }
    throw std::logic_error("krylov annihilator not found within dimension bound");
}

}  // namespace

RatPoly minimal_poly(const RatMat& a, int degree_cap) {
    if (a.rows() != a.cols()) throw std::invalid_argument("minimal_poly of non-square matrix");
    int d = a.rows();
    if (d == 0) return RatPoly::monomial(0, 1);
    RatPoly m = RatPoly::monomial(0, 1);
    for (int i = 0; i < d; ++i) {
        std::vector<Rat> e(d, Rat(0));
        e[i] = 1;
        if (vec_zero(apply_poly(m, a, e))) continue;
        RatPoly pi = krylov_annihilator(a, e);
        m = ratpoly_lcm(m, pi);
        if (degree_cap > 0 && m.degree() >= degree_cap) break;
    }
    return m;
}

RatMat eval_poly(const RatPoly& p, const RatMat& a) {
    int d = a.rows();
    RatMat acc(d, d);
    for (int deg = p.degree(); deg >= 0; --deg) {
        acc = acc * a;
        if (const Rat* c = p.coeff(deg)) acc = acc + RatMat::identity(d).scale(*c);
    }
    return acc;
}

}  // namespace casimir

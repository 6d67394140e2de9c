#include "casimir/irreps.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "casimir/pbw.hpp"

namespace casimir {

DominantWeight::DominantWeight(std::vector<long> comps) : c_(std::move(comps)) {
    if (c_.empty()) throw std::invalid_argument("empty weight");
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
        if (c_[i] < c_[i + 1]) throw std::invalid_argument("weight not dominant");
}

long DominantWeight::total() const { return std::accumulate(c_.begin(), c_.end(), 0L); }

std::string DominantWeight::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    return os.str();
}

long weyl_dim(const DominantWeight& lambda) {
    int n = lambda.n();
    Rat d = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d *= rat_of(lambda[i] - lambda[j] + j - i, j - i);
    if (d.get_den() != 1) throw std::logic_error("Weyl dimension not integral");
    return d.get_num().get_si();
}

std::vector<long> tableau_contents(const std::vector<long>& shape) {
    std::vector<long> c;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (long col = 0; col < shape[r]; ++col) c.push_back(col - static_cast<long>(r));
    return c;
}

void for_each_permutation(int size, const std::function<void(const std::vector<int>&, int)>& f) {
    std::vector<int> p(size);
    std::iota(p.begin(), p.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                if (p[i] > p[j]) ++inv;
        f(p, inv % 2 ? -1 : 1);
    } while (std::next_permutation(p.begin(), p.end()));
}

namespace {

// Sum of signed leg permutations where the legs inside each cell group permute
// freely and everything else stays fixed.
SparseOp<Rat> group_sum(int n, int legs, const std::vector<std::vector<int>>& groups, bool signed_sum) {
    SparseOp<Rat> acc(n, legs);
    std::vector<int> sigma(legs);
    std::iota(sigma.begin(), sigma.end(), 0);
    // odometer over per-group permutations
    std::vector<std::vector<int>> state;
    for (const auto& g : groups) {
        std::vector<int> s(g.size());
        std::iota(s.begin(), s.end(), 0);
        state.push_back(std::move(s));
    }
    bool done = false;
    while (!done) {
        int sign = 1;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            int inv = 0;
            const auto& s = state[g];
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    if (s[i] > s[j]) ++inv;
            if (inv % 2) sign = -sign;
            for (std::size_t i = 0; i < s.size(); ++i) sigma[groups[g][i]] = groups[g][s[i]];
        }
        SparseOp<Rat> p = SparseOp<Rat>::leg_permutation(n, sigma);
        acc = acc + (signed_sum && sign < 0 ? p.scale(Rat(-1)) : p);
        done = true;
        for (std::size_t g = 0; g < groups.size(); ++g)
            if (std::next_permutation(state[g].begin(), state[g].end())) {
                done = false;
                break;
            } else {
                std::iota(state[g].begin(), state[g].end(), 0);
            }
    }
    return acc;
}

std::vector<long> trimmed_shape(const std::vector<long>& shape) {
    std::vector<long> s;
    for (long part : shape) {
        if (part < 0) throw std::invalid_argument("negative part");
        if (part > 0) {
            if (!s.empty() && s.back() < part) throw std::invalid_argument("shape not a partition");
            s.push_back(part);
        }
    }
    return s;
}

}  // namespace

SparseOp<Rat> antisymmetrizer(int s, int n) {
    if (s < 1) throw std::invalid_argument("antisymmetrizer needs at least one leg");
    SparseOp<Rat> acc(n, s);
    for_each_permutation(s, [&](const std::vector<int>& sigma, int sign) {
        SparseOp<Rat> p = SparseOp<Rat>::leg_permutation(n, sigma);
        acc = acc + (sign < 0 ? p.scale(Rat(-1)) : p);
    });
    Rat fact = 1;
    for (int k = 2; k <= s; ++k) fact *= k;
    return acc.scale(1 / fact);
}

SparseOp<Rat> young_symmetrizer(const std::vector<long>& shape, int n) {
    std::vector<long> sh = trimmed_shape(shape);
    if (sh.empty()) throw std::invalid_argument("empty partition");
    int legs = static_cast<int>(std::accumulate(sh.begin(), sh.end(), 0L));

    std::vector<std::vector<int>> rows, cols;
    int next = 0;
    for (long part : sh) {
        std::vector<int> row(part);
        std::iota(row.begin(), row.end(), next);
        next += static_cast<int>(part);
        rows.push_back(std::move(row));
    }
    for (long c = 0; c < sh[0]; ++c) {
        std::vector<int> col;
        for (std::size_t r = 0; r < sh.size(); ++r)
            if (sh[r] > c) col.push_back(rows[r][c]);
        cols.push_back(std::move(col));
    }

    SparseOp<Rat> t = group_sum(n, legs, rows, false) * group_sum(n, legs, cols, true);
    if (t.is_zero()) return t;

    auto square_row = [&t](TIdx r) {
        std::map<TIdx, Rat> acc;
        auto ri = t.entries().find(r);
        if (ri == t.entries().end()) return acc;
        for (const auto& [k, v] : ri->second) {
            auto ki = t.entries().find(k);
            if (ki == t.entries().end()) continue;
            for (const auto& [c, w] : ki->second) acc[c] += v * w;
        }
        std::erase_if(acc, [](const auto& e) { return sgn(e.second) == 0; });
        return acc;
    };

    const auto& [r0, row0] = *t.entries().begin();
    std::map<TIdx, Rat> sq0 = square_row(r0);
    auto w0 = sq0.find(row0.begin()->first);
    if (w0 == sq0.end()) throw std::logic_error("young symmetrizer not idempotent up to scale");
    Rat c = w0->second / row0.begin()->second;

    auto row_is_scaled = [&c](const std::map<TIdx, Rat>& sq, const SparseOp<Rat>::Row& row) {
        if (sq.size() != row.size()) return false;
        auto a = sq.begin();
        for (auto b = row.begin(); b != row.end(); ++a, ++b)
            if (a->first != b->first || !(a->second == c * b->second)) return false;
        return true;
    };

    if (t.entry_count() <= 100'000) {
        if (!(t * t == t.scale(c))) throw std::logic_error("young symmetrizer not idempotent up to scale");
    } else {
        // The full square is quadratic in the entry count; on large spaces
        // verify T^2 = cT exactly on a spread of rows instead.
        std::vector<TIdx> keys;
        keys.reserve(t.entries().size());
        for (const auto& [r, row] : t.entries()) keys.push_back(r);
        std::size_t step = std::max<std::size_t>(1, keys.size() / 16);
        for (std::size_t i = 0; i < keys.size(); i += step)
            if (!row_is_scaled(square_row(keys[i]), t.entries().at(keys[i])))
                throw std::logic_error("young symmetrizer not idempotent up to scale");
    }
    return t.scale(1 / c);
}

SparseOp<Rat> diagonal_generator(int n, int legs, int i, int j) {
    SparseOp<Rat> acc(n, legs);
    std::uint64_t dim = acc.dim();
    for (int l = 0; l < legs; ++l) {
        std::int64_t delta = (static_cast<std::int64_t>(i) - j) * static_cast<std::int64_t>(acc.stride(l));
        for (TIdx c = 0; c < dim; ++c)
            if (acc.digit(c, l) == j - 1)
                acc.add(static_cast<TIdx>(static_cast<std::int64_t>(c) + delta), c, Rat(1));
    }
    return acc;
}

namespace {

std::vector<long> index_weight(const SparseOp<Rat>& probe, TIdx idx) {
    std::vector<long> w(probe.rank_n(), 0);
    for (int l = 0; l < probe.leg_count(); ++l) ++w[probe.digit(idx, l)];
    return w;
}

struct ImageBasis {
    RatMat basis;
    std::vector<std::vector<long>> weights;
};

ImageBasis image_basis(const SparseOp<Rat>& f, long want_dim) {
    std::uint64_t dim = f.dim();

    // group multi-indices by weight, keep descending weight order
    std::map<std::vector<long>, std::vector<TIdx>, std::greater<std::vector<long>>> blocks;
    for (TIdx c = 0; c < dim; ++c) blocks[index_weight(f, c)].push_back(c);

    RatMat basis(static_cast<int>(dim), static_cast<int>(want_dim));
    std::vector<std::vector<long>> basis_weights;
    int filled = 0;
    for (const auto& [w, idxs] : blocks) {
        // columns of F restricted to this block; F preserves weight spaces
        RatMat cand(static_cast<int>(idxs.size()), static_cast<int>(idxs.size()));
        for (std::size_t cc = 0; cc < idxs.size(); ++cc)
            for (std::size_t rr = 0; rr < idxs.size(); ++rr)
                if (const Rat* v = f.entry(idxs[rr], idxs[cc])) cand.at(static_cast<int>(rr), static_cast<int>(cc)) = *v;
        // pivot columns of the reduced form = first maximal independent set in index order
        RatMat red = cand;
        std::vector<int> chosen = rref_inplace(red);
        for (int col : chosen) {
            if (filled == want_dim) throw std::logic_error("symmetrizer image dimension mismatch");
            for (std::size_t rr = 0; rr < idxs.size(); ++rr)
                basis.at(static_cast<int>(idxs[rr]), filled) = cand.at(static_cast<int>(rr), col);
            basis_weights.push_back(w);
            ++filled;
        }
    }
    if (filled != want_dim) throw std::logic_error("symmetrizer image dimension mismatch");
    return {std::move(basis), std::move(basis_weights)};
}

}  // namespace

RatMat young_image_basis(const DominantWeight& lambda, int n) {
    SparseOp<Rat> f = young_symmetrizer(lambda.comps(), n);
    return image_basis(f, weyl_dim(lambda)).basis;
}

Representation tensor_power_rep(const DominantWeight& lambda, int n) {
    SparseOp<Rat> f = young_symmetrizer(lambda.comps(), n);
    int legs = f.leg_count();
    auto [basis, basis_weights] = image_basis(f, weyl_dim(lambda));

    RatMat linv = left_inverse(basis);
    Representation rep{lambda, n, basis.cols(), {}, std::move(basis_weights)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            SparseOp<Rat> gen = diagonal_generator(n, legs, i, j);
            RatMat gb = apply_dense(gen, basis);
            RatMat mat = linv * gb;
            if (!(basis * mat == gb)) throw std::logic_error("generator does not preserve the image");
            rep.matrices.emplace(std::make_pair(i, j), std::move(mat));
        }
    return rep;
}

Representation build_rep(const DominantWeight& lambda, int n) {
    if (lambda.n() != n) throw std::invalid_argument("weight length differs from rank");
    // Reduce to a partition with last part zero plus a determinant twist; a
    // positive bottom component would otherwise inflate the tensor power.
    long twist = 0;
    std::vector<long> comps = lambda.comps();
    if (comps.back() != 0) {
        twist = comps.back();
        for (long& c : comps) c -= twist;
    }
    if (comps.front() == 0) {
        // trivial or pure determinant power: one-dimensional
        Representation rep{lambda, n, 1, {}, {lambda.comps()}};
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                RatMat m(1, 1);
                if (i == j) m.at(0, 0) = twist;
                rep.matrices.emplace(std::make_pair(i, j), std::move(m));
            }
        return rep;
    }
    Representation rep = [&] {
        // Partition builds dominate everything else; twists of one partition
        // share a single cached copy.
        static std::map<std::pair<std::vector<long>, int>, Representation> cache;
        static std::mutex cache_mu;
        std::scoped_lock lock(cache_mu);
        auto key = std::make_pair(comps, n);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, tensor_power_rep(DominantWeight(comps), n)).first;
        return it->second;
    }();
    if (twist != 0) {
        for (int i = 1; i <= n; ++i) {
            RatMat& m = rep.matrices.at({i, i});
            m = m + RatMat::identity(rep.dim).scale(Rat(twist));
        }
        for (auto& w : rep.basis_weights)
            for (long& c : w) c += twist;
    }
    rep.weight = lambda;
    return rep;
}

Representation gl2_rep(const DominantWeight& lambda) {
    if (lambda.n() != 2) throw std::invalid_argument("gl2_rep needs a rank-2 weight");
    long l1 = lambda[0], l2 = lambda[1], m = l1 - l2;
    int dim = static_cast<int>(m + 1);
    RatMat e11(dim, dim), e22(dim, dim), e12(dim, dim), e21(dim, dim);
    std::vector<std::vector<long>> weights;
    for (int k = 1; k <= dim; ++k) {
        e11.at(k - 1, k - 1) = l1 - k + 1;
        e22.at(k - 1, k - 1) = l2 + k - 1;
        weights.push_back({l1 - k + 1, l2 + k - 1});
    }
    for (int k = 1; k <= static_cast<int>(m); ++k) {
        e12.at(k - 1, k) = m + 1 - k;
        e21.at(k, k - 1) = k;
    }
    Representation rep{lambda, 2, dim, {}, std::move(weights)};
    rep.matrices.emplace(std::make_pair(1, 1), std::move(e11));
    rep.matrices.emplace(std::make_pair(1, 2), std::move(e12));
    rep.matrices.emplace(std::make_pair(2, 1), std::move(e21));
    rep.matrices.emplace(std::make_pair(2, 2), std::move(e22));
    return rep;
}

Representation dual_star(const Representation& rep) {
    std::vector<long> star = rep.weight.comps();
    std::reverse(star.begin(), star.end());
    for (long& c : star) c = -c;
    Representation d{DominantWeight(std::move(star)), rep.n, rep.dim, {}, rep.basis_weights};
    for (auto& w : d.basis_weights)
        for (long& c : w) c = -c;
    for (int i = 1; i <= rep.n; ++i)
        for (int j = 1; j <= rep.n; ++j)
            d.matrices.emplace(std::make_pair(i, j), rep.gen(j, i).scale(Rat(-1)));
    return d;
}

Representation twist_rep(const Representation& rep, long k) {
    std::vector<long> comps = rep.weight.comps();
    for (long& c : comps) c += k;
    Representation t{DominantWeight(std::move(comps)), rep.n, rep.dim, rep.matrices,
                     rep.basis_weights};
    for (int i = 1; i <= rep.n; ++i) {
        RatMat& m = t.matrices.at({i, i});
        m = m + RatMat::identity(rep.dim).scale(Rat(k));
    }
    for (auto& w : t.basis_weights)
        for (long& c : w) c += k;
    return t;
}

RatMat rep_apply(const Representation& rep, const UEAElement& x) {
    if (x.rank() != rep.n) throw std::invalid_argument("rank mismatch");
    RatMat acc(rep.dim, rep.dim);
    for (const auto& [mono, coeff] : x.terms()) {
        RatMat m = RatMat::identity(rep.dim);
        for (const auto& [gen, exp] : mono) {
            auto [i, j] = pbw_gen_pair(rep.n, gen);
            for (std::uint32_t e = 0; e < exp; ++e) m = m * rep.gen(i, j);
        }
        acc = acc + m.scale(coeff);
    }
    return acc;
}

std::optional<RatMat> solve_intertwiner(const Representation& a, const Representation& b) {
    if (a.n != b.n || a.dim != b.dim) return std::nullopt;
    int d = a.dim;
    // h * a.gen - b.gen * h = 0, h flattened row-major
    RatMat sys(a.n * a.n * d * d, d * d);
    int row = 0;
    for (int i = 1; i <= a.n; ++i)
        for (int j = 1; j <= a.n; ++j) {
            const RatMat& ga = a.gen(i, j);
            const RatMat& gb = b.gen(i, j);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) {
                    for (int k = 0; k < d; ++k) {
                        sys.at(row, r * d + k) += ga.at(k, c);
                        sys.at(row, k * d + c) -= gb.at(r, k);
                    }
                    ++row;
                }
        }
    RatMat null = nullspace(sys);
    for (int col = 0; col < null.cols(); ++col) {
        RatMat h(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) h.at(r, c) = null.at(r * d + c, col);
        if (inverse(h)) return h;
    }
    // single solutions may be singular while a combination is not; try a sum
    if (null.cols() > 1) {
        RatMat h(d, d);
        for (int col = 0; col < null.cols(); ++col)
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) h.at(r, c) += null.at(r * d + c, col) * (col + 1);
        if (inverse(h)) return h;
    }
    return std::nullopt;
}

std::optional<RatMat> compress_to_basis(const SparseOp<Rat>& op, const RatMat& basis) {
    RatMat ob = apply_dense(op, basis);
    auto c = solve_exact(basis, ob);
    if (!c) return std::nullopt;
    if (!(basis * *c == ob)) return std::nullopt;
    return c;
}

RatMat left_inverse(const RatMat& basis) {
    RatMat bt = basis.transpose();
    auto inv = inverse(bt * basis);
    if (!inv) throw std::invalid_argument("basis does not have full column rank");
    return *inv * bt;
}

}  // namespace casimir

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "casimir/config.hpp"
#include "casimir/rational.hpp"

namespace casimir {

// Multi-index into (C^n)^{tensor legs}: leg 0 is the most significant digit.
using TIdx = std::uint32_t;

// The ring unit, needed to materialize identity and permutation operators.
// Rings whose unit needs runtime data (UEA coefficients carry a rank) build
// identities through scalar_op instead.
template <class R>
R ring_one();
template <>
inline Rat ring_one<Rat>() { return Rat(1); }

// Sparse operator on (C^n)^{tensor legs} with entries in a ring R.
// R must be default-constructible to its zero and provide +, -, *, ==,
// ring_zero, ring_scale.
template <class R>
class SparseOp {
  public:
    using Row = std::map<TIdx, R>;
    using Entries = std::map<TIdx, Row>;

    SparseOp(int n, int legs) : n_(n), legs_(legs) {
        if (n < 1 || legs < 0) throw std::invalid_argument("bad tensor shape");
        std::uint64_t d = 1;
        for (int l = 0; l < legs; ++l) {
            d *= static_cast<std::uint64_t>(n);
            if (d > limits().tensor_bound) throw TensorBoundExceeded(d, limits().tensor_bound);
        }
        dim_ = d;
    }

    static SparseOp identity_op(int n, int legs) {
        SparseOp a(n, legs);
        for (TIdx i = 0; i < a.dim_; ++i) a.e_[i].emplace(i, ring_one<R>());
        return a;
    }

    static SparseOp scalar_op(int n, int legs, const R& v) {
        SparseOp a(n, legs);
        if (!ring_zero(v))
            for (TIdx i = 0; i < a.dim_; ++i) a.e_[i].emplace(i, v);
        return a;
    }

    // Operator permuting tensor legs: the vector at leg l moves to leg sigma[l].
    static SparseOp leg_permutation(int n, const std::vector<int>& sigma) {
        SparseOp a(n, static_cast<int>(sigma.size()));
        int legs = a.legs_;
        for (TIdx c = 0; c < a.dim_; ++c) {
            TIdx r = 0;
            for (int l = 0; l < legs; ++l) {
                int digit = a.digit(c, l);
                r += static_cast<TIdx>(digit) * a.stride(sigma[l]);
            }
            a.e_[r].emplace(c, ring_one<R>());
        }
        return a;
    }

    int rank_n() const { return n_; }
    int leg_count() const { return legs_; }
    std::uint64_t dim() const { return dim_; }
    const Entries& entries() const { return e_; }

    int digit(TIdx idx, int leg) const { return static_cast<int>((idx / stride(leg)) % n_); }
    TIdx stride(int leg) const {
        TIdx s = 1;
        for (int l = legs_ - 1; l > leg; --l) s *= static_cast<TIdx>(n_);
        return s;
    }

    void add(TIdx r, TIdx c, const R& v) {
        if (ring_zero(v)) return;
        auto& row = e_[r];
        auto [it, fresh] = row.emplace(c, v);
        if (!fresh) {
            it->second = it->second + v;
            if (ring_zero(it->second)) {
                row.erase(it);
                if (row.empty()) e_.erase(r);
            }
        }
    }

    const R* entry(TIdx r, TIdx c) const {
        auto ri = e_.find(r);
        if (ri == e_.end()) return nullptr;
        auto ci = ri->second.find(c);
        return ci == ri->second.end() ? nullptr : &ci->second;
    }

    SparseOp operator+(const SparseOp& o) const {
        check_shape(o);
        SparseOp a = *this;
        for (const auto& [r, row] : o.e_)
            for (const auto& [c, v] : row) a.add(r, c, v);
        return a;
    }

    SparseOp operator-(const SparseOp& o) const {
        check_shape(o);
        SparseOp a = *this;
        for (const auto& [r, row] : o.e_)
            for (const auto& [c, v] : row) a.add(r, c, -v);
        return a;
    }

    SparseOp operator*(const SparseOp& o) const {
        check_shape(o);
        SparseOp a(n_, legs_);
        for (const auto& [r, row] : e_)
            for (const auto& [k, v] : row) {
                auto mid = o.e_.find(k);
                if (mid == o.e_.end()) continue;
                for (const auto& [c, w] : mid->second) a.add(r, c, v * w);
            }
        return a;
    }

    SparseOp scale(const Rat& k) const {
        SparseOp a(n_, legs_);
        if (sgn(k) == 0) return a;
        for (const auto& [r, row] : e_)
            for (const auto& [c, v] : row) a.e_[r].emplace(c, ring_scale(v, k));
        return a;
    }

    SparseOp transpose() const {
        SparseOp a(n_, legs_);
        for (const auto& [r, row] : e_)
            for (const auto& [c, v] : row) a.e_[c].emplace(r, v);
        return a;
    }

    bool is_zero() const { return e_.empty(); }

    bool operator==(const SparseOp& o) const {
        return n_ == o.n_ && legs_ == o.legs_ && e_ == o.e_;
    }
    bool operator!=(const SparseOp& o) const { return !(*this == o); }

    R trace() const {
        R t{};
        for (const auto& [r, row] : e_) {
            auto it = row.find(r);
            if (it != row.end()) t = t + it->second;
        }
        return t;
    }

    std::uint64_t entry_count() const {
        std::uint64_t c = 0;
        for (const auto& [r, row] : e_) c += row.size();
        return c;
    }

  private:
    template <class S>
    friend SparseOp<S> tensor(const SparseOp<S>&, const SparseOp<S>&);
    template <class S>
    friend SparseOp<S> lift_offset(const SparseOp<S>&, int, int);

    void check_shape(const SparseOp& o) const {
        if (n_ != o.n_ || legs_ != o.legs_) throw std::invalid_argument("tensor shape mismatch");
    }

    int n_, legs_;
    std::uint64_t dim_;
    Entries e_;
};

// a acting on the first block of legs, b on the second.
template <class R>
SparseOp<R> tensor(const SparseOp<R>& a, const SparseOp<R>& b) {
    SparseOp<R> t(a.n_, a.legs_ + b.legs_);
    for (const auto& [ra, rowa] : a.e_)
        for (const auto& [ca, va] : rowa)
            for (const auto& [rb, rowb] : b.e_)
                for (const auto& [cb, vb] : rowb)
                    t.e_[static_cast<TIdx>(ra * b.dim_ + rb)].emplace(
                        static_cast<TIdx>(ca * b.dim_ + cb), va * vb);
    return t;
}

// Identity on `before` fresh legs in front and `after` fresh legs behind.
template <class R>
SparseOp<R> lift_offset(const SparseOp<R>& a, int before, int after) {
    SparseOp<R> t(a.n_, before + a.legs_ + after);
    std::uint64_t pre = 1, post = 1;
    for (int l = 0; l < before; ++l) pre *= a.n_;
    for (int l = 0; l < after; ++l) post *= a.n_;
    for (const auto& [r, row] : a.e_)
        for (const auto& [c, v] : row)
            for (std::uint64_t p = 0; p < pre; ++p)
                for (std::uint64_t q = 0; q < post; ++q)
                    t.e_[static_cast<TIdx>((p * a.dim_ + r) * post + q)].emplace(
                        static_cast<TIdx>((p * a.dim_ + c) * post + q), v);
    return t;
}

// Entrywise change of coefficient ring.
template <class S, class R, class F>
SparseOp<S> map_entries(const SparseOp<R>& a, F f) {
    SparseOp<S> t(a.rank_n(), a.leg_count());
    for (const auto& [r, row] : a.entries())
        for (const auto& [c, v] : row) t.add(r, c, f(v));
    return t;
}

}  // namespace casimir

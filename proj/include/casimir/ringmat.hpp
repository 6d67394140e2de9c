#pragma once

#include <stdexcept>
#include <vector>

#include "casimir/ratmat.hpp"
#include "casimir/tensorop.hpp"

namespace casimir {

// Dense square-or-rectangular matrix with entries in a ring R (zero by default
// construction; +, -, *, ==, ring_zero, ring_scale as in Poly).
template <class R>
class RingMat {
  public:
    RingMat() : rows_(0), cols_(0) {}
    RingMat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    R& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const R& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    RingMat operator+(const RingMat& o) const {
        check(o);
        RingMat m(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
        return m;
    }
    RingMat operator-(const RingMat& o) const {
        check(o);
        RingMat m(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
        return m;
    }
    RingMat operator*(const RingMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
        RingMat m(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const R& v = at(i, k);
                if (ring_zero(v)) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const R& w = o.at(k, j);
                    if (!ring_zero(w)) m.at(i, j) = m.at(i, j) + v * w;
                }
            }
        return m;
    }
    RingMat scale(const Rat& k) const {
        RingMat m(rows_, cols_);
        if (sgn(k) == 0) return m;
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = ring_scale(a_[i], k);
        return m;
    }
    RingMat transpose() const {
        RingMat m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }
    bool is_zero() const {
        for (const R& v : a_)
            if (!ring_zero(v)) return false;
        return true;
    }
    bool operator==(const RingMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const RingMat& o) const { return !(*this == o); }
    R trace() const {
        R t{};
        for (int i = 0; i < rows_ && i < cols_; ++i) t = t + at(i, i);
        return t;
    }

  private:
    void check(const RingMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    }
    int rows_, cols_;
    std::vector<R> a_;
};

template <class R>
RingMat<R> mul(const RatMat& a, const RingMat<R>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
    RingMat<R> m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& v = a.at(i, k);
            if (sgn(v) == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                m.at(i, j) = m.at(i, j) + ring_scale(b.at(k, j), v);
        }
    return m;
}

template <class R>
RingMat<R> mul(const RingMat<R>& a, const RatMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
    RingMat<R> m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const R& v = a.at(i, k);
            if (ring_zero(v)) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (sgn(b.at(k, j)) != 0) m.at(i, j) = m.at(i, j) + ring_scale(v, b.at(k, j));
        }
    return m;
}

// op as a dense ring matrix (small spaces only).
template <class R>
RingMat<R> to_ringmat(const SparseOp<R>& op) {
    RingMat<R> m(static_cast<int>(op.dim()), static_cast<int>(op.dim()));
    for (const auto& [r, row] : op.entries())
        for (const auto& [c, v] : row) m.at(static_cast<int>(r), static_cast<int>(c)) = v;
    return m;
}

inline RatMat to_ratmat(const SparseOp<Rat>& op) {
    RatMat m(static_cast<int>(op.dim()), static_cast<int>(op.dim()));
    for (const auto& [r, row] : op.entries())
        for (const auto& [c, v] : row) m.at(static_cast<int>(r), static_cast<int>(c)) = v;
    return m;
}

// op * b with b rational and op sparse.
template <class R>
RingMat<R> apply_dense(const SparseOp<R>& op, const RatMat& b) {
    if (op.dim() != static_cast<std::uint64_t>(b.rows()))
        throw std::invalid_argument("shape mismatch");
    RingMat<R> m(b.rows(), b.cols());
    for (const auto& [r, row] : op.entries())
        for (const auto& [k, v] : row)
            for (int j = 0; j < b.cols(); ++j) {
                const Rat& w = b.at(static_cast<int>(k), j);
                if (sgn(w) != 0)
                    m.at(static_cast<int>(r), j) = m.at(static_cast<int>(r), j) + ring_scale(v, w);
            }
    return m;
}

inline RatMat apply_dense(const SparseOp<Rat>& op, const RatMat& b) {
    if (op.dim() != static_cast<std::uint64_t>(b.rows()))
        throw std::invalid_argument("shape mismatch");
    RatMat m(b.rows(), b.cols());
    for (const auto& [r, row] : op.entries())
        for (const auto& [k, v] : row)
            for (int j = 0; j < b.cols(); ++j) {
                const Rat& w = b.at(static_cast<int>(k), j);
                if (sgn(w) != 0) m.at(static_cast<int>(r), j) += v * w;
            }
    return m;
}

}  // namespace casimir

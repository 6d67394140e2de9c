#pragma once

#include <optional>
#include <vector>

#include "casimir/poly.hpp"
#include "casimir/rational.hpp"

namespace casimir {

// Dense exact rational matrix.
class RatMat {
  public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, Rat(0)) {}
    static RatMat identity(int d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat operator*(const RatMat& o) const;
    RatMat scale(const Rat& k) const;
    RatMat transpose() const;
    bool is_zero() const;
    bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const RatMat& o) const { return !(*this == o); }

    Rat trace() const;

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

RatMat kron(const RatMat& a, const RatMat& b);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref_inplace(RatMat& m);
int rank_of(RatMat m);

// Exact solution of A X = B (any shape); nullopt if inconsistent. Free
// variables, if any, are set to zero.
std::optional<RatMat> solve_exact(const RatMat& a, const RatMat& b);
RatMat nullspace(const RatMat& a);  // columns span ker A
std::optional<RatMat> inverse(const RatMat& a);

// Monic exact minimal polynomial via per-vector Krylov annihilators joined by
// lcm; degree_cap allows early exit when an upper bound is known a priori.
RatPoly minimal_poly(const RatMat& a, int degree_cap = -1);
RatMat eval_poly(const RatPoly& p, const RatMat& a);

RatPoly ratpoly_monic(const RatPoly& p);
RatPoly ratpoly_gcd(RatPoly a, RatPoly b);
RatPoly ratpoly_lcm(const RatPoly& a, const RatPoly& b);
std::pair<RatPoly, RatPoly> ratpoly_divmod(const RatPoly& a, const RatPoly& b);

}  // namespace casimir

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "casimir/ratmat.hpp"
#include "casimir/ringmat.hpp"
#include "casimir/tensorop.hpp"

namespace casimir {

class UEAElement;

// Integer weight with non-increasing components.
class DominantWeight {
  public:
    DominantWeight(std::vector<long> comps);
    const std::vector<long>& comps() const { return c_; }
    int n() const { return static_cast<int>(c_.size()); }
    long operator[](int i) const { return c_[i]; }  // 0-based
    long spread() const { return c_.front() - c_.back(); }
    long total() const;
    bool is_partition() const { return c_.back() >= 0; }
    bool operator==(const DominantWeight& o) const { return c_ == o.c_; }
    std::string to_string() const;

  private:
    std::vector<long> c_;
};

long weyl_dim(const DominantWeight& lambda);

// Contents (column minus row) of the row-filled standard tableau, in filling
// order. The partition may have trailing zeros.
std::vector<long> tableau_contents(const std::vector<long>& shape);

// Signed permutation enumeration: calls f(sigma, sign) for every sigma in the
// full symmetric group on `elems` (the remaining positions permute).
void for_each_permutation(int size, const std::function<void(const std::vector<int>&, int)>& f);

SparseOp<Rat> antisymmetrizer(int s, int n);

// Row-symmetrizer times column-antisymmetrizer of the row-filled tableau,
// scaled to an exact idempotent. Partitions with more rows than n give the
// zero operator.
SparseOp<Rat> young_symmetrizer(const std::vector<long>& shape, int n);

// Sum over legs of the unit matrix e_{ij} acting on one leg: the M-fold
// coproduct image of E_ij on (C^n)^{tensor M}.
SparseOp<Rat> diagonal_generator(int n, int legs, int i, int j);

struct Representation {
    DominantWeight weight;
    int n;
    int dim;
    std::map<std::pair<int, int>, RatMat> matrices;       // (i,j) 1-based
    std::vector<std::vector<long>> basis_weights;

    const RatMat& gen(int i, int j) const { return matrices.at({i, j}); }
};

// Irreducible representation on the image of the Young symmetrizer inside the
// tensor power, basis ordered by descending weight. Weights with a nonzero
// last component are reduced to a partition plus a determinant-power twist;
// repeated partition builds are served from a process-wide cache.
Representation build_rep(const DominantWeight& lambda, int n);

// The symmetrizer-image construction itself, for a partition (last component
// zero allowed to be positive too, but no reduction or caching is applied).
// Matrices are expressed in the young_image_basis columns.
Representation tensor_power_rep(const DominantWeight& lambda, int n);

// Weight-blocked pivot-column basis of the symmetrizer image: columns span
// the image of young_symmetrizer, ordered by descending weight; rows are
// indexed by tensor multi-indices.
RatMat young_image_basis(const DominantWeight& lambda, int n);

// The closed-form tridiagonal gl_2 representation.
Representation gl2_rep(const DominantWeight& lambda);

// Composition with the automorphism X -> -X^T: matrices pi(E_ij) -> -pi(E_ji).
// Basis order is inherited from the source (weights negate).
Representation dual_star(const Representation& rep);

// Tensor with the k-th power of the determinant character: adds k to every
// diagonal generator and basis weight.
Representation twist_rep(const Representation& rep, long k);

// pi(x) for an enveloping-algebra element, by multiplying generator matrices.
RatMat rep_apply(const Representation& rep, const UEAElement& x);

// Invertible h with h * a.gen = b.gen * h for all generators, if one exists.
std::optional<RatMat> solve_intertwiner(const Representation& a, const Representation& b);

// Columns of basis span a subspace invariant under op; returns the matrix of
// op restricted to that basis, or nullopt if op leaves the span.
std::optional<RatMat> compress_to_basis(const SparseOp<Rat>& op, const RatMat& basis);
template <class R>
std::optional<RingMat<R>> compress_to_basis_ring(const SparseOp<R>& op, const RatMat& basis,
                                                 const RatMat& left_inv) {
    RingMat<R> ob = apply_dense(op, basis);
    RingMat<R> c = mul(left_inv, ob);
    if (!(mul(basis, c) == ob)) return std::nullopt;
    return c;
}

// L with L * basis = identity; basis must have full column rank.
RatMat left_inverse(const RatMat& basis);

}  // namespace casimir

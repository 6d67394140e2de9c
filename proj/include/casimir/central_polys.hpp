#pragma once

#include <map>
#include <vector>

#include "casimir/irreps.hpp"
#include "casimir/noncomm_linalg.hpp"
#include "casimir/weight_poly.hpp"

namespace casimir {

// Matrix of the split Casimir acting through rep on the matrix factor:
// entry (r,s) = sum_{ij} pi(E_ji)_{rs} * E_ij. Entries are constant in u.
UEAMatrix braided_casimir(const Representation& rep);

enum class CentralKind { ShiftedDeterminant, Characteristic };

struct CentralPolynomial {
    DominantWeight weight;
    CentralKind kind;
    UPoly poly;
    std::map<int, bool> centrality;  // u-degree -> coefficient is central

    bool all_central() const {
        for (const auto& [deg, ok] : centrality)
            if (!ok) return false;
        return true;
    }
};

// Column determinant of braided_casimir + u - diag(dim-1, ..., 0). The basis
// must be ordered by non-ascending weight so the diagonal shift is aligned
// with the highest weight vector first; throws std::invalid_argument if not.
// The centrality report is filled coefficient by coefficient.
CentralPolynomial shifted_determinant(const Representation& rep);

// Harish-Chandra image coefficient by coefficient; NonCentralError if any
// u-coefficient fails the centrality test.
HCImagePoly hc_image_poly(const UPoly& p);

// Evaluate every coefficient at a concrete weight.
RatPoly hc_eval(const HCImagePoly& hc, const std::vector<Rat>& mu);

// The traceless shift braided_casimir - (d/n) Delta_1 * id, d = |weight|. The
// matrix is built a second time from the dual-basis pairing over sl_n, with
// H_i = E[i,i]-E[i+1,i+1] against (E[1,1]+...+E[i,i]) - (i/n) Delta_1, and the
// two constructions are compared entrywise (logic_error on mismatch).
UEAMatrix sln_casimir_element(const Representation& rep);

// The split Casimir as an exact rational matrix on V_mu (x) V_lambda:
// sum_{ij} kron(pi_mu(E_ij), pi_lambda(E_ji)). Both representations must
// share the same rank.
RatMat casimir_action(const Representation& rep_mu, const Representation& rep_lambda);

// Representation for a concrete dominant weight used in sampling: the closed
// tridiagonal form for n=2; for n>=3 the cheaper of the tensor-power
// construction for the weight itself or the dual of its reversed negation.
Representation sample_rep(const DominantWeight& mu);

// The two rank-2 closed-form families, as polynomials in u whose coefficients
// are polynomials in (mu1, mu2).
enum class Gl2Kind { D, P };

// Affine parts of the linear factors: factor k (k = 0..spread) multiplies out
// as (u + shift_k) for kind D and (-u + shift_k) for kind P, with
//   D: shift_k = (l1-k) mu1 + (l2+k) mu2 - k
//   P: shift_k = (l1-k) mu1 + (l2+k) mu2 - k(spread+1-k).
// For kind P the shifts are exactly the roots in u.
std::vector<WeightPolynomial> gl2_hc_shifts(Gl2Kind kind, const DominantWeight& lambda);

// The expanded product of the linear factors above.
HCImagePoly gl2_hc_formula(Gl2Kind kind, const DominantWeight& lambda);

// Exact expansion check of the square-root closed form for kind D at rank 2:
// verifies the enveloping-algebra discriminant identity
// (E11-E22-1)^2 + 4 E12 E21 = (Delta1-1)^2 - 4 Delta2, that its HC image is
// (mu1-mu2+1)^2, that each factor u + d/2*(mu1+mu2) - m/2 + (m-2k)/2 * rho
// with rho -> mu1-mu2+1 equals the k-th linear factor termwise, and that the
// product equals gl2_hc_formula(D, lambda).
bool gl2_sqrt_form_check(const DominantWeight& lambda);

struct InterpolationResult {
    HCImagePoly hc;
    std::vector<DominantWeight> samples_used;
    std::vector<DominantWeight> samples_discarded;  // annihilator degree < dim
    int holdouts_checked = 0;
};

// Recover the central characteristic polynomial at the Harish-Chandra level:
// for each sample mu the minimal polynomial of casimir_action(mu, lambda) is
// computed exactly; samples where its degree falls below dim V_lambda are
// discarded and reported. Each u-coefficient is interpolated as a polynomial
// in mu of total degree <= degree_bound - k (degree_bound < 0 selects
// dim V_lambda). The output is normalized so the leading coefficient is
// (-1)^dim. The trailing samples are held out of the solve and verified by
// exact annihilation. Throws std::invalid_argument on a degenerate or
// insufficient sample set. Empty mu_samples selects a built-in grid
// (rank 2 and 3 only).
InterpolationResult charpoly_interpolate(const DominantWeight& lambda, int n,
                                         std::vector<DominantWeight> mu_samples = {},
                                         int degree_bound = -1);

// True iff sum_k hc_k(mu) * casimir_action(mu, lambda)^k = 0 exactly.
bool verify_annihilation(const DominantWeight& lambda, const DominantWeight& mu,
                         const HCImagePoly& hc);

struct BasisScan {
    std::vector<int> order;          // basis index occupying each diagonal slot
    std::map<int, bool> centrality;  // u-degree -> coefficient is central
    bool all_central = false;
};

struct ScanReport {
    DominantWeight weight;
    std::vector<std::vector<long>> basis_weights;
    BasisScan default_basis;
    bool exhaustive = false;
    long permutations_tried = 0;
    long permutations_all_central = 0;
    std::vector<BasisScan> all_central_orders;  // capped at store_cap
};

// Experimental centrality scan of the shifted determinant over basis
// orderings. The default weight-descending order is always reported;
// exhaustive mode permutes the basis (dim <= 6 only) and counts orders whose
// coefficients are all central. Records evidence, asserts nothing.
ScanReport conjecture_scan(const DominantWeight& lambda, bool exhaustive = false,
                           int store_cap = 20);

}  // namespace casimir

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "casimir/config.hpp"
#include "casimir/rational.hpp"
#include "casimir/weight_poly.hpp"

namespace casimir {

// Generators E[i,j] of gl_n are totally ordered for the PBW basis as:
// lowering E[i,j] (i > j) in lexicographic (i,j) order, then diagonal E[i,i]
// by i, then raising E[i,j] (i < j) in lexicographic order. Monomials are
// written with factors sorted by this order, so raising generators always sit
// rightmost in a normal form.
int pbw_gen_count(int n);
int pbw_gen_index(int n, int i, int j);                 // 0-based position
std::pair<int, int> pbw_gen_pair(int n, int idx);

// Sorted (generator index, exponent) pairs; the empty monomial is the unit.
using Mono = std::vector<std::pair<std::uint16_t, std::uint32_t>>;

// Element of U(gl_n) in normal form: a rational combination of PBW monomials.
// All arithmetic keeps normal form; products straighten via the commutation
// relation [E_ab, E_cd] = d_bc E_ad - d_da E_cb.
class UEAElement {
  public:
    explicit UEAElement(int n);
    static UEAElement constant(int n, const Rat& c);
    static UEAElement generator(int n, int i, int j);
    static UEAElement delta1(int n);    // sum of E[i,i]
    static UEAElement delta2();         // (E[1,1]-1)E[2,2] - E[1,2]E[2,1], rank 2
    static UEAElement casimir_t(int n); // sum of E[i,j]E[j,i]

    int rank() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Mono, Rat>& terms() const { return terms_; }

    // Total PBW degree of the highest-degree monomial, -1 for zero.
    int degree() const;

    UEAElement& add_term(const Mono& m, const Rat& c);
    UEAElement& add_scaled(const UEAElement& o, const Rat& c);

    UEAElement operator+(const UEAElement& o) const;
    UEAElement operator-(const UEAElement& o) const;
    UEAElement operator-() const;
    UEAElement operator*(const UEAElement& o) const;
    UEAElement scale(const Rat& k) const;
    UEAElement pow(unsigned e) const;

    bool operator==(const UEAElement& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const UEAElement& o) const { return !(*this == o); }

  private:
    int n_;
    std::map<Mono, Rat> terms_;
};

inline bool ring_zero(const UEAElement& x) { return x.is_zero(); }
inline UEAElement ring_scale(const UEAElement& x, const Rat& k) { return x.scale(k); }

UEAElement commutator_generators(int n, int i1, int j1, int i2, int j2);
UEAElement commutator(const UEAElement& x, const UEAElement& y);

// True iff x commutes with every generator E[i,j].
bool is_central(const UEAElement& x);

// Eigenvalue functional on a highest-weight vector of weight mu: drop every
// normal-form monomial containing an off-diagonal generator, then substitute
// E[i,i] -> mu_i. No shift is applied anywhere.
WeightPolynomial hc_functional(const UEAElement& x);

// Harish-Chandra image; rejects non-central input with NonCentralError.
WeightPolynomial hc_image(const UEAElement& x);

// Text grammar:
//   element  := term (('+'|'-') term)*
//   term     := rational ('*' monomial)? | monomial
//   monomial := gen+
//   gen      := 'E[' int ',' int ']' ('^' posint)?
//   rational := int ('/' posint)?
// Errors carry the offending position.
UEAElement parse_element(const std::string& text, int n);
std::string format_element(const UEAElement& x);

// Cache statistics for the normal-ordering memo (monomial-pair keyed).
std::size_t normal_order_cache_size();
void clear_normal_order_cache();

}  // namespace casimir

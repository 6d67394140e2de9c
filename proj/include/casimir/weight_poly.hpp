#pragma once

#include <map>
#include <string>
#include <vector>

#include "casimir/poly.hpp"
#include "casimir/rational.hpp"

namespace casimir {

// Polynomial in the highest-weight coordinates mu_1..mu_n with exact rational
// coefficients. Exponent vectors have fixed length n.
class WeightPolynomial {
  public:
    using Expo = std::vector<unsigned>;

    WeightPolynomial() : nvars_(0) {}
    explicit WeightPolynomial(int nvars) : nvars_(nvars) {}

    static WeightPolynomial constant(int nvars, const Rat& c);
    static WeightPolynomial variable(int nvars, int k);  // mu_k, 1-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }
    int total_degree() const;

    WeightPolynomial& add_term(const Expo& e, const Rat& c);

    WeightPolynomial operator+(const WeightPolynomial& o) const;
    WeightPolynomial operator-(const WeightPolynomial& o) const;
    WeightPolynomial operator-() const;
    WeightPolynomial operator*(const WeightPolynomial& o) const;
    WeightPolynomial scale(const Rat& k) const;

    Rat eval(const std::vector<Rat>& mu) const;

    bool operator==(const WeightPolynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const WeightPolynomial& o) const { return !(*this == o); }

    std::string to_string() const;  // e.g. "mu1^2*mu2 - 3/2*mu2"

  private:
    void check_same(const WeightPolynomial& o) const;
    int nvars_;
    std::map<Expo, Rat> terms_;
};

inline bool ring_zero(const WeightPolynomial& p) { return p.is_zero(); }
inline WeightPolynomial ring_scale(const WeightPolynomial& p, const Rat& k) {
    return p.scale(k);
}

// Polynomial in u whose coefficients are weight polynomials: the shape of a
// Harish-Chandra image of a u-polynomial with central coefficients.
using HCImagePoly = Poly<WeightPolynomial>;

}  // namespace casimir

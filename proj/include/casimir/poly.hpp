#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "casimir/rational.hpp"

namespace casimir {

// Univariate polynomial over a commutative-in-u ring R: the indeterminate is
// central, coefficients need not commute among themselves. R must provide
// +, -, *, unary -, operator==, and the free functions ring_zero / ring_scale.
template <class R>
class Poly {
  public:
    Poly() = default;

    static Poly monomial(int deg, R coeff) {
        Poly p;
        if (deg < 0) throw std::invalid_argument("negative degree");
        if (!ring_zero(coeff)) p.c_.emplace(deg, std::move(coeff));
        return p;
    }
    static Poly constant(R coeff) { return monomial(0, std::move(coeff)); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

    const R* coeff(int deg) const {
        auto it = c_.find(deg);
        return it == c_.end() ? nullptr : &it->second;
    }
    R coeff_or(int deg, R zero) const {
        auto it = c_.find(deg);
        return it == c_.end() ? std::move(zero) : it->second;
    }

    const std::map<int, R>& coeffs() const { return c_; }

    Poly& add_term(int deg, const R& coeff) {
        if (ring_zero(coeff)) return *this;
        auto [it, fresh] = c_.emplace(deg, coeff);
        if (!fresh) {
            it->second = it->second + coeff;
            if (ring_zero(it->second)) c_.erase(it);
        }
        return *this;
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [d, v] : o.c_) r.add_term(d, v);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (const auto& [d, v] : o.c_) r.add_term(d, -v);
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (const auto& [d, v] : c_) r.c_.emplace(d, -v);
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [da, va] : c_)
            for (const auto& [db, vb] : o.c_) r.add_term(da + db, va * vb);
        return r;
    }

    Poly scale(const Rat& k) const {
        Poly r;
        if (ring_zero(k)) return r;
        for (const auto& [d, v] : c_) r.c_.emplace(d, ring_scale(v, k));
        return r;
    }

    // u -> -u
    Poly flip_sign() const {
        Poly r;
        for (const auto& [d, v] : c_) r.c_.emplace(d, d % 2 ? -v : v);
        return r;
    }

    // Evaluation at a central scalar.
    R eval(const Rat& x, R zero) const {
        R acc = std::move(zero);
        Rat p = 1;
        int last = 0;
        for (const auto& [d, v] : c_) {
            for (; last < d; ++last) p *= x;
            acc = acc + ring_scale(v, p);
        }
        return acc;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

  private:
    std::map<int, R> c_;
};

template <class R>
bool ring_zero(const Poly<R>& p) { return p.is_zero(); }
template <class R>
Poly<R> ring_scale(const Poly<R>& p, const Rat& k) { return p.scale(k); }

using RatPoly = Poly<Rat>;

}  // namespace casimir

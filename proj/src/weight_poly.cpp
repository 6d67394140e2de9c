#include "casimir/weight_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace casimir {

WeightPolynomial WeightPolynomial::constant(int nvars, const Rat& c) {
    WeightPolynomial p(nvars);
    p.add_term(Expo(nvars, 0), c);
    return p;
}

WeightPolynomial WeightPolynomial::variable(int nvars, int k) {
    if (k < 1 || k > nvars) throw std::invalid_argument("variable index out of range");
    WeightPolynomial p(nvars);
    Expo e(nvars, 0);
    e[k - 1] = 1;
    p.add_term(e, 1);
    return p;
}

int WeightPolynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (unsigned x : e) s += static_cast<int>(x);
        if (s > d) d = s;
    }
    return d;
}

WeightPolynomial& WeightPolynomial::add_term(const Expo& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (sgn(c) == 0) return *this;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
    return *this;
}

void WeightPolynomial::check_same(const WeightPolynomial& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("weight polynomial variable count mismatch");
}

WeightPolynomial WeightPolynomial::operator+(const WeightPolynomial& o) const {
    check_same(o);
    WeightPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

WeightPolynomial WeightPolynomial::operator-(const WeightPolynomial& o) const {
    check_same(o);
    WeightPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, Rat(-c));
    return r;
}

WeightPolynomial WeightPolynomial::operator-() const {
    WeightPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rat(-c));
    return r;
}

WeightPolynomial WeightPolynomial::operator*(const WeightPolynomial& o) const {
    check_same(o);
    WeightPolynomial r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Expo e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, Rat(ca * cb));
        }
    return r;
}

WeightPolynomial WeightPolynomial::scale(const Rat& k) const {
    WeightPolynomial r(nvars_);
    if (sgn(k) == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rat(c * k));
    return r;
}

Rat WeightPolynomial::eval(const std::vector<Rat>& mu) const {
    if (static_cast<int>(mu.size()) != nvars_)
        throw std::invalid_argument("evaluation point length mismatch");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (unsigned p = 0; p < e[i]; ++p) t *= mu[i];
        acc += t;
    }
    return acc;
}

std::string WeightPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        bool any_var = false;
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) any_var = true;
        std::string coeff = rat_str(a);
        if (!any_var || coeff != "1") {
            out << coeff;
            if (any_var) out << "*";
        }
        bool started = false;
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (started) out << "*";
            out << "mu" << (i + 1);
            if (e[i] > 1) out << "^" << e[i];
            started = true;
        }
    }
    return out.str();
}

}  // namespace casimir

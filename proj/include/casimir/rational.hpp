#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace casimir {

using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Canonical "p/q" rendering; integers drop the "/q" part.
inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

// Accepts the grammar  int ('/' posint)?  with arbitrary-precision digits.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') ++pos;
    if (pos == s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw std::invalid_argument("malformed rational literal: " + s);
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) {
        if (s[pos] != '/')
            throw std::invalid_argument("malformed rational literal: " + s);
        ++pos;
        if (pos == s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw std::invalid_argument("malformed rational literal: " + s);
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos != s.size())
            throw std::invalid_argument("malformed rational literal: " + s);
    }
    Rat r(s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline bool ring_zero(const Rat& r) { return sgn(r) == 0; }
inline Rat ring_scale(const Rat& x, const Rat& c) { return Rat(x * c); }

}  // namespace casimir

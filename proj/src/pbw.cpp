#include "casimir/pbw.hpp"

#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace casimir {

EngineLimits& limits() {
    static EngineLimits instance;
    return instance;
}

namespace {

struct GenTables {
    std::vector<std::pair<int, int>> pair_of;
    std::vector<std::vector<int>> idx_of;  // [i-1][j-1]
};

const GenTables& tables(int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("rank out of range");
    static std::array<std::atomic<const GenTables*>, 65> slots{};
    static std::mutex mu;
    const GenTables* p = slots[n].load(std::memory_order_acquire);
    if (p) return *p;
    std::lock_guard lock(mu);
    p = slots[n].load(std::memory_order_relaxed);
    if (!p) {
        auto t = std::make_unique<GenTables>();
        t->idx_of.assign(n, std::vector<int>(n, -1));
        auto push = [&](int i, int j) {
            t->idx_of[i - 1][j - 1] = static_cast<int>(t->pair_of.size());
            t->pair_of.emplace_back(i, j);
        };
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j < i; ++j) push(i, j);
        for (int i = 1; i <= n; ++i) push(i, i);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) push(i, j);
        p = t.release();
        slots[n].store(p, std::memory_order_release);
    }
    return *p;
}

using Word = std::vector<std::uint16_t>;

Word mono_to_word(const Mono& m) {
    Word w;
    for (const auto& [g, e] : m)
        for (std::uint32_t k = 0; k < e; ++k) w.push_back(g);
    return w;
}

Mono word_to_mono(const Word& w) {
    Mono m;
    for (std::uint16_t g : w) {
        if (!m.empty() && m.back().first == g)
            ++m.back().second;
        else
            m.emplace_back(g, 1);
    }
    return m;
}

// Straighten an arbitrary generator word into normal form by adjacent
// transpositions; each swap of an out-of-order pair spawns the lower-degree
// bracket word, so the worklist terminates.
UEAElement straighten(int n, const Word& w0) {
    const GenTables& t = tables(n);
    UEAElement out(n);
    std::vector<std::pair<Rat, Word>> work;
    work.emplace_back(1, w0);
    while (!work.empty()) {
        auto [c, w] = std::move(work.back());
        work.pop_back();
        std::size_t k = 0;
        bool sorted = true;
        for (; k + 1 < w.size(); ++k)
            if (w[k] > w[k + 1]) {
                sorted = false;
                break;
            }
        if (sorted) {
            out.add_term(word_to_mono(w), c);
            continue;
        }
        auto [a, b] = t.pair_of[w[k]];
        auto [a2, b2] = t.pair_of[w[k + 1]];
        auto reduced = [&](int gi, int gj) {
            Word r;
            r.reserve(w.size() - 1);
            r.insert(r.end(), w.begin(), w.begin() + k);
            r.push_back(static_cast<std::uint16_t>(t.idx_of[gi - 1][gj - 1]));
            r.insert(r.end(), w.begin() + k + 2, w.end());
            return r;
        };
        // [E_ab, E_{a2 b2}] = d_{b a2} E_{a b2} - d_{b2 a} E_{a2 b}
        if (b == a2) work.emplace_back(c, reduced(a, b2));
        if (b2 == a) work.emplace_back(Rat(-c), reduced(a2, b));
        Word s = std::move(w);
        std::swap(s[k], s[k + 1]);
        work.emplace_back(std::move(c), std::move(s));
        if (work.size() + out.term_count() > limits().term_bound)
            throw TermBoundExceeded(limits().term_bound);
    }
    return out;
}

struct MemoKey {
    int n;
    Mono a, b;
    bool operator<(const MemoKey& o) const {
        return std::tie(n, a, b) < std::tie(o.n, o.a, o.b);
    }
};

std::map<MemoKey, UEAElement>& memo_map() {
    static std::map<MemoKey, UEAElement> m;
    return m;
}
std::shared_mutex& memo_mutex() {
    static std::shared_mutex m;
    return m;
}

// Normal-ordered product of two normal-form monomials, memoized: the result
// is canonical, so concurrent insertion of the same key is benign.
UEAElement mono_mul(int n, const Mono& a, const Mono& b) {
    if (a.empty()) {
        UEAElement r(n);
        r.add_term(b, 1);
        return r;
    }
    if (b.empty()) {
        UEAElement r(n);
        r.add_term(a, 1);
        return r;
    }
    if (a.back().first < b.front().first) {
        Mono m = a;
        m.insert(m.end(), b.begin(), b.end());
        UEAElement r(n);
        r.add_term(m, 1);
        return r;
    }
    if (a.back().first == b.front().first) {
        Mono m = a;
        m.back().second += b.front().second;
        m.insert(m.end(), b.begin() + 1, b.end());
        UEAElement r(n);
        r.add_term(m, 1);
        return r;
    }
    MemoKey key{n, a, b};
    {
        std::shared_lock lock(memo_mutex());
        auto it = memo_map().find(key);
        if (it != memo_map().end()) return it->second;
    }
    Word w = mono_to_word(a);
    Word wb = mono_to_word(b);
    w.insert(w.end(), wb.begin(), wb.end());
    UEAElement r = straighten(n, w);
    {
        std::unique_lock lock(memo_mutex());
        memo_map().emplace(std::move(key), r);
    }
    return r;
}

}  // namespace

std::size_t normal_order_cache_size() {
    std::shared_lock lock(memo_mutex());
    return memo_map().size();
}

void clear_normal_order_cache() {
    std::unique_lock lock(memo_mutex());
    memo_map().clear();
}

int pbw_gen_count(int n) { return n * n; }

int pbw_gen_index(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("generator index out of range");
    return tables(n).idx_of[i - 1][j - 1];
}

std::pair<int, int> pbw_gen_pair(int n, int idx) {
    if (idx < 0 || idx >= n * n) throw std::invalid_argument("generator id out of range");
    return tables(n).pair_of[idx];
}

UEAElement::UEAElement(int n) : n_(n) {
    if (n < 1 || n > 64) throw std::invalid_argument("rank out of range");
}

UEAElement UEAElement::constant(int n, const Rat& c) {
    UEAElement x(n);
    x.add_term({}, c);
    return x;
}

UEAElement UEAElement::generator(int n, int i, int j) {
    UEAElement x(n);
    Mono m{{static_cast<std::uint16_t>(pbw_gen_index(n, i, j)), 1}};
    x.add_term(m, 1);
    return x;
}

UEAElement UEAElement::delta1(int n) {
    UEAElement x(n);
    for (int i = 1; i <= n; ++i) x = x + generator(n, i, i);
    return x;
}

UEAElement UEAElement::delta2() {
    UEAElement e11 = generator(2, 1, 1), e22 = generator(2, 2, 2);
    UEAElement e12 = generator(2, 1, 2), e21 = generator(2, 2, 1);
    return (e11 - constant(2, 1)) * e22 - e12 * e21;
}

UEAElement UEAElement::casimir_t(int n) {
    UEAElement x(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) x = x + generator(n, i, j) * generator(n, j, i);
    return x;
}

int UEAElement::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (const auto& [g, e] : m) s += static_cast<int>(e);
        if (s > d) d = s;
    }
    return d;
}

UEAElement& UEAElement::add_term(const Mono& m, const Rat& c) {
    if (sgn(c) == 0) return *this;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
    if (terms_.size() > limits().term_bound) throw TermBoundExceeded(limits().term_bound);
    return *this;
}

UEAElement& UEAElement::add_scaled(const UEAElement& o, const Rat& c) {
    if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
    for (const auto& [m, v] : o.terms_) add_term(m, Rat(v * c));
    return *this;
}

UEAElement UEAElement::operator+(const UEAElement& o) const {
    UEAElement r = *this;
    r.add_scaled(o, 1);
    return r;
}

UEAElement UEAElement::operator-(const UEAElement& o) const {
    UEAElement r = *this;
    r.add_scaled(o, -1);
    return r;
}

UEAElement UEAElement::operator-() const {
    UEAElement r(n_);
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, Rat(-v));
    return r;
}

UEAElement UEAElement::operator*(const UEAElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
    UEAElement r(n_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_scaled(mono_mul(n_, ma, mb), Rat(ca * cb));
    return r;
}

UEAElement UEAElement::scale(const Rat& k) const {
    UEAElement r(n_);
    if (sgn(k) == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, Rat(v * k));
    return r;
}

UEAElement UEAElement::pow(unsigned e) const {
    UEAElement r = constant(n_, 1);
    for (unsigned k = 0; k < e; ++k) r = r * (*this);
    return r;
}

UEAElement commutator_generators(int n, int i1, int j1, int i2, int j2) {
    UEAElement r(n);
    if (j1 == i2) r = r + UEAElement::generator(n, i1, j2);
    if (j2 == i1) r = r - UEAElement::generator(n, i2, j1);
    return r;
}

UEAElement commutator(const UEAElement& x, const UEAElement& y) {
    return x * y - y * x;
}

bool is_central(const UEAElement& x) {
    int n = x.rank();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (!commutator(x, UEAElement::generator(n, i, j)).is_zero()) return false;
    return true;
}

WeightPolynomial hc_functional(const UEAElement& x) {
    int n = x.rank();
    WeightPolynomial p(n);
    for (const auto& [m, c] : x.terms()) {
        bool diagonal = true;
        WeightPolynomial::Expo e(n, 0);
        for (const auto& [g, exp] : m) {
            auto [i, j] = pbw_gen_pair(n, g);
            if (i != j) {
                diagonal = false;
                break;
            }
            e[i - 1] += exp;
        }
        if (diagonal) p.add_term(e, c);
    }
    return p;
}

WeightPolynomial hc_image(const UEAElement& x) {
    if (!is_central(x))
        throw NonCentralError("hc_image: element is not central; use hc_functional "
                              "for the bare eigenvalue functional");
    return hc_functional(x);
}

namespace {

struct Parser {
    const std::string& s;
    int n;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) +
                                    ": " + msg);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    mpz_class parse_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return mpz_class(s.substr(start, pos - start));
    }

    mpz_class parse_int() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            neg = s[pos] == '-';
            ++pos;
        }
        mpz_class v = parse_digits();
        return neg ? mpz_class(-v) : v;
    }

    Rat parse_rational() {
        mpz_class num = parse_int();
        if (accept('/')) {
            mpz_class den = parse_digits();
            if (den == 0) fail("zero denominator");
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        return Rat(num);
    }

    UEAElement parse_gen() {
        expect('E');
        expect('[');
        mpz_class iz = parse_int();
        expect(',');
        mpz_class jz = parse_int();
        expect(']');
        if (iz < 1 || iz > n || jz < 1 || jz > n) fail("generator index out of range");
        int i = static_cast<int>(iz.get_si()), j = static_cast<int>(jz.get_si());
        unsigned e = 1;
        if (accept('^')) {
            mpz_class ev = parse_digits();
            if (ev < 1 || ev > 1000000) fail("exponent out of range");
            e = static_cast<unsigned>(ev.get_ui());
        }
        UEAElement x(n);
        Mono m{{static_cast<std::uint16_t>(pbw_gen_index(n, i, j)), e}};
        x.add_term(m, 1);
        return x;
    }

    bool gen_ahead() {
        skip_ws();
        return pos < s.size() && s[pos] == 'E';
    }

    UEAElement parse_monomial() {
        UEAElement x = parse_gen();
        while (gen_ahead()) x = x * parse_gen();
        return x;
    }

    UEAElement parse_term() {
        skip_ws();
        if (gen_ahead()) return parse_monomial();
        Rat c = parse_rational();
        if (accept('*')) return parse_monomial().scale(c);
        return UEAElement::constant(n, c);
    }

    UEAElement parse_element() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-') && !ahead_number()) {
            neg = s[pos] == '-';
            ++pos;
        }
        UEAElement x = parse_term();
        if (neg) x = -x;
        for (;;) {
            skip_ws();
            if (pos >= s.size()) break;
            if (s[pos] == '+') {
                ++pos;
                x = x + parse_term();
            } else if (s[pos] == '-') {
                ++pos;
                x = x - parse_term();
            } else {
                fail("expected '+' or '-'");
            }
        }
        return x;
    }

    // Distinguish a sign that belongs to a rational literal from a leading
    // term sign: "-3*E[1,1]" parses as a signed rational either way.
    bool ahead_number() {
        std::size_t p = pos + 1;
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
        return p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]));
    }
};

}  // namespace

UEAElement parse_element(const std::string& text, int n) {
    Parser p{text, n};
    return p.parse_element();
}

std::string format_element(const UEAElement& x) {
    if (x.is_zero()) return "0";
    int n = x.rank();
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        Rat a = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        std::string coeff = rat_str(a);
        if (m.empty()) {
            out << coeff;
            continue;
        }
        if (coeff != "1") out << coeff << "*";
        for (const auto& [g, e] : m) {
            auto [i, j] = pbw_gen_pair(n, g);
            out << "E[" << i << "," << j << "]";
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace casimir

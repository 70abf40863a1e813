#include "knotpos/laurent.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <vector>

namespace knotpos {

Rational Rational::of(long n, long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return Rational{n / g, d / g};
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

char var_char(Var v) {
    switch (v) {
    case Var::A: return 'A';
    case Var::t: return 't';
    case Var::z: return 'z';
    }
    return '?';
}

// ---- LaurentPoly1

LaurentPoly1 LaurentPoly1::constant(Var v, const Int& c, Grid g) { return monomial(v, 0, c, g); }

LaurentPoly1 LaurentPoly1::monomial(Var v, int quarter_exp, const Int& c, Grid g) {
    LaurentPoly1 p(v, g);
    p.add_term(quarter_exp, c);
    return p;
}

void LaurentPoly1::check_grid(int e) const {
    if (e % static_cast<int>(grid_) != 0)
        throw GridError(std::string("exponent off grid for variable ") + var_char(var_));
}

void LaurentPoly1::check_compatible(const LaurentPoly1& o) const {
    if (var_ != o.var_) throw GridError("variable mismatch in polynomial arithmetic");
}

Int LaurentPoly1::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly1::add_term(int e, const Int& c) {
    if (c == 0) return;
    check_grid(e);
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static Grid finer(Grid a, Grid b) {
    return static_cast<Grid>(std::gcd(static_cast<int>(a), static_cast<int>(b)));
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
    check_compatible(o);
    grid_ = finer(grid_, o.grid_);
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly1 LaurentPoly1::operator+(const LaurentPoly1& o) const {
    LaurentPoly1 r = *this;
    r += o;
    return r;
}

LaurentPoly1 LaurentPoly1::operator-() const {
    LaurentPoly1 r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly1 LaurentPoly1::operator-(const LaurentPoly1& o) const { return *this + (-o); }

LaurentPoly1 LaurentPoly1::operator*(const LaurentPoly1& o) const {
    check_compatible(o);
    LaurentPoly1 r(var_, finer(grid_, o.grid_));
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly1 LaurentPoly1::scaled(const Int& k) const {
    LaurentPoly1 r(var_, grid_);
    if (k == 0) return r;
    for (auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
    return r;
}

LaurentPoly1 LaurentPoly1::shifted(int q) const {
    LaurentPoly1 r(var_, grid_);
    for (auto& [e, c] : terms_) r.add_term(e + q, c);
    return r;
}

LaurentPoly1 LaurentPoly1::pow(unsigned k) const {
    LaurentPoly1 r = constant(var_, 1, grid_);
    LaurentPoly1 b = *this;
    while (k) {
        if (k & 1U) r = r * b;
        k >>= 1U;
        if (k) b = b * b;
    }
    return r;
}

LaurentPoly1 LaurentPoly1::divide_exact(const LaurentPoly1& d) const {
    check_compatible(d);
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly1 rem = *this;
    LaurentPoly1 quo(var_, finer(grid_, d.grid_));
    rem.grid_ = quo.grid_;
    auto [dlow, dlc] = *d.terms_.begin();
    int dspan = d.terms_.rbegin()->first - dlow;
    while (!rem.is_zero()) {
        auto [rlow, rlc] = *rem.terms_.begin();
        if (rem.terms_.rbegin()->first - rlow < dspan || rlc % dlc != 0)
            throw std::domain_error("polynomial division is not exact");
        Int q = rlc / dlc;
        int qe = rlow - dlow;
        quo.add_term(qe, q);
        for (auto& [e, c] : d.terms_) rem.add_term(e + qe, -q * c);
    }
    return quo;
}

LaurentPoly1 LaurentPoly1::remap(Var v, int factor, Grid g) const {
    LaurentPoly1 r(v, g);
    for (auto& [e, c] : terms_) r.add_term(e * factor, c);
    return r;
}

LaurentPoly1 LaurentPoly1::with_grid(Grid g) const {
    LaurentPoly1 r(var_, g);
    for (auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

DegreeInfo LaurentPoly1::degree_info() const {
    if (is_zero()) throw DegreeError("degree of the zero polynomial is undefined");
    DegreeInfo d;
    auto lo = terms_.begin();
    auto hi = terms_.rbegin();
    d.min_deg = Rational::of(lo->first, 4);
    d.max_deg = Rational::of(hi->first, 4);
    d.min_coeff = lo->second;
    d.lead_coeff = hi->second;
    d.second_coeff = coeff(lo->first + 4);
    return d;
}

std::string LaurentPoly1::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << mag.get_str() << '*' << var_char(var_) << "^(" << Rational::of(e, 4).str() << ')';
        first = false;
    }
    return os.str();
}

// ---- LaurentPoly2

LaurentPoly2 LaurentPoly2::constant(const Int& c) { return monomial(0, 0, c); }

LaurentPoly2 LaurentPoly2::monomial(int a, int z, const Int& c) {
    LaurentPoly2 p;
    p.add_term(a, z, c);
    return p;
}

Int LaurentPoly2::coeff(int a, int z) const {
    auto it = terms_.find({a, z});
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly2::add_term(int a, int z, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({a, z}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
    LaurentPoly2 r = *this;
    r += o;
    return r;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const { return *this + (-o); }

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
    LaurentPoly2 r;
    for (auto& [k1, c1] : terms_)
        for (auto& [k2, c2] : o.terms_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

LaurentPoly2 LaurentPoly2::pow(unsigned k) const {
    LaurentPoly2 r = constant(1);
    LaurentPoly2 b = *this;
    while (k) {
        if (k & 1U) r = r * b;
        k >>= 1U;
        if (k) b = b * b;
    }
    return r;
}

std::string LaurentPoly2::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << mag.get_str() << "*a^(" << k.first << ")*z^(" << k.second << ')';
        first = false;
    }
    return os.str();
}

LaurentPoly1 specialize(const LaurentPoly2& p, Target target) {
    if (target == Target::conway) {
        LaurentPoly1 r(Var::z, Grid::Whole);
        for (auto& [k, c] : p.terms()) r.add_term(4 * k.second, c);
        return r;
    }
    // alpha -> t^-1, z -> t^(1/2) - t^(-1/2); negative z powers are cleared by exact division
    int zmin = 0;
    for (auto& [k, c] : p.terms()) zmin = std::min(zmin, k.second);
    LaurentPoly1 zt(Var::t, Grid::Half);
    zt.add_term(2, 1);
    zt.add_term(-2, -1);
    std::map<int, LaurentPoly1> zpows;
    LaurentPoly1 r(Var::t, Grid::Half);
    for (auto& [k, c] : p.terms()) {
        int zp = k.second - zmin;
        auto it = zpows.find(zp);
        if (it == zpows.end()) it = zpows.emplace(zp, zt.pow(static_cast<unsigned>(zp))).first;
        r += it->second.shifted(-4 * k.first).scaled(c);
    }
    if (zmin < 0) r = r.divide_exact(zt.pow(static_cast<unsigned>(-zmin)));
    return r;
}

// ---- parsing

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*')) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(i) + ": " + what);
    }
    long read_int() {
        skip_ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected digits");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }
    // exponent in quarter units: accepts 3, -3, {-3}, (1/2), {1/2}
    int read_exponent() {
        skip_ws();
        char close = 0;
        if (i < s.size() && (s[i] == '{' || s[i] == '(')) close = s[i++] == '{' ? '}' : ')';
        long n = read_int();
        long d = 1;
        skip_ws();
        if (i < s.size() && s[i] == '/') {
            ++i;
            d = read_int();
        }
        skip_ws();
        if (close) {
            if (i >= s.size() || s[i] != close) fail("unbalanced exponent bracket");
            ++i;
        }
        if ((4 * n) % d != 0) fail("exponent not on quarter grid");
        return static_cast<int>(4 * n / d);
    }
    // returns variable letter or 0; alpha (UTF-8) folds to 'a'
    char read_var() {
        skip_ws();
        if (i >= s.size()) return 0;
        if (s.compare(i, 2, "\xCE\xB1") == 0) {
            i += 2;
            return 'a';
        }
        if (s.compare(i, 6, "\\alpha") == 0) {
            i += 6;
            return 'a';
        }
        char c = s[i];
        if (c == 'a' || c == 'A' || c == 't' || c == 'z') {
            ++i;
            return c;
        }
        return 0;
    }
};

template <class Fn>
void parse_terms(const std::string& text, Fn&& on_term) {
    Cursor cur{text};
    if (cur.done()) cur.fail("empty polynomial");
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        cur.skip_ws();
        if (cur.s[cur.i] == '+' || cur.s[cur.i] == '-') {
            sign = cur.s[cur.i] == '-' ? -1 : 1;
            ++cur.i;
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        first = false;
        cur.skip_ws();
        Int coeff = 1;
        bool had_coeff = false;
        if (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
            std::size_t j = cur.i;
            while (j < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[j]))) ++j;
            coeff = Int(cur.s.substr(cur.i, j - cur.i));
            cur.i = j;
            had_coeff = true;
        }
        std::map<char, int> exps;
        for (;;) {
            char v = cur.read_var();
            if (!v) break;
            int e = 4;
            cur.skip_ws();
            if (cur.i < cur.s.size() && cur.s[cur.i] == '^') {
                ++cur.i;
                e = cur.read_exponent();
            }
            exps[v] += e;
        }
        if (!had_coeff && exps.empty()) cur.fail("empty term");
        on_term(Int(sign * coeff), exps);
    }
}

} // namespace

LaurentPoly1 parse_poly1(const std::string& text, Var v) {
    char want = var_char(v);
    LaurentPoly1 p(v, Grid::Quarter);
    parse_terms(text, [&](const Int& c, const std::map<char, int>& exps) {
        int e = 0;
        for (auto& [name, q] : exps) {
            if (name != want && !(want == 'A' && name == 'a'))
                throw std::invalid_argument(std::string("unexpected variable ") + name);
            e += q;
        }
        p.add_term(e, c);
    });
    Grid g = Grid::Whole;
    for (auto& [e, c] : p.terms()) {
        if (e % 4 != 0) g = finer(g, e % 2 == 0 ? Grid::Half : Grid::Quarter);
    }
    return p.with_grid(g);
}

LaurentPoly2 parse_poly2(const std::string& text) {
    LaurentPoly2 p;
    parse_terms(text, [&](const Int& c, const std::map<char, int>& exps) {
        int a = 0, z = 0;
        for (auto& [name, q] : exps) {
            if (q % 4 != 0) throw std::invalid_argument("fractional exponent in two-variable polynomial");
            if (name == 'a' || name == 'A')
                a += q / 4;
            else if (name == 'z')
                z += q / 4;
            else
                throw std::invalid_argument(std::string("unexpected variable ") + name);
        }
        p.add_term(a, z, c);
    });
    return p;
}

} // namespace knotpos

#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace knotpos {

using Int = mpz_class;

enum class Var { A, t, z };

// Exponent step in quarter-units.
enum class Grid { Quarter = 1, Half = 2, Whole = 4 };

struct Rational {
    long num = 0;
    long den = 1;

    static Rational of(long n, long d);
    bool operator==(const Rational&) const = default;
    auto operator<=>(const Rational& o) const { return num * o.den <=> o.num * den; }
    Rational operator+(const Rational& o) const { return of(num * o.den + o.num * den, den * o.den); }
    Rational operator-(const Rational& o) const { return of(num * o.den - o.num * den, den * o.den); }
    Rational operator*(long k) const { return of(num * k, den); }
    std::string str() const;
};

class GridError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class DegreeError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

struct DegreeInfo {
    Rational min_deg;
    Rational max_deg;
    Int lead_coeff;   // at max_deg
    Int min_coeff;    // at min_deg
    Int second_coeff; // at min_deg + 1
};

// Sparse one-variable Laurent polynomial. Exponents are quarter-units of the variable.
class LaurentPoly1 {
  public:
    LaurentPoly1() = default;
    explicit LaurentPoly1(Var v, Grid g = Grid::Whole) : var_(v), grid_(g) {}

    static LaurentPoly1 constant(Var v, const Int& c, Grid g = Grid::Whole);
    // c * v^(q/4)
    static LaurentPoly1 monomial(Var v, int quarter_exp, const Int& c, Grid g = Grid::Whole);
    // c * v^k
    static LaurentPoly1 power(Var v, int k, const Int& c = 1, Grid g = Grid::Whole) {
        return monomial(v, 4 * k, c, g);
    }

    Var var() const { return var_; }
    Grid grid() const { return grid_; }
    const std::map<int, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // coefficient at v^(q/4)
    Int coeff(int quarter_exp) const;
    void add_term(int quarter_exp, const Int& c);

    LaurentPoly1 operator+(const LaurentPoly1& o) const;
    LaurentPoly1 operator-(const LaurentPoly1& o) const;
    LaurentPoly1 operator-() const;
    LaurentPoly1 operator*(const LaurentPoly1& o) const;
    LaurentPoly1& operator+=(const LaurentPoly1& o);
    LaurentPoly1 scaled(const Int& k) const;
    LaurentPoly1 shifted(int quarter_exp) const;
    LaurentPoly1 pow(unsigned k) const;
    bool operator==(const LaurentPoly1& o) const { return var_ == o.var_ && terms_ == o.terms_; }

    // Exact division; throws std::domain_error if not divisible.
    LaurentPoly1 divide_exact(const LaurentPoly1& d) const;

    // Reinterpret as another variable with e -> factor*e. Used for A -> t^(-1/4).
    LaurentPoly1 remap(Var v, int factor, Grid g) const;
    LaurentPoly1 with_grid(Grid g) const;

    DegreeInfo degree_info() const;

    std::string str() const;

  private:
    void check_grid(int quarter_exp) const;
    void check_compatible(const LaurentPoly1& o) const;

    Var var_ = Var::t;
    Grid grid_ = Grid::Whole;
    std::map<int, Int> terms_;
};

// Sparse polynomial in alpha and z with integer exponents.
class LaurentPoly2 {
  public:
    using Key = std::pair<int, int>; // (alpha exponent, z exponent)

    LaurentPoly2() = default;
    static LaurentPoly2 constant(const Int& c);
    static LaurentPoly2 monomial(int a, int z, const Int& c = 1);

    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(int a, int z) const;
    void add_term(int a, int z, const Int& c);

    LaurentPoly2 operator+(const LaurentPoly2& o) const;
    LaurentPoly2 operator-(const LaurentPoly2& o) const;
    LaurentPoly2 operator-() const;
    LaurentPoly2 operator*(const LaurentPoly2& o) const;
    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2 pow(unsigned k) const;
    bool operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }

    std::string str() const;

  private:
    std::map<Key, Int> terms_;
};

enum class Target { conway, jones };

LaurentPoly1 specialize(const LaurentPoly2& p, Target target);

// Parsers for the text forms used in tests and fixtures, e.g. "t^3 - t^4 + 2t^5" or
// "a^-6 z^6 + 5a^-6 z^4". Accepts the rendering produced by str() as well.
LaurentPoly1 parse_poly1(const std::string& text, Var v);
LaurentPoly2 parse_poly2(const std::string& text);

char var_char(Var v);

} // namespace knotpos

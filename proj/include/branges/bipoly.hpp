#ifndef BRANGES_BIPOLY_HPP
#define BRANGES_BIPOLY_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <branges/poly.hpp>
#include <branges/rat.hpp>

namespace branges {

/// Polynomial in (n, c) over Rat, stored as a polynomial in n whose
/// coefficients are polynomials in c: p = sum_i coeffs[i](c) n^i.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(const Rat& constant) : BiPoly(Poly(constant)) {}
    BiPoly(long constant) : BiPoly(Rat(constant)) {}
    BiPoly(const Poly& in_c);
    explicit BiPoly(std::vector<Poly> by_n);

    static BiPoly n();
    static BiPoly c();
    /// a * n^i * c^j
    static BiPoly term(int i, int j, const Rat& a = Rat(1));

    bool is_zero() const { return p_.empty(); }
    int degree_n() const { return static_cast<int>(p_.size()) - 1; }
    int degree_c() const;
    int total_degree() const;
    const std::vector<Poly>& by_n() const { return p_; }
    Poly coeff_n(int i) const;
    Rat coeff(int i, int j) const { return coeff_n(i).coeff(j); }

    /// Leading coefficient under graded-lex order with n > c.
    Rat leading_term_coeff() const;

    /// p(n0, c) as a polynomial in c.
    Poly eval_n(const Rat& n0) const;
    /// p(n, c0) as a polynomial in n.
    Poly eval_c(const Rat& c0) const;
    Rat eval(const Rat& n0, const Rat& c0) const;
    /// p(n + s, c).
    BiPoly shift_n(const Rat& s) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rat& s);
    friend BiPoly operator*(const Rat& s, BiPoly a) { return std::move(a) * s; }
    BiPoly operator-() const;
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    std::string str() const;

private:
    void trim();
    std::vector<Poly> p_;
};

inline bool is_zero(const BiPoly& p) { return p.is_zero(); }

/// Positive rational content (gcd of numerators / lcm of denominators).
Rat content(const BiPoly& p);

/// p scaled to integer coprime coefficients with positive graded-lex
/// leading coefficient; returns (unit, normalized) with p = unit * normalized.
std::pair<Rat, BiPoly> sign_normalize(const BiPoly& p);

/// Normalized gcd in Q[n, c]; gcd(0, 0) = 0.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

/// Exact quotient; nullopt when b does not divide a.
std::optional<BiPoly> try_div_exact(const BiPoly& a, const BiPoly& b);
BiPoly div_exact(const BiPoly& a, const BiPoly& b);

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

/// Rational function in (n, c), reduced with normalized denominator.
class RatFunc2 {
public:
    RatFunc2() : den_(1) {}
    RatFunc2(const BiPoly& p) : num_(p), den_(1) {}
    RatFunc2(BiPoly num, BiPoly den);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc2 shift_n(const Rat& s) const;
    /// Specialize n; throws when the denominator vanishes identically.
    RatFunc eval_n(const Rat& n0) const;

    friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b);
    RatFunc2 operator-() const;
    friend bool operator==(const RatFunc2&, const RatFunc2&) = default;

    std::string str() const;

private:
    BiPoly num_;
    BiPoly den_;
};

inline bool is_zero(const RatFunc2& f) { return f.is_zero(); }

/// a == b as rational functions, by cross-multiplication (no reduction).
bool same_function(const BiPoly& an, const BiPoly& ad, const BiPoly& bn, const BiPoly& bd);

} // namespace branges

#endif

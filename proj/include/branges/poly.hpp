#ifndef BRANGES_POLY_HPP
#define BRANGES_POLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <branges/rat.hpp>
#include <branges/ring.hpp>

namespace branges {

/// Dense univariate polynomial over Rat, ascending coefficients. The zero
/// polynomial has no coefficients; otherwise the last entry is nonzero.
/// Used for polynomials in the kernel parameter c, and occasionally in
/// other variables (n, w) where only a univariate ring is needed.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& constant);
    Poly(long constant) : Poly(Rat(constant)) {}
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

    /// The monomial x^k with coefficient a.
    static Poly monomial(int k, const Rat& a = Rat(1));
    static Poly x() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const;
    const Rat& lc() const { return c_.back(); }

    Rat eval(const Rat& x) const;
    Poly derivative() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Human-readable form in the named variable, highest degree first.
    std::string str(const std::string& var = "c") const;

private:
    void trim();
    std::vector<Rat> c_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

template <>
struct Ring<Poly> {
    static Poly one() { return Poly(1); }
    static std::optional<Poly> inverse(const Poly& p)
    {
        if (p.degree() != 0)
            return std::nullopt;
        return Poly(p.lc().inverse());
    }
};

struct DivRem {
    Poly quot;
    Poly rem;
};

/// p = quot*d + rem with deg rem < deg d. Throws on d = 0.
DivRem divrem(const Poly& p, const Poly& d);

/// Exact quotient; throws std::domain_error when d does not divide p.
Poly div_exact(const Poly& p, const Poly& d);

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Positive rational content: gcd of numerators over lcm of denominators.
/// Zero for the zero polynomial.
Rat content(const Poly& p);

/// p / content(p): integer coprime coefficients, sign of p kept.
Poly primitive_part(const Poly& p);

/// Split p = unit * q with q primitive (integer, coprime) and positive
/// leading coefficient; the unit carries the sign. Zero maps to (0, 0).
std::pair<Rat, Poly> sign_normalize(const Poly& p);

/// Sign-normalized primitive part (positive leading coefficient).
Poly normalized(const Poly& p);

/// p^e by repeated squaring.
Poly pow(const Poly& p, unsigned e);

/// p(x + s).
Poly taylor_shift(const Poly& p, const Rat& s);

/// Sign of p(x) as -1, 0, 1.
int sign_at(const Poly& p, const Rat& x);

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Univariate rational function num/den kept in lowest terms with monic
/// denominator.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc inverse() const;
    Rat eval(const Rat& x) const;
    RatFunc derivative() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend bool operator==(const RatFunc&, const RatFunc&) = default;

private:
    Poly num_;
    Poly den_;
};

} // namespace branges

#endif

#ifndef BRANGES_RAT_HPP
#define BRANGES_RAT_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace branges {

using Int = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Backed by GMP's mpq_t.
class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den);
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    /// Parses "a" or "a/b" with decimal integers.
    static Rat parse(std::string_view text);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat inverse() const;
    Rat abs() const;

    std::string str() const;
    const mpq_class& raw() const { return v_; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const { Rat r; r.v_ = -v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Nonnegative integer lcm and gcd.
Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

} // namespace branges

#endif

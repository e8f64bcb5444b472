#include <branges/rat.hpp>

#include <ostream>
#include <stdexcept>

namespace branges {

Rat::Rat(const Int& num, const Int& den)
{
    if (den == 0)
        throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s, 10));
        return Rat(Int(s.substr(0, slash), 10), Int(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    }
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero())
        throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inverse() const
{
    return Rat(1) / *this;
}

Rat Rat::abs() const
{
    return sign() < 0 ? -*this : *this;
}

std::string Rat::str() const
{
    return v_.get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rat& r)
{
    return os << r.str();
}

Int lcm(const Int& a, const Int& b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace branges

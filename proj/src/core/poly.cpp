#include <branges/poly.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace branges {

namespace {

// Integer image of p: p = ints / scale with scale = lcm of denominators.
Int to_integers(const Poly& p, std::vector<Int>& ints)
{
    Int scale = 1;
    for (const auto& a : p.coeffs())
        scale = lcm(scale, a.den());
    ints.clear();
    ints.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs())
        ints.push_back(a.num() * (scale / a.den()));
    return scale;
}

} // namespace

Poly::Poly(const Rat& constant)
{
    if (!constant.is_zero())
        c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs))
{
    trim();
}

Poly Poly::monomial(int k, const Rat& a)
{
    Poly p;
    if (a.is_zero())
        return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, Rat(0));
    p.c_.back() = a;
    return p;
}

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rat Poly::coeff(int k) const
{
    if (k < 0 || k > degree())
        return Rat(0);
    return c_[static_cast<std::size_t>(k)];
}

Rat Poly::eval(const Rat& x) const
{
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const
{
    Poly d;
    if (c_.size() <= 1)
        return d;
    d.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.c_.push_back(c_[i] * Rat(static_cast<long>(i)));
    d.trim();
    return d;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& s)
{
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_)
        a *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    if (a.c_.size() == 1)
        return b * a.c_[0];
    if (b.c_.size() == 1)
        return a * b.c_[0];
    // Multiply integer images; avoids a gcd per accumulated term.
    std::vector<Int> ai, bi;
    Int sa = to_integers(a, ai);
    Int sb = to_integers(b, bi);
    std::vector<Int> prod(ai.size() + bi.size() - 1);
    for (std::size_t i = 0; i < ai.size(); ++i) {
        if (ai[i] == 0)
            continue;
        for (std::size_t j = 0; j < bi.size(); ++j)
            mpz_addmul(prod[i + j].get_mpz_t(), ai[i].get_mpz_t(), bi[j].get_mpz_t());
    }
    Int scale = sa * sb;
    std::vector<Rat> out;
    out.reserve(prod.size());
    for (auto& v : prod)
        out.emplace_back(v, scale);
    return Poly(std::move(out));
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& a : r.c_)
        a = -a;
    return r;
}

std::string Poly::str(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& a = c_[static_cast<std::size_t>(k)];
        if (a.is_zero())
            continue;
        Rat mag = a.abs();
        if (first) {
            if (a.sign() < 0)
                os << "-";
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag.is_one();
        if (k == 0 || !unit)
            os << mag.str();
        if (k > 0) {
            if (!unit)
                os << "*";
            os << var;
            if (k > 1)
                os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p)
{
    return os << p.str();
}

DivRem divrem(const Poly& p, const Poly& d)
{
    if (d.is_zero())
        throw std::domain_error("divrem: division by zero polynomial");
    if (p.degree() < d.degree())
        return {Poly(), p};
    std::vector<Rat> rem = p.coeffs();
    std::vector<Rat> quot(static_cast<std::size_t>(p.degree() - d.degree()) + 1);
    Rat inv_lc = d.lc().inverse();
    const auto& dc = d.coeffs();
    for (int k = p.degree(); k >= d.degree(); --k) {
        Rat q = rem[static_cast<std::size_t>(k)] * inv_lc;
        if (q.is_zero())
            continue;
        std::size_t shift = static_cast<std::size_t>(k - d.degree());
        quot[shift] = q;
        for (std::size_t i = 0; i < dc.size(); ++i)
            rem[shift + i] -= q * dc[i];
    }
    rem.resize(static_cast<std::size_t>(d.degree()));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly div_exact(const Poly& p, const Poly& d)
{
    auto [q, r] = divrem(p, d);
    if (!r.is_zero())
        throw std::domain_error("div_exact: nonzero remainder");
    return q;
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = primitive_part(a);
    Poly y = primitive_part(b);
    while (!y.is_zero()) {
        Poly r = divrem(x, y).rem;
        x = std::move(y);
        y = primitive_part(r);
    }
    if (x.is_zero())
        return x;
    return x * x.lc().inverse();
}

Rat content(const Poly& p)
{
    if (p.is_zero())
        return Rat(0);
    Int g = 0;
    Int l = 1;
    for (const auto& a : p.coeffs()) {
        g = gcd(g, a.num());
        l = lcm(l, a.den());
    }
    return Rat(g, l);
}

Poly primitive_part(const Poly& p)
{
    if (p.is_zero())
        return p;
    return p * content(p).inverse();
}

std::pair<Rat, Poly> sign_normalize(const Poly& p)
{
    if (p.is_zero())
        return {Rat(0), Poly()};
    Rat unit = content(p);
    if (p.lc().sign() < 0)
        unit = -unit;
    return {unit, p * unit.inverse()};
}

Poly normalized(const Poly& p)
{
    return sign_normalize(p).second;
}

Poly pow(const Poly& p, unsigned e)
{
    Poly result(1);
    Poly base = p;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return result;
}

Poly taylor_shift(const Poly& p, const Rat& s)
{
    Poly lin{s, Rat(1)};
    Poly acc;
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * lin + Poly(p.coeff(k));
    return acc;
}

int sign_at(const Poly& p, const Rat& x)
{
    return p.eval(x).sign();
}

RatFunc::RatFunc(Poly num, Poly den)
{
    if (den.is_zero())
        throw std::domain_error("RatFunc: zero denominator");
    if (num.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = div_exact(num, g);
        den = div_exact(den, g);
    }
    Rat s = den.lc().inverse();
    num_ = num * s;
    den_ = den * s;
}

RatFunc RatFunc::inverse() const
{
    if (num_.is_zero())
        throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

Rat RatFunc::eval(const Rat& x) const
{
    return num_.eval(x) / den_.eval(x);
}

RatFunc RatFunc::derivative() const
{
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
    if (a.den_ == b.den_)
        return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b)
{
    return a + (-b);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b)
{
    return a * b.inverse();
}

} // namespace branges

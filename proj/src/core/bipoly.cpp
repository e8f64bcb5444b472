#include <branges/bipoly.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace branges {

BiPoly::BiPoly(const Poly& in_c)
{
    if (!in_c.is_zero())
        p_.push_back(in_c);
}

BiPoly::BiPoly(std::vector<Poly> by_n) : p_(std::move(by_n))
{
    trim();
}

BiPoly BiPoly::n()
{
    return term(1, 0);
}

BiPoly BiPoly::c()
{
    return term(0, 1);
}

BiPoly BiPoly::term(int i, int j, const Rat& a)
{
    if (a.is_zero())
        return BiPoly();
    std::vector<Poly> v(static_cast<std::size_t>(i) + 1);
    v.back() = Poly::monomial(j, a);
    return BiPoly(std::move(v));
}

void BiPoly::trim()
{
    while (!p_.empty() && p_.back().is_zero())
        p_.pop_back();
}

int BiPoly::degree_c() const
{
    int d = -1;
    for (const auto& q : p_)
        d = std::max(d, q.degree());
    return d;
}

int BiPoly::total_degree() const
{
    int d = -1;
    for (std::size_t i = 0; i < p_.size(); ++i)
        if (!p_[i].is_zero())
            d = std::max(d, static_cast<int>(i) + p_[i].degree());
    return d;
}

Poly BiPoly::coeff_n(int i) const
{
    if (i < 0 || i > degree_n())
        return Poly();
    return p_[static_cast<std::size_t>(i)];
}

Rat BiPoly::leading_term_coeff() const
{
    int best_total = -1;
    int best_i = -1;
    Rat best;
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i].is_zero())
            continue;
        int total = static_cast<int>(i) + p_[i].degree();
        if (total > best_total || (total == best_total && static_cast<int>(i) > best_i)) {
            best_total = total;
            best_i = static_cast<int>(i);
            best = p_[i].lc();
        }
    }
    return best;
}

Poly BiPoly::eval_n(const Rat& n0) const
{
    Poly acc;
    for (auto it = p_.rbegin(); it != p_.rend(); ++it)
        acc = acc * n0 + *it;
    return acc;
}

Poly BiPoly::eval_c(const Rat& c0) const
{
    std::vector<Rat> v;
    v.reserve(p_.size());
    for (const auto& q : p_)
        v.push_back(q.eval(c0));
    return Poly(std::move(v));
}

Rat BiPoly::eval(const Rat& n0, const Rat& c0) const
{
    return eval_n(n0).eval(c0);
}

BiPoly BiPoly::shift_n(const Rat& s) const
{
    // Horner in n with the linear factor (n + s).
    std::vector<Poly> acc;
    for (auto it = p_.rbegin(); it != p_.rend(); ++it) {
        std::vector<Poly> next(acc.size() + 1);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] += acc[i] * s;
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return BiPoly(std::move(acc));
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    if (o.p_.size() > p_.size())
        p_.resize(o.p_.size());
    for (std::size_t i = 0; i < o.p_.size(); ++i)
        p_[i] += o.p_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    if (o.p_.size() > p_.size())
        p_.resize(o.p_.size());
    for (std::size_t i = 0; i < o.p_.size(); ++i)
        p_[i] -= o.p_[i];
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return BiPoly();
    std::vector<Poly> r(a.p_.size() + b.p_.size() - 1);
    for (std::size_t i = 0; i < a.p_.size(); ++i) {
        if (a.p_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.p_.size(); ++j)
            r[i + j] += a.p_[i] * b.p_[j];
    }
    return BiPoly(std::move(r));
}

BiPoly operator*(BiPoly a, const Rat& s)
{
    for (auto& q : a.p_)
        q *= s;
    a.trim();
    return a;
}

BiPoly BiPoly::operator-() const
{
    return *this * Rat(-1);
}

std::string BiPoly::str() const
{
    if (is_zero())
        return "0";
    struct Term {
        int i, j;
        Rat a;
    };
    std::vector<Term> terms;
    for (std::size_t i = 0; i < p_.size(); ++i)
        for (int j = 0; j <= p_[i].degree(); ++j)
            if (!p_[i].coeff(j).is_zero())
                terms.push_back({static_cast<int>(i), j, p_[i].coeff(j)});
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        if (x.i + x.j != y.i + y.j)
            return x.i + x.j > y.i + y.j;
        return x.i > y.i;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        Rat mag = t.a.abs();
        if (first)
            os << (t.a.sign() < 0 ? "-" : "");
        else
            os << (t.a.sign() < 0 ? " - " : " + ");
        first = false;
        bool need_star = false;
        if (!mag.is_one() || (t.i == 0 && t.j == 0)) {
            os << mag.str();
            need_star = true;
        }
        auto var = [&](const char* name, int e) {
            if (e == 0)
                return;
            if (need_star)
                os << "*";
            os << name;
            if (e > 1)
                os << "^" << e;
            need_star = true;
        };
        var("n", t.i);
        var("c", t.j);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p)
{
    return os << p.str();
}

Rat content(const BiPoly& p)
{
    Int g = 0;
    Int l = 1;
    for (const auto& q : p.by_n())
        for (const auto& a : q.coeffs()) {
            if (a.is_zero())
                continue;
            g = gcd(g, a.num());
            l = lcm(l, a.den());
        }
    if (g == 0)
        return Rat(0);
    return Rat(g, l);
}

std::pair<Rat, BiPoly> sign_normalize(const BiPoly& p)
{
    if (p.is_zero())
        return {Rat(0), BiPoly()};
    Rat unit = content(p);
    if (p.leading_term_coeff().sign() < 0)
        unit = -unit;
    return {unit, p * unit.inverse()};
}

namespace {

// Monic gcd of the c-coefficients.
Poly content_in_c(const BiPoly& p)
{
    Poly g;
    for (const auto& q : p.by_n()) {
        g = gcd(g, q);
        if (g.degree() == 0)
            break;
    }
    return g;
}

BiPoly divide_coeffs(const BiPoly& p, const Poly& d)
{
    std::vector<Poly> v;
    v.reserve(p.by_n().size());
    for (const auto& q : p.by_n())
        v.push_back(div_exact(q, d));
    return BiPoly(std::move(v));
}

BiPoly primitive_in_n(const BiPoly& p)
{
    if (p.is_zero())
        return p;
    return sign_normalize(divide_coeffs(p, content_in_c(p))).second;
}

// Pseudo-remainder of a by b as polynomials in n over Q[c].
BiPoly prem(BiPoly a, const BiPoly& b)
{
    const int db = b.degree_n();
    const Poly lcb = b.coeff_n(db);
    while (!a.is_zero() && a.degree_n() >= db) {
        int shift = a.degree_n() - db;
        Poly lca = a.coeff_n(a.degree_n());
        std::vector<Poly> lead(static_cast<std::size_t>(shift) + 1);
        lead.back() = lca;
        a = a * BiPoly(lcb) - BiPoly(std::move(lead)) * b;
    }
    return a;
}

} // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b)
{
    if (a.is_zero())
        return sign_normalize(b).second;
    if (b.is_zero())
        return sign_normalize(a).second;
    Poly ca = content_in_c(a);
    Poly cb = content_in_c(b);
    Poly cg = gcd(ca, cb);
    BiPoly x = primitive_in_n(divide_coeffs(a, ca));
    BiPoly y = primitive_in_n(divide_coeffs(b, cb));
    if (x.degree_n() < y.degree_n())
        std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree_n() == 0) {
            x = BiPoly(1);
            break;
        }
        BiPoly r = prem(x, y);
        x = std::move(y);
        y = primitive_in_n(r);
    }
    return sign_normalize(x * BiPoly(cg)).second;
}

std::optional<BiPoly> try_div_exact(const BiPoly& a, const BiPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("BiPoly: division by zero");
    BiPoly r = a;
    const int db = b.degree_n();
    const Poly lcb = b.coeff_n(db);
    std::vector<Poly> q(static_cast<std::size_t>(std::max(a.degree_n() - db + 1, 0)));
    while (!r.is_zero() && r.degree_n() >= db) {
        int shift = r.degree_n() - db;
        auto [qc, rem] = divrem(r.coeff_n(r.degree_n()), lcb);
        if (!rem.is_zero())
            return std::nullopt;
        std::vector<Poly> t(static_cast<std::size_t>(shift) + 1);
        t.back() = qc;
        q[static_cast<std::size_t>(shift)] += qc;
        r -= BiPoly(std::move(t)) * b;
    }
    if (!r.is_zero())
        return std::nullopt;
    return BiPoly(std::move(q));
}

BiPoly div_exact(const BiPoly& a, const BiPoly& b)
{
    auto q = try_div_exact(a, b);
    if (!q)
        throw std::domain_error("BiPoly: inexact division");
    return *q;
}

RatFunc2::RatFunc2(BiPoly num, BiPoly den)
{
    if (den.is_zero())
        throw std::domain_error("RatFunc2: zero denominator");
    if (num.is_zero()) {
        den_ = BiPoly(1);
        return;
    }
    if (den.total_degree() > 0) {
        BiPoly g = gcd(num, den);
        if (g.total_degree() > 0) {
            num = div_exact(num, g);
            den = div_exact(den, g);
        }
    }
    auto [unit, d] = sign_normalize(den);
    num_ = num * unit.inverse();
    den_ = std::move(d);
}

RatFunc2 RatFunc2::shift_n(const Rat& s) const
{
    RatFunc2 r;
    r.num_ = num_.shift_n(s);
    r.den_ = den_.shift_n(s);
    return r;
}

RatFunc RatFunc2::eval_n(const Rat& n0) const
{
    Poly d = den_.eval_n(n0);
    if (d.is_zero())
        throw std::domain_error("RatFunc2: pole at n = " + n0.str());
    return RatFunc(num_.eval_n(n0), d);
}

RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b)
{
    if (a.den_ == b.den_)
        return RatFunc2(a.num_ + b.num_, a.den_);
    return RatFunc2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b)
{
    return a + (-b);
}

RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b)
{
    return RatFunc2(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b)
{
    if (b.is_zero())
        throw std::domain_error("RatFunc2: division by zero");
    return RatFunc2(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc2 RatFunc2::operator-() const
{
    RatFunc2 r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RatFunc2::str() const
{
    if (den_ == BiPoly(1))
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool same_function(const BiPoly& an, const BiPoly& ad, const BiPoly& bn, const BiPoly& bd)
{
    return an * bd == bn * ad;
}

} // namespace branges

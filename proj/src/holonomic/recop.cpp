#include <branges/errors.hpp>
#include <branges/holonomic.hpp>

#include <algorithm>
#include <sstream>

namespace branges {

RecOp::RecOp(std::vector<BiPoly> coeffs)
{
    if (coeffs.size() < 2)
        throw std::invalid_argument("RecOp: need at least two coefficients");
    if (coeffs.back().is_zero())
        throw DegenerateLeadingCoefficient();
    BiPoly g;
    for (const auto& p : coeffs) {
        g = gcd(g, p);
        if (g.total_degree() == 0)
            break;
    }
    if (g.total_degree() > 0)
        for (auto& p : coeffs)
            p = div_exact(p, g);
    Int num = 0;
    Int den = 1;
    for (const auto& p : coeffs) {
        Rat ct = content(p);
        if (ct.is_zero())
            continue;
        num = gcd(num, ct.num());
        den = lcm(den, ct.den());
    }
    Rat scale = Rat(den, num);
    if (coeffs.back().leading_term_coeff().sign() < 0)
        scale = -scale;
    for (auto& p : coeffs)
        p = p * scale;
    p_ = std::move(coeffs);
}

RecOp RecOp::from_constants(const std::vector<Rat>& lowestFirst)
{
    std::vector<BiPoly> c;
    for (const auto& a : lowestFirst)
        c.emplace_back(a);
    return RecOp(std::move(c));
}

Poly RecOp::apply(const Rat& n0, const std::vector<Poly>& values) const
{
    if (values.size() < p_.size())
        throw std::invalid_argument("RecOp::apply: too few values");
    Poly s;
    for (std::size_t i = 0; i < p_.size(); ++i)
        if (!p_[i].is_zero() && !values[i].is_zero())
            s = s + p_[i].eval_n(n0) * values[i];
    return s;
}

std::string RecOp::str() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << p_[i].str() << ")*a(n";
        if (i > 0)
            os << "+" << i;
        os << ")";
    }
    return os.str();
}

bool op_equal(const RecOp& a, const RecOp& b)
{
    return a.coeffs() == b.coeffs();
}

SeqSlice SeqSlice::numeric(int startN, const std::vector<Rat>& values)
{
    SeqSlice s;
    s.startN = startN;
    for (const auto& v : values)
        s.values.emplace_back(v);
    return s;
}

VerifyResult rec_verify(const RecOp& op, const SeqSlice& seq)
{
    VerifyResult r;
    const int order = op.order();
    r.checkedFrom = seq.startN;
    r.checkedTo = seq.endN() - order - 1;
    std::vector<Poly> window(static_cast<std::size_t>(order) + 1);
    for (int n = r.checkedFrom; n <= r.checkedTo; ++n) {
        for (int i = 0; i <= order; ++i)
            window[static_cast<std::size_t>(i)] = seq.at(n + i);
        if (op.leading().eval_n(Rat(n)).is_zero())
            r.leadingZeros.push_back(n);
        if (!op.apply(Rat(n), window).is_zero() && !r.firstFailure) {
            r.ok = false;
            r.firstFailure = n;
        }
    }
    return r;
}

std::vector<int> integer_roots_in_n(const BiPoly& p)
{
    if (p.is_zero())
        throw ZeroPolynomial();
    // gcd over c-powers of the slices sum_i p(i, j) n^i.
    Poly g;
    for (int j = 0; j <= p.degree_c(); ++j) {
        std::vector<Rat> slice;
        for (int i = 0; i <= p.degree_n(); ++i)
            slice.push_back(p.coeff(i, j));
        g = gcd(g, Poly(std::move(slice)));
        if (g.degree() == 0)
            return {};
    }
    std::vector<int> roots;
    if (g.degree() <= 0)
        return roots;
    int low = 0;
    while (g.coeff(low).is_zero())
        ++low;
    if (low > 0)
        roots.push_back(0);
    // Integer roots divide the lowest nonzero coefficient and obey the Cauchy bound.
    Poly q = primitive_part(g);
    Rat bound(0);
    for (int i = 0; i < q.degree(); ++i)
        bound = std::max(bound, (q.coeff(i) / q.lc()).abs());
    const Int a0 = abs(q.coeff(low).num());
    const Rat b1 = bound + Rat(1);
    const Int limit = std::min<Int>(a0, Int(b1.num() / b1.den()) + 1);
    for (Int t = 1; t <= limit; ++t) {
        if (a0 % t != 0)
            continue;
        for (const Int& cand : {Int(t), Int(-t)})
            if (q.eval(Rat(cand)).is_zero())
                roots.push_back(static_cast<int>(cand.get_si()));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace branges

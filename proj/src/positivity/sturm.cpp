#include <algorithm>

#include <branges/errors.hpp>
#include <branges/positivity.hpp>

namespace branges {

namespace {

// Square-free part, sign-normalized.
Poly squarefree_part(const Poly& p)
{
    if (p.degree() <= 0)
        return normalized(p);
    return normalized(div_exact(p, gcd(p, p.derivative())));
}

// Signed remainder chain; every member is rescaled by a positive constant,
// which leaves sign counts unchanged.
std::vector<Poly> sturm_chain(const Poly& q)
{
    std::vector<Poly> chain{q};
    if (q.degree() <= 0)
        return chain;
    chain.push_back(primitive_part(q.derivative()));
    while (chain.back().degree() > 0) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        Poly r = divrem(a, b).rem;
        if (r.is_zero())
            break;
        chain.push_back(primitive_part(-r));
    }
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rat& x)
{
    int count = 0;
    int last = 0;
    for (const auto& s : chain) {
        int sg = s.eval(x).sign();
        if (sg == 0)
            continue;
        if (last != 0 && sg != last)
            ++count;
        last = sg;
    }
    return count;
}

// Roots of the square-free q in (lo, hi); endpoint roots are divided out
// first so the chain never vanishes at an endpoint.
int count_squarefree_open(Poly q, const Rat& lo, const Rat& hi)
{
    if (q.eval(lo).is_zero())
        q = div_exact(q, Poly{-lo, Rat(1)});
    if (q.eval(hi).is_zero())
        q = div_exact(q, Poly{-hi, Rat(1)});
    if (q.degree() <= 0)
        return 0;
    auto chain = sturm_chain(q);
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

struct Isolator {
    Poly q;
    Rat lo;
    Rat hi;
    std::vector<Rat> samples;

    // Splits until every subinterval is root-free or isolates one root
    // strictly inside, away from the outer endpoints and from split roots.
    void run(const Rat& a, const Rat& b, int count)
    {
        if (count == 0) {
            samples.push_back((a + b) * Rat(1, 2));
            return;
        }
        if (count == 1 && a != lo && b != hi && !q.eval(a).is_zero() && !q.eval(b).is_zero())
            return;
        Rat mid = (a + b) * Rat(1, 2);
        if (!q.eval(mid).is_zero())
            samples.push_back(mid);
        run(a, mid, count_squarefree_open(q, a, mid));
        run(mid, b, count_squarefree_open(q, mid, b));
    }
};

} // namespace

int count_roots_open(const Poly& p, const Rat& lo, const Rat& hi)
{
    if (p.is_zero())
        throw ZeroPolynomial();
    if (!(lo < hi))
        throw std::invalid_argument("count_roots_open: need lo < hi");
    return count_squarefree_open(squarefree_part(p), lo, hi);
}

SturmVerdict sturm_count(const Poly& p, const Rat& lo, const Rat& hi)
{
    if (p.is_zero())
        throw ZeroPolynomial();
    if (!(lo < hi))
        throw std::invalid_argument("sturm_count: need lo < hi");
    SturmVerdict v;
    v.polynomial = p;
    v.lo = lo;
    v.hi = hi;
    Poly q = squarefree_part(p);
    v.rootCount = count_squarefree_open(q, lo, hi);

    Isolator iso{q, lo, hi, {}};
    iso.run(lo, hi, v.rootCount);
    std::sort(iso.samples.begin(), iso.samples.end());

    v.signSamples.push_back({lo, sign_at(p, lo)});
    v.signSamples.push_back({hi, sign_at(p, hi)});
    v.interiorNonnegative = true;
    for (const auto& x : iso.samples) {
        int s = sign_at(p, x);
        v.signSamples.push_back({x, s});
        if (s < 0)
            v.interiorNonnegative = false;
    }
    v.nonnegative = v.interiorNonnegative && v.signSamples[0].sign >= 0
                    && v.signSamples[1].sign >= 0;
    return v;
}

} // namespace branges

#include <branges/errors.hpp>
#include <branges/positivity.hpp>

namespace branges {

SquareFreeDecomposition yun_squarefree(const Poly& p)
{
    if (p.is_zero())
        throw ZeroPolynomial();
    SquareFreeDecomposition out;
    if (p.degree() == 0) {
        out.content = p.lc();
        return out;
    }
    Poly dp = p.derivative();
    Poly a = gcd(p, dp);
    Poly b = div_exact(p, a);
    Poly c = div_exact(dp, a);
    Poly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Poly ai = gcd(b, d);
        b = div_exact(b, ai);
        c = div_exact(d, ai);
        d = c - b.derivative();
        if (ai.degree() > 0)
            out.factors.emplace_back(normalized(ai), i);
    }
    Rat lc_product(1);
    for (const auto& [f, m] : out.factors)
        for (int j = 0; j < m; ++j)
            lc_product *= f.lc();
    out.content = p.lc() / lc_product;
    return out;
}

Poly SquareCert::reconstruct() const
{
    Poly p = S * S * sigma;
    if (alpha)
        p = p * Poly::x();
    if (beta)
        p = p * Poly{Rat(1), Rat(-1)};
    return p;
}

SquareCert square_certificate(const Poly& p, int k, int n)
{
    SquareFreeDecomposition sf = yun_squarefree(p);
    Poly square_root(1);
    Poly kernel(1);
    for (const auto& [f, m] : sf.factors) {
        if (m / 2 > 0)
            square_root = square_root * pow(f, static_cast<unsigned>(m / 2));
        if (m % 2)
            kernel = kernel * f;
    }
    SquareCert cert;
    cert.k = k;
    cert.n = n;
    cert.S = square_root;
    cert.sigma = sf.content;
    // Normalized kernel forms of 1, c, 1-c and c(1-c).
    const Poly c = Poly::x();
    const Poly c_minus_1{Rat(-1), Rat(1)};
    if (kernel == c) {
        cert.alpha = 1;
    } else if (kernel == c_minus_1) {
        cert.beta = 1;
        cert.sigma = -cert.sigma;
    } else if (kernel == c * c_minus_1) {
        cert.alpha = 1;
        cert.beta = 1;
        cert.sigma = -cert.sigma;
    } else if (!(kernel == Poly(1))) {
        throw NotASquareTimesKernel(k, n, kernel.str());
    }
    if (cert.sigma.sign() < 0)
        throw NegativeSigma(k, n);
    return cert;
}

} // namespace branges

#include <branges/fact1.hpp>
#include <branges/poly.hpp>

#include <stdexcept>

namespace branges {

SymSeries ratio_R(int K)
{
    if (K < 1)
        throw std::invalid_argument("ratio_R: K must be >= 1");
    std::vector<SymPoly> num{SymPoly(1)};
    std::vector<SymPoly> den{SymPoly(1)};
    for (int k = 1; k <= K; ++k) {
        num.push_back(SymPoly::cd(k));
        den.push_back(SymPoly::c(k) * Rat(k));
    }
    SymSeries inv = series_inverse(SymSeries::polynomial(0, den), K + 1);
    return (SymSeries::polynomial(0, num) * inv).truncate(K + 1);
}

SymSeries weinstein_bracket(int k, bool conjugated)
{
    if (k < 1)
        throw std::invalid_argument("weinstein_bracket: k must be >= 1");
    // Coefficient of z^r (plain) or z^{-r} (conjugated), r = 0..k.
    std::vector<SymPoly> byR{SymPoly(2)};
    for (int r = 1; r <= k; ++r) {
        SymPoly g = conjugated ? SymPoly::cb(r) : SymPoly::c(r);
        byR.push_back(g * Rat(r == k ? k : 2 * r));
    }
    if (!conjugated)
        return SymSeries::polynomial(0, byR);
    return SymSeries::polynomial(-k, std::vector<SymPoly>(byR.rbegin(), byR.rend()));
}

SymPoly rhs_coeff(int k)
{
    SymSeries prod = ratio_R(k) * weinstein_bracket(k, false) * weinstein_bracket(k, true);
    SymPoly x = ct_z(prod);
    return (x + x.conj()) * Rat(1, 2);
}

SymPoly lhs_term(int k)
{
    return SymPoly(Rat(4, k)) - SymPoly::c(k) * SymPoly::cb(k) * Rat(k);
}

std::vector<SymPoly> lhs_series(int K, int flowSign)
{
    if (K < 1)
        throw std::invalid_argument("lhs_series: K must be >= 1");
    if (flowSign != 1 && flowSign != -1)
        throw std::invalid_argument("lhs_series: flow sign must be +1 or -1");
    // Index 0 is the (vanishing) w^0 coefficient.
    std::vector<SymPoly> a(static_cast<std::size_t>(K) + 1);
    std::vector<SymPoly> da(static_cast<std::size_t>(K) + 1);
    for (int k = 1; k <= K; ++k) {
        a[static_cast<std::size_t>(k)] = lhs_term(k);
        da[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)].D();
    }
    std::vector<SymPoly> out;
    for (int j = 1; j <= K; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        SymPoly s = da[uj] + da[uj - 1];
        SymPoly t = a[uj] * Rat(j) - a[uj - 1] * Rat(j - 1);
        out.push_back(s + t * Rat(flowSign));
    }
    return out;
}

std::vector<SymPoly> rhs_series(int K)
{
    if (K < 1)
        throw std::invalid_argument("rhs_series: K must be >= 1");
    std::vector<SymPoly> out;
    SymPoly prev;
    for (int j = 1; j <= K; ++j) {
        SymPoly cur = rhs_coeff(j);
        out.push_back(cur - prev);
        prev = std::move(cur);
    }
    return out;
}

Fact1Result verify_fact1(int K, int flowSign)
{
    if (K < 1)
        throw std::invalid_argument("verify_fact1: K must be >= 1");
    Fact1Result r;
    r.K = K;
    r.flowSign = flowSign;
    r.lhs = lhs_series(K, flowSign);
    r.rhs = rhs_series(K);
    if (r.lhs[0] == r.rhs[0])
        r.epsilon = 1;
    else if (r.lhs[0] == -r.rhs[0])
        r.epsilon = -1;
    const Rat eps(r.epsilon == 0 ? 1 : r.epsilon);
    for (int j = 0; j < K; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        r.residuals.push_back(r.lhs[uj] - r.rhs[uj] * eps);
        if (!r.residuals.back().is_zero() && !r.firstFailure)
            r.firstFailure = j + 1;
    }
    r.ok = r.epsilon != 0 && !r.firstFailure;
    return r;
}

bool flow_consistency(int flowSign)
{
    const Poly w = Poly::x();
    const Poly one_minus_w{Rat(1), Rat(-1)};
    const Poly one_plus_w{Rat(1), Rat(1)};
    RatFunc u(w, one_minus_w * one_minus_w);
    RatFunc du(one_plus_w, pow(one_minus_w, 3));
    if (!(u.derivative() == du))
        return false;
    RatFunc wdot(w * one_minus_w * Rat(flowSign), one_plus_w);
    return (u + wdot * du).is_zero();
}

bool within_coefficient_shape(const SymPoly& p, int j)
{
    for (const auto& [m, a] : p.terms()) {
        int weight = 0, plain = 0, conj = 0, dotted = 0;
        for (const auto& [id, e] : m) {
            Generator g = generator_of(id);
            if (g.index > j)
                return false;
            weight += g.index * e;
            if (g.family == Family::C || g.family == Family::CD)
                plain += e;
            else
                conj += e;
            if (g.family == Family::CD || g.family == Family::CBD)
                dotted += e;
        }
        if (weight > 2 * j || plain > 1 || conj > 1 || dotted > 1)
            return false;
    }
    return true;
}

} // namespace branges

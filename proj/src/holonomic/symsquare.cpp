#include <branges/errors.hpp>
#include <branges/holonomic.hpp>
#include <branges/positivity.hpp>

#include <algorithm>

#include "nullspace.hpp"

namespace branges {

MonicOrder3 monic_order3(const RecOp& op)
{
    if (op.order() != 3)
        throw OrderMismatch(op.order());
    const BiPoly& p3 = op.leading();
    return {RatFunc2(-op.coeff(0), p3), RatFunc2(-op.coeff(1), p3), RatFunc2(-op.coeff(2), p3)};
}

MonicOrder3 SymSquareCert::reconstruct() const
{
    RatFunc2 a1 = A.shift_n(Rat(1));
    RatFunc2 b1 = B2.shift_n(Rat(1));
    return {-(Q * B2), b1 + Q * A, a1 + Q};
}

namespace {

bool matches(const SymSquareCert& cert, const MonicOrder3& t)
{
    RatFunc2 a1 = cert.A.shift_n(Rat(1));
    RatFunc2 b1 = cert.B2.shift_n(Rat(1));
    return (t.t2 - (a1 + cert.Q)).is_zero() && (t.t1 - (b1 + cert.Q * cert.A)).is_zero()
           && (t.t0 + cert.Q * cert.B2).is_zero()
           && (b1 * a1 - cert.Q * cert.Q * cert.A).is_zero();
}

std::optional<int> first_valid_n(const std::vector<const BiPoly*>& dens)
{
    std::optional<int> last;
    for (const BiPoly* d : dens)
        for (int r : integer_roots_in_n(*d))
            last = last ? std::max(*last, r) : r;
    if (!last)
        return std::nullopt;
    return *last + 1;
}

bool nonnegative_on_open_unit(const RatFunc& f)
{
    if (f.is_zero())
        return true;
    if (count_roots_open(f.den(), Rat(0), Rat(1)) != 0)
        return false;
    return sturm_count(f.num() * f.den(), Rat(0), Rat(1)).interiorNonnegative;
}

// 1/A obeys R(n+1) = (t1/t2^2) R(n) + 1/t2. alpha is the solution with
// alpha(n0) = 0 and beta the homogeneous one with beta(n0) = 1; a rational
// certificate is R = alpha + lambda(c) beta for some lambda.
class InverseASequences {
public:
    InverseASequences(const MonicOrder3& t, int n0) : t_(t), n0_(n0)
    {
        alpha_.emplace_back();
        beta_.emplace_back(Poly(1));
    }

    int n0() const { return n0_; }

    void ensure(std::size_t count)
    {
        while (alpha_.size() < count) {
            Rat n(n0_ + static_cast<long>(alpha_.size()) - 1);
            RatFunc t1 = t_.t1.eval_n(n);
            RatFunc t2 = t_.t2.eval_n(n);
            RatFunc g = t1 / (t2 * t2);
            alpha_.push_back(g * alpha_.back() + t2.inverse());
            beta_.push_back(g * beta_.back());
        }
    }

    // alpha, beta and -1 over their common denominator.
    std::vector<Poly> sample(std::size_t i) const
    {
        const RatFunc& a = alpha_[i];
        const RatFunc& b = beta_[i];
        Poly l = a.den() * div_exact(b.den(), gcd(a.den(), b.den()));
        return {a.num() * div_exact(l, a.den()), b.num() * div_exact(l, b.den()), -l};
    }

private:
    MonicOrder3 t_;
    int n0_;
    std::vector<RatFunc> alpha_;
    std::vector<RatFunc> beta_;
};

std::optional<SymSquareCert> try_degrees(InverseASequences& seq, const MonicOrder3& t, int dn,
                                         int dc)
{
    std::vector<detail::Monomial2> monomials;
    for (int a = 0; a <= dn; ++a)
        for (int b = 0; b <= dc; ++b)
            monomials.emplace_back(a, b);
    detail::AnsatzSystem sys(3, monomials);
    const std::size_t samples = 3 * (static_cast<std::size_t>(dn) + 1) + 4;
    seq.ensure(samples);
    for (std::size_t i = 0; i < samples && !sys.full_rank(); ++i)
        sys.add_sample(Rat(seq.n0() + static_cast<long>(i)), seq.sample(i));
    if (sys.full_rank())
        return std::nullopt;
    for (const auto& v : sys.nullspace()) {
        BiPoly d = sys.assemble(v, 0);
        BiPoly nu = sys.assemble(v, 2);
        if (d.is_zero() || nu.is_zero())
            continue;
        SymSquareCert cert;
        cert.A = RatFunc2(d, nu);
        cert.Q = t.t2 - cert.A.shift_n(Rat(1));
        if (cert.Q.is_zero())
            continue;
        cert.B2 = -(t.t0 / cert.Q);
        if (matches(cert, t)) {
            cert.degN = dn;
            cert.degC = dc;
            return cert;
        }
    }
    return std::nullopt;
}

} // namespace

bool check_matching(const SymSquareCert& cert, const RecOp& T)
{
    return matches(cert, monic_order3(T));
}

std::vector<int> check_real_range(const SymSquareCert& cert, int from, int to)
{
    std::vector<int> failing;
    for (int n = from; n <= to; ++n) {
        bool ok = false;
        try {
            ok = nonnegative_on_open_unit(cert.A.eval_n(Rat(n)))
                 && nonnegative_on_open_unit(cert.B2.eval_n(Rat(n)));
        } catch (const std::domain_error&) {
            ok = false;
        }
        if (!ok)
            failing.push_back(n);
    }
    return failing;
}

SymSquareCert sym_square_root(const RecOp& T, const SymSquareOptions& options)
{
    const MonicOrder3 t = monic_order3(T);
    if (t.t2.is_zero())
        throw NotFound("sym_square_root: vanishing t2 coefficient");

    int n0 = 0;
    for (const auto& p : T.coeffs())
        if (!p.is_zero()) {
            auto roots = integer_roots_in_n(p);
            if (!roots.empty())
                n0 = std::max(n0, roots.back() + 1);
        }
    InverseASequences seq(t, n0);

    std::optional<SymSquareCert> found;
    int triedN = -1;
    int triedC = -1;
    for (int pass = 1; pass <= 2 && !found; ++pass) {
        const int maxN = options.maxDegN * pass;
        const int maxC = options.maxDegC * pass;
        for (int total = 0; total <= maxN + maxC && !found; ++total)
            for (int dn = std::min(total, maxN); dn >= 0 && !found; --dn) {
                const int dc = total - dn;
                if (dc > maxC || (dn <= triedN && dc <= triedC))
                    continue;
                found = try_degrees(seq, t, dn, dc);
            }
        triedN = maxN;
        triedC = maxC;
    }
    if (!found)
        throw NotFound("sym_square_root: no certificate within degree bounds");

    SymSquareCert cert = std::move(*found);
    cert.validFromN = first_valid_n({&cert.A.den(), &cert.B2.den(), &cert.Q.den()});
    cert.positivityFrom = options.positivityFrom;
    cert.positivityTo = options.positivityTo;
    if (options.positivityFrom <= options.positivityTo)
        cert.positivityFailures = check_real_range(cert, options.positivityFrom,
                                                   options.positivityTo);
    return cert;
}

bool bridging_holds(const SymSquareCert& cert, int k, const Poly& u0, const Poly& u1,
                    const Poly& u2)
{
    RatFunc a = cert.A.eval_n(Rat(k));
    RatFunc b = cert.B2.eval_n(Rat(k));
    RatFunc d = RatFunc(u2) - a * RatFunc(u1) - b * RatFunc(u0);
    RatFunc rhs = RatFunc(Poly(4)) * a * b * RatFunc(u0) * RatFunc(u1);
    return (d * d - rhs).is_zero();
}

} // namespace branges

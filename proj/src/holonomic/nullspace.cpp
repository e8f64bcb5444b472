#include "nullspace.hpp"

#include <algorithm>

namespace branges::detail {

namespace {

void make_primitive(std::vector<Int>& v)
{
    Int g = 0;
    for (const auto& x : v) {
        if (x == 0)
            continue;
        g = gcd(g, x);
        if (g == 1)
            return;
    }
    if (g > 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

} // namespace

bool IntegerEchelon::add(std::vector<Int> row)
{
    for (const auto& r : rows_) {
        const Int& x = row[static_cast<std::size_t>(r.pivot)];
        if (x == 0)
            continue;
        Int g = gcd(x, r.v[static_cast<std::size_t>(r.pivot)]);
        Int mr = r.v[static_cast<std::size_t>(r.pivot)] / g;
        Int mx = x / g;
        for (std::size_t j = static_cast<std::size_t>(r.pivot); j < row.size(); ++j) {
            row[j] *= mr;
            mpz_submul(row[j].get_mpz_t(), mx.get_mpz_t(), r.v[j].get_mpz_t());
        }
        // Columns left of the pivot are already zero in r.
        for (std::size_t j = 0; j < static_cast<std::size_t>(r.pivot); ++j)
            row[j] *= mr;
        make_primitive(row);
    }
    auto it = std::find_if(row.begin(), row.end(), [](const Int& x) { return x != 0; });
    if (it == row.end())
        return false;
    int pivot = static_cast<int>(it - row.begin());
    if (*it < 0)
        for (auto& x : row)
            x = -x;
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const Row& r, int p) { return r.pivot < p; });
    rows_.insert(pos, Row{pivot, std::move(row)});
    return true;
}

std::vector<std::vector<Rat>> IntegerEchelon::nullspace() const
{
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (const auto& r : rows_)
        is_pivot[static_cast<std::size_t>(r.pivot)] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        std::vector<Rat> x(static_cast<std::size_t>(cols_), Rat(0));
        x[static_cast<std::size_t>(f)] = Rat(1);
        for (auto r = rows_.rbegin(); r != rows_.rend(); ++r) {
            Rat s(0);
            for (std::size_t j = static_cast<std::size_t>(r->pivot) + 1; j < x.size(); ++j)
                if (r->v[j] != 0 && !x[j].is_zero())
                    s += Rat(r->v[j]) * x[j];
            x[static_cast<std::size_t>(r->pivot)] = -s / Rat(r->v[static_cast<std::size_t>(r->pivot)]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

AnsatzSystem::AnsatzSystem(int families, std::vector<Monomial2> monomials)
    : families_(families), monomials_(std::move(monomials)),
      echelon_(families * static_cast<int>(monomials_.size()))
{
}

void AnsatzSystem::add_sample(const Rat& n, const std::vector<Poly>& s)
{
    const std::size_t m = monomials_.size();
    int maxB = 0;
    int maxA = 0;
    for (const auto& [a, b] : monomials_) {
        maxA = std::max(maxA, a);
        maxB = std::max(maxB, b);
    }
    std::vector<Rat> npow(static_cast<std::size_t>(maxA) + 1, Rat(1));
    for (std::size_t i = 1; i < npow.size(); ++i)
        npow[i] = npow[i - 1] * n;
    int maxDeg = -1;
    for (const auto& p : s)
        maxDeg = std::max(maxDeg, p.degree());
    if (maxDeg < 0)
        return;
    for (int e = 0; e <= maxDeg + maxB; ++e) {
        std::vector<Rat> row(static_cast<std::size_t>(echelon_.cols()), Rat(0));
        bool any = false;
        for (int j = 0; j < families_; ++j)
            for (std::size_t t = 0; t < m; ++t) {
                const auto& [a, b] = monomials_[t];
                Rat v = s[static_cast<std::size_t>(j)].coeff(e - b);
                if (v.is_zero())
                    continue;
                row[static_cast<std::size_t>(j) * m + t] = npow[static_cast<std::size_t>(a)] * v;
                any = true;
            }
        if (!any)
            continue;
        Int l = 1;
        for (const auto& x : row)
            l = lcm(l, x.den());
        std::vector<Int> irow;
        irow.reserve(row.size());
        for (const auto& x : row)
            irow.push_back(x.num() * (l / x.den()));
        ++equations_;
        echelon_.add(std::move(irow));
        if (echelon_.full_rank())
            return;
    }
}

BiPoly AnsatzSystem::assemble(const std::vector<Rat>& solution, int j) const
{
    BiPoly p;
    const std::size_t m = monomials_.size();
    for (std::size_t t = 0; t < m; ++t)
        p += BiPoly::term(monomials_[t].first, monomials_[t].second,
                          solution[static_cast<std::size_t>(j) * m + t]);
    return p;
}

} // namespace branges::detail

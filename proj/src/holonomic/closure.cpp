#include <branges/errors.hpp>
#include <branges/holonomic.hpp>

namespace branges {

namespace {

using Vec = std::vector<RatFunc2>;

// Row m gives x_{n+m} in the basis x_n, ..., x_{n+r-1}, for m = 0..r.
std::vector<Vec> shift_table(const RecOp& op)
{
    const int r = op.order();
    if (op.leading().is_zero())
        throw DegenerateLeadingCoefficient();
    std::vector<Vec> rows(static_cast<std::size_t>(r) + 1, Vec(static_cast<std::size_t>(r)));
    for (int m = 0; m < r; ++m)
        rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(m)] = RatFunc2(BiPoly(1));
    for (int l = 0; l < r; ++l)
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(l)] =
            RatFunc2(-op.coeff(l), op.leading());
    return rows;
}

// Coefficients lambda with sum_t lambda_t cols[t] == rhs, if any.
std::optional<Vec> solve(const std::vector<Vec>& cols, const Vec& rhs)
{
    const std::size_t rows = rhs.size();
    const std::size_t n = cols.size();
    std::vector<Vec> m(rows, Vec(n + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t t = 0; t < n; ++t)
            m[i][t] = cols[t][i];
        m[i][n] = rhs[i];
    }
    std::vector<std::size_t> pivotRow(n);
    std::size_t row = 0;
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t p = row;
        while (p < rows && m[p][t].is_zero())
            ++p;
        if (p == rows)
            throw std::logic_error("product_closure: dependent basis vectors");
        std::swap(m[p], m[row]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][t].is_zero())
                continue;
            RatFunc2 f = m[i][t] / m[row][t];
            for (std::size_t j = t; j <= n; ++j)
                if (!m[row][j].is_zero())
                    m[i][j] = m[i][j] - f * m[row][j];
        }
        pivotRow[t] = row++;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (!m[i][n].is_zero())
            return std::nullopt;
    Vec lambda(n);
    for (std::size_t t = 0; t < n; ++t)
        lambda[t] = m[pivotRow[t]][n] / m[pivotRow[t]][t];
    return lambda;
}

} // namespace

RecOp product_closure(const RecOp& a, const RecOp& b)
{
    const std::vector<Vec> x = shift_table(a);
    const std::vector<Vec> y = shift_table(b);
    const std::size_t r1 = static_cast<std::size_t>(a.order());
    const std::size_t r2 = static_cast<std::size_t>(b.order());
    const std::size_t dim = r1 * r2;

    // v[s] expresses x_{n+s} y_{n+s} in the basis x_{n+i} y_{n+j}.
    std::vector<Vec> v;
    Vec start(dim);
    start[0] = RatFunc2(BiPoly(1));
    v.push_back(start);
    for (std::size_t s = 1; s <= dim; ++s) {
        Vec next(dim);
        const Vec& prev = v.back();
        for (std::size_t i = 0; i < r1; ++i)
            for (std::size_t j = 0; j < r2; ++j) {
                const RatFunc2& w = prev[i * r2 + j];
                if (w.is_zero())
                    continue;
                RatFunc2 ws = w.shift_n(Rat(1));
                for (std::size_t l = 0; l < r1; ++l) {
                    if (x[i + 1][l].is_zero())
                        continue;
                    RatFunc2 wx = ws * x[i + 1][l];
                    for (std::size_t m = 0; m < r2; ++m)
                        if (!y[j + 1][m].is_zero())
                            next[l * r2 + m] = next[l * r2 + m] + wx * y[j + 1][m];
                }
            }
        auto lambda = solve(v, next);
        if (!lambda) {
            v.push_back(std::move(next));
            continue;
        }
        // next - sum lambda_t v_t = 0, cleared of denominators.
        Vec rel(lambda->size() + 1);
        for (std::size_t t = 0; t < lambda->size(); ++t)
            rel[t] = -(*lambda)[t];
        rel.back() = RatFunc2(BiPoly(1));
        BiPoly l(1);
        for (const auto& q : rel)
            if (!q.is_zero())
                l = l * div_exact(q.den(), gcd(l, q.den()));
        std::vector<BiPoly> coeffs;
        for (const auto& q : rel)
            coeffs.push_back(q.is_zero() ? BiPoly() : q.num() * div_exact(l, q.den()));
        return RecOp(std::move(coeffs));
    }
    throw std::logic_error("product_closure: no dependency found");
}

} // namespace branges

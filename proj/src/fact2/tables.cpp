#include <branges/fact2.hpp>

#include <stdexcept>

#include <branges/errors.hpp>

namespace branges {

RowW kernel_x()
{
    // (1-c)/2 at w^{-1} and w^1, c at w^0.
    Poly half_one_minus_c{Rat(1, 2), Rat(-1, 2)};
    return RowW(-1, {half_one_minus_c, Poly::x(), half_one_minus_c});
}

SeriesZ<RowW> kernel_series()
{
    return SeriesZ<RowW>::polynomial(0, {RowW(Poly(1)), kernel_x() * Rat(-2), RowW(Poly(1))});
}

CoeffTable::CoeffTable(TableKind kind, int maxN) : kind_(kind), maxN_(maxN)
{
    if (maxN < 0)
        throw std::invalid_argument("CoeffTable: maxN must be >= 0");
    entries_.resize(static_cast<std::size_t>(maxN) + 1);
    for (int n = 0; n <= maxN; ++n)
        entries_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
}

std::size_t CoeffTable::size() const
{
    std::size_t m = static_cast<std::size_t>(maxN_) + 1;
    return m * (m + 1) / 2;
}

const Poly& CoeffTable::at(int k, int n) const
{
    if (n < 0 || n > maxN_ || k < 0 || k > n)
        throw std::out_of_range("CoeffTable: (k,n) out of range");
    return entries_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void CoeffTable::set(int k, int n, Poly p)
{
    if (n < 0 || n > maxN_ || k < 0 || k > n)
        throw std::out_of_range("CoeffTable: (k,n) out of range");
    entries_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(p);
}

RowW CoeffTable::row(int n) const
{
    std::vector<Poly> c(2 * static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        c[static_cast<std::size_t>(n + k)] = at(k, n);
        c[static_cast<std::size_t>(n - k)] = at(k, n);
    }
    c[static_cast<std::size_t>(n)] = at(0, n) * Rat(2);
    return RowW(-n, std::move(c));
}

KernelExpansion expand_kernel_series(KernelPower power, int maxN)
{
    if (maxN < 0)
        throw std::invalid_argument("maxN must be >= 0");
    const long order = maxN + 1;
    SeriesZ<RowW> g = power == KernelPower::MinusHalf
                          ? series_inv_sqrt(kernel_series(), order)
                          : series_inverse(kernel_series(), order);
    KernelExpansion out{power, maxN, {}};
    out.rows.reserve(static_cast<std::size_t>(order));
    for (long n = 0; n < order; ++n)
        out.rows.push_back(g.coeff(n));
    return out;
}

KernelExpansion expand_kernel_recurrence(KernelPower power, int maxN)
{
    if (maxN < 0)
        throw std::invalid_argument("maxN must be >= 0");
    const RowW x = kernel_x();
    KernelExpansion out{power, maxN, {}};
    out.rows.reserve(static_cast<std::size_t>(maxN) + 1);
    out.rows.push_back(RowW(Poly(1)));
    if (maxN >= 1)
        out.rows.push_back(power == KernelPower::MinusHalf ? x : x * Rat(2));
    for (int n = 1; n < maxN; ++n) {
        const RowW& cur = out.rows[static_cast<std::size_t>(n)];
        const RowW& prev = out.rows[static_cast<std::size_t>(n - 1)];
        RowW next;
        if (power == KernelPower::MinusHalf) {
            // (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
            next = (x * cur * Rat(2 * n + 1) - prev * Rat(n)) * Rat(1, n + 1);
        } else {
            // U_{n+1} = 2x U_n - U_{n-1}
            next = x * cur * Rat(2) - prev;
        }
        out.rows.push_back(std::move(next));
    }
    return out;
}

CoeffTable extract_table(const KernelExpansion& expansion)
{
    TableKind kind = expansion.power == KernelPower::MinusHalf ? TableKind::B : TableKind::A;
    CoeffTable t(kind, expansion.maxN);
    for (int n = 0; n <= expansion.maxN; ++n) {
        const RowW& row = expansion.rows[static_cast<std::size_t>(n)];
        t.set(0, n, coeff_w(row, 0) * Rat(1, 2));
        for (int k = 1; k <= n; ++k)
            t.set(k, n, coeff_w(row, k));
    }
    return t;
}

CoeffTable build_b_table(int maxN)
{
    return extract_table(expand_kernel_series(KernelPower::MinusHalf, maxN));
}

CoeffTable build_b_table_rec(int maxN)
{
    return extract_table(expand_kernel_recurrence(KernelPower::MinusHalf, maxN));
}

CoeffTable build_a_table(int maxN)
{
    return extract_table(expand_kernel_series(KernelPower::MinusOne, maxN));
}

CoeffTable a_via_convolution(const CoeffTable& b)
{
    if (b.kind() != TableKind::B)
        throw std::invalid_argument("a_via_convolution expects a B table");
    const int maxN = b.maxN();
    std::vector<RowW> rows;
    rows.reserve(static_cast<std::size_t>(maxN) + 1);
    for (int n = 0; n <= maxN; ++n)
        rows.push_back(b.row(n));
    KernelExpansion a{KernelPower::MinusOne, maxN, {}};
    for (int n = 0; n <= maxN; ++n) {
        RowW sum;
        // Terms i and n-i coincide; pair them.
        for (int i = 0; 2 * i < n; ++i)
            sum += rows[static_cast<std::size_t>(i)] * rows[static_cast<std::size_t>(n - i)];
        sum = sum * Rat(2);
        if (n % 2 == 0)
            sum += rows[static_cast<std::size_t>(n / 2)] * rows[static_cast<std::size_t>(n / 2)];
        a.rows.push_back(std::move(sum));
    }
    return extract_table(a);
}

std::optional<std::pair<int, int>> first_mismatch(const CoeffTable& x, const CoeffTable& y)
{
    const int maxN = std::min(x.maxN(), y.maxN());
    for (int n = 0; n <= maxN; ++n)
        for (int k = 0; k <= n; ++k)
            if (!(x.at(k, n) == y.at(k, n)))
                return std::make_pair(k, n);
    if (x.maxN() != y.maxN())
        return std::make_pair(0, maxN + 1);
    return std::nullopt;
}

void require_equal(const CoeffTable& x, const CoeffTable& y)
{
    if (auto m = first_mismatch(x, y))
        throw TableMismatch(m->first, m->second);
}

} // namespace branges

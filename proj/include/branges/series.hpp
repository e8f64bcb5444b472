#ifndef BRANGES_SERIES_HPP
#define BRANGES_SERIES_HPP

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include <branges/errors.hpp>
#include <branges/rat.hpp>
#include <branges/ring.hpp>

namespace branges {

/// Truncated Laurent series sum_{j=lo}^{order-1} a_j z^j + O(z^order).
/// Coefficients below lo are exact zeros; from `order` on they are unknown.
/// Finite polynomials carry order == kExact.
template <class T>
class SeriesZ {
public:
    static constexpr long kExact = std::numeric_limits<long>::max() / 4;

    SeriesZ() = default;
    SeriesZ(long lo, long order, std::vector<T> coeffs)
        : lo_(lo), order_(order), c_(std::move(coeffs))
    {
        if (order_ < lo_)
            order_ = lo_;
        if (order_ != kExact)
            c_.resize(static_cast<std::size_t>(order_ - lo_));
    }

    /// Exact finite polynomial sum_j coeffs[j] z^{lo+j}.
    static SeriesZ polynomial(long lo, std::vector<T> coeffs)
    {
        return SeriesZ(lo, kExact, std::move(coeffs));
    }

    long lo() const { return lo_; }
    long order() const { return order_; }
    bool exact() const { return order_ == kExact; }

    /// Coefficient of z^k. Throws OrderTooLow when k is past the truncation.
    T coeff(long k) const
    {
        if (k >= order_)
            throw OrderTooLow(k);
        if (k < lo_ || k - lo_ >= static_cast<long>(c_.size()))
            return T();
        return c_[static_cast<std::size_t>(k - lo_)];
    }

    /// Drops everything from z^order on.
    SeriesZ truncate(long order) const
    {
        if (order >= order_)
            return *this;
        std::vector<T> c;
        for (long k = lo_; k < order; ++k)
            c.push_back(coeff(k));
        return SeriesZ(lo_, order, std::move(c));
    }

    template <class F>
    SeriesZ map_coeffs(F&& f) const
    {
        std::vector<T> r;
        r.reserve(c_.size());
        for (const auto& a : c_)
            r.push_back(f(a));
        return SeriesZ(lo_, order_, std::move(r));
    }

    friend SeriesZ operator+(const SeriesZ& a, const SeriesZ& b)
    {
        long lo = std::min(a.lo_, b.lo_);
        long order = std::min(a.order_, b.order_);
        long hi = std::min(order, std::max(a.stored_end(), b.stored_end()));
        std::vector<T> r;
        for (long k = lo; k < hi; ++k)
            r.push_back(a.coeff(k) + b.coeff(k));
        return SeriesZ(lo, order, std::move(r));
    }

    SeriesZ operator-() const
    {
        return map_coeffs([](const T& x) { return T() - x; });
    }

    friend SeriesZ operator-(const SeriesZ& a, const SeriesZ& b) { return a + (-b); }

    /// Product; the known range shrinks by the other factor's negative
    /// valuation, which for ordinary power series is min(order).
    friend SeriesZ operator*(const SeriesZ& a, const SeriesZ& b)
    {
        long lo = a.lo_ + b.lo_;
        long order = std::min(sat_add(a.order_, std::min(b.lo_, 0L)),
                              sat_add(b.order_, std::min(a.lo_, 0L)));
        long hi = std::min(order, a.stored_end() + b.stored_end() - 1);
        std::vector<T> r(static_cast<std::size_t>(std::max(hi - lo, 0L)));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i]))
                continue;
            long ei = a.lo_ + static_cast<long>(i);
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                long e = ei + b.lo_ + static_cast<long>(j);
                if (e >= hi)
                    break;
                r[static_cast<std::size_t>(e - lo)] += a.c_[i] * b.c_[j];
            }
        }
        return SeriesZ(lo, order, std::move(r));
    }

    friend SeriesZ operator*(const SeriesZ& a, const Rat& s)
    {
        return a.map_coeffs([&](const T& x) { return x * s; });
    }

private:
    long stored_end() const { return lo_ + static_cast<long>(c_.size()); }

    static long sat_add(long a, long b)
    {
        if (a == kExact)
            return kExact;
        return a + b;
    }

    long lo_ = 0;
    long order_ = kExact;
    std::vector<T> c_;
};

/// Constant term (z^0 coefficient).
template <class T>
T ct_z(const SeriesZ<T>& f)
{
    return f.coeff(0);
}

namespace detail {

template <class T>
void require_power_series(const SeriesZ<T>& f)
{
    for (long k = f.lo(); k < 0; ++k)
        if (!coeff_is_zero(f.coeff(k)))
            throw NonUnitConstantTerm();
}

} // namespace detail

/// g with f*g = 1 mod z^order.
template <class T>
SeriesZ<T> series_inverse(const SeriesZ<T>& f, long order)
{
    detail::require_power_series(f);
    if (f.order() <= 0)
        throw OrderTooLow(0);
    auto inv0 = Ring<T>::inverse(f.coeff(0));
    if (!inv0)
        throw NonUnitConstantTerm();
    order = std::min(order, f.order());
    std::vector<T> g;
    g.reserve(static_cast<std::size_t>(std::max(order, 0L)));
    if (order > 0)
        g.push_back(*inv0);
    for (long n = 1; n < order; ++n) {
        T acc;
        for (long j = 1; j <= n; ++j) {
            T fj = f.coeff(j);
            if (detail::coeff_is_zero(fj))
                continue;
            acc += fj * g[static_cast<std::size_t>(n - j)];
        }
        g.push_back(T() - acc * *inv0);
    }
    return SeriesZ<T>(0, order, std::move(g));
}

/// g with g^2 * f = 1 mod z^order, for f with constant term 1. Uses the
/// power recursion n g_n = sum_{j=1}^n (j/2 - n) f_j g_{n-j}.
template <class T>
SeriesZ<T> series_inv_sqrt(const SeriesZ<T>& f, long order)
{
    detail::require_power_series(f);
    if (f.order() <= 0)
        throw OrderTooLow(0);
    if (!(f.coeff(0) == Ring<T>::one()))
        throw NonUnitConstantTerm();
    order = std::min(order, f.order());
    std::vector<T> g;
    if (order > 0)
        g.push_back(Ring<T>::one());
    for (long n = 1; n < order; ++n) {
        T acc;
        for (long j = 1; j <= n; ++j) {
            T fj = f.coeff(j);
            if (detail::coeff_is_zero(fj))
                continue;
            acc += fj * g[static_cast<std::size_t>(n - j)] * (Rat(j, 2) - Rat(n));
        }
        g.push_back(acc * Rat(1, n));
    }
    return SeriesZ<T>(0, order, std::move(g));
}

} // namespace branges

#endif

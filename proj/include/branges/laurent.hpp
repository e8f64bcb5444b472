#ifndef BRANGES_LAURENT_HPP
#define BRANGES_LAURENT_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include <branges/rat.hpp>
#include <branges/ring.hpp>

namespace branges {

/// Laurent polynomial sum_{j=lo}^{hi} a_j w^j over a coefficient ring T.
/// The first and last stored coefficients are nonzero; zero is empty.
template <class T>
class LaurentW {
public:
    LaurentW() = default;
    LaurentW(const T& constant) : LaurentW(0, std::vector<T>{constant}) {}
    LaurentW(long lo, std::vector<T> coeffs) : lo_(lo), c_(std::move(coeffs)) { trim(); }

    static LaurentW monomial(long k, const T& a)
    {
        return LaurentW(k, std::vector<T>{a});
    }

    bool is_zero() const { return c_.empty(); }
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }

    /// Coefficient of w^k; zero outside the stored support.
    T coeff(long k) const
    {
        if (c_.empty() || k < lo_ || k > hi())
            return T();
        return c_[static_cast<std::size_t>(k - lo_)];
    }

    /// w -> 1/w.
    LaurentW reflect() const
    {
        if (c_.empty())
            return *this;
        std::vector<T> r(c_.rbegin(), c_.rend());
        return LaurentW(-hi(), std::move(r));
    }

    template <class F>
    LaurentW map_coeffs(F&& f) const
    {
        std::vector<T> r;
        r.reserve(c_.size());
        for (const auto& a : c_)
            r.push_back(f(a));
        return LaurentW(lo_, std::move(r));
    }

    LaurentW& operator+=(const LaurentW& o)
    {
        if (o.is_zero())
            return *this;
        if (is_zero())
            return *this = o;
        long lo = std::min(lo_, o.lo_);
        long hi = std::max(this->hi(), o.hi());
        std::vector<T> r(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[static_cast<std::size_t>(lo_ - lo) + i] = std::move(c_[i]);
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            r[static_cast<std::size_t>(o.lo_ - lo) + i] += o.c_[i];
        lo_ = lo;
        c_ = std::move(r);
        trim();
        return *this;
    }
    LaurentW& operator-=(const LaurentW& o) { return *this += -o; }

    LaurentW operator-() const
    {
        return map_coeffs([](const T& a) { return T() - a; });
    }

    friend LaurentW operator+(LaurentW a, const LaurentW& b) { return a += b; }
    friend LaurentW operator-(LaurentW a, const LaurentW& b) { return a -= b; }

    friend LaurentW operator*(const LaurentW& a, const LaurentW& b)
    {
        if (a.is_zero() || b.is_zero())
            return LaurentW();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return LaurentW(a.lo_ + b.lo_, std::move(r));
    }

    friend LaurentW operator*(const LaurentW& a, const Rat& s)
    {
        return a.map_coeffs([&](const T& x) { return x * s; });
    }

    friend bool operator==(const LaurentW&, const LaurentW&) = default;

private:
    void trim()
    {
        while (!c_.empty() && detail::coeff_is_zero(c_.back()))
            c_.pop_back();
        std::size_t first = 0;
        while (first < c_.size() && detail::coeff_is_zero(c_[first]))
            ++first;
        if (first == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        if (first > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
            lo_ += static_cast<long>(first);
        }
    }

    long lo_ = 0;
    std::vector<T> c_;
};

template <class T>
bool is_zero(const LaurentW<T>& f)
{
    return f.is_zero();
}

/// Coefficient of w^k.
template <class T>
T coeff_w(const LaurentW<T>& f, long k)
{
    return f.coeff(k);
}

template <class T>
struct Ring<LaurentW<T>> {
    static LaurentW<T> one() { return LaurentW<T>(Ring<T>::one()); }
    static std::optional<LaurentW<T>> inverse(const LaurentW<T>& f)
    {
        if (f.coeffs().size() != 1)
            return std::nullopt;
        auto inv = Ring<T>::inverse(f.coeffs().front());
        if (!inv)
            return std::nullopt;
        return LaurentW<T>::monomial(-f.lo(), *inv);
    }
};

} // namespace branges

#endif

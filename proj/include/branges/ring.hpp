#ifndef BRANGES_RING_HPP
#define BRANGES_RING_HPP

#include <optional>

#include <branges/rat.hpp>

namespace branges {

// Coefficient rings used by LaurentW and SeriesZ specialize this.
// Requirements on T beyond the traits: default construction yields zero,
// + - * with T, * with Rat, and a free is_zero(const T&).
template <class T>
struct Ring;

inline bool is_zero(const Rat& r) { return r.is_zero(); }

template <>
struct Ring<Rat> {
    static Rat one() { return Rat(1); }
    static std::optional<Rat> inverse(const Rat& r)
    {
        if (r.is_zero())
            return std::nullopt;
        return r.inverse();
    }
};

namespace detail {

// Unqualified call so ADL finds is_zero for types declared later; member
// functions named is_zero would otherwise hide the free overloads.
template <class T>
bool coeff_is_zero(const T& x)
{
    return is_zero(x);
}

} // namespace detail

} // namespace branges

#endif

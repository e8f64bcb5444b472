#ifndef BRANGES_FACT1_HPP
#define BRANGES_FACT1_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <branges/rat.hpp>
#include <branges/ring.hpp>
#include <branges/series.hpp>

namespace branges {

/// Generator families: c_k, its conjugate, and their time derivatives.
enum class Family { C = 0, CB = 1, CD = 2, CBD = 3 };

struct Generator {
    int index; // k >= 1
    Family family;
};

/// Sorted (generator id, exponent) pairs.
using SymMonomial = std::vector<std::pair<int, int>>;

int generator_id(int index, Family family);
Generator generator_of(int id);

/// Commutative polynomial over Rat in the generators.
class SymPoly {
public:
    SymPoly() = default;
    SymPoly(const Rat& constant);
    SymPoly(long constant) : SymPoly(Rat(constant)) {}

    static SymPoly gen(int index, Family family);
    static SymPoly c(int k) { return gen(k, Family::C); }
    static SymPoly cb(int k) { return gen(k, Family::CB); }
    static SymPoly cd(int k) { return gen(k, Family::CD); }
    static SymPoly cbd(int k) { return gen(k, Family::CBD); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<SymMonomial, Rat>& terms() const { return terms_; }

    /// Swaps c <-> cb and cd <-> cbd.
    SymPoly conj() const;
    /// Time derivative: c -> cd, cb -> cbd. Throws on dotted input.
    SymPoly D() const;

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(const SymPoly& a, const Rat& s);
    SymPoly operator-() const { return *this * Rat(-1); }
    friend bool operator==(const SymPoly&, const SymPoly&) = default;

    /// Deterministic text form such as "4 - c1*cb1 + cb1*cd1".
    std::string str() const;

private:
    void add_term(const SymMonomial& m, const Rat& a);
    std::map<SymMonomial, Rat> terms_;
};

inline bool is_zero(const SymPoly& p) { return p.is_zero(); }

template <>
struct Ring<SymPoly> {
    static SymPoly one() { return SymPoly(1); }
    /// Only nonzero constants are invertible.
    static std::optional<SymPoly> inverse(const SymPoly& p);
};

using SymSeries = SeriesZ<SymPoly>;

/// (1 + sum cd_k z^k) / (1 + sum k c_k z^k) mod z^{K+1}.
SymSeries ratio_R(int K);

/// 2(1 + sum_{r<=k} r c_r z^r) - k c_k z^k, or its conjugate in cb_r z^{-r}.
SymSeries weinstein_bracket(int k, bool conjugated);

/// Re CT_z of R * bracket * conjugated bracket, symmetrized under conj.
SymPoly rhs_coeff(int k);

/// 4/k - k c_k cb_k.
SymPoly lhs_term(int k);

/// Coefficients of w^1..w^K of
/// (1+w) sum D(a_k) w^k + flowSign (1-w) sum k a_k w^k,
/// i.e. (1+w) d/dt sum a_k w^k with dw/dt = flowSign w(1-w)/(1+w).
std::vector<SymPoly> lhs_series(int K, int flowSign = -1);

/// Coefficients of w^1..w^K of (1-w) sum_k rhs_coeff(k) w^k.
std::vector<SymPoly> rhs_series(int K);

struct Fact1Result {
    int K = 0;
    int flowSign = -1;
    /// +1 or -1; 0 when the w^1 coefficients are not related by a sign.
    int epsilon = 0;
    bool ok = false;
    std::optional<int> firstFailure;
    std::vector<SymPoly> lhs;       // w^1..w^K
    std::vector<SymPoly> rhs;       // w^1..w^K
    std::vector<SymPoly> residuals; // lhs - epsilon * rhs
};

/// Throws invalid_argument for K < 1.
Fact1Result verify_fact1(int K, int flowSign = -1);

/// u + w' du/dw == 0 for u = w/(1-w)^2 and w' = flowSign w(1-w)/(1+w),
/// as an exact rational-function identity.
bool flow_consistency(int flowSign = -1);

/// Support and degree bounds expected of a w^j coefficient: generator
/// indices <= j, index weight <= 2j, at most one plain and one conjugated
/// factor, at most one dotted factor.
bool within_coefficient_shape(const SymPoly& p, int j);

} // namespace branges

#endif

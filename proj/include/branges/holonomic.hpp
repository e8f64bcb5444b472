#ifndef BRANGES_HOLONOMIC_HPP
#define BRANGES_HOLONOMIC_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <branges/bipoly.hpp>
#include <branges/poly.hpp>

namespace branges {

struct NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// sum_{i=0}^{r} p_i(n, c) a_{n+i} = 0, kept in normalized form: the
/// coefficients are jointly primitive with integer coefficients and p_r has a
/// positive graded-lex leading term.
class RecOp {
public:
    RecOp() = default;
    /// Normalizes. Throws DegenerateLeadingCoefficient when the last
    /// coefficient is zero, invalid_argument when fewer than two are given.
    explicit RecOp(std::vector<BiPoly> coeffs);

    /// Shift operator polynomial with constant coefficients, lowest first:
    /// from_constants({-2, 1}) is E - 2.
    static RecOp from_constants(const std::vector<Rat>& lowestFirst);

    int order() const { return static_cast<int>(p_.size()) - 1; }
    const std::vector<BiPoly>& coeffs() const { return p_; }
    const BiPoly& coeff(int i) const { return p_.at(static_cast<std::size_t>(i)); }
    const BiPoly& leading() const { return p_.back(); }

    /// sum_i p_i(n0, c) values[i]; needs order()+1 values.
    Poly apply(const Rat& n0, const std::vector<Poly>& values) const;

    std::string str() const;
    friend bool operator==(const RecOp&, const RecOp&) = default;

private:
    std::vector<BiPoly> p_;
};

bool op_equal(const RecOp& a, const RecOp& b);

/// Consecutive sequence terms a_startN, a_startN+1, ... as polynomials in c
/// (constants for numeric sequences).
struct SeqSlice {
    int startN = 0;
    std::vector<Poly> values;
    std::string source;

    int size() const { return static_cast<int>(values.size()); }
    int endN() const { return startN + size(); }
    const Poly& at(int n) const { return values.at(static_cast<std::size_t>(n - startN)); }
    static SeqSlice numeric(int startN, const std::vector<Rat>& values);
};

struct VerifyResult {
    bool ok = true;
    std::optional<int> firstFailure;
    /// Integers n in the checked range where p_r(n, c) vanishes identically.
    std::vector<int> leadingZeros;
    int checkedFrom = 0;
    int checkedTo = -1;
};

/// Exact check of the relation at every n with n + order inside the slice.
VerifyResult rec_verify(const RecOp& op, const SeqSlice& seq);

struct GuessBounds {
    int maxOrder = 4;
    int maxDegN = 6;
    int maxDegC = 3;
};

/// Smallest (order, then total degree) operator whose ansatz has a nontrivial
/// nullspace on the fitting part of the slice and which verifies on the whole
/// slice. Throws NotFound.
RecOp guess_rec(const SeqSlice& seq, const GuessBounds& bounds);

/// Operator annihilating every termwise product of solutions of a and b.
/// Throws DegenerateLeadingCoefficient.
RecOp product_closure(const RecOp& a, const RecOp& b);

/// Integers n0 with p(n0, c) identically zero in c, ascending.
std::vector<int> integer_roots_in_n(const BiPoly& p);

/// Monic coefficients of an order-3 operator:
/// u_{n+3} = t2 u_{n+2} + t1 u_{n+1} + t0 u_n.
struct MonicOrder3 {
    RatFunc2 t0, t1, t2;
};
MonicOrder3 monic_order3(const RecOp& op);

/// T is the symmetric square of L_{n+2} = a_n L_{n+1} + b_n L_n with
/// A = a^2, B2 = b^2 and Q = a_{n+1} b_{n+1} / a_n.
struct SymSquareCert {
    RatFunc2 A;
    RatFunc2 B2;
    RatFunc2 Q;
    /// Every denominator is nonzero (as a polynomial in c) for integer
    /// n >= validFromN; nullopt when that holds for every integer n.
    std::optional<int> validFromN;
    int degN = 0;
    int degC = 0;
    /// Integers n on which A >= 0 and B2 >= 0 for c in (0, 1) was checked.
    int positivityFrom = 0;
    int positivityTo = -1;
    std::vector<int> positivityFailures;

    bool real_on_range() const { return positivityFailures.empty(); }
    /// t2, t1, t0 rebuilt from A, B2, Q.
    MonicOrder3 reconstruct() const;
};

struct SymSquareOptions {
    int maxDegN = 8;
    int maxDegC = 6;
    /// Range for the positivity check; skipped when from > to.
    int positivityFrom = 0;
    int positivityTo = -1;
};

/// Throws OrderMismatch when T.order() != 3 and NotFound when no
/// bounded-degree certificate satisfies every matching identity.
SymSquareCert sym_square_root(const RecOp& T, const SymSquareOptions& options = {});

/// true when all four matching identities hold against T.
bool check_matching(const SymSquareCert& cert, const RecOp& T);

/// A(n, c) >= 0 and B2(n, c) >= 0 on c in (0, 1) for each integer n in
/// [from, to]; returns the failing n.
std::vector<int> check_real_range(const SymSquareCert& cert, int from, int to);

/// With L_k^2 = u0, L_{k+1}^2 = u1 and the order-2 recurrence at n = k, the
/// square of L_{k+2} equals u2:
/// (u2 - A u1 - B2 u0)^2 == 4 A B2 u0 u1 as polynomials in c.
bool bridging_holds(const SymSquareCert& cert, int k, const Poly& u0, const Poly& u1,
                    const Poly& u2);

} // namespace branges

#endif

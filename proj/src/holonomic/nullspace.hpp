#ifndef BRANGES_SRC_HOLONOMIC_NULLSPACE_HPP
#define BRANGES_SRC_HOLONOMIC_NULLSPACE_HPP

#include <utility>
#include <vector>

#include <branges/bipoly.hpp>

namespace branges::detail {

/// Row echelon form over the integers, built one row at a time with
/// fraction-free elimination and primitive rows.
class IntegerEchelon {
public:
    explicit IntegerEchelon(int cols) : cols_(cols) {}

    /// Returns true when the row raises the rank.
    bool add(std::vector<Int> row);
    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    bool full_rank() const { return rank() == cols_; }
    /// One basis vector per free column, free columns ascending.
    std::vector<std::vector<Rat>> nullspace() const;

private:
    struct Row {
        int pivot;
        std::vector<Int> v;
    };
    int cols_;
    std::vector<Row> rows_; // ascending pivots
};

/// Monomial n^first c^second.
using Monomial2 = std::pair<int, int>;

/// Unknowns u_{j,m} for the relation sum_j sum_m u_{j,m} n^a c^b s_j(n) = 0,
/// one scalar equation per sample n and per power of c.
class AnsatzSystem {
public:
    AnsatzSystem(int families, std::vector<Monomial2> monomials);

    void add_sample(const Rat& n, const std::vector<Poly>& s);
    int unknowns() const { return echelon_.cols(); }
    int equations() const { return equations_; }
    bool full_rank() const { return echelon_.full_rank(); }
    std::vector<std::vector<Rat>> nullspace() const { return echelon_.nullspace(); }
    /// Polynomial of family j in a solution vector.
    BiPoly assemble(const std::vector<Rat>& solution, int j) const;

private:
    int families_;
    std::vector<Monomial2> monomials_;
    IntegerEchelon echelon_;
    int equations_ = 0;
};

} // namespace branges::detail

#endif

#ifndef BRANGES_FACT2_HPP
#define BRANGES_FACT2_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <branges/laurent.hpp>
#include <branges/poly.hpp>
#include <branges/series.hpp>

namespace branges {

/// Laurent polynomial in w with coefficients in Q[c].
using RowW = LaurentW<Poly>;

/// x~ = c + (1-c)(w + 1/w)/2, so the kernel is 1 - 2 x~ z + z^2.
RowW kernel_x();

/// 1 - z(2c + (1-c)(w + 1/w)) + z^2 as an exact series in z.
SeriesZ<RowW> kernel_series();

enum class KernelPower { MinusHalf, MinusOne };

/// z^n coefficients of kernel^power for n = 0..maxN.
struct KernelExpansion {
    KernelPower power;
    int maxN = 0;
    std::vector<RowW> rows;
};

enum class TableKind { A, B };

/// The only supported reading of sum_k X_{k,n}(w^k + w^{-k}): the w^0
/// coefficient is 2 X_{0,n}.
inline const std::string kDoubledK0 = "doubled-k0";

/// X_{k,n}(c) for 0 <= k <= n <= maxN.
class CoeffTable {
public:
    CoeffTable() = default;
    CoeffTable(TableKind kind, int maxN);

    TableKind kind() const { return kind_; }
    int maxN() const { return maxN_; }
    const std::string& convention() const { return convention_; }
    std::size_t size() const;

    const Poly& at(int k, int n) const;
    void set(int k, int n, Poly p);

    /// Rebuilds the symmetric Laurent row n from the entries.
    RowW row(int n) const;

    friend bool operator==(const CoeffTable&, const CoeffTable&) = default;

private:
    TableKind kind_ = TableKind::B;
    int maxN_ = 0;
    std::string convention_ = kDoubledK0;
    std::vector<std::vector<Poly>> entries_; // entries_[n][k]
};

/// Via series_inv_sqrt / series_inverse of the trivariate kernel.
KernelExpansion expand_kernel_series(KernelPower power, int maxN);
/// Via the Legendre (power -1/2) or Chebyshev-U (power -1) three-term
/// recurrence in x~, entirely in Laurent arithmetic.
KernelExpansion expand_kernel_recurrence(KernelPower power, int maxN);

/// Reads entries off the rows under the doubled-k0 convention.
CoeffTable extract_table(const KernelExpansion& expansion);

CoeffTable build_b_table(int maxN);
CoeffTable build_b_table_rec(int maxN);
CoeffTable build_a_table(int maxN);

/// A rows as sum_{i+j=n} B-row_i * B-row_j.
CoeffTable a_via_convolution(const CoeffTable& b);

/// First (k, n) where the tables differ, in n-major order.
std::optional<std::pair<int, int>> first_mismatch(const CoeffTable& x, const CoeffTable& y);

/// Throws TableMismatch at the first differing entry.
void require_equal(const CoeffTable& x, const CoeffTable& y);

} // namespace branges

#endif

#include <branges/errors.hpp>
#include <branges/holonomic.hpp>

#include <algorithm>

#include "nullspace.hpp"

namespace branges {

namespace {

// Extra scalar equations beyond the unknown count before a nullspace is trusted.
constexpr int kMargin = 5;

std::vector<detail::Monomial2> ansatz_monomials(int maxDegN, int maxDegC, int total)
{
    std::vector<detail::Monomial2> m;
    for (int d = 0; d <= total; ++d)
        for (int a = std::min(d, maxDegN); a >= 0; --a)
            if (d - a <= maxDegC)
                m.emplace_back(a, d - a);
    return m;
}

} // namespace

RecOp guess_rec(const SeqSlice& seq, const GuessBounds& bounds)
{
    const int len = seq.size();
    for (int r = 1; r <= bounds.maxOrder; ++r) {
        const int tail = std::max(r + 2, len / 5);
        const int fitLen = len - tail;
        if (fitLen < r + 1)
            break;
        for (int d = 0; d <= bounds.maxDegN + bounds.maxDegC; ++d) {
            detail::AnsatzSystem sys(r + 1, ansatz_monomials(bounds.maxDegN, bounds.maxDegC, d));
            std::vector<Poly> window(static_cast<std::size_t>(r) + 1);
            for (int n = seq.startN; n + r < seq.startN + fitLen && !sys.full_rank(); ++n) {
                for (int i = 0; i <= r; ++i)
                    window[static_cast<std::size_t>(i)] = seq.at(n + i);
                sys.add_sample(Rat(n), window);
            }
            if (sys.full_rank() || sys.equations() < sys.unknowns() + kMargin)
                continue;
            for (const auto& v : sys.nullspace()) {
                std::vector<BiPoly> coeffs;
                for (int i = 0; i <= r; ++i)
                    coeffs.push_back(sys.assemble(v, i));
                if (coeffs.back().is_zero())
                    continue;
                RecOp op(std::move(coeffs));
                if (rec_verify(op, seq).ok)
                    return op;
            }
        }
    }
    throw NotFound("guess_rec: no recurrence within bounds for " + seq.source);
}

} // namespace branges

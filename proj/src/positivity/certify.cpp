#include <branges/errors.hpp>
#include <branges/positivity.hpp>

namespace branges {

std::optional<Fact2Failure> Fact2Report::first_failure() const
{
    if (failures.empty())
        return std::nullopt;
    return failures.front();
}

Fact2Report certify_fact2(const CoeffTable& b, const CoeffTable& a, int sturmMaxN)
{
    if (b.kind() != TableKind::B || a.kind() != TableKind::A)
        throw std::invalid_argument("certify_fact2: expected a B table and an A table");
    if (b.maxN() != a.maxN() || b.convention() != a.convention())
        throw std::invalid_argument("certify_fact2: tables disagree on maxN or convention");

    Fact2Report report;
    report.maxN = b.maxN();
    report.sturmMaxN = sturmMaxN;
    report.convention = b.convention();
    report.exponentPatternHolds = true;

    for (int n = 0; n <= b.maxN(); ++n) {
        for (int k = 0; k <= n; ++k) {
            try {
                SquareCert cert = square_certificate(b.at(k, n), k, n);
                if (cert.alpha != (n - k) % 2 || cert.beta != k % 2)
                    report.exponentPatternHolds = false;
                report.certificates.push_back(std::move(cert));
            } catch (const std::exception& e) {
                report.failures.push_back({'B', k, n, e.what()});
            }
        }
    }

    try {
        require_equal(a_via_convolution(b), a);
        report.convolutionEqual = true;
    } catch (const TableMismatch& e) {
        report.failures.push_back({'A', e.k, e.n, e.what()});
    }

    for (int n = 0; n <= std::min(sturmMaxN, a.maxN()); ++n) {
        for (int k = 0; k <= n; ++k) {
            const Poly& p = a.at(k, n);
            if (p.is_zero()) {
                report.sturm.push_back({k, n, 0, true});
                continue;
            }
            SturmVerdict v = sturm_count(p, Rat(0), Rat(1));
            report.sturm.push_back({k, n, v.rootCount, v.nonnegative});
            if (!v.nonnegative)
                report.failures.push_back({'A', k, n, "negative somewhere on [0,1]"});
        }
    }
    return report;
}

} // namespace branges

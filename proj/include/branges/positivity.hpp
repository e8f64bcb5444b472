#ifndef BRANGES_POSITIVITY_HPP
#define BRANGES_POSITIVITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <branges/fact2.hpp>
#include <branges/poly.hpp>

namespace branges {

/// p = content * prod factor_i^multiplicity_i with pairwise coprime,
/// square-free, primitive factors of positive leading coefficient.
struct SquareFreeDecomposition {
    Rat content;
    std::vector<std::pair<Poly, int>> factors;
};

/// Yun's algorithm. Throws ZeroPolynomial.
SquareFreeDecomposition yun_squarefree(const Poly& p);

/// sigma * c^alpha * (1-c)^beta * S(c)^2, certifying the entry (k, n).
struct SquareCert {
    Rat sigma;
    int alpha = 0;
    int beta = 0;
    Poly S;
    int k = 0;
    int n = 0;

    Poly reconstruct() const;
};

/// Throws NotASquareTimesKernel, NegativeSigma, ZeroPolynomial.
SquareCert square_certificate(const Poly& p, int k, int n);

struct SignSample {
    Rat point;
    int sign;
};

struct SturmVerdict {
    Poly polynomial;
    Rat lo;
    Rat hi;
    /// Distinct real roots in the open interval.
    int rootCount = 0;
    /// Endpoints, then one point in every gap between consecutive roots.
    std::vector<SignSample> signSamples;
    /// p >= 0 on the closed interval [lo, hi].
    bool nonnegative = false;
    /// p >= 0 on the open interval (lo, hi).
    bool interiorNonnegative = false;
};

/// Number of distinct real roots of p in (lo, hi), by Sturm's theorem.
int count_roots_open(const Poly& p, const Rat& lo, const Rat& hi);

/// Exact root count and sign analysis on [lo, hi]. Throws ZeroPolynomial.
SturmVerdict sturm_count(const Poly& p, const Rat& lo, const Rat& hi);

struct Fact2Failure {
    char table; // 'A' or 'B'
    int k;
    int n;
    std::string reason;
};

struct SturmEntry {
    int k;
    int n;
    int rootCount;
    bool nonnegative;
};

struct Fact2Report {
    int maxN = 0;
    int sturmMaxN = 0;
    std::string convention;
    std::vector<SquareCert> certificates; // B entries, n-major
    /// alpha == (n-k) mod 2 and beta == k mod 2 for every certificate.
    bool exponentPatternHolds = false;
    /// A == sum of products of B rows, so every A entry is a sum of
    /// products of certified-nonnegative functions.
    bool convolutionEqual = false;
    std::vector<SturmEntry> sturm; // A entries with n <= sturmMaxN
    std::vector<Fact2Failure> failures;

    bool ok() const { return failures.empty(); }
    std::optional<Fact2Failure> first_failure() const;
};

Fact2Report certify_fact2(const CoeffTable& b, const CoeffTable& a, int sturmMaxN);

} // namespace branges

#endif

#include <doctest.h>

#include <algorithm>
#include <random>

#include <branges/errors.hpp>
#include <branges/positivity.hpp>

using namespace branges;

namespace {

const Poly c = Poly::x();
const Poly one_minus_c{Rat(1), Rat(-1)};
const Poly c_minus_1{Rat(-1), Rat(1)};

const CoeffTable& b20()
{
    static const CoeffTable t = build_b_table(20);
    return t;
}

} // namespace

TEST_CASE("yun_squarefree")
{
    SUBCASE("(c-1)^2")
    {
        auto sf = yun_squarefree(Poly{Rat(1), Rat(-2), Rat(1)});
        CHECK(sf.content == Rat(1));
        REQUIRE(sf.factors.size() == 1);
        CHECK(sf.factors[0].first == c_minus_1);
        CHECK(sf.factors[0].second == 2);
    }
    SUBCASE("c")
    {
        auto sf = yun_squarefree(c);
        CHECK(sf.content == Rat(1));
        REQUIRE(sf.factors.size() == 1);
        CHECK(sf.factors[0] == std::make_pair(c, 1));
    }
    SUBCASE("(9c^2 - 6c + 1)(1 - c)/8")
    {
        Poly p = Poly{Rat(1), Rat(-6), Rat(9)} * one_minus_c * Rat(1, 8);
        auto sf = yun_squarefree(p);
        // The sign of (1-c) moves into the content under the
        // positive-leading-coefficient convention.
        CHECK(sf.content == Rat(-1, 8));
        REQUIRE(sf.factors.size() == 2);
        CHECK(sf.factors[0] == std::make_pair(c_minus_1, 1));
        CHECK(sf.factors[1] == std::make_pair(Poly{Rat(-1), Rat(3)}, 2));
    }
    SUBCASE("constant and zero")
    {
        auto sf = yun_squarefree(Poly(Rat(3, 4)));
        CHECK(sf.content == Rat(3, 4));
        CHECK(sf.factors.empty());
        CHECK_THROWS_AS(yun_squarefree(Poly()), ZeroPolynomial);
    }
}

TEST_CASE("yun_squarefree reconstructs random products")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> root(-6, 6), mult(1, 4), count(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
        Poly p(Rat(std::uniform_int_distribution<int>(1, 9)(rng), 7));
        int m = count(rng);
        for (int i = 0; i < m; ++i)
            p = p * pow(Poly{Rat(root(rng)), Rat(std::uniform_int_distribution<int>(1, 3)(rng))},
                        static_cast<unsigned>(mult(rng)));
        auto sf = yun_squarefree(p);
        Poly back(sf.content);
        for (std::size_t i = 0; i < sf.factors.size(); ++i) {
            const auto& [f, e] = sf.factors[i];
            CHECK(f.lc().sign() > 0);
            CHECK(content(f) == Rat(1));
            CHECK(gcd(f, f.derivative()).degree() == 0);
            for (std::size_t j = i + 1; j < sf.factors.size(); ++j)
                CHECK(gcd(f, sf.factors[j].first).degree() == 0);
            back = back * pow(f, static_cast<unsigned>(e));
        }
        CHECK(back == p);
    }
}

TEST_CASE("square_certificate examples")
{
    SUBCASE("B(1,1) = (1-c)/2")
    {
        auto cert = square_certificate(one_minus_c * Rat(1, 2), 1, 1);
        CHECK(cert.sigma == Rat(1, 2));
        CHECK(cert.alpha == 0);
        CHECK(cert.beta == 1);
        CHECK(cert.S == Poly(1));
    }
    SUBCASE("B(0,2) = (3c-1)^2/8")
    {
        Poly t{Rat(-1), Rat(3)};
        auto cert = square_certificate(t * t * Rat(1, 8), 0, 2);
        CHECK(cert.sigma == Rat(1, 8));
        CHECK(cert.alpha == 0);
        CHECK(cert.beta == 0);
        CHECK(cert.S == t);
    }
    SUBCASE("B(2,3) = 15c(1-c)^2/8")
    {
        Poly p = b20().at(2, 3);
        CHECK(p == c * one_minus_c * one_minus_c * Rat(15, 8));
        auto cert = square_certificate(p, 2, 3);
        CHECK(cert.sigma == Rat(15, 8));
        CHECK(cert.alpha == 1);
        CHECK(cert.beta == 0);
        CHECK(cert.S == c_minus_1);
        CHECK(cert.reconstruct() == p);
    }
    SUBCASE("c(1-c) kernel")
    {
        auto cert = square_certificate(c * one_minus_c * Rat(3), 0, 0);
        CHECK(cert.sigma == Rat(3));
        CHECK(cert.alpha == 1);
        CHECK(cert.beta == 1);
    }
    SUBCASE("failures")
    {
        CHECK_THROWS_AS(square_certificate(Poly{Rat(1), Rat(1)}, 0, 0), NotASquareTimesKernel);
        CHECK_THROWS_AS(square_certificate(c * c * Rat(-1), 0, 0), NegativeSigma);
        CHECK_THROWS_AS(square_certificate(c * Rat(-2), 0, 0), NegativeSigma);
        CHECK_THROWS_AS(square_certificate(Poly(), 0, 0), ZeroPolynomial);
    }
}

TEST_CASE("every B entry up to n = 20 certifies with the parity exponent pattern")
{
    int count = 0;
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= n; ++k) {
            const Poly& p = b20().at(k, n);
            auto cert = square_certificate(p, k, n);
            CHECK(cert.reconstruct() == p);
            CHECK(cert.sigma.sign() > 0);
            CHECK(cert.alpha == (n - k) % 2);
            CHECK(cert.beta == k % 2);
            CHECK(cert.S.lc().sign() > 0);
            CHECK(content(cert.S) == Rat(1));
            for (int i = 0; i <= 100; ++i)
                CHECK(p.eval(Rat(i, 100)).sign() >= 0);
            ++count;
        }
    CHECK(count == 231);
}

TEST_CASE("sturm_count examples")
{
    auto v1 = sturm_count(Poly{Rat(-1), Rat(3)}, Rat(0), Rat(1));
    CHECK(v1.rootCount == 1);
    CHECK_FALSE(v1.nonnegative);

    auto v2 = sturm_count(Poly{Rat(1), Rat(0), Rat(1)}, Rat(0), Rat(1));
    CHECK(v2.rootCount == 0);
    CHECK(v2.nonnegative);

    auto v3 = sturm_count(c * one_minus_c, Rat(0), Rat(1));
    CHECK(v3.rootCount == 0);
    CHECK(v3.nonnegative);

    // Double root inside: touches zero but stays nonnegative.
    Poly t{Rat(-1), Rat(3)};
    auto v4 = sturm_count(t * t, Rat(0), Rat(1));
    CHECK(v4.rootCount == 1);
    CHECK(v4.nonnegative);

    // Negative only at an endpoint.
    auto v5 = sturm_count(Poly{Rat(-1), Rat(0), Rat(1)} * Rat(-1), Rat(-1), Rat(2));
    CHECK(v5.rootCount == 1);
    CHECK_FALSE(v5.nonnegative);

    auto v6 = sturm_count(c, Rat(0), Rat(1));
    CHECK(v6.nonnegative);
    CHECK(v6.interiorNonnegative);
    auto v7 = sturm_count(-c, Rat(0), Rat(1));
    CHECK_FALSE(v7.interiorNonnegative);

    CHECK_THROWS_AS(sturm_count(Poly(), Rat(0), Rat(1)), ZeroPolynomial);
    CHECK_THROWS(sturm_count(c, Rat(1), Rat(0)));
}

TEST_CASE("sturm counts match known factorizations")
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 6), count(1, 6), mult(1, 3);
    for (int trial = 0; trial < 80; ++trial) {
        Poly p(Rat(std::uniform_int_distribution<int>(1, 5)(rng)));
        std::vector<Rat> roots;
        int m = count(rng);
        for (int i = 0; i < m; ++i) {
            Rat r(num(rng), den(rng));
            roots.push_back(r);
            p = p * pow(Poly{-r, Rat(1)}, static_cast<unsigned>(mult(rng)));
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        Rat lo(num(rng), den(rng));
        Rat hi = lo + Rat(std::uniform_int_distribution<int>(1, 8)(rng), den(rng));
        int expected = static_cast<int>(
            std::count_if(roots.begin(), roots.end(), [&](const Rat& r) { return lo < r && r < hi; }));
        auto v = sturm_count(p, lo, hi);
        CHECK(v.rootCount == expected);
        CHECK(count_roots_open(p, lo, hi) == expected);

        // Brute-force sign check at the roots' neighbourhood midpoints.
        bool nonneg = p.eval(lo).sign() >= 0 && p.eval(hi).sign() >= 0;
        std::vector<Rat> cuts{lo};
        for (const auto& r : roots)
            if (lo < r && r < hi)
                cuts.push_back(r);
        cuts.push_back(hi);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            if (p.eval((cuts[i] + cuts[i + 1]) * Rat(1, 2)).sign() < 0)
                nonneg = false;
        CHECK(v.nonnegative == nonneg);
    }
}

TEST_CASE("certify_fact2")
{
    SUBCASE("maxN = 0")
    {
        auto report = certify_fact2(build_b_table(0), build_a_table(0), 12);
        CHECK(report.ok());
        REQUIRE(report.certificates.size() == 1);
        const auto& cert = report.certificates[0];
        CHECK(cert.sigma == Rat(1, 2));
        CHECK(cert.alpha == 0);
        CHECK(cert.beta == 0);
        CHECK(cert.S == Poly(1));
    }
    SUBCASE("maxN = 20")
    {
        auto report = certify_fact2(b20(), build_a_table(20), 12);
        CHECK(report.ok());
        CHECK(report.certificates.size() == 231);
        CHECK(report.exponentPatternHolds);
        CHECK(report.convolutionEqual);
        CHECK(report.sturm.size() == 91);
        for (const auto& s : report.sturm)
            CHECK(s.nonnegative);
    }
    SUBCASE("A(1,1) = 1 - c is Sturm-certified")
    {
        auto v = sturm_count(build_a_table(1).at(1, 1), Rat(0), Rat(1));
        CHECK(v.nonnegative);
        CHECK(v.rootCount == 0);
    }
    SUBCASE("a corrupted entry is reported")
    {
        CoeffTable b = build_b_table(4);
        b.set(1, 3, Poly{Rat(1), Rat(1)});
        auto report = certify_fact2(b, build_a_table(4), 4);
        CHECK_FALSE(report.ok());
        auto first = report.first_failure();
        REQUIRE(first.has_value());
        CHECK(first->table == 'B');
        CHECK(first->k == 1);
        CHECK(first->n == 3);
        CHECK_FALSE(report.convolutionEqual);
    }
}

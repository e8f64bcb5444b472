// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <branges/cli.hpp>
#include <branges/fact1.hpp>
#include <branges/fact2.hpp>
#include <branges/holonomic.hpp>
#include <branges/positivity.hpp>

#include "oracles.hpp"

using namespace branges;
namespace fs = std::filesystem;

namespace {

// Pinned parameters.
constexpr int kMaxN = 20;
constexpr int kCertCount = 231;
constexpr int kSturmMaxN = 12;
constexpr double kTableBudgetSeconds = 180.0;
constexpr int kMaxColumn = 6;
constexpr int kFitWindow = 30;    // fit on n = k..k+30
constexpr int kVerifyWindow = 60; // verify on n = k..k+60
constexpr int kFibTerms = 50;
constexpr int kFact1Order = 6;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            if (pass)
                detail = what;
            pass = false;
        }
    }
};

const CoeffTable& b20()
{
    static const CoeffTable t = build_b_table(kMaxN);
    return t;
}

const CoeffTable& a20()
{
    static const CoeffTable t = build_a_table(kMaxN);
    return t;
}

Outcome criterion1()
{
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    const CoeffTable& b = b20();
    CoeffTable brec = build_b_table_rec(kMaxN);
    const CoeffTable& a = a20();
    CoeffTable aconv = a_via_convolution(b);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(b == brec, "B series != B recurrence");
    o.require(a == aconv, "A series != convolution of B rows");
    o.require(secs < kTableBudgetSeconds, "table build exceeded the time budget");
    std::ostringstream d;
    d << "B and A tables to n=20 equal by both routes in " << secs << " s";
    if (o.pass)
        o.detail = d.str();
    return o;
}

Outcome criterion2(const oracle::Tri& brute)
{
    Outcome o;
    int certified = 0;
    for (int n = 0; n <= kMaxN; ++n)
        for (int k = 0; k <= n; ++k) {
            try {
                SquareCert c = square_certificate(b20().at(k, n), k, n);
                o.require(c.reconstruct() == b20().at(k, n), "certificate does not reconstruct");
                ++certified;
            } catch (const std::exception& e) {
                o.require(false, e.what());
            }
        }
    o.require(certified == kCertCount, "not every entry certified");

    const Poly c = Poly::x();
    const Poly one_minus_c{Rat(1), Rat(-1)};
    const Poly three_c_minus_1{Rat(-1), Rat(3)};
    struct Spot {
        int k, n;
        Poly closed;
    };
    const std::vector<Spot> spots{
        {1, 1, one_minus_c * Rat(1, 2)},
        {0, 2, three_c_minus_1 * three_c_minus_1 * Rat(1, 8)},
        {2, 3, c * one_minus_c * one_minus_c * Rat(15, 8)},
    };
    for (const auto& s : spots) {
        Poly oracleValue = oracle::entry(brute, s.k, s.n);
        std::string tag = "B(" + std::to_string(s.k) + "," + std::to_string(s.n) + ")";
        o.require(oracleValue == s.closed, tag + " brute force != closed form");
        o.require(b20().at(s.k, s.n) == oracleValue, tag + " table != brute force");
    }
    if (o.pass)
        o.detail = std::to_string(certified)
                   + " square certificates; B(1,1), B(0,2), B(2,3) = 15c(1-c)^2/8 match brute force";
    return o;
}

Outcome criterion3()
{
    Outcome o;
    Fact2Report r = certify_fact2(b20(), a20(), kSturmMaxN);
    o.require(r.convolutionEqual, "A is not the convolution of B rows");
    o.require(r.certificates.size() == static_cast<std::size_t>(kCertCount),
              "B rows not all certified nonnegative");
    std::size_t expectedSturm = (kSturmMaxN + 1) * (kSturmMaxN + 2) / 2;
    o.require(r.sturm.size() == expectedSturm, "Sturm check skipped entries");
    for (const auto& s : r.sturm)
        o.require(s.nonnegative, "Sturm check failed at A(" + std::to_string(s.k) + ","
                                     + std::to_string(s.n) + ")");
    o.require(r.ok(), "certification report has failures");
    if (o.pass)
        o.detail = "A(k,n), n <= 20, are sums of certified squares; " + std::to_string(r.sturm.size())
                   + " entries n <= 12 Sturm-certified";
    return o;
}

Outcome criterion4()
{
    Outcome o;
    CoeffTable b = build_b_table_rec(kMaxColumn + kVerifyWindow);
    auto col = [&](int k, int to) {
        SeqSlice s;
        s.startN = k;
        for (int n = k; n <= to; ++n)
            s.values.push_back(b.at(k, n));
        return s;
    };
    for (int k = 0; k <= kMaxColumn; ++k) {
        std::string tag = "k=" + std::to_string(k) + ": ";
        try {
            RecOp t = guess_rec(col(k, k + kFitWindow), GuessBounds{4, 6, 3});
            o.require(t.order() == 3, tag + "order is not 3");
            o.require(rec_verify(t, col(k, k + kVerifyWindow)).ok, tag + "verification failed");
            SymSquareOptions opt;
            opt.positivityFrom = k;
            opt.positivityTo = k + kVerifyWindow;
            SymSquareCert cert = sym_square_root(t, opt);
            MonicOrder3 want = monic_order3(t);
            MonicOrder3 got = cert.reconstruct();
            o.require(got.t0 == want.t0 && got.t1 == want.t1 && got.t2 == want.t2,
                      tag + "reconstruction differs");
            o.require(cert.real_on_range(), tag + "A or B2 negative somewhere");
            o.require(bridging_holds(cert, k, b.at(k, k), b.at(k, k + 1), b.at(k, k + 2)),
                      tag + "initial values do not bridge");
        } catch (const std::exception& e) {
            o.require(false, tag + e.what());
        }
    }
    if (o.pass)
        o.detail = "k = 0..6: order-3 operators verified to k+60, symmetric-square certificates exact, "
                   "A, B2 >= 0 on (0,1)";
    return o;
}

Outcome criterion5()
{
    Outcome o;
    RecOp fib = RecOp::from_constants({Rat(-1), Rat(-1), Rat(1)});
    RecOp sq = product_closure(fib, fib);
    o.require(op_equal(sq, RecOp::from_constants({Rat(1), Rat(-2), Rat(-2), Rat(1)})),
              "closure is not E^3 - 2E^2 - 2E + 1");
    std::vector<Rat> f{Rat(0), Rat(1)};
    while (static_cast<int>(f.size()) < kFibTerms)
        f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    for (auto& x : f)
        x = x * x;
    o.require(rec_verify(sq, SeqSlice::numeric(0, f)).ok, "Fibonacci squares not annihilated");
    if (o.pass)
        o.detail = "E^3 - 2E^2 - 2E + 1, annihilates 50 Fibonacci squares";
    return o;
}

Outcome criterion6()
{
    Outcome o;
    Fact1Result r = verify_fact1(kFact1Order);
    o.require(r.ok, "identity fails at some order");
    o.require(r.epsilon == 1 || r.epsilon == -1, "no global sign");
    o.require(flow_consistency(-1), "flow identity fails");
    if (o.pass)
        o.detail = "w^1..w^6 agree with global sign " + std::to_string(r.epsilon)
                   + "; flow identity exact";
    return o;
}

Outcome criterion7()
{
    Outcome o;
    auto pipeline = [&](const fs::path& dir) {
        fs::remove_all(dir);
        std::vector<std::string> common{"--cache-dir", dir.string()};
        for (const char* cmd : {"tables", "certify", "guess", "fact1"}) {
            std::vector<std::string> args{cmd};
            args.insert(args.end(), common.begin(), common.end());
            std::ostringstream out, err;
            o.require(run_cli(args, out, err) == kExitOk, std::string(cmd) + " failed");
        }
        std::vector<std::string> args{"report", "--format", "json"};
        args.insert(args.end(), common.begin(), common.end());
        std::ostringstream out, err;
        o.require(run_cli(args, out, err) == kExitOk, "report failed");
        fs::remove_all(dir);
        return out.str();
    };
    fs::path base = fs::temp_directory_path();
    std::string first = pipeline(base / "branges_acceptance_run1");
    std::string second = pipeline(base / "branges_acceptance_run2");
    o.require(!first.empty() && first == second, "ledgers differ");
    if (o.pass)
        o.detail = "two cold runs, identical " + std::to_string(first.size()) + "-byte JSON ledgers";
    return o;
}

} // namespace

int main()
{
    // Reference entries by independent brute-force expansion, before any table build.
    const oracle::Tri brute = oracle::expand_kernel(3, true);

    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"table cross-check", criterion1},
        {"square certificates", [&] { return criterion2(brute); }},
        {"A positivity", criterion3},
        {"recurrence pipeline", criterion4},
        {"closure oracle", criterion5},
        {"flow identity", criterion6},
        {"determinism", criterion7},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        all = all && o.pass;
        std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): "
                  << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
    }
    return all ? 0 : 1;
}

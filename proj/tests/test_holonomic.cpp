#include <doctest.h>

#include <random>

#include <branges/errors.hpp>
#include <branges/fact2.hpp>
#include <branges/holonomic.hpp>

using namespace branges;

namespace {

const BiPoly N = BiPoly::n();
const BiPoly C = BiPoly::c();

BiPoly lin(long a, long b)
{
    return N * Rat(a) + BiPoly(b);
}

SeqSlice column(const CoeffTable& t, int k, int from, int to)
{
    SeqSlice s;
    s.startN = from;
    s.source = "B k=" + std::to_string(k);
    for (int n = from; n <= to; ++n)
        s.values.push_back(t.at(k, n));
    return s;
}

const CoeffTable& b_long()
{
    static const CoeffTable t = build_b_table_rec(62);
    return t;
}

std::vector<Rat> fib_squares(int count)
{
    std::vector<Rat> f{Rat(0), Rat(1)};
    while (static_cast<int>(f.size()) < count)
        f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    for (auto& x : f)
        x = x * x;
    return f;
}

// Order-2 data of the normalized associated Legendre recurrence in column k.
struct ColumnData {
    RatFunc2 A, B2, Q;
};

ColumnData column_oracle(int k)
{
    const BiPoly K{Rat(k)};
    auto f = [&](long s) { return (N + BiPoly(s) - K) * (N + BiPoly(s) + K); };
    ColumnData d;
    d.A = RatFunc2(lin(2, 3) * lin(2, 3) * C, f(2));
    d.B2 = RatFunc2(f(1), f(2));
    d.Q = RatFunc2(-(lin(2, 5) * f(2)), lin(2, 3) * f(3));
    return d;
}

std::vector<Rat> run_forward(const std::vector<BiPoly>& p, Rat x0, Rat x1, int count)
{
    std::vector<Rat> x{x0, x1};
    for (int n = 0; static_cast<int>(x.size()) < count; ++n) {
        Rat s = p[0].eval(Rat(n), Rat(0)) * x[x.size() - 2] + p[1].eval(Rat(n), Rat(0)) * x.back();
        x.push_back(-s / p[2].eval(Rat(n), Rat(0)));
    }
    return x;
}

} // namespace

TEST_CASE("RecOp normal form and op_equal")
{
    RecOp a({BiPoly(-4), BiPoly(2)});
    CHECK(op_equal(a, RecOp::from_constants({Rat(-2), Rat(1)})));
    CHECK(a.coeff(1) == BiPoly(1));
    CHECK_FALSE(op_equal(RecOp::from_constants({Rat(-2), Rat(1)}),
                         RecOp::from_constants({Rat(-3), Rat(1)})));
    // Common polynomial factors and signs are removed.
    RecOp b({-(lin(1, 1) * C) * Rat(3, 2), -(C * Rat(3, 2))});
    CHECK(op_equal(b, RecOp({lin(1, 1), BiPoly(1)})));
    CHECK_THROWS_AS(RecOp({BiPoly(1), BiPoly()}), DegenerateLeadingCoefficient);
    CHECK_THROWS_AS(RecOp({BiPoly(1)}), std::invalid_argument);
}

TEST_CASE("rec_verify")
{
    RecOp e2 = RecOp::from_constants({Rat(-2), Rat(1)});
    CHECK(rec_verify(e2, SeqSlice::numeric(0, {Rat(1), Rat(2), Rat(4), Rat(8)})).ok);
    auto bad = rec_verify(e2, SeqSlice::numeric(0, {Rat(1), Rat(2), Rat(5)}));
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.firstFailure.has_value());
    CHECK(*bad.firstFailure == 1);

    // c a_n + (n - 2) a_{n+1} = 0 has a leading zero at n = 2.
    RecOp z({C, lin(1, -2)});
    auto r = rec_verify(z, SeqSlice::numeric(0, std::vector<Rat>(6, Rat(0))));
    CHECK(r.ok);
    CHECK(r.leadingZeros == std::vector<int>{2});
}

TEST_CASE("integer_roots_in_n")
{
    BiPoly p = lin(1, -3) * lin(1, 2) * C + lin(1, -3) * lin(2, 1);
    CHECK(integer_roots_in_n(p) == std::vector<int>{3});
    CHECK(integer_roots_in_n(lin(1, 5) * lin(1, 0) * lin(2, -7)) == std::vector<int>{-5, 0});
    CHECK(integer_roots_in_n(N + C).empty());
    CHECK(integer_roots_in_n(BiPoly(3)).empty());
}

TEST_CASE("guess_rec on simple sequences")
{
    GuessBounds small{4, 3, 1};
    SUBCASE("powers of two")
    {
        std::vector<Rat> v;
        for (int i = 0; i < 20; ++i)
            v.push_back(Rat(Int(1) << i));
        CHECK(op_equal(guess_rec(SeqSlice::numeric(0, v), small),
                       RecOp::from_constants({Rat(-2), Rat(1)})));
    }
    SUBCASE("factorials")
    {
        std::vector<Rat> v{Rat(1)};
        for (int i = 1; i < 20; ++i)
            v.push_back(v.back() * Rat(i));
        CHECK(op_equal(guess_rec(SeqSlice::numeric(0, v), small),
                       RecOp({-lin(1, 1), BiPoly(1)})));
    }
    SUBCASE("Fibonacci squares")
    {
        auto fs = fib_squares(20);
        CHECK(fs[7] == Rat(169));
        RecOp op = guess_rec(SeqSlice::numeric(0, fs), small);
        CHECK(op_equal(op, RecOp::from_constants({Rat(1), Rat(-2), Rat(-2), Rat(1)})));
    }
    SUBCASE("nothing within bounds")
    {
        std::mt19937 rng(5);
        std::vector<Rat> v;
        for (int i = 0; i < 24; ++i)
            v.push_back(Rat(std::uniform_int_distribution<int>(-50, 50)(rng)));
        CHECK_THROWS_AS(guess_rec(SeqSlice::numeric(0, v), GuessBounds{2, 1, 0}), NotFound);
    }
}

TEST_CASE("product_closure examples")
{
    RecOp fib = RecOp::from_constants({Rat(-1), Rat(-1), Rat(1)});
    RecOp sq = product_closure(fib, fib);
    CHECK(op_equal(sq, RecOp::from_constants({Rat(1), Rat(-2), Rat(-2), Rat(1)})));
    CHECK(rec_verify(sq, SeqSlice::numeric(0, fib_squares(8))).ok);

    CHECK(op_equal(product_closure(RecOp::from_constants({Rat(-2), Rat(1)}),
                                   RecOp::from_constants({Rat(-3), Rat(1)})),
                   RecOp::from_constants({Rat(-6), Rat(1)})));
    RecOp one = RecOp::from_constants({Rat(-1), Rat(1)});
    CHECK(op_equal(product_closure(one, one), one));

    RecOp fact({-lin(1, 1), BiPoly(1)});
    CHECK(op_equal(product_closure(fact, fact), RecOp({-(lin(1, 1) * lin(1, 1)), BiPoly(1)})));
}

TEST_CASE("product_closure annihilates products of random order-2 solutions")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> small(-3, 3), pos(1, 4);
    for (int trial = 0; trial < 12; ++trial) {
        auto make = [&] {
            return std::vector<BiPoly>{lin(small(rng), small(rng)), lin(small(rng), small(rng)),
                                       lin(pos(rng), pos(rng))};
        };
        auto p = make();
        auto q = make();
        if (p[0].is_zero() || q[0].is_zero())
            continue;
        RecOp a(p);
        RecOp b(q);
        RecOp t = product_closure(a, b);
        CHECK(t.order() <= 4);
        auto x = run_forward(p, Rat(small(rng)), Rat(pos(rng)), 50);
        auto y = run_forward(q, Rat(pos(rng)), Rat(small(rng)), 50);
        std::vector<Rat> xy;
        for (std::size_t i = 0; i < x.size(); ++i)
            xy.push_back(x[i] * y[i]);
        CHECK(rec_verify(t, SeqSlice::numeric(0, xy)).ok);
    }
}

TEST_CASE("Legendre squares: closure, guess and symmetric square agree")
{
    // (n+2) P_{n+2} - (2n+3) c P_{n+1} + (n+1) P_n = 0 at x = c.
    RecOp leg({lin(1, 1), -(lin(2, 3) * C), lin(1, 2)});
    RecOp t = product_closure(leg, leg);
    CHECK(t.order() == 3);

    SeqSlice squares;
    Poly p0(1), p1 = Poly::x();
    for (int n = 0; n < 50; ++n) {
        squares.values.push_back(p0 * p0);
        Poly p2 = (p1 * Poly::x() * Rat(2 * n + 3) - p0 * Rat(n + 1)) * Rat(1, n + 2);
        p0 = p1;
        p1 = p2;
    }
    CHECK(rec_verify(t, squares).ok);

    SeqSlice fit = squares;
    fit.values.resize(30);
    CHECK(op_equal(guess_rec(fit, GuessBounds{4, 6, 3}), t));

    SymSquareCert cert = sym_square_root(t);
    CHECK(cert.A == RatFunc2(lin(2, 3) * lin(2, 3) * C * C, lin(1, 2) * lin(1, 2)));
    CHECK(cert.B2 == RatFunc2(lin(1, 1) * lin(1, 1), lin(1, 2) * lin(1, 2)));
    CHECK(check_matching(cert, t));
}

TEST_CASE("sym_square_root examples")
{
    RecOp fs = RecOp::from_constants({Rat(1), Rat(-2), Rat(-2), Rat(1)});
    SymSquareCert cert = sym_square_root(fs);
    CHECK(cert.A == RatFunc2(BiPoly(1)));
    CHECK(cert.B2 == RatFunc2(BiPoly(1)));
    CHECK(cert.Q == RatFunc2(BiPoly(1)));
    CHECK_FALSE(cert.validFromN.has_value());
    auto t = cert.reconstruct();
    CHECK(t.t2 == RatFunc2(BiPoly(2)));
    CHECK(t.t1 == RatFunc2(BiPoly(2)));
    CHECK(t.t0 == RatFunc2(BiPoly(-1)));

    CHECK_THROWS_AS(sym_square_root(RecOp::from_constants({Rat(-4), Rat(1)})), OrderMismatch);
    // Cubes of Fibonacci numbers satisfy an order-4 relation, not a square.
    CHECK_THROWS_AS(sym_square_root(RecOp::from_constants({Rat(1), Rat(-1), Rat(-1), Rat(1)}),
                                    SymSquareOptions{2, 1}),
                    NotFound);
}

TEST_CASE("sym_square_root reconstructs T for random rational order-2 operators")
{
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> small(1, 3);
    for (int trial = 0; trial < 4; ++trial) {
        RecOp l({lin(small(rng), small(rng)), lin(small(rng), small(rng)) * C,
                 -lin(small(rng), small(rng) + 3)});
        RecOp t = product_closure(l, l);
        REQUIRE(t.order() == 3);
        SymSquareCert cert = sym_square_root(t);
        MonicOrder3 want = monic_order3(t);
        MonicOrder3 got = cert.reconstruct();
        CHECK(got.t0 == want.t0);
        CHECK(got.t1 == want.t1);
        CHECK(got.t2 == want.t2);
    }
}

TEST_CASE("B columns: guessed order-3 operators are symmetric squares")
{
    for (int k = 0; k <= 2; ++k) {
        CAPTURE(k);
        SeqSlice fit = column(b_long(), k, k, k + 29);
        RecOp t = guess_rec(fit, GuessBounds{4, 6, 3});
        CHECK(t.order() == 3);
        CHECK(t.leading().degree_n() == 3);
        CHECK(rec_verify(t, column(b_long(), k, k, k + 60)).ok);
        // Deterministic.
        CHECK(op_equal(t, guess_rec(fit, GuessBounds{4, 6, 3})));

        SymSquareOptions opt;
        opt.positivityFrom = k;
        opt.positivityTo = k + 60;
        SymSquareCert cert = sym_square_root(t, opt);
        ColumnData want = column_oracle(k);
        CHECK(cert.A == want.A);
        CHECK(cert.B2 == want.B2);
        CHECK(cert.Q == want.Q);
        REQUIRE(cert.validFromN.has_value());
        CHECK(*cert.validFromN == k - 1);
        CHECK(cert.real_on_range());
        CHECK(check_matching(cert, t));

        const Poly& u0 = b_long().at(k, k);
        const Poly& u1 = b_long().at(k, k + 1);
        const Poly& u2 = b_long().at(k, k + 2);
        CHECK(bridging_holds(cert, k, u0, u1, u2));
        CHECK_FALSE(bridging_holds(cert, k, u0, u1, u2 + Poly(Rat(1, 3))));
        if (k >= 1) {
            CHECK(cert.A.eval_n(Rat(k - 1)) == RatFunc(u1, u0));
            CHECK(cert.B2.eval_n(Rat(k - 1)).is_zero());
        }
    }
}

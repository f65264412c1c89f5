#include <catch2/catch_amalgamated.hpp>

#include "fieldzero/directions.hpp"
#include "fieldzero/moments.hpp"
#include "fieldzero/verification.hpp"

#include <random>

using namespace fieldzero;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

ChargeSystem make_sys(std::initializer_list<long> amps, std::initializer_list<long> pos) {
    std::vector<Charge> cs;
    auto a = amps.begin();
    auto p = pos.begin();
    for (; a != amps.end(); ++a, ++p) cs.push_back(Charge{Rational(*p), Rational(*a)});
    return ChargeSystem(std::move(cs));
}

}  // namespace

TEST_CASE("moment values on hand fixtures") {
    auto mv = moments(make_sys({1, -1}, {1, 2}));
    CHECK(mv.mu(0) == 0);
    CHECK(mv.mu(1) == 1);  // -(1*1 - 1*2)
    CHECK(moments(make_sys({1, 1}, {1, 3})).mu(0) == 2);
}

TEST_CASE("moments scale linearly in the amplitudes") {
    auto base = moments(make_sys({3, -2, 5}, {1, 4, 9}));
    auto scaled = moments(make_sys({21, -14, 35}, {1, 4, 9}));
    for (size_t u = 0; u < base.values.size(); ++u) CHECK(scaled.values[u] == 7 * base.values[u]);
}

TEST_CASE("critical index on hand fixtures") {
    auto c1 = critical_index(make_sys({1, -1}, {1, 2}));
    CHECK(c1.L == 1);
    CHECK(c1.mu_L == 1);
    auto c2 = critical_index(make_sys({1, 1}, {1, 3}));
    CHECK(c2.L == 0);
    CHECK(c2.mu_L == 2);
    auto c3 = critical_index(make_sys({1, -2, 1}, {1, 2, 3}));
    CHECK(c3.L == 2);
    CHECK(c3.mu_L == 2);
}

TEST_CASE("critical index stays below the system size on random systems") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> amp(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        size_t M = 1 + rng() % 5;
        std::vector<Charge> cs;
        Rational x(0);
        for (size_t j = 0; j < M; ++j) {
            x += ratio(1 + static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 3));
            long a = amp(rng);
            if (a == 0) a = 1;
            cs.push_back(Charge{x, Rational(a)});
        }
        ChargeSystem sys(cs);
        auto ci = critical_index(sys);
        CHECK(ci.L <= M - 1);
        // brute-force scan oracle
        for (size_t u = 0; u < ci.L; ++u) {
            Rational s(0);
            for (size_t j = 0; j < M; ++j) s += sys.amplitude(j) * rational_pow(sys.position(j), u);
            CHECK(s == 0);
        }
        Rational sL(0);
        for (size_t j = 0; j < M; ++j) sL += sys.amplitude(j) * rational_pow(sys.position(j), ci.L);
        CHECK(sL != 0);
    }
}

TEST_CASE("asymptote polynomials match hand-computed families") {
    auto f1 = build_asymptote_polys(1);
    CHECK(f1.P == upoly({1, 0, -2}));
    CHECK(f1.Q == upoly({0, -3}));
    CHECK(f1.numC == upoly({0, 0, 3}));
    CHECK(f1.numD == upoly({0, 2, 0, -1}));

    auto f2 = build_asymptote_polys(2);
    CHECK(f2.P == upoly({0, -9, 0, 6}));
    CHECK(f2.Q == upoly({-3, 0, 12}));
    CHECK(f2.numC == upoly({0, 0, 12, 0, -3}));
    CHECK(f2.numD == upoly({0, 6, 0, -9}));

    auto f3 = build_asymptote_polys(3);
    CHECK(f3.P == upoly({-9, 0, 72, 0, -24}));
    CHECK(f3.Q == upoly({0, 45, 0, -60}));
}

TEST_CASE("family degrees and leading signs") {
    for (long L = 0; L <= 12; ++L) {
        auto f = build_asymptote_polys(L);
        CHECK(f.P.degree() == L + 1);
        CHECK(f.Q.degree() == L);
        int lead = sign(f.Q.leading());
        CHECK(lead == (L % 2 == 0 ? 1 : -1));
        CHECK(uni_gcd(f.P, f.Q).degree() == 0);
    }
}

TEST_CASE("recursion agrees with direct symbolic differentiation") {
    // Independent route: repeated quotient-rule differentiation of the
    // closed forms x/(1+x^2)^{3/2} and 1/(1+x^2)^{3/2}.
    for (long L = 0; L <= 8; ++L) {
        auto f = build_asymptote_polys(L);
        auto A = HalfIntegerQuotient{UniPoly::variable(), 3}.nth_derivative(L);
        auto B = HalfIntegerQuotient{UniPoly(Rational(1)), 3}.nth_derivative(L);
        CHECK(A.num == f.P);
        CHECK(B.num == f.Q);
        CHECK(A.half_exp == 2 * L + 3);
        // spot evaluation at rational points (same exact denominator power)
        for (long k = -5; k <= 5; k += 2) {
            Rational beta = ratio(k, 7);
            CHECK(B.num.eval(beta) == f.Q.eval(beta));
        }
    }
}

TEST_CASE("numD is one more derivative of the shifted numC family") {
    for (long L = 1; L <= 8; ++L) {
        auto cur = build_asymptote_polys(L);
        auto shifted = HalfIntegerQuotient{UniPoly::monomial(static_cast<int>(L) + 1, Rational(1)), 3}
                           .nth_derivative(L - 1);
        CHECK(shifted.derivative().num == cur.numD);
    }
}

TEST_CASE("verification suites pass at depth used by the reports") {
    CHECK(verify_interlacing(12).ok);
    CHECK(verify_identity_f17(12).ok);
    CHECK(verify_inversion(10).ok);
    CHECK(verify_no_common_cd_root(10).ok);
}

TEST_CASE("interlacing hand examples at small L") {
    auto rep = verify_interlacing(2);
    REQUIRE(rep.checks.size() == 2);
    CHECK(rep.checks[0].ok);  // includes P_1 roots +-1/sqrt(2) straddling Q_1 root 0
    CHECK(rep.checks[1].ok);  // includes Q_2 roots +-1/2 interlacing Q_1 root 0
}

TEST_CASE("inversion identity spot values at L = 0, 1") {
    auto f0 = build_asymptote_polys(0);
    // at x = 1: 1 * Q_0(1) = 1 and rev(numC_0)(1) * 1 = 1
    CHECK(f0.Q.eval(Rational(1)) == 1);
    CHECK(f0.numC.reversed(2).eval(Rational(1)) == 1);
    auto f1 = build_asymptote_polys(1);
    UniPoly lhs = UniPoly::monomial(2, Rational(1)) * f1.Q;
    UniPoly rhs = Rational(-1) * (UniPoly::variable() * f1.numC.reversed(4));
    CHECK(lhs == rhs);
}

TEST_CASE("direction report for the L=1 dipole") {
    auto rep = asymptote_directions(make_sys({1, -1}, {1, 2}));
    CHECK(rep.L == 1);
    REQUIRE(rep.directions_X.size() == 2);  // steep slopes +-sqrt(2); shallow set empty
    for (const auto& d : rep.directions_X) {
        CHECK(d.domain == DirectionDomain::type1);
        auto s = d.slope();
        REQUIRE(s.has_value());
        AlgebraicNumber plus{upoly({-2, 0, 1}), sturm_isolate(upoly({-2, 0, 1}), Rational(0), Rational(2))[0]};
        AlgebraicNumber minus{upoly({-2, 0, 1}), sturm_isolate(upoly({-2, 0, 1}), Rational(-2), Rational(0))[0]};
        CHECK((algebraic_equal(*s, plus) || algebraic_equal(*s, minus)));
    }
    REQUIRE(rep.directions_Y.size() == 2);
    bool have_vertical = false, have_axis = false;
    for (const auto& d : rep.directions_Y) {
        have_vertical |= d.is_vertical();
        have_axis |= d.is_axis();
    }
    CHECK(have_vertical);
    CHECK(have_axis);
    CHECK(rep.verdict == DirectionVerdict::disjoint);
}

TEST_CASE("direction report for the L=0 symmetric pair") {
    auto rep = asymptote_directions(make_sys({1, 1}, {1, 3}));
    CHECK(rep.L == 0);
    REQUIRE(rep.directions_X.size() == 1);
    CHECK(rep.directions_X[0].is_vertical());
    REQUIRE(rep.directions_Y.size() == 1);
    CHECK(rep.directions_Y[0].is_axis());
    CHECK(rep.verdict == DirectionVerdict::disjoint);
}

TEST_CASE("direction report for an L=2 triple") {
    auto rep = asymptote_directions(make_sys({1, -2, 1}, {1, 2, 3}));
    CHECK(rep.L == 2);
    // X: vertical (P_2 root 0) plus shallow slopes +-sqrt(2/3)
    REQUIRE(rep.directions_X.size() == 3);
    int verticals = 0, shallow = 0;
    for (const auto& d : rep.directions_X) {
        if (d.is_vertical()) ++verticals;
        if (d.domain == DirectionDomain::type2) ++shallow;
    }
    CHECK(verticals == 1);
    CHECK(shallow == 2);
    // Y: steep slopes +-2 (Q_2 roots +-1/2) plus the axis
    REQUIRE(rep.directions_Y.size() == 3);
    int steep = 0;
    for (const auto& d : rep.directions_Y) {
        if (d.domain == DirectionDomain::type1) {
            ++steep;
            auto s = d.slope();
            REQUIRE(s.has_value());
            CHECK((algebraic_equal(*s, make_algebraic(Rational(2))) ||
                   algebraic_equal(*s, make_algebraic(Rational(-2)))));
        }
    }
    CHECK(steep == 2);
    CHECK(rep.verdict == DirectionVerdict::disjoint);
}

#include <catch2/catch_amalgamated.hpp>

#include "fieldzero/bipoly.hpp"
#include "fieldzero/rational.hpp"
#include "fieldzero/unipoly.hpp"

#include <random>

using namespace fieldzero;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs) {  // ascending degree
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

UniPoly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& x : c) x = ratio(num(rng), den(rng));
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing covers fraction, integer, and decimal forms") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("1.5e-3") == Rational(3, 2000));
    CHECK(parse_rational(" -2.5 ") == Rational(-5, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("rational sqrt bounds bracket the true root") {
    auto [lo, hi] = rational_sqrt_bounds(Rational(2), 80);
    CHECK(lo * lo <= 2);
    CHECK(hi * hi >= 2);
    CHECK(hi - lo < pow2(-70));
    auto z = rational_sqrt_bounds(Rational(0));
    CHECK(z.first == 0);
    CHECK(z.second == 0);
}

TEST_CASE("polynomial addition cancels exactly") {
    // (x+1) + (x-1) = 2x
    CHECK(uni_arith(upoly({1, 1}), upoly({-1, 1}), UniOp::add) == upoly({0, 2}));
}

TEST_CASE("zero is absorbing for multiplication") {
    UniPoly z;
    CHECK(uni_arith(z, upoly({3, -2, 5}), UniOp::mul).is_zero());
}

TEST_CASE("product of the first asymptote numerators") {
    // (1-2x^2) * (-3x) = -3x + 6x^3
    CHECK(uni_arith(upoly({1, 0, -2}), upoly({0, -3}), UniOp::mul) == upoly({0, -3, 0, 6}));
}

TEST_CASE("formal derivative basics") {
    CHECK(uni_differentiate(upoly({0, 0, 1})) == upoly({0, 2}));
    CHECK(uni_differentiate(upoly({7})).is_zero());
    CHECK(uni_differentiate(upoly({1, 0, -2})) == upoly({0, -4}));
}

TEST_CASE("gcd on hand cases") {
    CHECK(uni_gcd(upoly({-1, 0, 1}), upoly({-1, 1})) == upoly({-1, 1}));
    // gcd(1-2x^2, -3x) = 1
    CHECK(uni_gcd(upoly({1, 0, -2}), upoly({0, -3})) == upoly({1}));
    // gcd(p, 0) = monic p
    CHECK(uni_gcd(upoly({2, 4}), UniPoly()) == upoly({1, 2}).monic());
    CHECK_THROWS_AS(uni_gcd(UniPoly(), UniPoly()), std::invalid_argument);
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        UniPoly a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("Leibniz rule holds exactly on random polynomials") {
    std::mt19937_64 rng(715);
    for (int trial = 0; trial < 50; ++trial) {
        UniPoly a = random_poly(rng, 6), b = random_poly(rng, 6);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("gcd divides both inputs with zero remainder") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        UniPoly a = random_poly(rng, 5), b = random_poly(rng, 5);
        if (a.is_zero() && b.is_zero()) continue;
        UniPoly g = uni_gcd(a, b);
        CHECK(divides_exactly(g, a));
        CHECK(divides_exactly(g, b));
    }
    // common factor is recovered
    UniPoly f = upoly({-1, 1});  // x - 1
    UniPoly g = uni_gcd(f * upoly({3, 1, 2}), f * upoly({-5, 7}));
    CHECK(divides_exactly(upoly({-1, 1}), g));
}

TEST_CASE("division and reversal") {
    UniPoly p = upoly({2, -3, 1});  // (x-1)(x-2)
    auto [q, r] = p.divrem(upoly({-1, 1}));
    CHECK(r.is_zero());
    CHECK(q == upoly({-2, 1}));
    CHECK(upoly({0, 0, 3}).reversed(4) == upoly({0, 0, 3}));  // x^4 * (3/x^2) = 3x^2
    CHECK(upoly({1, 2}).reversed(1) == upoly({2, 1}));
}

TEST_CASE("bivariate evaluation") {
    BiPoly p = BiPoly::monomial(2, 0, Rational(1)) + BiPoly::monomial(0, 2, Rational(1));
    CHECK(bi_evaluate(p, Rational(1), Rational(2)) == Rational(5));
    CHECK(bi_evaluate(BiPoly(), Rational(17, 3), Rational(-4)) == 0);
    BiPoly q = BiPoly::monomial(3, 1, Rational(2)) - BiPoly::monomial(1, 2, Rational(1, 2));
    CHECK(bi_evaluate(q, Rational(2), Rational(3)) == Rational(2 * 8 * 3) - Rational(1, 2) * 2 * 9);
}

TEST_CASE("bivariate box enclosure contains sampled values") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> num(-6, 6);
    BiPoly p;
    for (int t = 0; t < 8; ++t)
        p += BiPoly::monomial(static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), Rational(num(rng)));
    QInterval bx(Rational(-1), Rational(2)), by(Rational(1, 2), Rational(3));
    QInterval range = p.eval_box(bx, by);
    for (int t = 0; t < 40; ++t) {
        Rational x = bx.lo + (bx.hi - bx.lo) * ratio(static_cast<long>(rng() % 101), 100);
        Rational y = by.lo + (by.hi - by.lo) * ratio(static_cast<long>(rng() % 101), 100);
        CHECK(range.contains(p.eval(x, y)));
    }
}

TEST_CASE("bivariate exact division round-trips") {
    BiPoly d = BiPoly::monomial(2, 0, Rational(1)) + BiPoly::monomial(0, 2, Rational(1)) +
               BiPoly::monomial(0, 0, Rational(1));
    BiPoly q = BiPoly::monomial(1, 1, Rational(3)) - BiPoly::monomial(0, 0, Rational(2));
    auto back = (d * q).divide_exact(d);
    REQUIRE(back.has_value());
    CHECK(*back == q);
    auto fail = (d * q + BiPoly(Rational(1))).divide_exact(d);
    CHECK_FALSE(fail.has_value());
}

TEST_CASE("unipoly/bipoly coefficient extraction is consistent") {
    BiPoly p = BiPoly::monomial(2, 3, Rational(5)) + BiPoly::monomial(1, 0, Rational(-2)) +
               BiPoly::monomial(0, 3, Rational(7));
    auto wy = p.coeffs_wrt_y();
    REQUIRE(wy.size() == 4);
    CHECK(wy[0] == upoly({0, -2}));
    CHECK(wy[3] == upoly({7, 0, 5}));
    CHECK(p.eval(Rational(3), Rational(2)) ==
          wy[0].eval(Rational(3)) + wy[3].eval(Rational(3)) * 8);
}

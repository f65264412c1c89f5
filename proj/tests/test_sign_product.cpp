#include <catch2/catch_amalgamated.hpp>

#include "fieldzero/sign_product.hpp"

using namespace fieldzero;

namespace {

ChargeSystem make_sys(std::initializer_list<long> amps, std::initializer_list<long> pos) {
    std::vector<Charge> cs;
    auto a = amps.begin();
    auto p = pos.begin();
    for (; a != amps.end(); ++a, ++p) cs.push_back(Charge{Rational(*p), Rational(*a)});
    return ChargeSystem(std::move(cs));
}

}  // namespace

TEST_CASE("single charge joint polynomial is a^4 r^4") {
    auto res = build_joint_polynomial(make_sys({3}, {1}));
    BiPoly dx = BiPoly::var_x() - BiPoly(Rational(1));
    BiPoly r2 = dx * dx + BiPoly::var_y() * BiPoly::var_y();
    CHECK(res.P == BiPoly(Rational(81)) * r2 * r2);
    CHECK(res.degree == 4);
    CHECK(res.reduced == BiPoly(Rational(81)));
    // vanishes exactly at the charge, nowhere else nearby
    CHECK(res.P.eval(Rational(1), Rational(0)) == 0);
    for (long dx_i = -2; dx_i <= 2; ++dx_i)
        for (long dy_i = -2; dy_i <= 2; ++dy_i)
            if (dx_i != 0 || dy_i != 0)
                CHECK(res.P.eval(Rational(1) + Rational(dx_i, 3), Rational(dy_i, 3)) > 0);
}

TEST_CASE("single charge component polynomials") {
    auto rx = build_component_polynomial(make_sys({3}, {1}), FieldComponent::X);
    BiPoly dx = BiPoly::var_x() - BiPoly(Rational(1));
    CHECK(rx.P == BiPoly(Rational(-9)) * dx * dx);
    auto ry = build_component_polynomial(make_sys({3}, {1}), FieldComponent::Y);
    CHECK(ry.P == BiPoly(Rational(-9)) * BiPoly::var_y() * BiPoly::var_y());
}

TEST_CASE("the symmetric-pair zero lies in the joint zero set") {
    auto res = build_joint_polynomial(make_sys({1, 1}, {1, 3}));
    CHECK(res.P.eval(Rational(2), Rational(0)) == 0);
    CHECK(res.reduced.eval(Rational(2), Rational(0)) == 0);
    CHECK(res.P.eval(Rational(5), Rational(1)) != 0);
}

TEST_CASE("observed joint degrees and the reduced bound") {
    auto res = build_joint_polynomial(make_sys({4, -1}, {1, 2}));
    // the full product has degree (6M-4) 2^M; the reduced one (4M-4) 2^M
    CHECK(res.degree == 32);
    CHECK(res.reduced.total_degree() == 16);
    CHECK(res.common_factor_exponent == 4);
    CHECK(res.P.eval(Rational(3), Rational(0)) == 0);
    CHECK(res.reduced.eval(Rational(3), Rational(0)) == 0);
}

TEST_CASE("joint polynomial is invariant under a global amplitude sign flip") {
    auto plus = build_joint_polynomial(make_sys({4, -1}, {1, 2}));
    auto minus = build_joint_polynomial(make_sys({-4, 1}, {1, 2}));
    CHECK(plus.P == minus.P);
}

TEST_CASE("joint polynomial is symmetric in y") {
    auto res = build_joint_polynomial(make_sys({2, -3}, {1, 4}));
    CHECK(res.P == res.P.substitute_neg_y());
    CHECK(res.P.even_in_y());
    CHECK(res.reduced.even_in_y());
}

TEST_CASE("component polynomials stay even in y") {
    auto rx = build_component_polynomial(make_sys({4, -1}, {1, 2}), FieldComponent::X);
    CHECK(rx.P.even_in_y());
    auto ry = build_component_polynomial(make_sys({4, -1}, {1, 2}), FieldComponent::Y);
    CHECK(ry.P.even_in_y());
    // the component zero set is covered: X vanishes at (3, 0)
    CHECK(rx.P.eval(Rational(3), Rational(0)) == 0);
}

TEST_CASE("expansion limit is enforced") {
    auto sys5 = make_sys({1, -1, 1, -1, 1}, {1, 2, 3, 4, 5});
    CHECK_THROWS_AS(build_joint_polynomial(sys5), std::length_error);
    auto sys3 = make_sys({1, -1, 1}, {1, 2, 3});
    CHECK_THROWS_AS(build_joint_polynomial(sys3, 2), std::length_error);
    CHECK_THROWS_AS(build_component_polynomial(sys3, FieldComponent::X, 2), std::length_error);
}

TEST_CASE("containment check over certified boxes") {
    auto res = build_joint_polynomial(make_sys({1, 1}, {1, 3}));
    std::vector<Box> boxes{Box(Rational(199, 100), Rational(201, 100), Rational(-1, 100), Rational(1, 100))};
    auto rep = containment_check(res, boxes);
    CHECK(rep.ok);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].contains_zero);
    // vacuous pass on an empty zero list
    CHECK(containment_check(res, {}).ok);
    // the enclosure really bounds the polynomial's range
    Rational cx(2), cy(0);
    CHECK(rep.entries[0].enclosure.contains(res.P.eval(cx, cy)));
    // a point box away from the zero set fails the check (diagnostic path)
    auto bad = containment_check(res, {Box(Rational(10), Rational(10), Rational(5), Rational(5))});
    CHECK_FALSE(bad.ok);
}

TEST_CASE("term export format is sorted and explicit") {
    BiPoly p = BiPoly::monomial(2, 1, Rational(-3, 4)) + BiPoly::monomial(0, 0, Rational(5));
    CHECK(p.term_lines() == "5/1 0 0\n-3/4 2 1\n");
}

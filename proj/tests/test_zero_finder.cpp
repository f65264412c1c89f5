#include <catch2/catch_amalgamated.hpp>

#include "fieldzero/zero_finder.hpp"

using namespace fieldzero;

namespace {

ChargeSystem make_sys(std::initializer_list<long> amps, std::initializer_list<long> pos) {
    std::vector<Charge> cs;
    auto a = amps.begin();
    auto p = pos.begin();
    for (; a != amps.end(); ++a, ++p) cs.push_back(Charge{Rational(*p), Rational(*a)});
    return ChargeSystem(std::move(cs));
}

// Level-set slope by finite differences: step h in x, re-solve the component
// for y by bisection near y0, return dy/h.
double levelset_slope_fd(const ChargeSystem& sys, bool component_X, double x0, double y0, double h) {
    auto value = [&](double x, double y) {
        auto [X, Y] = eval_field_double(sys, x, y);
        return component_X ? X : Y;
    };
    auto solve_y = [&](double x) {
        double lo = y0 - 64 * h, hi = y0 + 64 * h;
        double flo = value(x, lo), fhi = value(x, hi);
        REQUIRE(flo * fhi < 0);
        for (int i = 0; i < 80; ++i) {
            double mid = (lo + hi) / 2;
            double fm = value(x, mid);
            if (fm == 0) return mid;
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return (lo + hi) / 2;
    };
    return (solve_y(x0 + h) - solve_y(x0 - h)) / (2 * h);
}

}  // namespace

TEST_CASE("axis interval sign vectors and cleared polynomials") {
    auto sys = make_sys({4, -1}, {1, 2});
    auto ivs = axis_intervals(sys);
    REQUIRE(ivs.size() == 3);
    CHECK(ivs[0].signs == std::vector<int>{-1, -1});
    CHECK(ivs[1].signs == std::vector<int>{1, -1});
    CHECK(ivs[2].signs == std::vector<int>{1, 1});
    // interval beyond both charges: 4(x-2)^2 - (x-1)^2 with roots 3 and 5/3
    CHECK(ivs[2].cleared.eval(Rational(3)) == 0);
    CHECK(ivs[2].cleared.eval(Rational(5, 3)) == 0);
    CHECK(ivs[2].cleared.eval(Rational(4)) != 0);
}

TEST_CASE("axis zeros of the 4/-1 fixture") {
    auto zs = axis_zeros(make_sys({4, -1}, {1, 2}));
    REQUIRE(zs.size() == 1);
    CHECK(zs[0].kind == ZeroKind::axis);
    CHECK(zs[0].box.contains_point(Rational(3), Rational(0)));
    CHECK(zs[0].box.max_width() < pow2(-39));
    // the 5/3 candidate falls in the wrong interval and must not appear
}

TEST_CASE("axis zero of the symmetric pair is exact") {
    auto zs = axis_zeros(make_sys({1, 1}, {1, 3}));
    REQUIRE(zs.size() == 1);
    CHECK(zs[0].box.x.lo == 2);
    CHECK(zs[0].box.x.hi == 2);
}

TEST_CASE("a single charge has no axis zeros") {
    CHECK(axis_zeros(make_sys({5}, {2})).empty());
}

namespace {

int axis_sign_scan(const ChargeSystem& sys, double lo, double hi, int N) {
    int sign_changes = 0, prev = 0;
    for (int i = 0; i <= N; ++i) {
        double x = lo + (hi - lo) * i / N;
        bool near_charge = false;
        for (size_t j = 0; j < sys.count(); ++j)
            if (std::abs(x - sys.position(j).get_d()) < 1e-3) near_charge = true;
        if (near_charge) {
            prev = 0;
            continue;
        }
        auto [X, Y] = eval_field_double(sys, x, 0.0);
        int s = X > 0 ? 1 : (X < 0 ? -1 : 0);
        if (s != 0 && prev != 0 && s != prev) ++sign_changes;
        if (s != 0) prev = s;
    }
    return sign_changes;
}

}  // namespace

TEST_CASE("axis zeros match a dense sign scan") {
    std::vector<ChargeSystem> fixtures{
        make_sys({2, -3, 4}, {1, 3, 6}),   // no axis zeros at all
        make_sys({4, -1}, {1, 2}),         // one zero at x = 3
        make_sys({9, -1}, {1, 2}),         // one zero at x = 5/2
        make_sys({1, -4}, {1, 2}),         // one zero at x = 0
        make_sys({1, -2, 3}, {2, 5, 9}),
    };
    for (const auto& sys : fixtures) {
        auto zs = axis_zeros(sys);
        int scanned = axis_sign_scan(sys, -20.0, 20.0, 100000);
        int in_window = 0;
        for (const auto& z : zs)
            if (z.box.x.lo >= -20 && z.box.x.hi <= 20) ++in_window;
        CHECK(in_window == scanned);
    }
    auto nine = axis_zeros(make_sys({9, -1}, {1, 2}));
    REQUIRE(nine.size() == 1);
    CHECK(nine[0].box.x.lo == Rational(5, 2));  // rational root found exactly
    auto neg = axis_zeros(make_sys({1, -4}, {1, 2}));
    REQUIRE(neg.size() == 1);
    CHECK(neg[0].box.x.lo == 0);
}

TEST_CASE("off-axis search is empty for the 4/-1 fixture") {
    auto sys = make_sys({4, -1}, {1, 2});
    auto res = offaxis_zeros(sys, Box(Rational(-8), Rational(8), Rational(-8), Rational(8)), pow2(-40));
    CHECK(res.zeros.empty());
    CHECK(res.undecided.empty());
}

TEST_CASE("off-axis search is empty for same-sign charges") {
    auto sys = make_sys({1, 1}, {1, 3});
    auto res = offaxis_zeros(sys, Box(Rational(-8), Rational(8), Rational(-8), Rational(8)), pow2(-40));
    CHECK(res.zeros.empty());
    CHECK(res.undecided.empty());
}

TEST_CASE("tolerance coarser than the box is rejected") {
    auto sys = make_sys({1, 1}, {1, 3});
    CHECK_THROWS_AS(
        offaxis_zeros(sys, Box(Rational(0), Rational(1), Rational(0), Rational(1)), Rational(2)),
        std::invalid_argument);
}

TEST_CASE("the symmetric triple has two certified off-axis zeros") {
    auto sys = make_sys({1, -1, 1}, {1, 2, 3});
    auto res = offaxis_zeros(sys, Box(Rational(-8), Rational(8), Rational(-8), Rational(8)), pow2(-40));
    REQUIRE(res.zeros.size() == 2);
    CHECK(res.undecided.empty());
    // expected at x = 2, y^2 = 1/(2^(2/3) - 1): y ~ +-1.30476
    for (const auto& z : res.zeros) {
        CHECK(z.unique);
        CHECK(z.kind == ZeroKind::off_axis);
        CHECK(z.box.max_width() <= pow2(-40));
        Rational ax = z.box.x.mid(), ay = z.box.y.mid();
        CHECK(rational_abs(ax - 2) < Rational(1, 1000000));
        CHECK(rational_abs(rational_abs(ay) - parse_rational("1.3047659")) < Rational(1, 1000000));
    }
    // both lie inside {P = 0} of the joint polynomialization
    auto poly = build_joint_polynomial(sys);
    std::vector<Box> boxes;
    for (const auto& z : res.zeros) boxes.push_back(z.box);
    CHECK(containment_check(poly, boxes).ok);
}

TEST_CASE("certified zeros re-evaluate to nearly zero at doubled precision") {
    auto sys = make_sys({1, -1, 1}, {1, 2, 3});
    auto res = offaxis_zeros(sys, Box(Rational(-8), Rational(8), Rational(-8), Rational(8)), pow2(-40));
    for (const auto& z : res.zeros) {
        EvalPoint pt(z.box.x.mid(), z.box.y.mid(), 256);
        auto f = eval_field(sys, pt);
        CHECK(f.X.abs() < Real(pow2(-35), 256));
        CHECK(f.Y.abs() < Real(pow2(-35), 256));
    }
}

TEST_CASE("obstruction notes fire on the first nonzero low moment") {
    auto o1 = unboundedness_obstruction(make_sys({1, 1}, {1, 3}));
    REQUIRE(o1.has_value());
    CHECK(o1->moment_index == 0);
    CHECK(o1->value == 2);
    auto o2 = unboundedness_obstruction(make_sys({1, -1}, {1, 2}));
    REQUIRE(o2.has_value());
    CHECK(o2->moment_index == 1);
    CHECK(o2->value == 1);
    CHECK_FALSE(unboundedness_obstruction(make_sys({1, -2, 1}, {1, 2, 3})).has_value());
}

TEST_CASE("orthogonality diagnostics at symmetric off-axis zeros") {
    // the mirror-symmetric triple crosses axis-aligned: {X=0} is vertical
    // there and the {Y=0} branch has slope zero
    auto sys = make_sys({1, -1, 1}, {1, 2, 3});
    auto res = offaxis_zeros(sys, Box(Rational(-8), Rational(8), Rational(-8), Rational(8)), pow2(-40));
    REQUIRE(res.zeros.size() == 2);
    auto diags = orthogonality_diagnostics(sys, res.zeros);
    REQUIRE(diags.size() == 2);
    for (const auto& d : diags) {
        CHECK_FALSE(d.error.has_value());
        CHECK(d.classification == "orthogonal (axis/vertical)");
        REQUIRE(d.inverse_cube_sum.has_value());
        CHECK(std::abs(std::stod(*d.inverse_cube_sum)) < 1e-9);
    }
}

TEST_CASE("orthogonality diagnostics at asymmetric off-axis zeros") {
    auto sys = make_sys({10, -10, 11}, {1, 2, 3});
    auto res = offaxis_zeros(sys, Box(Rational(-8), Rational(8), Rational(-8), Rational(8)), pow2(-40));
    REQUIRE(res.zeros.size() >= 1);
    auto diags = orthogonality_diagnostics(sys, res.zeros);
    for (const auto& d : diags) {
        CHECK_FALSE(d.error.has_value());
        CHECK(d.classification == "orthogonal-crossing");
        CHECK(d.product_near_minus_one);
        REQUIRE(d.inverse_cube_sum.has_value());
        CHECK(std::abs(std::stod(*d.inverse_cube_sum)) < 1e-9);
    }
    // finite-difference level-set slopes as an independent oracle
    const auto& z = res.zeros.back();
    double x0 = z.box.x.mid().get_d(), y0 = z.box.y.mid().get_d();
    double sx = levelset_slope_fd(sys, true, x0, y0, 1e-6);
    double sy = levelset_slope_fd(sys, false, x0, y0, 1e-6);
    CHECK(std::abs(sx * sy + 1.0) < 1e-3);
}

TEST_CASE("orthogonality diagnostics at an axis zero") {
    auto sys = make_sys({1, 1}, {1, 3});
    auto zs = axis_zeros(sys);
    auto diags = orthogonality_diagnostics(sys, zs);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].classification == "orthogonal (axis/vertical)");
    REQUIRE(diags[0].slope_X.has_value());
    CHECK(*diags[0].slope_X == "vertical");
    CHECK(orthogonality_diagnostics(sys, {}).empty());
}

TEST_CASE("resultant candidates for a single charge collapse to the charge") {
    auto grid = exhaustive_resultant_candidates(make_sys({3}, {2}));
    REQUIRE(grid.boxes.size() == 1);
    CHECK(grid.boxes[0].contains_point(Rational(2), Rational(0)));
}

TEST_CASE("resultant candidates contain the known fixture zeros") {
    auto g1 = exhaustive_resultant_candidates(make_sys({4, -1}, {1, 2}));
    bool has1 = false;
    for (const auto& b : g1.boxes) has1 |= b.contains_point(Rational(3), Rational(0));
    CHECK(has1);
    CHECK(g1.bounding_box.contains_point(Rational(3), Rational(0)));

    auto g2 = exhaustive_resultant_candidates(make_sys({1, 1}, {1, 3}));
    bool has2 = false;
    for (const auto& b : g2.boxes) has2 |= b.contains_point(Rational(2), Rational(0));
    CHECK(has2);
}

TEST_CASE("count bound values") {
    CHECK(zero_count_bound(1) == 36);
    CHECK(zero_count_bound(2) == 576);
    CHECK(zero_count_bound(3) == 5184);
}

TEST_CASE("full zero report for the 4/-1 fixture") {
    auto rep = find_zeros(make_sys({4, -1}, {1, 2}));
    REQUIRE(rep.zeros.size() == 1);
    CHECK(rep.zeros[0].kind == ZeroKind::axis);
    CHECK(rep.zeros[0].box.contains_point(Rational(3), Rational(0)));
    CHECK(rep.completeness == Completeness::certified_within_box);
    CHECK(rep.obstruction.has_value());
    CHECK(count_bound_check(rep));
    CHECK(rep.undecided.empty());
}

TEST_CASE("full zero report is deterministic") {
    auto sys = make_sys({1, -1, 1}, {1, 2, 3});
    FindZerosOptions opts;
    opts.search_box = Box(Rational(-8), Rational(8), Rational(-8), Rational(8));
    auto a = find_zeros(sys, opts);
    auto b = find_zeros(sys, opts);
    REQUIRE(a.zeros.size() == b.zeros.size());
    for (size_t i = 0; i < a.zeros.size(); ++i) {
        CHECK(a.zeros[i].box.x.lo == b.zeros[i].box.x.lo);
        CHECK(a.zeros[i].box.y.lo == b.zeros[i].box.y.lo);
    }
    REQUIRE(a.zeros.size() == 2);  // only the two off-axis zeros (x=2 is a charge)
}

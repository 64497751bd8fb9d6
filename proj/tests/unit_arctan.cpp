#include <catch2/catch_amalgamated.hpp>

#include "ammv/arctan.hpp"
#include "ammv/numerics.hpp"
#include "ammv/quadrature.hpp"

using namespace ammv;

TEST_CASE("cotangent moments against quadrature") {
    const int digits = 20;
    PrecisionGuard guard(2 * digits + 30);
    const Real tol("1e-15");
    for (int p = 1; p <= 3; ++p) {
        Real half = eval_closed_form(cot_moment(p, CotUpper::HalfPi), digits);
        Real quarter = eval_closed_form(cot_moment(p, CotUpper::QuarterPi), digits);
        Real q_half = quad_xp_cot(p, const_pi() / 2, digits);
        Real q_quarter = quad_xp_cot(p, const_pi() / 4, digits);
        CAPTURE(p);
        CHECK(boost::multiprecision::abs(half - q_half) < tol);
        CHECK(boost::multiprecision::abs(quarter - q_quarter) < tol);
    }
}

TEST_CASE("arctangent power integrals against quadrature") {
    const int digits = 20;
    PrecisionGuard guard(2 * digits + 30);
    const Real tol("1e-15");
    for (int p = 1; p <= 3; ++p) {
        Real closed = eval_closed_form(arctan_power_integral(p), digits);
        Real quad = quad_arctan_pow(p, digits);
        CAPTURE(p);
        CHECK(boost::multiprecision::abs(closed - quad) < tol);
    }
}

TEST_CASE("arctangent power integrals as index combinations") {
    const int digits = 20;
    const Real tol("1e-15");
    ValueCache cache;
    for (int p = 1; p <= 3; ++p) {
        LinComb<Index> combo = ip_jp_combo(p);
        PrecisionGuard guard(2 * digits + 30);
        Real via_index = eval_lincomb_cached(combo, digits, &cache).value;
        Real closed = eval_closed_form(arctan_power_integral(p), digits);
        CAPTURE(p);
        CHECK(boost::multiprecision::abs(via_index - closed) < tol);
    }
}

TEST_CASE("arctangent over x as a single index") {
    const int digits = 20;
    const Real tol("1e-15");
    for (int r = 1; r <= 3; ++r) {
        auto [c, idx] = arctan_over_x_ammv(r);
        EvalResult v = eval_index(idx, digits);
        PrecisionGuard guard(2 * digits + 30);
        Real via_index = to_real(c) * v.value;
        Real quad = quad_arctan_over_x(r, digits);
        CAPTURE(r, idx.str());
        CHECK(boost::multiprecision::abs(via_index - quad) < tol);
        CHECK(boost::multiprecision::abs(eval_closed_form(arctan_over_x_closed(r), digits) - quad) <
              tol);
    }
}

TEST_CASE("power-of-x times power-of-arctangent reductions") {
    const int digits = 20;
    PrecisionGuard guard(2 * digits + 30);
    const Real tol("1e-15");
    for (XnVariant var :
         {XnVariant::EvenEven, XnVariant::EvenOdd, XnVariant::OddEven, XnVariant::OddOdd}) {
        Real resid = verify_xn_arctan(1, 1, var, digits);
        CHECK(resid < tol);
    }
    CHECK(verify_xn_arctan(2, 1, XnVariant::EvenOdd, digits) < tol);
    CHECK(verify_xn_arctan(1, 2, XnVariant::OddEven, digits) < tol);
}

TEST_CASE("T and S family integral relations") {
    const int digits = 20;
    PrecisionGuard guard(2 * digits + 30);
    const Real tol("1e-15");
    CHECK(verify_amtv_amsv_relation(1, false, digits) < tol);
    CHECK(verify_amtv_amsv_relation(1, true, digits) < tol);
    CHECK(verify_amtv_amsv_relation(2, false, digits) < tol);
}

TEST_CASE("closed-form bookkeeping") {
    // A(p) carries the quarter-pi power term with unit coefficient.
    ClosedForm a1 = arctan_power_integral(1);
    Real v = eval_closed_form(a1, 25);
    PrecisionGuard guard(120);
    Real pi = const_pi();
    // A(1) = pi/4 - log2/2.
    CHECK(boost::multiprecision::abs(v - (pi / 4 - const_log2() / 2)) < Real("1e-22"));
    CHECK_THROWS_AS(arctan_over_x_closed(5), std::domain_error);
}

#include <doctest.h>

#include "fixtures.hpp"
#include "qylag/laguerre.hpp"
#include "qylag/qnum.hpp"

using namespace qylag;
using qylag::testing::expected_signed_l1;
using qylag::testing::expected_signed_l2;
using qylag::testing::expected_signed_l3;

namespace {

const MPoly X = MPoly::variable(Var::x);
const MPoly Y = MPoly::variable(Var::y);
const MPoly Q = MPoly::variable(Var::q);

}  // namespace

TEST_CASE("recurrence: first polynomials") {
    for (int alpha = -1; alpha <= 3; ++alpha) {
        CHECK(laguerre_rec(0, Alpha(alpha)).poly == MPoly::one());
        CHECK(laguerre_rec(1, Alpha(alpha)).poly == X - Y * q_int(alpha + 1));
    }
    // L_2 at alpha = 0: x^2 - (y + y(1+q) + 1) x + (1+q) y^2
    CHECK(laguerre_rec(2, Alpha(0)).poly ==
          X * X - (Y + Y * (MPoly::one() + Q) + MPoly::one()) * X + (MPoly::one() + Q) * Y * Y);
}

TEST_CASE("recurrence matches the displayed L_1, L_2, L_3 skeletons") {
    for (int alpha = 0; alpha <= 2; ++alpha) {
        CHECK(laguerre_rec(1, Alpha(alpha)).poly == expected_signed_l1(alpha));
        CHECK(laguerre_rec(2, Alpha(alpha)).poly == expected_signed_l2(alpha));
        CHECK(laguerre_rec(3, Alpha(alpha)).poly == expected_signed_l3(alpha));
    }
}

TEST_CASE("signless polynomials") {
    CHECK(laguerre_signless(0, Alpha(2)).poly == MPoly::one());
    CHECK(laguerre_signless(1, Alpha(0)).poly == X + Y);
    CHECK(coeff_l(2, 1, Alpha(0)) == MPoly::one() + (MPoly::constant(2) + Q) * Y);
}

TEST_CASE("signless coefficients are in N[y,q]; degree and monicity") {
    for (int alpha : {-1, 0, 1, 2, 3})
        for (int n = 0; n <= 8; ++n) {
            const LagPoly p = laguerre_signless(n, Alpha(alpha));
            CHECK(p.poly.degree_in(Var::x) == static_cast<std::uint32_t>(n));
            CHECK(coeff_l(n, n, Alpha(alpha)) == MPoly::one());
            for (int k = 0; k <= n; ++k) CHECK(is_nonnegative(coeff_l(n, k, Alpha(alpha))));
        }
}

TEST_CASE("constant coefficient of the signed polynomial") {
    for (int alpha : {-1, 0, 1, 2})
        for (int n = 0; n <= 6; ++n) {
            MPoly expected = var_pow(Var::y, static_cast<std::uint32_t>(n));
            for (int j = 1; j <= n; ++j) expected *= q_int(alpha + j);
            if (n % 2 == 1) expected = -expected;
            CHECK(coeff_in_var(laguerre_rec(n, Alpha(alpha)).poly, Var::x, 0) == expected);
        }
}

TEST_CASE("explicit formula equals the recurrence route") {
    CHECK(laguerre_explicit(0, Alpha(1)).poly == MPoly::one());
    for (int alpha : {-1, 0, 1, 2})
        for (int n = 0; n <= 7; ++n)
            CHECK(laguerre_explicit(n, Alpha(alpha)).poly ==
                  laguerre_signless(n, Alpha(alpha)).poly);
}

TEST_CASE("classical reduction at y = q = 1") {
    for (int alpha : {-1, 0, 1, 2})
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= n; ++k) {
                const MPoly at_one = substitute(
                    substitute(coeff_l(n, k, Alpha(alpha)), Var::y, MPoly::one()), Var::q,
                    MPoly::one());
                const Int expected = (factorial(n) / factorial(k)) * binomial(n + alpha, n - k);
                CHECK(at_one == MPoly::constant(expected));
            }
    // Lah instance: ell_{3,2} at alpha = -1, y = q = 1 is 3!/2! C(2,1) = 6
    CHECK(substitute(substitute(coeff_l(3, 2, Alpha(-1)), Var::y, MPoly::one()), Var::q,
                     MPoly::one()) == MPoly::constant(6));
}

TEST_CASE("generating function: low t coefficients") {
    const int t_max = 4, q_max = 6;
    const MPoly gf = gf_truncated(Alpha(0), t_max, q_max);
    CHECK(coeff_in_var(gf, Var::t, 0) == MPoly::one());
    // t^1 coefficient is x + y [alpha+1]_q as long as alpha + 1 < q_max
    CHECK(coeff_in_var(gf, Var::t, 1) == X + Y);
    const MPoly gf1 = gf_truncated(Alpha(1), t_max, q_max);
    CHECK(coeff_in_var(gf1, Var::t, 1) == X + Y * q_int(2));
}

TEST_CASE("generating function matches the recurrence route mod (t^6, q^8)") {
    const int t_max = 6, q_max = 8;
    const auto policy = TruncationPolicy::qt_below(q_max, t_max);
    const auto q_policy = TruncationPolicy::q_below(q_max);
    for (int alpha : {-1, 0, 1}) {
        const MPoly gf = gf_truncated(Alpha(alpha), t_max, q_max);
        MPoly series;
        for (int n = 0; n < t_max; ++n)
            series = add(series,
                         mul(mul(laguerre_signless(n, Alpha(alpha)).poly,
                                 series_inverse(q_factorial(n), policy), policy),
                             var_pow(Var::t, static_cast<std::uint32_t>(n)), policy),
                         policy);
        CHECK(series == gf);
        for (int n = 0; n < t_max; ++n) {
            const MPoly extracted = truncated(
                mul(coeff_in_var(gf, Var::t, static_cast<std::uint32_t>(n)), q_factorial(n)),
                q_policy);
            CHECK(extracted == truncated(laguerre_signless(n, Alpha(alpha)).poly, q_policy));
        }
    }
}

TEST_CASE("generating function factorization") {
    CHECK(gf_factorization_check(Alpha(-1), 4, 5));  // trivial: L(0;y;t|q) = 1
    CHECK(gf_factorization_check(Alpha(0), 5, 6));
    CHECK(gf_factorization_check(Alpha(2), 5, 6));
}

TEST_CASE("x = 0 closed form") {
    const auto minus_one = zero_gf_closed_form(Alpha(-1), 4);
    CHECK(minus_one[0] == MPoly::one());
    CHECK(minus_one[1] == MPoly::zero());
    CHECK(minus_one[2] == MPoly::zero());
    const auto zero = zero_gf_closed_form(Alpha(0), 4);
    CHECK(zero[2] == (MPoly::one() + Q) * Y * Y);  // [1]_q [2]_q y^2
    const auto one = zero_gf_closed_form(Alpha(1), 4);
    CHECK(one[2] == q_int(2) * q_int(3) * Y * Y);
}

TEST_CASE("convolution recurrence at alpha = -1") {
    // n = 0: L_1 = x, because [0]_q kills the y-part
    CHECK(laguerre_signless(1, Alpha(-1)).poly == X);
    for (int n = 0; n <= 6; ++n) CHECK(prop_g_check(n));
}

TEST_CASE("connection formulas") {
    for (int alpha = -1; alpha <= 2; ++alpha)
        for (int n = 0; n <= 4; ++n) CHECK(connection_check(n, Alpha(alpha), Alpha(alpha)));
    CHECK(connection_check(2, Alpha(0), Alpha(-1)));
    CHECK(connection_check(4, Alpha(2), Alpha(0)));
    CHECK_THROWS_AS(connection_check(2, Alpha(0), Alpha(1)), InvalidRange);
}

TEST_CASE("Al-Salam--Chihara recurrence") {
    const MPoly A = MPoly::variable(Var::a);
    const MPoly B = MPoly::variable(Var::b);
    CHECK(asc_rec(0) == MPoly::one());
    CHECK(asc_rec(1) == 2 * X - (A + B));
    const MPoly q2 = (2 * X - (A + B) * Q) * (2 * X - (A + B)) -
                     (MPoly::one() - Q) * (MPoly::one() - A * B);
    CHECK(asc_rec(2) == q2);
}

TEST_CASE("Al-Salam--Chihara explicit evaluation") {
    CHECK(asc_explicit_eval(0, Rat(2), Rat(1, 3), Rat(1, 5), Rat(1, 2)) == Rat(1));
    // n = 1 at (u, a, b, q) = (2, 1/3, 1/5, 1/2): 2x - (a+b) with x = 5/4
    CHECK(asc_explicit_eval(1, Rat(2), Rat(1, 3), Rat(1, 5), Rat(1, 2)) == Rat(59, 30));
    CHECK_THROWS_AS(asc_explicit_eval(1, Rat(0), Rat(1), Rat(1), Rat(1, 2)),
                    SingularEvaluationPoint);
    CHECK_THROWS_AS(asc_explicit_eval(2, Rat(2), Rat(1), Rat(1), Rat(1)),
                    SingularEvaluationPoint);
    CHECK_THROWS_AS(asc_explicit_eval(2, Rat(2), Rat(2), Rat(1, 2), Rat(1, 3)),
                    SingularEvaluationPoint);  // ab = 1
}

TEST_CASE("rescaling identity at exact rational points") {
    CHECK(rescaling_check(0, Alpha(0), rescale_samples(5, 1)));
    // worked sample: n = 1, alpha = 0, (s, q, x) = (2, 1/2, 3) gives 7 = 7
    CHECK(rescaling_check(1, Alpha(0), {{Rat(2), Rat(1, 2), Rat(3)}}));
    for (int alpha = 0; alpha <= 2; ++alpha)
        for (int n = 0; n <= 4; ++n)
            CHECK(rescaling_check(n, Alpha(alpha), rescale_samples(10, 42 + n + alpha)));
    CHECK_THROWS_AS(rescaling_check(1, Alpha(0), {{Rat(0), Rat(1, 2), Rat(1)}}),
                    SingularEvaluationPoint);
}

TEST_CASE("rescale_samples are distinct and non-singular") {
    const auto samples = rescale_samples(10, 0);
    CHECK(samples.size() == 10);
    for (const auto& s : samples) {
        CHECK(s.s != 0);
        CHECK(s.q != 0);
        CHECK(s.q != 1);
    }
}

TEST_CASE("alpha validation") {
    CHECK_THROWS_AS(Alpha(-2), InvalidRange);
    CHECK_THROWS_AS(laguerre_rec(-1, Alpha(0)), InvalidRange);
    CHECK_THROWS_AS(coeff_l(2, 3, Alpha(0)), InvalidRange);
}

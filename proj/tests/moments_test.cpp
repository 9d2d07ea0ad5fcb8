#include <doctest.h>

#include "qylag/combstat.hpp"
#include "qylag/moments.hpp"
#include "qylag/qnum.hpp"

using namespace qylag;

namespace {

const MPoly X = MPoly::variable(Var::x);
const MPoly Y = MPoly::variable(Var::y);
const MPoly Q = MPoly::variable(Var::q);
const MPoly B = MPoly::variable(Var::beta);

MomentTable symbolic_table(int N) {
    return moments_sfrac(N, laguerre_scoeffs(N, MPoly::variable(Var::beta)));
}

}  // namespace

TEST_CASE("J-fraction moments") {
    const MomentTable table = moments_jfrac(3, laguerre_jcoeffs(Alpha(0), 3));
    CHECK(table.mu[0] == MPoly::one());
    CHECK(table.mu[1] == Y);  // y [1]_q
    // mu_3 at alpha = 0 is the symbolic display with beta -> 1
    CHECK(table.mu[3] == Y + (MPoly::constant(3) + Q) * Y * Y + Y * Y * Y);
    const MomentTable shifted = moments_jfrac(1, laguerre_jcoeffs(Alpha(2), 1));
    CHECK(shifted.mu[1] == Y * q_int(3));
}

TEST_CASE("S-fraction moments against the displays") {
    const MomentTable table = symbolic_table(3);
    CHECK(table.mu[0] == MPoly::one());
    CHECK(table.mu[1] == B * Y);
    CHECK(table.mu[2] == B * Y + B * B * Y * Y);
    CHECK(table.mu[3] ==
          B * Y + B * (MPoly::one() + (MPoly::constant(2) + Q) * B) * Y * Y +
              B * B * B * Y * Y * Y);
}

TEST_CASE("S-fraction equals brute force with symbolic beta") {
    const MomentTable table = symbolic_table(5);
    for (int n = 0; n <= 5; ++n) CHECK(table.mu[static_cast<std::size_t>(n)] == moments_bruteforce(n));
}

TEST_CASE("contraction: J equals S after beta specialization") {
    const int N = 6;
    const MomentTable s = symbolic_table(N);
    for (int alpha = 0; alpha <= 2; ++alpha) {
        const MomentTable j = moments_jfrac(N, laguerre_jcoeffs(Alpha(alpha), N));
        for (int n = 0; n <= N; ++n)
            CHECK(substitute(s.mu[static_cast<std::size_t>(n)], Var::beta, q_int(alpha + 1)) ==
                  j.mu[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("moment functional") {
    const MomentTable table = moments_jfrac(4, laguerre_jcoeffs(Alpha(1), 4));
    CHECK(functional_L(MPoly::one(), table) == MPoly::one());
    CHECK(functional_L(X, table) == Y * q_int(2));
    const MPoly l1 = laguerre_rec(1, Alpha(1)).poly;
    CHECK(functional_L(l1 * l1, table) == Y * q_int(2));  // y 1!_q [alpha+1]_q
    CHECK_THROWS_AS(functional_L(pow(X, 5), table), DegreeTooHigh);
}

TEST_CASE("functional kills lower powers against L_n") {
    for (int alpha = 0; alpha <= 2; ++alpha)
        for (int n = 1; n <= 5; ++n) {
            const MomentTable table = moments_jfrac(n + n, laguerre_jcoeffs(Alpha(alpha), n + n));
            const MPoly ln = laguerre_rec(n, Alpha(alpha)).poly;
            for (int m = 0; m < n; ++m)
                CHECK(functional_L(pow(X, static_cast<std::uint32_t>(m)) * ln, table) ==
                      MPoly::zero());
        }
}

TEST_CASE("orthogonality") {
    CHECK(orthogonality_check(0, 0, Alpha(0)));
    CHECK(orthogonality_check(2, 1, Alpha(0)));
    // diagonal value at (2, 2), alpha = 1: y^2 2!_q [2]_q [3]_q
    const MomentTable table = moments_jfrac(4, laguerre_jcoeffs(Alpha(1), 4));
    const MPoly l2 = laguerre_rec(2, Alpha(1)).poly;
    CHECK(functional_L(l2 * l2, table) == Y * Y * q_factorial(2) * q_int(2) * q_int(3));
    for (int alpha = 0; alpha <= 2; ++alpha)
        for (int n = 0; n <= 4; ++n)
            for (int m = 0; m <= 4; ++m) CHECK(orthogonality_check(n, m, Alpha(alpha)));
}

TEST_CASE("linearization formula basics") {
    CHECK(linearization_formula(0, 0, 0, Alpha(0)) == MPoly::one());
    CHECK(linearization_formula(1, 1, 0, Alpha(0)) == Y);
    CHECK(is_nonnegative(linearization_formula(2, 2, 2, Alpha(1))));
}

TEST_CASE("linearization: closed form equals the functional route") {
    for (int alpha = 0; alpha <= 2; ++alpha)
        for (int n1 = 0; n1 <= 2; ++n1)
            for (int n2 = n1; n2 <= 2; ++n2)
                for (int n3 = n2; n3 <= 2; ++n3)
                    CHECK(linearization_formula(n1, n2, n3, Alpha(alpha)) ==
                          linearization_via_moments(n1, n2, n3, Alpha(alpha)));
    CHECK(linearization_formula(3, 2, 1, Alpha(1)) ==
          linearization_via_moments(3, 2, 1, Alpha(1)));
}

TEST_CASE("nonnegativity of linearization coefficients") {
    for (int alpha = 0; alpha <= 3; ++alpha)
        for (int n1 = 0; n1 <= 3; ++n1)
            for (int n2 = n1; n2 <= 3; ++n2)
                for (int n3 = n2; n3 <= 3; ++n3)
                    CHECK(is_nonnegative(linearization_formula(n1, n2, n3, Alpha(alpha))));
}

TEST_CASE("classical linearization") {
    CHECK(classical_linearization(0, 0, 0, Alpha(2)) == 1);
    CHECK(classical_linearization(1, 1, 1, Alpha(0)) == 2);
    for (int alpha = 0; alpha <= 2; ++alpha)
        for (int n1 = 0; n1 <= 3; ++n1)
            for (int n2 = n1; n2 <= 3; ++n2)
                for (int n3 = n2; n3 <= 3; ++n3) {
                    const MPoly at_one = substitute(
                        substitute(linearization_formula(n1, n2, n3, Alpha(alpha)), Var::y,
                                   MPoly::one()),
                        Var::q, MPoly::one());
                    CHECK(at_one ==
                          MPoly::constant(classical_linearization(n1, n2, n3, Alpha(alpha))));
                }
}

#include <doctest.h>

#include <random>

#include "qylag/mpoly.hpp"
#include "qylag/qnum.hpp"
#include "qylag/render.hpp"

using namespace qylag;

namespace {

const MPoly X = MPoly::variable(Var::x);
const MPoly Y = MPoly::variable(Var::y);
const MPoly Q = MPoly::variable(Var::q);
const MPoly B = MPoly::variable(Var::beta);
const MPoly T = MPoly::variable(Var::t);

// Small random polynomials in (x, y, q) with coefficients in [-9, 9] and
// per-variable degree <= 3, for the ring-axiom properties.
MPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> terms(1, 5);
    MPoly p;
    const int count = terms(rng);
    for (int i = 0; i < count; ++i) {
        Exponents e{};
        e[static_cast<std::size_t>(Var::x)] = static_cast<std::uint32_t>(deg(rng));
        e[static_cast<std::size_t>(Var::y)] = static_cast<std::uint32_t>(deg(rng));
        e[static_cast<std::size_t>(Var::q)] = static_cast<std::uint32_t>(deg(rng));
        p.add_term(e, coeff(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("add: identities and cancellation") {
    CHECK(MPoly::zero() + MPoly::zero() == MPoly::zero());
    CHECK((X + Y) + (X - Y) == 2 * X);
    // [2]_q + q [1]_q = (1 + q) + q
    CHECK(add(q_int(2), Q * q_int(1)) == MPoly::one() + 2 * Q);
}

TEST_CASE("mul: identities, binomial square, truncated telescoping") {
    const MPoly p = X * Y + 3 * Q;
    CHECK(mul(p, MPoly::one()) == p);
    CHECK(mul(MPoly::one() + Q, MPoly::one() + Q) == MPoly::one() + 2 * Q + Q * Q);

    MPoly geometric;
    for (std::uint32_t i = 0; i < 8; ++i) geometric += var_pow(Var::t, i);
    CHECK(mul(MPoly::one() - T, geometric, TruncationPolicy::t_below(8)) == MPoly::one());
}

TEST_CASE("substitute") {
    CHECK(substitute(X * X, Var::x, MPoly::constant(3)) == MPoly::constant(9));
    CHECK_THROWS_AS(substitute(X * X, Var::x, X + Y), SubstitutionCycle);
    CHECK(substitute(q_int(3), Var::q, MPoly::one()) == MPoly::constant(3));
    // beta y + beta^2 y^2 at beta = 1 + q
    const MPoly p = B * Y + B * B * Y * Y;
    const MPoly expected = (MPoly::one() + Q) * Y + (MPoly::one() + 2 * Q + Q * Q) * Y * Y;
    CHECK(substitute(p, Var::beta, MPoly::one() + Q) == expected);
}

TEST_CASE("eval_rat") {
    CHECK(eval_rat(MPoly::zero(), {}) == Rat(0));
    CHECK(eval_rat(X + Y, {{Var::x, Rat(1, 2)}, {Var::y, Rat(1, 3)}}) == Rat(5, 6));
    CHECK(eval_rat(q_int(3), {{Var::q, Rat(2)}}) == Rat(7));
    CHECK_THROWS_AS(eval_rat(X + Y, {{Var::x, Rat(1)}}), MissingVariable);
}

TEST_CASE("coeff_in_var") {
    CHECK(coeff_in_var(X * X + 3 * X, Var::x, 1) == MPoly::constant(3));
    CHECK(coeff_in_var(X * X + 3 * X, Var::x, 5) == MPoly::zero());
    CHECK(coeff_in_var(X * Y + X * Q, Var::x, 1) == Y + Q);
}

TEST_CASE("is_nonnegative") {
    CHECK(is_nonnegative(MPoly::zero()));
    CHECK(!is_nonnegative(MPoly::one() + Q - Y));
    CHECK(is_nonnegative(q_int(5)));
}

TEST_CASE("series_inverse") {
    const auto policy4 = TruncationPolicy::q_below(4);
    CHECK(series_inverse(MPoly::one(), policy4) == MPoly::one());
    CHECK(series_inverse(MPoly::one() - Q, policy4) ==
          MPoly::one() + Q + Q * Q + Q * Q * Q);
    // invert 2!_q = 1 + q modulo q^3
    CHECK(series_inverse(q_factorial(2), TruncationPolicy::q_below(3)) ==
          MPoly::one() - Q + Q * Q);
    CHECK_THROWS_AS(series_inverse(2 * MPoly::one(), policy4), NotAUnit);
    CHECK_THROWS_AS(series_inverse(MPoly::one() - Q, TruncationPolicy::none()), NoTruncation);
    // constant term 1 but not a unit once x sticks around
    CHECK_THROWS_AS(series_inverse(MPoly::one() - X, policy4), NotAUnit);
}

TEST_CASE("series_inverse times argument is 1 under the policy") {
    const auto policy = TruncationPolicy::qt_below(5, 4);
    const MPoly p = MPoly::one() - (X + Y) * T + Y * T * T * Q;
    CHECK(mul(series_inverse(truncated(p, policy), policy), p, policy) == MPoly::one());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(20240811);
    for (int round = 0; round < 25; ++round) {
        const MPoly p = random_poly(rng), r = random_poly(rng), s = random_poly(rng);
        CHECK((p + r) + s == p + (r + s));
        CHECK(p * (r + s) == p * r + p * s);
        CHECK(p * r == r * p);
    }
}

TEST_CASE("eval_rat is a ring homomorphism") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> small(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    for (int round = 0; round < 25; ++round) {
        const MPoly p = random_poly(rng), r = random_poly(rng);
        const std::map<Var, Rat> a{{Var::x, Rat(small(rng), den(rng))},
                                   {Var::y, Rat(small(rng), den(rng))},
                                   {Var::q, Rat(small(rng), den(rng))}};
        CHECK(eval_rat(p * r, a) == eval_rat(p, a) * eval_rat(r, a));
        CHECK(eval_rat(p + r, a) == eval_rat(p, a) + eval_rat(r, a));
    }
}

TEST_CASE("substitute agrees with eval_rat on integer substitutions") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> small(-4, 4);
    for (int round = 0; round < 10; ++round) {
        const MPoly p = random_poly(rng);
        const int xv = small(rng), yv = small(rng), qv = small(rng);
        MPoly s = substitute(p, Var::x, MPoly::constant(xv));
        s = substitute(s, Var::y, MPoly::constant(yv));
        s = substitute(s, Var::q, MPoly::constant(qv));
        REQUIRE(s.is_constant());
        CHECK(Rat(s.constant_term()) ==
              eval_rat(p, {{Var::x, Rat(xv)}, {Var::y, Rat(yv)}, {Var::q, Rat(qv)}}));
    }
}

TEST_CASE("canonical text rendering") {
    CHECK(to_text(MPoly::zero()) == "0");
    CHECK(to_text(MPoly::one()) == "1");
    CHECK(to_text(X - Y) == "x - y");
    CHECK(to_text(MPoly::one() + 2 * Y + Q * Y) == "(2+q)*y + 1");
    CHECK(to_text(q_factorial(3)) == "1+2*q+2*q^2+q^3");
    CHECK(to_text(-X) == "-x");
    CHECK(to_text(X * X - 3 * Q * X + Y) == "x^2 - 3*q*x + y");
    // rendering is a pure function of the canonical term map
    const MPoly p = (MPoly::one() + Q) * Y * Y - X + 5 * MPoly::one();
    CHECK(to_text(p) == to_text(p));
}

TEST_CASE("latex rendering") {
    CHECK(to_latex(X - Y) == "x - y");
    CHECK(to_latex(MPoly::one() + 2 * Y + Q * Y) == "(2+q)y + 1");
    CHECK(to_latex(B * var_pow(Var::q, 10)) == "q^{10}\\beta");
}

TEST_CASE("json terms in canonical order") {
    const auto terms = poly_terms_json(MPoly::one() + 2 * Y + Q * Y);
    REQUIRE(terms.size() == 3);
    CHECK(terms[0]["coeff"] == "1");  // q y, grade 2
    CHECK(terms[0]["exps"] == nlohmann::json({0, 1, 1, 0, 0, 0, 0}));
    CHECK(terms[1]["coeff"] == "2");  // 2 y
    CHECK(terms[2]["coeff"] == "1");  // constant
    CHECK(terms[2]["exps"] == nlohmann::json({0, 0, 0, 0, 0, 0, 0}));
}

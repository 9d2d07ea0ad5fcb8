#include "qylag/moments.hpp"

#include "qylag/qnum.hpp"

namespace qylag {

namespace {

const MPoly kY = MPoly::variable(Var::y);

}  // namespace

JCoeffs laguerre_jcoeffs(Alpha alpha, int N) {
    if (alpha.value() < 0) throw InvalidRange("laguerre_jcoeffs: alpha must be >= 0");
    JCoeffs c;
    c.b.reserve(static_cast<std::size_t>(N) + 1);
    c.lam.reserve(static_cast<std::size_t>(N) + 1);
    c.lam.push_back(MPoly::zero());
    for (int i = 0; i <= N; ++i) {
        c.b.push_back(kY * q_int(i + alpha.value() + 1) + q_int(i));
        if (i >= 1) c.lam.push_back(kY * q_int(i) * q_int(i + alpha.value()));
    }
    return c;
}

SCoeffs laguerre_scoeffs(int N, const MPoly& beta) {
    SCoeffs c;
    c.gamma.assign(static_cast<std::size_t>(2 * N) + 1, MPoly::zero());
    for (int i = 0; 2 * i <= 2 * N; ++i) {
        if (2 * i >= 1) c.gamma[static_cast<std::size_t>(2 * i)] = q_int(i);
        if (2 * i + 1 <= 2 * N)
            c.gamma[static_cast<std::size_t>(2 * i + 1)] =
                kY * (q_int(i) + beta * var_pow(Var::q, static_cast<std::uint32_t>(i)));
    }
    return c;
}

MomentTable moments_jfrac(int N, const JCoeffs& coeffs) {
    // A length-N closed path uses b_h only for 2h + 1 <= N and lam_h only
    // for 2h <= N, so this is the part of "defined up to N" that matters.
    if (coeffs.b.size() < static_cast<std::size_t>((N + 1) / 2) ||
        coeffs.lam.size() < static_cast<std::size_t>(N / 2 + 1))
        throw std::invalid_argument("moments_jfrac: coefficients too short");
    MomentTable table;
    table.mu.reserve(static_cast<std::size_t>(N) + 1);
    std::vector<MPoly> state(static_cast<std::size_t>(N) + 2, MPoly::zero());
    state[0] = MPoly::one();
    table.mu.push_back(state[0]);
    for (int step = 1; step <= N; ++step) {
        std::vector<MPoly> next(state.size(), MPoly::zero());
        for (std::size_t h = 0; h <= static_cast<std::size_t>(step); ++h) {
            MPoly value;
            if (h >= 1) value += state[h - 1];  // up step into height h
            if (h < coeffs.b.size()) value += state[h] * coeffs.b[h];
            if (h + 1 < coeffs.lam.size()) value += state[h + 1] * coeffs.lam[h + 1];
            next[h] = std::move(value);
        }
        state = std::move(next);
        table.mu.push_back(state[0]);
    }
    return table;
}

MomentTable moments_sfrac(int N, const SCoeffs& coeffs) {
    MomentTable table;
    table.mu.reserve(static_cast<std::size_t>(N) + 1);
    std::vector<MPoly> state(static_cast<std::size_t>(2 * N) + 2, MPoly::zero());
    state[0] = MPoly::one();
    table.mu.push_back(state[0]);
    for (int step = 1; step <= 2 * N; ++step) {
        std::vector<MPoly> next(state.size(), MPoly::zero());
        for (std::size_t h = 0; h <= static_cast<std::size_t>(step); ++h) {
            MPoly value;
            if (h >= 1) value += state[h - 1];
            if (h + 1 < coeffs.gamma.size()) value += state[h + 1] * coeffs.gamma[h + 1];
            next[h] = std::move(value);
        }
        state = std::move(next);
        if (step % 2 == 0) table.mu.push_back(state[0]);
    }
    return table;
}

MPoly functional_L(const MPoly& p, const MomentTable& table) {
    const std::uint32_t degree = p.degree_in(Var::x);
    if (degree >= table.mu.size())
        throw DegreeTooHigh("functional_L: x-degree exceeds the moment table");
    MPoly value;
    for (std::uint32_t k = 0; k <= degree; ++k)
        value += coeff_in_var(p, Var::x, k) * table.mu[k];
    return value;
}

bool orthogonality_check(int n, int m, Alpha alpha) {
    if (alpha.value() < 0) throw InvalidRange("orthogonality_check: alpha must be >= 0");
    const MomentTable table = moments_jfrac(n + m, laguerre_jcoeffs(alpha, n + m));
    const MPoly product = laguerre_rec(n, alpha).poly * laguerre_rec(m, alpha).poly;
    MPoly expected;
    if (n == m) {
        expected = var_pow(Var::y, static_cast<std::uint32_t>(n)) * q_factorial(n);
        for (int j = 1; j <= n; ++j) expected *= q_int(alpha.value() + j);
    }
    return functional_L(product, table) == expected;
}

MPoly linearization_formula(int n1, int n2, int n3, Alpha alpha) {
    if (n1 < 0 || n2 < 0 || n3 < 0 || alpha.value() < 0)
        throw InvalidRange("linearization_formula: need n_i >= 0 and alpha >= 0");
    const int a = alpha.value();
    const int total = n1 + n2 + n3;
    MPoly sum;
    const int s_min = std::max(std::max(n1, n2), n3);
    for (int s = s_min; 2 * s <= total; ++s) {
        // multinomial of s into (total - 2s, s - n3, s - n2, s - n1); a
        // negative entry kills the term, which the loop bounds already ensure
        const MPoly multi = q_multinomial({total - 2 * s, s - n3, s - n2, s - n1});
        MPoly inner;
        for (int k = 0; k <= total - 2 * s; ++k) {
            const int qexp = k * (k + 1) / 2 + (total - 2 * s - k) * (total - 2 * s - k - 1) / 2 +
                             k * a;
            inner += q_binomial(total - 2 * s, k) * var_pow(Var::y, static_cast<std::uint32_t>(k)) *
                     var_pow(Var::q, static_cast<std::uint32_t>(qexp));
        }
        sum += var_pow(Var::y, static_cast<std::uint32_t>(s)) * multi * q_binomial(a + s, s) * inner;
    }
    return q_factorial(n1) * q_factorial(n2) * q_factorial(n3) * sum;
}

MPoly linearization_via_moments(int n1, int n2, int n3, Alpha alpha) {
    if (alpha.value() < 0)
        throw InvalidRange("linearization_via_moments: alpha must be >= 0");
    const int N = n1 + n2 + n3;
    const MomentTable table = moments_jfrac(N, laguerre_jcoeffs(alpha, N));
    const MPoly product = laguerre_rec(n1, alpha).poly * laguerre_rec(n2, alpha).poly *
                          laguerre_rec(n3, alpha).poly;
    return functional_L(product, table);
}

Int classical_linearization(int n1, int n2, int n3, Alpha alpha) {
    if (n1 < 0 || n2 < 0 || n3 < 0 || alpha.value() < 0)
        throw InvalidRange("classical_linearization: need n_i >= 0 and alpha >= 0");
    const int total = n1 + n2 + n3;
    Rat sum(0);
    for (int s = std::max(std::max(n1, n2), n3); 2 * s <= total; ++s) {
        Rat rising(1);
        for (int i = 0; i < s; ++i) rising *= alpha.value() + 1 + i;
        Rat term = Rat(factorial(n1) * factorial(n2) * factorial(n3)) * rising;
        Int two_pow = 1;
        for (int i = 0; i < total - 2 * s; ++i) two_pow *= 2;
        term *= two_pow;
        term /= Rat(factorial(s - n1) * factorial(s - n2) * factorial(s - n3) *
                    factorial(total - 2 * s));
        sum += term;
    }
    if (boost::multiprecision::denominator(sum) != 1)
        throw std::logic_error("classical_linearization: non-integral total");
    return boost::multiprecision::numerator(sum);
}

}  // namespace qylag

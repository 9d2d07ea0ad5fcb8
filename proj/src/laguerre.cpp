#include "qylag/laguerre.hpp"

#include <random>
#include <set>
#include <string>

#include "qylag/qnum.hpp"

namespace qylag {

namespace {

const MPoly kX = MPoly::variable(Var::x);
const MPoly kY = MPoly::variable(Var::y);

MPoly sign_flip(const MPoly& p, int n) {
    // (-1)^n p(-x): negate coefficients whose x-degree differs from n mod 2.
    MPoly r;
    for (const auto& [e, c] : p.terms()) {
        const bool flip = ((n - static_cast<int>(e[static_cast<std::size_t>(Var::x)])) % 2) != 0;
        r.add_term(e, flip ? Int(-c) : c);
    }
    return r;
}

}  // namespace

LagPoly laguerre_rec(int n, Alpha alpha) {
    if (n < 0) throw InvalidRange("laguerre_rec: n must be >= 0");
    const int a = alpha.value();
    MPoly prev = MPoly::zero();  // L_{-1}
    MPoly cur = MPoly::one();    // L_0
    for (int m = 0; m < n; ++m) {
        MPoly b = kY * q_int(m + a + 1) + q_int(m);
        MPoly next = (kX - b) * cur;
        if (m >= 1) next -= kY * q_int(m) * q_int(m + a) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {n, alpha, false, cur};
}

LagPoly laguerre_signless(int n, Alpha alpha) {
    LagPoly p = laguerre_rec(n, alpha);
    return {n, alpha, true, sign_flip(p.poly, n)};
}

LagPoly laguerre_explicit(int n, Alpha alpha) {
    if (n < 0) throw InvalidRange("laguerre_explicit: n must be >= 0");
    const int a = alpha.value();
    const MPoly q = MPoly::variable(Var::q);

    // Summand k, after multiplying the j-th linear factor by q^j:
    //   numerator_k = (n!_q/k!_q) [n+alpha, k+alpha]_q y^{n-k}
    //                 prod_{j<k} (q^j x + (q^j - y) [j]_q)
    // over the denominator q^{d_k}, d_k = k(n-k) + k(k-1)/2.
    // [n+alpha, k+alpha]_q in the symmetric lower-index form [n+alpha, n-k]_q;
    // a zero lower index counts the empty selection even at n + alpha = -1.
    const auto top_binomial = [](int m, int j) {
        return j == 0 ? MPoly::one() : q_binomial(m, j);
    };

    std::vector<std::pair<MPoly, std::uint32_t>> summands;
    std::uint32_t max_shift = 0;
    for (int k = 0; k <= n; ++k) {
        MPoly binom = top_binomial(n + a, n - k);
        if (binom.is_zero()) continue;
        MPoly num = binom;
        for (int i = k + 1; i <= n; ++i) num *= q_int(i);
        num *= var_pow(Var::y, static_cast<std::uint32_t>(n - k));
        for (int j = 0; j < k; ++j) {
            const MPoly qj = var_pow(Var::q, static_cast<std::uint32_t>(j));
            num *= qj * kX + (qj - kY) * q_int(j);
        }
        const std::uint32_t d = static_cast<std::uint32_t>(k * (n - k) + k * (k - 1) / 2);
        max_shift = std::max(max_shift, d);
        summands.emplace_back(std::move(num), d);
    }

    MPoly total;
    for (const auto& [num, d] : summands) total += var_pow(Var::q, max_shift - d) * num;

    // Divide by q^D; the identity guarantees clearance, so any residue is a bug.
    MPoly result;
    for (const auto& [e, c] : total.terms()) {
        Exponents shifted = e;
        auto& qe = shifted[static_cast<std::size_t>(Var::q)];
        if (qe < max_shift)
            throw NegativeExponentResidue("laguerre_explicit: residual negative q-exponent");
        qe -= max_shift;
        result.add_term(shifted, c);
    }
    return {n, alpha, true, result};
}

MPoly coeff_l(int n, int k, Alpha alpha) {
    if (k < 0 || k > n) throw InvalidRange("coeff_l: need 0 <= k <= n");
    return coeff_in_var(laguerre_signless(n, alpha).poly, Var::x, static_cast<std::uint32_t>(k));
}

MPoly gf_truncated(Alpha alpha, int t_max, int q_max) {
    if (t_max < 1 || q_max < 1) throw InvalidRange("gf_truncated: bounds must be >= 1");
    const int a = alpha.value();
    const auto policy = TruncationPolicy::qt_below(static_cast<std::uint32_t>(q_max),
                                                   static_cast<std::uint32_t>(t_max));
    const MPoly q = MPoly::variable(Var::q);
    const MPoly t = MPoly::variable(Var::t);
    const MPoly one = MPoly::one();

    // (t; q)_inf (y t q^{alpha+1}; q)_inf: factors with q-prefix >= q_max are
    // 1 under the policy.
    MPoly num = one;
    for (int i = 0; i < q_max; ++i)
        num = mul(num, one - t * var_pow(Var::q, static_cast<std::uint32_t>(i)), policy);
    for (int e = a + 1; e < q_max; ++e)
        num = mul(num, one - kY * t * var_pow(Var::q, static_cast<std::uint32_t>(e)), policy);

    // Denominator factors 1 - ((1-q)x + y + 1) t q^k + y t^2 q^{2k}; the k-th
    // one still matters whenever k < q_max.
    MPoly linear = (one - q) * kX + kY + one;
    MPoly gf = num;
    for (int k = 0; k < q_max; ++k) {
        const MPoly qk = var_pow(Var::q, static_cast<std::uint32_t>(k));
        MPoly factor = one - linear * t * qk + kY * t * t * qk * qk;
        gf = mul(gf, series_inverse(truncated(factor, policy), policy), policy);
    }
    return gf;
}

bool gf_factorization_check(Alpha alpha, int t_max, int q_max) {
    const auto policy = TruncationPolicy::qt_below(static_cast<std::uint32_t>(q_max),
                                                   static_cast<std::uint32_t>(t_max));
    MPoly full = gf_truncated(alpha, t_max, q_max);
    MPoly at_zero = substitute(full, Var::x, MPoly::zero());
    MPoly base = gf_truncated(Alpha(-1), t_max, q_max);
    return full == mul(at_zero, base, policy);
}

std::vector<MPoly> zero_gf_closed_form(Alpha alpha, int t_max) {
    if (t_max < 1) throw InvalidRange("zero_gf_closed_form: t_max must be >= 1");
    std::vector<MPoly> entries;
    entries.reserve(static_cast<std::size_t>(t_max));
    MPoly prod = MPoly::one();
    for (int n = 0; n < t_max; ++n) {
        if (n >= 1) prod *= q_int(alpha.value() + n);
        entries.push_back(prod * var_pow(Var::y, static_cast<std::uint32_t>(n)));
    }
    return entries;
}

bool prop_g_check(int n) {
    if (n < 0) throw InvalidRange("prop_g_check: n must be >= 0");
    const Alpha minus_one(-1);
    MPoly lhs = laguerre_signless(n + 1, minus_one).poly;
    MPoly rhs;
    for (int k = 0; k <= n; ++k)
        rhs += q_binomial(n, k) * q_factorial(k) * var_int(Var::y, k + 1) *
               laguerre_signless(n - k, minus_one).poly;
    return lhs == kX * rhs;
}

bool connection_check(int n, Alpha alpha, Alpha beta) {
    if (beta.value() > alpha.value())
        throw InvalidRange("connection_check: need beta <= alpha");
    if (n < 0) throw InvalidRange("connection_check: n must be >= 0");
    MPoly lhs = laguerre_signless(n, alpha).poly;
    MPoly rhs;
    const MPoly step = kY * var_pow(Var::q, static_cast<std::uint32_t>(beta.value() + 1));
    for (int k = 0; k <= n; ++k) {
        MPoly coeff = q_binomial(n, k);
        for (int j = 0; j < k; ++j) coeff *= q_int(alpha.value() - beta.value() + j);
        if (coeff.is_zero()) continue;
        rhs += coeff * pow(step, static_cast<std::uint32_t>(k)) *
               laguerre_signless(n - k, beta).poly;
    }
    return lhs == rhs;
}

MPoly asc_rec(int n) {
    if (n < 0) throw InvalidRange("asc_rec: n must be >= 0");
    const MPoly a = MPoly::variable(Var::a);
    const MPoly b = MPoly::variable(Var::b);
    const MPoly q = MPoly::variable(Var::q);
    MPoly prev = MPoly::zero();
    MPoly cur = MPoly::one();
    for (int m = 0; m < n; ++m) {
        MPoly next = (MPoly::constant(2) * kX -
                      (a + b) * var_pow(Var::q, static_cast<std::uint32_t>(m))) *
                     cur;
        if (m >= 1)
            next -= (MPoly::one() - var_pow(Var::q, static_cast<std::uint32_t>(m))) *
                    (MPoly::one() - a * b * var_pow(Var::q, static_cast<std::uint32_t>(m - 1))) *
                    prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

Rat rat_pochhammer(const Rat& z, const Rat& q, int m) {
    Rat p(1);
    Rat qi(1);
    for (int i = 0; i < m; ++i) {
        p *= Rat(1) - z * qi;
        qi *= q;
    }
    return p;
}

}  // namespace

Rat asc_explicit_eval(int n, const Rat& u, const Rat& a, const Rat& b, const Rat& q) {
    if (n < 0) throw InvalidRange("asc_explicit_eval: n must be >= 0");
    if (u == 0 || a == 0 || q == 0)
        throw SingularEvaluationPoint("asc_explicit_eval: u, a, q must be nonzero");
    // (q; q)_k and (ab; q)_k sit in denominators for k <= n.
    {
        Rat qi(1);
        for (int i = 1; i <= n; ++i) {
            qi *= q;
            if (qi == 1)
                throw SingularEvaluationPoint("asc_explicit_eval: q is a root of unity of order <= n");
        }
        Rat abqi = a * b;
        for (int i = 0; i < n; ++i) {
            if (abqi == 1)
                throw SingularEvaluationPoint("asc_explicit_eval: (ab; q)_k vanishes");
            abqi *= q;
        }
    }
    const Rat q_minus_n = rat_pow(q, -n);
    Rat sum(0);
    Rat qk(1);
    for (int k = 0; k <= n; ++k) {
        Rat term = rat_pochhammer(q_minus_n, q, k) * rat_pochhammer(a * u, q, k) *
                   rat_pochhammer(a / u, q, k) * qk;
        term /= rat_pochhammer(a * b, q, k) * rat_pochhammer(q, q, k);
        sum += term;
        qk *= q;
    }
    return rat_pochhammer(a * b, q, n) / rat_pow(a, n) * sum;
}

bool rescaling_check(int n, Alpha alpha, const std::vector<RescaleSample>& samples) {
    if (n < 0) throw InvalidRange("rescaling_check: n must be >= 0");
    const MPoly signless = laguerre_signless(n, alpha).poly;
    const MPoly asc = asc_rec(n);
    for (const auto& sample : samples) {
        if (sample.s == 0 || sample.q == 0 || sample.q == 1)
            throw SingularEvaluationPoint("rescaling_check: need s != 0 and q outside {0, 1}");
        const Rat y = sample.s * sample.s;
        const Rat lhs =
            eval_rat(signless, {{Var::x, sample.x}, {Var::y, y}, {Var::q, sample.q}});
        const Rat arg = ((Rat(1) - sample.q) * sample.x + y + 1) / (2 * sample.s);
        const Rat rhs = rat_pow(sample.s / (Rat(1) - sample.q), n) *
                        eval_rat(asc, {{Var::x, arg},
                                       {Var::a, Rat(1) / sample.s},
                                       {Var::b, sample.s * rat_pow(sample.q, alpha.value() + 1)},
                                       {Var::q, sample.q}});
        if (lhs != rhs) return false;
    }
    return true;
}

std::vector<RescaleSample> rescale_samples(int count, std::uint64_t seed) {
    // Both sides of the rescaling identity, cleared of the (1-q)^n, (2s)^n
    // and s^n denominators, are polynomials in (x, s, q) of total degree
    // O(n^2) (bounded by ~4n + n(alpha+1) q-powers for the ranges we sweep).
    // Distinct exact rational points drawn from a ~17*17*19 grid per
    // coordinate make a chance agreement of unequal polynomials across all
    // samples astronomically unlikely, and any single disagreement is an
    // exact, reproducible counterexample.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<RescaleSample> samples;
    std::set<std::array<Rat, 3>> seen;
    while (static_cast<int>(samples.size()) < count) {
        Rat s(num(rng), den(rng));
        Rat q(num(rng), den(rng));
        Rat x(num(rng), den(rng));
        if (s == 0 || q == 0 || q == 1) continue;
        if (!seen.insert({s, q, x}).second) continue;
        samples.push_back({s, q, x});
    }
    return samples;
}

}  // namespace qylag

#include "qylag/qnum.hpp"

#include <stdexcept>

namespace qylag {

MPoly var_int(Var v, int n) {
    if (n < 0) throw std::invalid_argument("var_int: negative argument");
    MPoly s;
    for (int i = 0; i < n; ++i) s += var_pow(v, static_cast<std::uint32_t>(i));
    return s;
}

MPoly q_int(int n) { return var_int(Var::q, n); }

MPoly q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    MPoly p = MPoly::one();
    for (int i = 1; i <= n; ++i) p *= q_int(i);
    return p;
}

MPoly q_binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return MPoly::zero();
    if (k > n - k) k = n - k;
    // Pascal row sweep; row[j] holds [m j]_q while m climbs to n.
    std::vector<MPoly> row(static_cast<std::size_t>(k) + 1, MPoly::zero());
    row[0] = MPoly::one();
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j)
            row[j] = row[j - 1] + var_pow(Var::q, static_cast<std::uint32_t>(j)) * row[j];
    }
    return row[static_cast<std::size_t>(k)];
}

MPoly q_multinomial(const std::vector<int>& parts) {
    MPoly p = MPoly::one();
    int total = 0;
    for (int part : parts) {
        if (part < 0) throw std::invalid_argument("q_multinomial: negative part");
        total += part;
        p *= q_binomial(total, part);
    }
    return p;
}

MPoly q_pochhammer(const MPoly& a, int n) {
    if (n < 0) throw std::invalid_argument("q_pochhammer: negative length");
    MPoly p = MPoly::one();
    for (int i = 0; i < n; ++i)
        p *= MPoly::one() - a * var_pow(Var::q, static_cast<std::uint32_t>(i));
    return p;
}

MPoly rising_factorial(const MPoly& x0, int n) {
    if (n < 0) throw std::invalid_argument("rising_factorial: negative length");
    MPoly p = MPoly::one();
    for (int i = 0; i < n; ++i) p *= x0 + MPoly::constant(i);
    return p;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(int n, int k) {
    if (k == 0) return 1;  // one empty selection, even off the n >= 0 range
    if (k < 0 || n < 0 || k > n) return 0;
    Int c = 1;
    for (int i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;
    }
    return c;
}

}  // namespace qylag

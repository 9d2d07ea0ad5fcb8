#pragma once

// (q,y)-Laguerre polynomials by three independent routes (three-term
// recurrence, explicit sum, truncated generating function), the
// Al-Salam--Chihara family they rescale, and the surrounding identity web
// (factorization and connection formulas, the alpha = -1 convolution
// recurrence, exact rational rescaling checks).

#include <cstdint>
#include <vector>

#include "qylag/mpoly.hpp"

namespace qylag {

struct NegativeExponentResidue : std::logic_error {
    using std::logic_error::logic_error;
};
struct SingularEvaluationPoint : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Integer parameter alpha >= -1.
class Alpha {
  public:
    explicit Alpha(int v) : value_(v) {
        if (v < -1) throw InvalidRange("Alpha: value must be >= -1");
    }
    int value() const { return value_; }
    friend bool operator==(Alpha lhs, Alpha rhs) { return lhs.value_ == rhs.value_; }

  private:
    int value_;
};

struct LagPoly {
    int n;
    Alpha alpha;
    bool signless;
    MPoly poly;  // in (x, y, q); x-degree n, monic
};

/// Signed polynomial by the three-term recurrence
/// L_{n+1} = (x - (y [n+alpha+1]_q + [n]_q)) L_n - y [n]_q [n+alpha]_q L_{n-1}.
LagPoly laguerre_rec(int n, Alpha alpha);

/// (-1)^n L_n(-x); coefficients land in N[y, q].
LagPoly laguerre_signless(int n, Alpha alpha);

/// Signless polynomial by the explicit sum
///   sum_k (n!_q / k!_q) [n+alpha, k+alpha]_q q^{k(k-n)} y^{n-k}
///         prod_{j<k} (x + (1 - y q^{-j}) [j]_q).
/// The negative q-powers are cleared by scaling the j-th factor by q^j and
/// pooling the compensating global powers over a common denominator q^D;
/// the final division certifies polynomiality (NegativeExponentResidue
/// signals an implementation bug, never a valid state).
LagPoly laguerre_explicit(int n, Alpha alpha);

/// ell_{n,k}(y; q): coefficient of x^k in the signless polynomial.
MPoly coeff_l(int n, int k, Alpha alpha);

/// Generating function sum_n L_n(x;y|q) t^n / n!_q modulo (t^t_max, q^q_max),
/// assembled from the Pochhammer-quotient product form.
MPoly gf_truncated(Alpha alpha, int t_max, int q_max);

/// Checks L(x;y;t|q) = L(0;y;t|q) * L^{(-1)}(x;y;t|q) under the policy.
bool gf_factorization_check(Alpha alpha, int t_max, int q_max);

/// Numerator sequence of the x = 0 generating function: entry n is
/// prod_{k=1..n} [alpha+k]_q * y^n (the n!_q division stays deferred).
std::vector<MPoly> zero_gf_closed_form(Alpha alpha, int t_max);

/// L^{(-1)}_{n+1}(x;y|q) = x sum_k [n k]_q k!_q [k+1]_y L^{(-1)}_{n-k}(x;y|q).
bool prop_g_check(int n);

/// Connection formula between levels alpha >= beta >= -1:
/// L^{(alpha)}_n = sum_k [n k]_q prod_{j<k} [alpha-beta+j]_q (y q^{beta+1})^k
///                 L^{(beta)}_{n-k}.
bool connection_check(int n, Alpha alpha, Alpha beta);

/// Al-Salam--Chihara Q_n(x; a, b | q) by its recurrence, as an MPoly in
/// (x, a, b, q) with leading x-coefficient 2^n.
MPoly asc_rec(int n);

/// Exact rational value of Q_n at x = (u + 1/u)/2 via the basic
/// hypergeometric sum; throws SingularEvaluationPoint when a denominator
/// Pochhammer vanishes.
Rat asc_explicit_eval(int n, const Rat& u, const Rat& a, const Rat& b, const Rat& q);

/// One rescaling sample; y is taken as s^2 so sqrt(y) is the rational s.
struct RescaleSample {
    Rat s;
    Rat q;
    Rat x;
};

/// Verifies L_n(x; y | q) = (s/(1-q))^n Q_n(((1-q)x + y + 1)/(2s); 1/s,
/// s q^(alpha+1) | q) at each sample (with y = s^2), evaluating the two
/// sides through independent code paths.
bool rescaling_check(int n, Alpha alpha, const std::vector<RescaleSample>& samples);

/// Deterministic non-singular samples (s != 0, q outside {0, 1}), distinct,
/// drawn from a seeded generator.
std::vector<RescaleSample> rescale_samples(int count, std::uint64_t seed);

}  // namespace qylag

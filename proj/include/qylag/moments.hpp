#pragma once

// Moments of the (q,y)-Laguerre functional via J- and S-continued fractions
// (transfer-matrix dynamic programming over weighted Motzkin/Dyck paths),
// the moment functional itself, orthogonality, and linearization
// coefficients by two independent routes plus the classical q = y = 1 form.

#include <vector>

#include "qylag/laguerre.hpp"
#include "qylag/mpoly.hpp"

namespace qylag {

struct DegreeTooHigh : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// J-fraction coefficients: diagonal b[0..N], off-diagonal lam[1..N]
/// (lam[0] is an unused placeholder).
struct JCoeffs {
    std::vector<MPoly> b;
    std::vector<MPoly> lam;
};

/// S-fraction coefficients gamma[1..2N] (gamma[0] unused).
struct SCoeffs {
    std::vector<MPoly> gamma;
};

struct MomentTable {
    std::vector<MPoly> mu;  // mu[0..N], mu[0] = 1
};

/// Laguerre instance: b_n = y [n+alpha+1]_q + [n]_q, lam_n = y [n]_q [n+alpha]_q.
JCoeffs laguerre_jcoeffs(Alpha alpha, int N);

/// Laguerre instance with the record weight kept general:
/// gamma_{2n} = [n]_q, gamma_{2n+1} = y ([n]_q + beta q^n); pass
/// MPoly::variable(Var::beta) for the symbolic table or q_int(alpha + 1) to
/// specialize.
SCoeffs laguerre_scoeffs(int N, const MPoly& beta);

/// Weighted-Motzkin-path evaluation of the J-fraction: up weight 1, level
/// weight b_h, down weight lam_h; mu_n is the closed-path total of length n.
MomentTable moments_jfrac(int N, const JCoeffs& coeffs);

/// Weighted-Dyck-path evaluation of the S-fraction (2N steps, down step from
/// height h weighted gamma_h).
MomentTable moments_sfrac(int N, const SCoeffs& coeffs);

/// Linear extension of x^n -> mu_n; p is read as a polynomial in x.
/// Throws DegreeTooHigh when the x-degree of p exceeds the table.
MPoly functional_L(const MPoly& p, const MomentTable& table);

/// L_q(L_n L_m) = y^n n!_q prod_{j=1..n} [alpha+j]_q delta_{nm} (signed
/// polynomials).
bool orthogonality_check(int n, int m, Alpha alpha);

/// Closed-form linearization coefficient L_q(L_{n1} L_{n2} L_{n3}); a
/// polynomial in N[y, q].
MPoly linearization_formula(int n1, int n2, int n3, Alpha alpha);

/// Same value through the moment functional applied to the triple product.
MPoly linearization_via_moments(int n1, int n2, int n3, Alpha alpha);

/// Classical (q = y = 1) linearization coefficient
///   sum_s n1! n2! n3! 2^{n1+n2+n3-2s} (alpha+1)_s /
///         ((s-n1)! (s-n2)! (s-n3)! (n1+n2+n3-2s)!).
Int classical_linearization(int n1, int n2, int n3, Alpha alpha);

}  // namespace qylag

#pragma once

// Shared worked-example fixture: the 1-colored configuration on [15] with
// sigma_0 = (7 4)(15), sigma_1 = (13 2 5)(14) and lists
// (1 3), (12 6 11), (10 8), (9).

#include "qylag/combstat.hpp"
#include "qylag/laguerre.hpp"
#include "qylag/qnum.hpp"

namespace qylag::testing {

inline LaguerreConfig example_config() {
    return make_config(15, 1,
                       {
                           {{7, 4}, 0},
                           {{15}, 0},
                           {{13, 2, 5}, 1},
                           {{14}, 1},
                       },
                       {
                           {1, 3},
                           {12, 6, 11},
                           {10, 8},
                           {9},
                       });
}

// Displayed coefficient skeletons of the first signed polynomials, assembled
// from q-integers for a concrete alpha.
inline MPoly expected_signed_l1(int alpha) {
    const MPoly x = MPoly::variable(Var::x);
    const MPoly y = MPoly::variable(Var::y);
    return x - y * q_int(alpha + 1);
}

inline MPoly expected_signed_l2(int alpha) {
    const MPoly x = MPoly::variable(Var::x);
    const MPoly y = MPoly::variable(Var::y);
    return x * x - (y * q_int(alpha + 1) + y * q_int(alpha + 2) + MPoly::one()) * x +
           q_int(alpha + 1) * q_int(alpha + 2) * y * y;
}

inline MPoly expected_signed_l3(int alpha) {
    const MPoly x = MPoly::variable(Var::x);
    const MPoly y = MPoly::variable(Var::y);
    const MPoly a1 = q_int(alpha + 1), a2 = q_int(alpha + 2), a3 = q_int(alpha + 3);
    const MPoly q = MPoly::variable(Var::q);
    return x * x * x -
           (y * (a1 + a2 + a3) + MPoly::constant(2) + q) * x * x +
           (y * y * (a1 * a2 + a2 * a3 + a1 * a3) + y * (a3 + q_int(2) * a1) + q_int(2)) * x -
           y * y * y * a1 * a2 * a3;
}

}  // namespace qylag::testing

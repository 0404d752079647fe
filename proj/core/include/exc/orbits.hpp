#pragma once

// Constructive sphere transitivity: reduce an arbitrary point of S^5 / S^6 /
// S^7 (inside V^6 / V^7 / V^8) to the canonical point by an explicit word in
// the one-parameter subgroups. Targets:
//   S^5 -> i Edot23,  S^6 -> (0, -i E1, 0, i),  S^7 -> E~1.

#include <string>
#include <vector>

#include "exc/freudenthal.hpp"
#include "exc/matrix.hpp"

namespace exc {

struct WordStep {
    std::string generator;       // alpha23_tilde | alpha1_tilde | alpha23 | alpha_diag
    std::vector<double> params;  // angle, or the 4 quaternion components
    MatD op;                     // realized operator on P^C
};

struct CanonResult {
    std::vector<WordStep> word;  // applied in order to the input point
    FVecF final_point;
    double residual;             // inf-norm distance from the target point
};

// branch thresholds: |h| <= 1e-12 skips the alpha~1 step; |tau xi - xi| <=
// 1e-12 triggers the a = pi/4 fallback
CanonResult canonicalize_s5(const VPoint& p, double tol);
CanonResult canonicalize_s6(const VPoint& p, double tol);
CanonResult canonicalize_s7(const VPoint& p, double tol);

FVecF s5_target();  // (i(E2+E3), 0, 0, 0)
FVecF s6_target();  // (0, -i E1, 0, i)
FVecF s7_target();  // (0, E1, 0, 1)

double point_distance(const FVecF& a, const FVecF& b);

}  // namespace exc

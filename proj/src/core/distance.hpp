#pragma once

#include <array>
#include <string>
#include <vector>

#include "nullcone.hpp"

namespace nullfront {

/**
 * Jets of the anti-de Sitter distance-squared function
 * d_{v0}(s) = <gamma(s) - v0, gamma(s) - v0> at s0, for v0 in AdS^3.
 * `levels` counts the leading vanishing derivatives: d^(0)..d^(levels-1)
 * are zero under the tolerance and d^(levels) is not (5 means all five
 * computed derivatives vanish).
 */
struct DistanceEvaluation {
    double s0 = 0.0;
    Vec4 v0;
    std::array<double, 5> d{};
    int levels = 0;
    double tol = 0.0;  // the effective tolerance used for `levels`
};

/// With relative_tol the vanishing tolerance scales by the largest |d^(k)|,
/// which keeps the level count meaningful for large-amplitude ladders.
DistanceEvaluation dist_sq_jets(const FramedCurve& fc, double s0, const Vec4& v0,
                                double tol = 1e-7, bool relative_tol = false);

/// One geometric alternative of the vanishing-order conditions at a level.
struct ConditionAlternative {
    int level = 0;          // 1..5
    std::string label;      // e.g. "3.iii(+)"; "(as-amended)" marks items
                            // whose predicate on alpha is truncated in the
                            // source material and implemented as alpha = 0
    bool satisfied = false;
    double residual = 0.0;  // what was compared against the tolerance
};

struct ConditionReport {
    DistanceEvaluation eval;
    // Frame decomposition v0 = g*gamma + a*v1 + b*v2 + c*mu.
    double g = 0.0, a = 0.0, b = 0.0, c = 0.0;
    double constraint_residual = 0.0;  // |c^2 + eps*(a^2 - b^2)|
    std::array<bool, 5> derivatives_vanish{};  // levels 1..5
    std::vector<ConditionAlternative> alternatives;
};

/**
 * Checks the derivative-vanishing conditions and every listed geometric
 * alternative independently, level by level.  The report never assumes the
 * equivalences; both sides are computed so discrepancies stay observable.
 */
ConditionReport check_conditions(const FramedCurve& fc, double s0, const Vec4& v0,
                                 double tol = 1e-7, double tol_denom = 1e-10,
                                 bool relative_tol = false);

/// The distinguished point gamma(s0) + lambda_0*(v1 +- v2) with
/// lambda_0 = -alpha/(m +- n); identical to the singular locus of the front.
Vec4 locus_point(const FramedCurve& fc, double s0, FrontSheet sheet, double tol_denom = 1e-10);

}  // namespace nullfront

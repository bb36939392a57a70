#pragma once

#include "curve.hpp"

namespace nullfront {

/**
 * Frenet-type data of a regular unit-speed spacelike curve in AdS^3:
 *   T = gamma',  N1 = T' - gamma,  kappa_g = |N1|,
 *   n1 = N1/kappa_g,  delta = <n1,n1>,  n2 = gamma x T x n1,
 *   tau_g = (delta/kappa_g^2) det(gamma, gamma', gamma'', gamma''').
 * A geodesic has kappa_g = 0 with N1 = 0.  kappa_g = 0 with N1 != 0 means a
 * null normal; the point is flagged degenerate and the normals are omitted.
 */
struct FrenetData {
    Vec4 T, N1;
    double kappa_g = 0.0;
    bool geodesic = false;
    bool degenerate = false;
    bool has_normals = false;
    Vec4 n1, n2;
    int delta = 0;
    double tau_g = 0.0;
};

/// Throws NotOnAdS3 / NotUnitSpeed when the preconditions fail at s.
FrenetData frenet_at(const CurveSpec& gamma, double s, double tol = 1e-8);

/// Same computation from precomputed jets of gamma.
FrenetData frenet_from_jets(const Vec4J4& gamma_jets, double tol = 1e-8);

}  // namespace nullfront

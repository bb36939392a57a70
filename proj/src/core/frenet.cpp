#include "frenet.hpp"

#include <cmath>

#include "errors.hpp"

namespace nullfront {

FrenetData frenet_at(const CurveSpec& gamma, double s, double tol) {
    return frenet_from_jets(gamma.eval_jets(s), tol);
}

FrenetData frenet_from_jets(const Vec4J4& g, double tol) {
    const Vec4 g0 = jet_values(g);
    const Vec4 g1 = jet_derivs(g, 1);
    const Vec4 g2 = jet_derivs(g, 2);
    const Vec4 g3 = jet_derivs(g, 3);

    if (std::fabs(pseudo_dot(g0, g0) + 1.0) > tol)
        throw Error(ErrorCode::NotOnAdS3, "curve point is not on AdS^3 within tolerance");
    if (std::fabs(pseudo_dot(g1, g1) - 1.0) > tol)
        throw Error(ErrorCode::NotUnitSpeed,
                    "curve is not unit-speed spacelike at this parameter");

    FrenetData fd;
    fd.T = g1;
    fd.N1 = g2 - g0;
    if (sup_norm(fd.N1) <= tol) {
        fd.geodesic = true;
        return fd;
    }
    fd.kappa_g = pseudo_norm(fd.N1);
    if (fd.kappa_g <= tol) {
        // N1 is null but nonzero: not a geodesic, normals undefined.
        fd.degenerate = true;
        return fd;
    }
    fd.has_normals = true;
    fd.n1 = fd.N1 * (1.0 / fd.kappa_g);
    fd.delta = pseudo_dot(fd.n1, fd.n1) >= 0.0 ? 1 : -1;
    fd.n2 = triple_product(g0, fd.T, fd.n1);
    fd.tau_g = (static_cast<double>(fd.delta) / (fd.kappa_g * fd.kappa_g)) * det4(g0, g1, g2, g3);
    return fd;
}

}  // namespace nullfront

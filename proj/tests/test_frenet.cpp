#include <doctest.h>

#include <cmath>

#include "core/curve.hpp"
#include "core/errors.hpp"
#include "core/frenet.hpp"

using namespace nullfront;

namespace {

CurveSpec make_curve(const char* c1, const char* c2, const char* c3, const char* c4) {
    return CurveSpec::from_strings("test", {std::string(c1), c2, c3, c4},
                                   PseudoSphereKind::AdS3);
}

}  // namespace

TEST_CASE("a geodesic is recognised") {
    const CurveSpec g = make_curve("cosh(s)", "0", "sinh(s)", "0");
    for (double s : {0.0, 0.5, -1.2}) {
        const FrenetData fd = frenet_at(g, s);
        CHECK(fd.geodesic);
        CHECK_FALSE(fd.degenerate);
        CHECK(fd.kappa_g == 0.0);
        CHECK_FALSE(fd.has_normals);
    }
}

TEST_CASE("circle at radius sqrt(2): kappa_g = sqrt(2), tau_g = 0") {
    const CurveSpec g = make_curve("sqrt(2)", "0", "cos(s)", "sin(s)");
    for (double s : {0.0, 0.7, 2.9}) {
        const FrenetData fd = frenet_at(g, s);
        CHECK_FALSE(fd.geodesic);
        CHECK(fd.has_normals);
        CHECK(fd.kappa_g == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
        CHECK(fd.delta == 1);
        CHECK(fd.tau_g == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
        // The second normal carries the opposite causal character.
        CHECK(pseudo_dot(fd.n2, fd.n2) == doctest::Approx(-1.0).epsilon(1e-7));
    }
}

TEST_CASE("Frenet-Serret residuals vanish on the circle example") {
    const CurveSpec g = make_curve("sqrt(2)", "0", "cos(s)", "sin(s)");
    const double h = 1e-5;
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double s = -1.5 + 3.0 * k / 49.0;
        const FrenetData fd = frenet_at(g, s);
        const FrenetData lo = frenet_at(g, s - h);
        const FrenetData hi = frenet_at(g, s + h);
        const Vec4 g0 = g.eval(s);
        const double kg = fd.kappa_g, tg = fd.tau_g, delta = fd.delta;
        const Vec4 dT = (hi.T - lo.T) * (0.5 / h);
        const Vec4 dn1 = (hi.n1 - lo.n1) * (0.5 / h);
        const Vec4 dn2 = (hi.n2 - lo.n2) * (0.5 / h);
        worst = std::max(worst, sup_norm(dT - (g0 + fd.n1 * kg)));
        worst = std::max(worst, sup_norm(dn1 - (fd.T * (-delta * kg) + fd.n2 * tg)));
        worst = std::max(worst, sup_norm(dn2 - fd.n1 * tg));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("a curve with torsion") {
    // gamma = (sqrt2 cos s, sqrt2 sin s, cos(sqrt3 s), sin(sqrt3 s)) is
    // unit-speed on AdS^3 with kappa_g = 2*sqrt2.
    const CurveSpec g = make_curve("sqrt(2)*cos(s)", "sqrt(2)*sin(s)", "cos(sqrt(3)*s)",
                                   "sin(sqrt(3)*s)");
    const FrenetData fd = frenet_at(g, 0.4);
    CHECK(fd.kappa_g == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(fd.has_normals);
    // Independent route: tau_g = (delta/kappa^2) det(gamma, gamma', gamma'', gamma''').
    const Vec4J4 jets = g.eval_jets(0.4);
    const double det = det4(jet_values(jets), jet_derivs(jets, 1), jet_derivs(jets, 2),
                            jet_derivs(jets, 3));
    CHECK(fd.tau_g ==
          doctest::Approx(fd.delta * det / (fd.kappa_g * fd.kappa_g)).epsilon(1e-12));
    CHECK(std::fabs(fd.tau_g) > 0.1);
}

TEST_CASE("degenerate null normal is flagged, not treated as geodesic") {
    // N1 = (0, 1, -1, 0) everywhere: null but nonzero.
    const CurveSpec g =
        make_curve("cosh(s)", "cosh(s)-1", "1-cosh(s)", "sinh(s)");
    for (double s : {0.0, 0.8, -1.1}) {
        const FrenetData fd = frenet_at(g, s);
        CHECK(fd.degenerate);
        CHECK_FALSE(fd.geodesic);
        CHECK_FALSE(fd.has_normals);
        CHECK(fd.kappa_g <= 1e-8);
        CHECK(sup_norm(fd.N1) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("precondition failures") {
    // example1's base curve is singular at s = 0 (gamma'(0) = 0).
    const CatalogEntry e = catalog("example1");
    CHECK_THROWS_AS(frenet_at(e.gamma, 0.0), Error);
    try {
        frenet_at(e.gamma, 0.0);
        FAIL("expected error");
    } catch (const Error& ex) {
        CHECK(ex.code() == ErrorCode::NotUnitSpeed);
    }
    // Not on AdS^3 at all.
    const CurveSpec off = make_curve("2", "0", "cos(s)", "sin(s)");
    try {
        frenet_at(off, 0.3);
        FAIL("expected error");
    } catch (const Error& ex) {
        CHECK(ex.code() == ErrorCode::NotOnAdS3);
    }
}

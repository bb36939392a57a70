#include "distance.hpp"

#include <cmath>

#include "errors.hpp"

namespace nullfront {

namespace {

int leading_zero_count(const std::array<double, 5>& d, double tol) {
    int k = 0;
    while (k < 5 && std::fabs(d[k]) <= tol) ++k;
    return k;
}

}  // namespace

DistanceEvaluation dist_sq_jets(const FramedCurve& fc, double s0, const Vec4& v0, double tol,
                                bool relative_tol) {
    if (!all_finite(v0)) throw Error(ErrorCode::InvalidArgument, "v0 has non-finite components");
    if (!check_membership(v0, PseudoSphereKind::AdS3, 1e-7))
        throw Error(ErrorCode::NotOnAdS3, "v0 is not on AdS^3 within 1e-7");
    const FrameJets fj = fc.jets(s0);
    const Vec4J4 diff = fj.gamma - vec_constant<4>(v0);
    const Jet4 d = pseudo_dot(diff, diff);
    DistanceEvaluation ev;
    ev.s0 = s0;
    ev.v0 = v0;
    for (int k = 0; k <= 4; ++k) ev.d[k] = d.deriv(k);
    ev.tol = tol;
    if (relative_tol) {
        double scale = 1.0;
        for (double v : ev.d) scale = std::max(scale, std::fabs(v));
        ev.tol = tol * scale;
    }
    ev.levels = leading_zero_count(ev.d, ev.tol);
    return ev;
}

Vec4 locus_point(const FramedCurve& fc, double s0, FrontSheet sheet, double tol_denom) {
    const double lam = singular_lambda(fc, s0, sheet, tol_denom);
    return front_point(fc, s0, lam, sheet);
}

ConditionReport check_conditions(const FramedCurve& fc, double s0, const Vec4& v0, double tol,
                                 double tol_denom, bool relative_tol) {
    ConditionReport rep;
    rep.eval = dist_sq_jets(fc, s0, v0, tol, relative_tol);

    const FrameJets fj = fc.jets(s0);
    const double eps = static_cast<double>(fj.epsilon);
    const Vec4 g = jet_values(fj.gamma);
    const Vec4 v1 = jet_values(fj.v1);
    const Vec4 v2 = jet_values(fj.v2);
    const Vec4 mu = jet_values(fj.mu);
    const Vec4 w = v0 - g;

    // Coefficients of v0 - gamma in the frame basis (Gram diag(-1,eps,-eps,1));
    // rep.g is the gamma coefficient of v0 itself.
    rep.a = eps * pseudo_dot(w, v1);
    rep.b = -eps * pseudo_dot(w, v2);
    rep.c = pseudo_dot(w, mu);
    rep.g = 1.0 - pseudo_dot(w, g);
    rep.constraint_residual = std::fabs(rep.c * rep.c + eps * (rep.a * rep.a - rep.b * rep.b));

    for (int level = 1; level <= 5; ++level)
        rep.derivatives_vanish[level - 1] = rep.eval.levels >= level;

    const double alpha = fj.alpha.value();
    const double dalpha = fj.alpha.deriv(1);
    const double ddalpha = fj.alpha.deriv(2);
    const double dddalpha = fj.alpha.deriv(3);
    const bool a0 = std::fabs(alpha) <= tol;
    const bool a1 = std::fabs(dalpha) <= tol;
    const bool a2 = std::fabs(ddalpha) <= tol;
    const bool a3 = std::fabs(dddalpha) <= tol;

    const bool on_frame_sphere = std::fabs(rep.g - 1.0) <= tol;
    // Null-ray membership per sheet: v0 = gamma + lambda*(v1 +- v2).
    const auto ray_residual = [&](double sg) {
        return std::max({std::fabs(rep.g - 1.0), std::fabs(rep.c), std::fabs(rep.a - sg * rep.b)});
    };
    const bool on_ray_p = ray_residual(1.0) <= tol;
    const bool on_ray_m = ray_residual(-1.0) <= tol;

    const auto locus_residual = [&](FrontSheet sheet) -> double {
        const double lam = singular_lambda(fc, s0, sheet, tol_denom);
        const Vec4 lp = front_point(fc, s0, lam, sheet);
        return sup_norm(v0 - lp);
    };

    auto add = [&](int level, const std::string& label, bool ok, double residual) {
        rep.alternatives.push_back({level, label, ok, residual});
    };

    // (1): v0 = gamma + a v1 + b v2 + c mu with c^2 = -eps(a^2 - b^2).
    add(1, "1", on_frame_sphere && rep.constraint_residual <= tol,
        std::max(std::fabs(rep.g - 1.0), rep.constraint_residual));

    // (2): alpha = 0 (as-amended), or v0 on a null ray.
    add(2, "2.alpha (as-amended)", a0, std::fabs(alpha));
    add(2, "2.ray(+)", on_ray_p, ray_residual(1.0));
    add(2, "2.ray(-)", on_ray_m, ray_residual(-1.0));

    // (3)(i)-(iii).
    add(3, "3.i", a0 && a1, std::max(std::fabs(alpha), std::fabs(dalpha)));
    add(3, "3.ii(+) (as-amended)", a0 && on_ray_p, std::max(std::fabs(alpha), ray_residual(1.0)));
    add(3, "3.ii(-) (as-amended)", a0 && on_ray_m, std::max(std::fabs(alpha), ray_residual(-1.0)));
    for (FrontSheet sh : {FrontSheet::Plus, FrontSheet::Minus}) {
        const std::string tag = sh == FrontSheet::Plus ? "(+)" : "(-)";
        try {
            const double r = locus_residual(sh);
            add(3, "3.iii" + tag, r <= tol, r);
        } catch (const DenominatorNearZero&) {
            add(3, "3.iii" + tag + " [m +- n ~ 0]", false, INFINITY);
        }
    }

    // (4)(i)-(iv).
    add(4, "4.i", a0 && a1 && a2,
        std::max({std::fabs(alpha), std::fabs(dalpha), std::fabs(ddalpha)}));
    add(4, "4.ii(+)", a0 && a1 && on_ray_p,
        std::max({std::fabs(alpha), std::fabs(dalpha), ray_residual(1.0)}));
    add(4, "4.ii(-)", a0 && a1 && on_ray_m,
        std::max({std::fabs(alpha), std::fabs(dalpha), ray_residual(-1.0)}));
    add(4, "4.iii", a0 && sup_norm(w) <= tol, std::max(std::fabs(alpha), sup_norm(w)));
    for (FrontSheet sh : {FrontSheet::Plus, FrontSheet::Minus}) {
        const std::string tag = sh == FrontSheet::Plus ? "(+)" : "(-)";
        const SigmaValues sv = sigma_at(fc, s0, sh);
        try {
            const double r = std::max(locus_residual(sh), std::fabs(sv.sigma));
            add(4, "4.iv" + tag, r <= tol, r);
        } catch (const DenominatorNearZero&) {
            add(4, "4.iv" + tag + " [m +- n ~ 0]", false, INFINITY);
        }
    }

    // (5)(i)-(iv).
    add(5, "5.i", a0 && a1 && a2 && a3,
        std::max({std::fabs(alpha), std::fabs(dalpha), std::fabs(ddalpha), std::fabs(dddalpha)}));
    add(5, "5.ii(+)", a0 && a1 && a2 && on_ray_p,
        std::max({std::fabs(alpha), std::fabs(dalpha), std::fabs(ddalpha), ray_residual(1.0)}));
    add(5, "5.ii(-)", a0 && a1 && a2 && on_ray_m,
        std::max({std::fabs(alpha), std::fabs(dalpha), std::fabs(ddalpha), ray_residual(-1.0)}));
    add(5, "5.iii", a0 && a1 && sup_norm(w) <= tol,
        std::max({std::fabs(alpha), std::fabs(dalpha), sup_norm(w)}));
    for (FrontSheet sh : {FrontSheet::Plus, FrontSheet::Minus}) {
        const std::string tag = sh == FrontSheet::Plus ? "(+)" : "(-)";
        const SigmaValues sv = sigma_at(fc, s0, sh);
        try {
            const double r =
                std::max({locus_residual(sh), std::fabs(sv.sigma), std::fabs(sv.dsigma)});
            add(5, "5.iv" + tag, r <= tol, r);
        } catch (const DenominatorNearZero&) {
            add(5, "5.iv" + tag + " [m +- n ~ 0]", false, INFINITY);
        }
    }
    return rep;
}

}  // namespace nullfront

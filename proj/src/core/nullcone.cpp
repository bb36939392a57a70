#include "nullcone.hpp"

#include <cmath>
#include <exception>
#include <mutex>

#include "errors.hpp"
#include "parallel.hpp"
#include "rootfind.hpp"

namespace nullfront {

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::CuspidalEdge: return "cuspidal_edge";
        case Classification::Swallowtail: return "swallowtail";
        case Classification::HigherDegenerate: return "higher_degenerate";
    }
    return "?";
}

Vec4 front_point(const FramedCurve& fc, double s, double lambda, FrontSheet sheet) {
    const FrameJets fj = fc.jets(s);
    const Vec4 dir = jet_values(fj.v1) + jet_values(fj.v2) * sheet_sign(sheet);
    return jet_values(fj.gamma) + dir * lambda;
}

std::pair<Vec4, Vec4> front_jacobian(const FramedCurve& fc, double s, double lambda,
                                     FrontSheet sheet) {
    const FrameJets fj = fc.jets(s);
    const double sg = sheet_sign(sheet);
    const Vec4 ds = jet_derivs(fj.gamma, 1) +
                    (jet_derivs(fj.v1, 1) + jet_derivs(fj.v2, 1) * sg) * lambda;
    const Vec4 dl = jet_values(fj.v1) + jet_values(fj.v2) * sg;
    return {ds, dl};
}

std::array<double, 2> front_singular_values(const FramedCurve& fc, double s, double lambda,
                                            FrontSheet sheet) {
    const auto [ds, dl] = front_jacobian(fc, s, lambda, sheet);
    // Euclidean 2x2 Gram of the Jacobian columns; singular values from its
    // eigenvalues.
    double a = 0.0, b = 0.0, d = 0.0;
    for (int i = 0; i < 4; ++i) {
        a += ds[i] * ds[i];
        b += ds[i] * dl[i];
        d += dl[i] * dl[i];
    }
    const double tr = a + d;
    const double disc = std::sqrt(std::max(0.0, (a - d) * (a - d) + 4.0 * b * b));
    const double l1 = 0.5 * (tr + disc);
    const double l2 = 0.5 * std::max(0.0, tr - disc);
    return {std::sqrt(l1), std::sqrt(l2)};
}

double area_density(const FramedCurve& fc, double s, double lambda, FrontSheet sheet) {
    const FrameJets fj = fc.jets(s);
    const double mn = fj.m.value() + sheet_sign(sheet) * fj.n.value();
    return -(fj.alpha.value() + lambda * mn);
}

double singular_lambda(const FramedCurve& fc, double s, FrontSheet sheet, double tol_denom) {
    const FrameJets fj = fc.jets(s);
    const double mn = fj.m.value() + sheet_sign(sheet) * fj.n.value();
    if (std::fabs(mn) <= tol_denom)
        throw DenominatorNearZero("m " + std::string(sheet == FrontSheet::Plus ? "+" : "-") +
                                  " n vanishes at s = " + std::to_string(s));
    return -fj.alpha.value() / mn;
}

namespace {

// sigma as an order-2 jet from the order-3 curvature jets.
Jet2 sigma_jet(const FrameJets& fj, FrontSheet sheet) {
    const double sg = sheet_sign(sheet);
    const Jet2 a = fj.alpha.truncate<2>();
    const Jet2 l = fj.ell.truncate<2>();
    const Jet2 m = fj.m.truncate<2>();
    const Jet2 n = fj.n.truncate<2>();
    const Jet2 da = fj.alpha.derivative().truncate<2>();
    const Jet2 dm = fj.m.derivative().truncate<2>();
    const Jet2 dn = fj.n.derivative().truncate<2>();
    return a * (-(dm + dn * sg) + l * (n + m * sg)) + da * (m + n * sg);
}

}  // namespace

SigmaValues sigma_at(const FramedCurve& fc, double s, FrontSheet sheet) {
    const Jet2 sj = sigma_jet(fc.jets(s), sheet);
    return {sj.value(), sj.deriv(1)};
}

double transversality_det(const FramedCurve& fc, double s, FrontSheet sheet, double tol_denom) {
    const FrameJets fj = fc.jets(s);
    const double sg = sheet_sign(sheet);
    const Jet2 denom = fj.m.truncate<2>() + fj.n.truncate<2>() * sg;
    if (std::fabs(denom.value()) <= tol_denom)
        throw DenominatorNearZero("m +- n vanishes at s = " + std::to_string(s));
    const Jet2 lambda = -fj.alpha.truncate<2>() / denom;  // quotient rule via jets
    const double xi2 = sg * fj.alpha.value() * fj.ell.value() / denom.value();
    // det of rows c' = (1, lambda') and xi = (1, xi2).
    return xi2 - lambda.deriv(1);
}

SingularPointReport classify_at(const FramedCurve& fc, double s0, FrontSheet sheet, double tol,
                                double tol_denom) {
    const FrameJets fj = fc.jets(s0);
    const double sg = sheet_sign(sheet);
    const double mn = fj.m.value() + sg * fj.n.value();
    if (std::fabs(mn) <= tol_denom)
        throw DenominatorNearZero("m +- n vanishes at s = " + std::to_string(s0) +
                                  "; the classification criteria do not apply");
    SingularPointReport rep;
    rep.s0 = s0;
    rep.sheet = sheet;
    rep.lambda0 = -fj.alpha.value() / mn;
    rep.alpha = fj.alpha.value();
    rep.dalpha = fj.alpha.deriv(1);
    rep.ddalpha = fj.alpha.deriv(2);
    const Jet2 sj = sigma_jet(fj, sheet);
    rep.sigma = sj.value();
    rep.dsigma = sj.deriv(1);
    if (std::fabs(rep.sigma) > tol)
        rep.cls = Classification::CuspidalEdge;
    else if (std::fabs(rep.dsigma) > tol)
        rep.cls = Classification::Swallowtail;
    else
        rep.cls = Classification::HigherDegenerate;
    rep.alpha_root = std::fabs(rep.alpha) <= tol;
    rep.sigma_root = std::fabs(rep.sigma) <= tol;
    return rep;
}

ScanResult find_singularities(const FramedCurve& fc, FrontSheet sheet, double a, double b,
                              int grid, double tol, double tol_denom) {
    if (grid < 16) throw Error(ErrorCode::InvalidArgument, "scan grid must be >= 16");
    ScanResult out;

    const auto alpha_f = [&](double s) { return fc.jets(s).alpha.value(); };
    const auto dalpha_f = [&](double s) { return fc.jets(s).alpha.deriv(1); };
    const auto sigma_f = [&](double s) { return sigma_at(fc, s, sheet).sigma; };
    const auto dsigma_f = [&](double s) { return sigma_at(fc, s, sheet).dsigma; };

    // A function that sits below tolerance on most of the range has no
    // isolated roots to report; scanning it would flood the output.
    const auto degenerate = [&](const std::function<double(double)>& f) {
        int below = 0;
        for (int i = 0; i <= grid; ++i)
            if (std::fabs(f(a + (b - a) * static_cast<double>(i) / grid)) < tol) ++below;
        return below > grid / 2;
    };

    std::vector<double> alpha_roots, sigma_roots;
    if (degenerate(alpha_f))
        out.notes.push_back("alpha stays below tolerance across the range; every parameter is a "
                            "singular point of the base curve, no isolated roots reported");
    else
        alpha_roots = scan_roots(alpha_f, dalpha_f, a, b, grid, tol);
    if (degenerate(sigma_f))
        out.notes.push_back("sigma stays below tolerance across the range; the swallowtail "
                            "criterion is degenerate here, no sigma roots reported");
    else
        sigma_roots = scan_roots(sigma_f, dsigma_f, a, b, grid, tol);

    struct Candidate {
        double s;
        bool from_alpha, from_sigma;
    };
    std::vector<Candidate> cands;
    for (double r : alpha_roots) cands.push_back({r, true, false});
    for (double r : sigma_roots) {
        bool merged = false;
        for (auto& c : cands)
            if (std::fabs(c.s - r) < 1e-8) {
                c.from_sigma = true;
                merged = true;
                break;
            }
        if (!merged) cands.push_back({r, false, true});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
        return x.s < y.s;
    });

    for (const Candidate& c : cands) {
        try {
            SingularPointReport rep = classify_at(fc, c.s, sheet, tol, tol_denom);
            rep.alpha_root = rep.alpha_root || c.from_alpha;
            rep.sigma_root = rep.sigma_root || c.from_sigma;
            out.points.push_back(rep);
        } catch (const DenominatorNearZero& ex) {
            out.notes.push_back(std::string("skipped root near s = ") + std::to_string(c.s) +
                                ": " + ex.what());
        }
    }
    if (!fc.remark().empty()) out.notes.push_back(fc.remark());
    return out;
}

FrontMesh sample_mesh(const FramedCurve& fc, FrontSheet sheet, double s0, double s1, double l0,
                      double l1, int ns, int nl, const Projection& proj, double tol,
                      double tol_denom) {
    if (ns < 2 || nl < 2) throw Error(ErrorCode::InvalidArgument, "mesh grid must be >= 2x2");
    FrontMesh mesh;
    mesh.ns = ns;
    mesh.nl = nl;
    mesh.s0 = s0;
    mesh.s1 = s1;
    mesh.l0 = l0;
    mesh.l1 = l1;
    mesh.sheet = sheet;
    mesh.curve_name = fc.name();
    mesh.ambient.resize(static_cast<std::size_t>(ns) * nl);
    mesh.projected.resize(mesh.ambient.size());
    mesh.omega.resize(mesh.ambient.size());

    // One frame evaluation per s column; lambda only scales the ray.
    struct Column {
        bool locus_ok = false;
        MarkedPoint locus;
    };
    std::vector<Column> columns(ns);
    std::exception_ptr first_error;
    std::once_flag error_once;
    const double sg = sheet_sign(sheet);

    parallel_for(static_cast<std::size_t>(ns), [&](std::size_t i) {
        try {
            const double s = ns == 1 ? s0 : s0 + (s1 - s0) * static_cast<double>(i) / (ns - 1);
            const FrameJets fj = fc.jets(s);
            const Vec4 g = jet_values(fj.gamma);
            const Vec4 dir = jet_values(fj.v1) + jet_values(fj.v2) * sg;
            const double mn = fj.m.value() + sg * fj.n.value();
            for (int j = 0; j < nl; ++j) {
                const double lam = nl == 1 ? l0 : l0 + (l1 - l0) * static_cast<double>(j) / (nl - 1);
                const std::size_t at = i * nl + j;
                mesh.ambient[at] = g + dir * lam;
                mesh.projected[at] = proj.apply(mesh.ambient[at]);
                mesh.omega[at] = -(fj.alpha.value() + lam * mn);
            }
            if (std::fabs(mn) > tol_denom) {
                const double lam = -fj.alpha.value() / mn;
                if (lam >= l0 && lam <= l1) {
                    Column& col = columns[i];
                    col.locus_ok = true;
                    col.locus.s = s;
                    col.locus.lambda = lam;
                    col.locus.ambient = g + dir * lam;
                    col.locus.projected = proj.apply(col.locus.ambient);
                }
            }
        } catch (...) {
            std::call_once(error_once, [&] { first_error = std::current_exception(); });
        }
    });
    if (first_error) std::rethrow_exception(first_error);

    // Locus polyline, split where columns have no in-range locus point.
    std::vector<MarkedPoint> segment;
    bool had_gap = false;
    for (const Column& col : columns) {
        if (col.locus_ok) {
            segment.push_back(col.locus);
        } else {
            had_gap = true;
            if (segment.size() >= 2) mesh.locus_segments.push_back(segment);
            segment.clear();
        }
    }
    if (segment.size() >= 2) mesh.locus_segments.push_back(segment);
    if (had_gap)
        mesh.notes.push_back("singular locus leaves the lambda window or hits m +- n = 0; "
                             "polyline split into segments");

    ScanResult scan = find_singularities(fc, sheet, s0, s1, std::max(64, ns), tol, tol_denom);
    for (const SingularPointReport& rep : scan.points) {
        if (rep.lambda0 < l0 || rep.lambda0 > l1) continue;
        MarkedPoint mp;
        mp.s = rep.s0;
        mp.lambda = rep.lambda0;
        mp.cls = rep.cls;
        mp.ambient = front_point(fc, rep.s0, rep.lambda0, sheet);
        mp.projected = proj.apply(mp.ambient);
        mesh.distinguished.push_back(mp);
    }
    for (const std::string& n : scan.notes) mesh.notes.push_back(n);
    return mesh;
}

}  // namespace nullfront

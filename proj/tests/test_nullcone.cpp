#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "core/errors.hpp"
#include "core/nullcone.hpp"
#include "core/serialize.hpp"

using namespace nullfront;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::shared_ptr<FramedCurve> curve(const char* name) { return FramedCurve::from_catalog(name); }

}  // namespace

TEST_CASE("front points") {
    auto ex2 = curve("example2");
    const Vec4 p = front_point(*ex2, 0.0, 1.0, FrontSheet::Plus);
    CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(p[2] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p[3] == doctest::Approx(1.0).epsilon(1e-14));
    // lambda = 0 recovers the base curve.
    for (double s : {0.4, 2.0, 5.1}) {
        const Vec4 base = jet_values(ex2->jets(s).gamma);
        CHECK(sup_norm(front_point(*ex2, s, 0.0, FrontSheet::Minus) - base) == 0.0);
    }
}

TEST_CASE("front points match the expanded reference surfaces") {
    // example1: the expanded NF+ written with the shared radicals
    // R = sqrt(8+18s^2+26s^6) and D = sqrt(8+18s^2+s^6)*sqrt(4+9s^2+13s^6).
    {
        auto ex1 = curve("example1");
        for (double s : {0.3, -0.8, 1.0, 0.05}) {
            for (double lam : {0.7, -1.2}) {
                const double s2 = s * s, s3 = s2 * s, s4 = s2 * s2, s5 = s4 * s,
                             s6 = s4 * s2, s7 = s6 * s, s9 = s6 * s3;
                const double D = std::sqrt(8 + 18 * s2 + s6) * std::sqrt(4 + 9 * s2 + 13 * s6);
                const double R = std::sqrt(8 + 18 * s2 + 26 * s6);
                const Vec4 want = {
                    {std::sqrt(1 + s4) / 2 *
                         (std::sqrt(2.0) + (-8 + s2 * (-18 + 4 * s4 + s * R)) * lam / D),
                     std::sqrt(1 + s6) / 2 *
                         (std::sqrt(2.0) + (8 + s2 * (18 + 6 * s4 + s * R)) * lam / D),
                     s / 2 *
                         (std::sqrt(2.0) * s +
                          (-8 * s + 12 * s3 + 4 * s7 + (6 + s4) * R) * lam / D),
                     s3 / std::sqrt(2.0) +
                         (-12 * s3 + 18 * s5 + 6 * s9 + (s6 - 4) * R) * lam / (2 * D)}};
                CHECK(sup_norm(front_point(*ex1, s, lam, FrontSheet::Plus) - want) < 1e-13);
            }
        }
    }
    // example2: the expanded NF+ in trigonometric form.
    {
        auto ex2 = curve("example2");
        for (double s : {0.4, 1.9, 3.7}) {
            const double lam = 0.9;
            const double cn = std::cos(s), sn = std::sin(s);
            const double den = std::sqrt(1 + sn * sn * cn * cn);
            const double big = std::sqrt(1 + std::pow(cn, 6) + std::pow(sn, 6));
            const Vec4 want = {{lam, big * (1 + lam * cn * sn / den),
                                std::pow(cn, 3) + sn * (1 + std::pow(cn, 4)) * lam / den,
                                std::pow(sn, 3) + cn * (1 + std::pow(sn, 4)) * lam / den}};
            CHECK(sup_norm(front_point(*ex2, s, lam, FrontSheet::Plus) - want) < 1e-13);
        }
    }
    // example3 with the corrected normalizer sqrt(9+16s^2+s^8).
    {
        auto ex3 = curve("example3");
        for (double s : {0.5, -0.9}) {
            const double lam = -0.6;
            const double s2 = s * s, s3 = s2 * s, s4 = s2 * s2, s6 = s4 * s2, s8 = s4 * s4;
            const double D = std::sqrt(9 + 16 * s2 + s8);
            const Vec4 want = {{lam, std::sqrt(1 + s6 + s8) * (1 + s4 * lam / D),
                                s3 + s * (4 + s6) * lam / D, s4 + (s8 - 3) * lam / D}};
            CHECK(sup_norm(front_point(*ex3, s, lam, FrontSheet::Plus) - want) < 1e-13);
        }
    }
}

TEST_CASE("the ruling direction v1 +- v2 is null on every catalog curve") {
    for (const char* name : {"example1", "example2", "example3", "geodesic"}) {
        auto fc = curve(name);
        for (int k = 0; k < 100; ++k) {
            const double s = fc->interval_a() +
                             (fc->interval_b() - fc->interval_a()) * k / 99.0;
            const FrameJets fj = fc->jets(s);
            for (double sg : {1.0, -1.0}) {
                const Vec4 dir = jet_values(fj.v1) + jet_values(fj.v2) * sg;
                CHECK(std::fabs(pseudo_dot(dir, dir)) < 1e-9);
            }
        }
    }
}

TEST_CASE("area density reference values on example2") {
    auto ex2 = curve("example2");
    CHECK(area_density(*ex2, 0.0, 0.0, FrontSheet::Plus) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(area_density(*ex2, kPi / 4, 0.0, FrontSheet::Plus) ==
          doctest::Approx(1.5).epsilon(1e-14));
    CHECK(area_density(*ex2, kPi / 4, 3.0 * std::sqrt(5.0), FrontSheet::Plus) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
    // dOmega/dlambda = -(m +- n); Omega is affine in lambda.
    const FrameJets fj = ex2->jets(1.234);
    const double slope = (area_density(*ex2, 1.234, 1.0, FrontSheet::Plus) -
                          area_density(*ex2, 1.234, 0.0, FrontSheet::Plus));
    CHECK(slope == doctest::Approx(-(fj.m.value() + fj.n.value())).epsilon(1e-13));
}

TEST_CASE("singular lambda") {
    auto ex2 = curve("example2");
    CHECK(singular_lambda(*ex2, kPi / 4, FrontSheet::Plus) ==
          doctest::Approx(3.0 * std::sqrt(5.0)).epsilon(1e-13));
    auto ex1 = curve("example1");
    CHECK(singular_lambda(*ex1, 0.0, FrontSheet::Plus) == 0.0);
    auto ex3 = curve("example3");
    CHECK(singular_lambda(*ex3, 0.0, FrontSheet::Plus) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    // Hypothesis failure: the benchmark has m = n = 0 identically.
    CHECK_THROWS_AS(singular_lambda(*curve("geodesic"), 0.3, FrontSheet::Plus),
                    DenominatorNearZero);
    // example1's + sheet loses the hypothesis near s = -0.856.
    CHECK_THROWS_AS(singular_lambda(*ex1, -0.8559986363865545, FrontSheet::Plus, 1e-6),
                    DenominatorNearZero);
}

TEST_CASE("sigma reference values") {
    auto ex3 = curve("example3");
    const SigmaValues s3 = sigma_at(*ex3, 0.0, FrontSheet::Plus);
    CHECK(std::fabs(s3.sigma) < 1e-14);
    CHECK(s3.dsigma == doctest::Approx(8.0).epsilon(1e-12));

    auto ex1 = curve("example1");
    const SigmaValues s1 = sigma_at(*ex1, 0.0, FrontSheet::Plus);
    CHECK(s1.sigma == doctest::Approx(3.0 * std::sqrt(2.0) / 2.0).epsilon(1e-13));

    // Wherever alpha = alpha' = 0 both sigma terms die (example3 at 0 is
    // exactly that point; checked by construction above).
    const FrameJets fj = ex3->jets(0.0);
    CHECK(std::fabs(fj.alpha.value()) < 1e-15);
    CHECK(std::fabs(fj.alpha.deriv(1)) < 1e-15);
}

TEST_CASE("sigma' agrees with finite differences of sigma") {
    const double h = 1e-5;
    for (const char* name : {"example1", "example2", "example3"}) {
        auto fc = curve(name);
        for (FrontSheet sh : {FrontSheet::Plus, FrontSheet::Minus}) {
            for (int k = 0; k < 20; ++k) {
                const double s = fc->interval_a() + 3 * h +
                                 (fc->interval_b() - fc->interval_a() - 6 * h) * k / 19.0;
                const SigmaValues mid = sigma_at(*fc, s, sh);
                const double fd =
                    (sigma_at(*fc, s + h, sh).sigma - sigma_at(*fc, s - h, sh).sigma) / (2 * h);
                CHECK(std::fabs(mid.dsigma - fd) < 1e-5 * std::max(1.0, std::fabs(fd)));
            }
        }
    }
}

TEST_CASE("classification at the reference points") {
    const SingularPointReport r1 = classify_at(*curve("example1"), 0.0, FrontSheet::Plus);
    CHECK(r1.cls == Classification::CuspidalEdge);
    CHECK(r1.lambda0 == 0.0);
    CHECK(r1.alpha_root);

    const SingularPointReport r3 = classify_at(*curve("example3"), 0.0, FrontSheet::Plus);
    CHECK(r3.cls == Classification::Swallowtail);
    CHECK(std::fabs(r3.lambda0) < 1e-14);

    const SingularPointReport r2 = classify_at(*curve("example2"), kPi / 2, FrontSheet::Plus);
    CHECK(r2.cls == Classification::CuspidalEdge);
    CHECK(std::fabs(r2.lambda0) < 1e-12);

    CHECK_THROWS_AS(classify_at(*curve("geodesic"), 0.0, FrontSheet::Plus),
                    DenominatorNearZero);
}

TEST_CASE("scan on example2 finds five cuspidal edges and four swallowtails") {
    const ScanResult scan =
        find_singularities(*curve("example2"), FrontSheet::Plus, 0.0, 2 * kPi, 512);
    std::vector<double> alpha_roots, sigma_roots;
    for (const auto& p : scan.points) {
        if (p.alpha_root) {
            CHECK(p.cls == Classification::CuspidalEdge);
            alpha_roots.push_back(p.s0);
        } else {
            CHECK(p.sigma_root);
            CHECK(p.cls == Classification::Swallowtail);
            sigma_roots.push_back(p.s0);
            CHECK(std::fabs(std::fabs(p.lambda0) - 3.0 * std::sqrt(5.0)) < 1e-9);
        }
    }
    REQUIRE(alpha_roots.size() == 5);
    REQUIRE(sigma_roots.size() == 4);
    const double want_alpha[5] = {0.0, kPi / 2, kPi, 3 * kPi / 2, 2 * kPi};
    for (int i = 0; i < 5; ++i) CHECK(std::fabs(alpha_roots[i] - want_alpha[i]) < 1e-9);
    const double want_sigma[4] = {kPi / 4, 3 * kPi / 4, 5 * kPi / 4, 7 * kPi / 4};
    for (int i = 0; i < 4; ++i) CHECK(std::fabs(sigma_roots[i] - want_sigma[i]) < 1e-9);
    // The scan keeps the remark about the root beyond the documented set.
    bool noted = false;
    for (const auto& n : scan.notes)
        if (n.find("3*pi/2") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("scan on example3 finds the tangential double root and two side swallowtails") {
    const ScanResult scan =
        find_singularities(*curve("example3"), FrontSheet::Plus, -1.0, 1.0, 512);
    REQUIRE(scan.points.size() == 3);
    // sigma roots at +-0.8375162565756841 (lambda0 = -2.487227...), double
    // alpha root at 0.
    CHECK(std::fabs(scan.points[0].s0 + 0.8375162565756841) < 1e-9);
    CHECK(scan.points[0].cls == Classification::Swallowtail);
    CHECK(std::fabs(scan.points[0].lambda0 + 2.4872270875907771) < 1e-8);
    CHECK(std::fabs(scan.points[1].s0) < 1e-9);
    CHECK(scan.points[1].alpha_root);
    CHECK(scan.points[1].cls == Classification::Swallowtail);
    CHECK(std::fabs(scan.points[2].s0 - 0.8375162565756841) < 1e-9);
    CHECK(scan.points[2].cls == Classification::Swallowtail);
}

TEST_CASE("scan on example1 finds one cuspidal edge and one swallowtail") {
    const ScanResult scan =
        find_singularities(*curve("example1"), FrontSheet::Plus, -1.0, 1.0, 512);
    REQUIRE(scan.points.size() == 2);
    CHECK(std::fabs(scan.points[0].s0) < 1e-12);
    CHECK(scan.points[0].cls == Classification::CuspidalEdge);
    CHECK(scan.points[0].alpha_root);
    // sigma+ crosses zero at s = 0.65609863843 with lambda0 = -0.99528394.
    CHECK(std::fabs(scan.points[1].s0 - 0.6560986384332171) < 1e-9);
    CHECK(scan.points[1].cls == Classification::Swallowtail);
    CHECK(std::fabs(scan.points[1].lambda0 + 0.9952839372014285) < 1e-8);
    CHECK(scan.points[1].dsigma == doctest::Approx(-10.119756746599081).epsilon(1e-6));
}

TEST_CASE("grid precondition") {
    CHECK_THROWS_AS(find_singularities(*curve("example1"), FrontSheet::Plus, -1, 1, 8), Error);
}

TEST_CASE("transversality determinant is an oracle for sigma") {
    auto ex1 = curve("example1");
    CHECK(transversality_det(*ex1, 0.0, FrontSheet::Plus) ==
          doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));
    auto ex3 = curve("example3");
    CHECK(std::fabs(transversality_det(*ex3, 0.0, FrontSheet::Plus)) < 1e-13);
    // With ell = 0 the null field is (1, 0) and det = -lambda'.
    auto ex2 = curve("example2");
    const double h = 1e-6;
    const double lam_prime = (singular_lambda(*ex2, 1.0 + h, FrontSheet::Plus) -
                              singular_lambda(*ex2, 1.0 - h, FrontSheet::Plus)) /
                             (2 * h);
    CHECK(transversality_det(*ex2, 1.0, FrontSheet::Plus) ==
          doctest::Approx(-lam_prime).epsilon(1e-8));
    // Identity with sigma/(m +- n)^2 across sheets and curves.
    for (const char* name : {"example1", "example2", "example3"}) {
        auto fc = curve(name);
        for (FrontSheet sh : {FrontSheet::Plus, FrontSheet::Minus}) {
            for (int k = 0; k < 100; ++k) {
                const double s = fc->interval_a() +
                                 (fc->interval_b() - fc->interval_a()) * k / 99.0;
                const FrameJets fj = fc->jets(s);
                const double mn = fj.m.value() + sheet_sign(sh) * fj.n.value();
                const double want = sigma_at(*fc, s, sh).sigma / (mn * mn);
                CHECK(std::fabs(transversality_det(*fc, s, sh) - want) < 1e-8);
            }
        }
    }
}

TEST_CASE("triple-product singular-set witness on example2") {
    auto ex2 = curve("example2");
    for (int k = 0; k < 50; ++k) {
        const double s = 0.03 + (2 * kPi - 0.06) * k / 49.0;
        const double lam = singular_lambda(*ex2, s, FrontSheet::Plus);
        auto witness = [&](double l) {
            const Vec4 nf = front_point(*ex2, s, l, FrontSheet::Plus);
            const auto [ds, dl] = front_jacobian(*ex2, s, l, FrontSheet::Plus);
            return sup_norm(triple_product(nf, ds, dl));
        };
        CHECK(witness(lam) < 1e-7);
        CHECK(witness(lam + 0.1) > 1e-3);
        CHECK(witness(lam - 0.1) > 1e-3);
    }
}

TEST_CASE("Jacobian rank drops to one exactly on the locus") {
    auto ex2 = curve("example2");
    const auto rank = [](const std::array<double, 2>& sv) {
        return sv[1] > 1e-6 * sv[0] ? 2 : 1;
    };
    for (int k = 0; k < 50; ++k) {
        const double s = 0.05 + (2 * kPi - 0.1) * k / 49.0;
        const double lam = singular_lambda(*ex2, s, FrontSheet::Plus);
        CHECK(rank(front_singular_values(*ex2, s, lam, FrontSheet::Plus)) == 1);
        CHECK(rank(front_singular_values(*ex2, s, lam + 0.1, FrontSheet::Plus)) == 2);
        CHECK(rank(front_singular_values(*ex2, s, lam - 0.1, FrontSheet::Plus)) == 2);
    }
}

TEST_CASE("mesh sampling: counts, marked points, degenerate grids") {
    auto ex2 = curve("example2");
    const FrontMesh mesh = sample_mesh(*ex2, FrontSheet::Plus, 0.0, 2 * kPi, -2.0, 2.0, 128, 32,
                                       Projection::drop_u1());
    CHECK(mesh.ambient.size() == 128 * 32);
    CHECK(mesh.projected.size() == 128 * 32);
    // Five cuspidal-edge points sit on lambda = 0 inside the window; the
    // swallowtails live at |lambda| = 3*sqrt5 outside it.
    int cusps = 0, tails = 0;
    for (const auto& mp : mesh.distinguished)
        (mp.cls == Classification::CuspidalEdge ? cusps : tails) += 1;
    CHECK(cusps == 5);
    CHECK(tails == 0);

    const FrontMesh tiny = sample_mesh(*ex2, FrontSheet::Plus, 0.0, 1.0, -1.0, 1.0, 2, 2,
                                       Projection::drop_u1());
    CHECK(tiny.ambient.size() == 4);

    auto ex3 = curve("example3");
    const FrontMesh m3 = sample_mesh(*ex3, FrontSheet::Plus, -1.0, 1.0, -1.0, 1.0, 64, 16,
                                     Projection::drop_u1());
    bool found_tail = false;
    for (const auto& mp : m3.distinguished)
        if (mp.cls == Classification::Swallowtail && std::fabs(mp.s) < 1e-9) {
            found_tail = true;
            CHECK(mp.projected[0] == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(mp.projected[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
            CHECK(mp.projected[2] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
        }
    CHECK(found_tail);

    CHECK_THROWS_AS(sample_mesh(*ex2, FrontSheet::Plus, 0, 1, 0, 1, 1, 5,
                                Projection::drop_u1()),
                    Error);
}

TEST_CASE("mesh of the degenerate benchmark still samples, with notes") {
    auto geo = curve("geodesic");
    const FrontMesh mesh = sample_mesh(*geo, FrontSheet::Plus, -1.0, 1.0, -1.0, 1.0, 16, 8,
                                       Projection::drop_u1());
    CHECK(mesh.ambient.size() == 16 * 8);
    CHECK(mesh.locus_segments.empty());
    CHECK_FALSE(mesh.notes.empty());
}

TEST_CASE("mesh sampling is deterministic under threading") {
    auto ex2 = curve("example2");
    setenv("NULLFRONT_THREADS", "4", 1);
    const FrontMesh a = sample_mesh(*ex2, FrontSheet::Plus, 0.0, 2 * kPi, -2.0, 2.0, 64, 16,
                                    Projection::drop_u1());
    setenv("NULLFRONT_THREADS", "1", 1);
    const FrontMesh b = sample_mesh(*ex2, FrontSheet::Plus, 0.0, 2 * kPi, -2.0, 2.0, 64, 16,
                                    Projection::drop_u1());
    unsetenv("NULLFRONT_THREADS");
    CHECK(mesh_obj(a) == mesh_obj(b));
    CHECK(mesh_csv(a) == mesh_csv(b));
}

TEST_CASE("custom projection matrices are applied") {
    auto ex2 = curve("example2");
    std::array<std::array<double, 4>, 3> m{};
    m[0][0] = 1.0;  // picks the ambient first coordinate
    m[1][2] = 2.0;
    m[2][3] = 1.0;
    const FrontMesh mesh =
        sample_mesh(*ex2, FrontSheet::Plus, 0.0, 1.0, 0.0, 1.0, 4, 4, Projection::from_matrix(m));
    for (std::size_t i = 0; i < mesh.ambient.size(); ++i) {
        CHECK(mesh.projected[i][0] == doctest::Approx(mesh.ambient[i][0]).epsilon(1e-15));
        CHECK(mesh.projected[i][1] == doctest::Approx(2 * mesh.ambient[i][2]).epsilon(1e-15));
        CHECK(mesh.projected[i][2] == doctest::Approx(mesh.ambient[i][3]).epsilon(1e-15));
    }
}

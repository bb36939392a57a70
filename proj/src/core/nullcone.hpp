#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "framed.hpp"

namespace nullfront {

/// Sheet selector of the nullcone front NF±(s, lambda) = gamma + lambda*(v1 ± v2).
enum class FrontSheet { Plus, Minus };

inline double sheet_sign(FrontSheet sh) { return sh == FrontSheet::Plus ? 1.0 : -1.0; }
inline const char* sheet_name(FrontSheet sh) { return sh == FrontSheet::Plus ? "plus" : "minus"; }

enum class Classification { CuspidalEdge, Swallowtail, HigherDegenerate };

const char* classification_name(Classification c);

struct SingularPointReport {
    double s0 = 0.0;
    double lambda0 = 0.0;
    Classification cls = Classification::HigherDegenerate;
    double alpha = 0.0, dalpha = 0.0, ddalpha = 0.0;
    double sigma = 0.0, dsigma = 0.0;
    FrontSheet sheet = FrontSheet::Plus;
    bool alpha_root = false;  // singular point of the base curve (lambda0 = 0)
    bool sigma_root = false;
};

struct ScanResult {
    std::vector<SingularPointReport> points;
    std::vector<std::string> notes;
};

struct Projection {
    // Default drops the first ambient coordinate (x2 x3 x4 view).
    bool drop_first = true;
    std::array<std::array<double, 4>, 3> matrix{};

    static Projection drop_u1() { return Projection{}; }
    static Projection from_matrix(const std::array<std::array<double, 4>, 3>& m) {
        Projection p;
        p.drop_first = false;
        p.matrix = m;
        return p;
    }
    std::array<double, 3> apply(const Vec4& v) const {
        if (drop_first) return {v[1], v[2], v[3]};
        std::array<double, 3> out{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) out[i] += matrix[i][j] * v[j];
        return out;
    }
};

struct MarkedPoint {
    double s = 0.0, lambda = 0.0;
    Classification cls = Classification::CuspidalEdge;
    Vec4 ambient;
    std::array<double, 3> projected{};
};

struct FrontMesh {
    int ns = 0, nl = 0;
    double s0 = 0.0, s1 = 0.0, l0 = 0.0, l1 = 0.0;
    FrontSheet sheet = FrontSheet::Plus;
    std::string curve_name;
    std::vector<Vec4> ambient;                    // row-major, ns x nl
    std::vector<std::array<double, 3>> projected;
    std::vector<double> omega;
    // Singular locus (s, lambda(s)); split into segments at gaps where the
    // locus leaves the lambda range or the denominator m +- n degenerates.
    std::vector<std::vector<MarkedPoint>> locus_segments;
    std::vector<MarkedPoint> distinguished;  // classified scan output inside the window
    std::vector<std::string> notes;
};

Vec4 front_point(const FramedCurve& fc, double s, double lambda, FrontSheet sheet);

/// Partial derivatives of NF at (s, lambda): d/ds and d/dlambda.
std::pair<Vec4, Vec4> front_jacobian(const FramedCurve& fc, double s, double lambda,
                                     FrontSheet sheet);

/// Euclidean singular values (descending) of the 4x2 Jacobian.
std::array<double, 2> front_singular_values(const FramedCurve& fc, double s, double lambda,
                                            FrontSheet sheet);

/// Signed area density Omega(s, lambda) = -(alpha + lambda*(m +- n)); its
/// zero set is exactly the singular set of the front.
double area_density(const FramedCurve& fc, double s, double lambda, FrontSheet sheet);

/// lambda_0(s) = -alpha/(m +- n); throws DenominatorNearZero when the
/// standing hypothesis m +- n != 0 fails at s.
double singular_lambda(const FramedCurve& fc, double s, FrontSheet sheet,
                       double tol_denom = 1e-10);

struct SigmaValues {
    double sigma, dsigma;
};

/// sigma = alpha*(-(m' +- n') + ell*(n +- m)) + alpha'*(m +- n), with its
/// derivative obtained by evaluating the same expression in jet arithmetic.
SigmaValues sigma_at(const FramedCurve& fc, double s, FrontSheet sheet);

/// det(c'(s), xi(s)) for the singular curve c(s) = (s, lambda(s)) and the
/// null field xi = (1, +-alpha*ell/(m +- n)); lambda' comes from jet
/// division, making this an oracle for sigma/(m +- n)^2.
double transversality_det(const FramedCurve& fc, double s, FrontSheet sheet,
                          double tol_denom = 1e-10);

SingularPointReport classify_at(const FramedCurve& fc, double s0, FrontSheet sheet,
                                double tol = 1e-8, double tol_denom = 1e-10);

/**
 * Every s carries the singular point (s, lambda(s)); the scan reports the
 * distinguished parameters: roots of alpha (base-curve singular points,
 * lambda_0 = 0) and roots of sigma (swallowtail candidates), classified.
 */
ScanResult find_singularities(const FramedCurve& fc, FrontSheet sheet, double a, double b,
                              int grid, double tol = 1e-8, double tol_denom = 1e-10);

FrontMesh sample_mesh(const FramedCurve& fc, FrontSheet sheet, double s0, double s1, double l0,
                      double l1, int ns, int nl, const Projection& proj, double tol = 1e-8,
                      double tol_denom = 1e-10);

}  // namespace nullfront

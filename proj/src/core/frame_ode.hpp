#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "framed.hpp"

namespace nullfront {

struct FrameState {
    double s = 0.0;
    Vec4 gamma, v1, v2, mu;
};

/// Max absolute deviation of the frame Gram matrix from diag(-1, eps, -eps, 1).
double gram_residual(const FrameState& st, int epsilon);

/**
 * Curvature quadruple (alpha, ell, m, n), prescribed analytically, taken
 * from a framed curve, or extracted from frame samples.
 */
class CurvatureQuad {
public:
    static CurvatureQuad from_exprs(Expr alpha, Expr ell, Expr m, Expr n, int epsilon);
    /// JSON document {alpha, ell, m, n: expression strings, epsilon: +-1}.
    static CurvatureQuad from_json(const std::string& json_text);
    static CurvatureQuad from_curve(std::shared_ptr<const FramedCurve> fc);
    /// Pairings per state; derivative columns by 4th-order differences on
    /// the uniform state grid.  Needs >= 5 states.
    static CurvatureQuad from_states(const std::vector<FrameState>& states, int epsilon);

    struct Values {
        double alpha, ell, m, n;
        double dalpha, dell, dm, dn;
    };
    Values at(double s) const;
    int epsilon() const { return epsilon_; }

    /// Node data of a sampled quad (empty for analytic sources).
    const std::vector<double>& sample_grid() const { return grid_; }
    std::array<const std::vector<double>*, 4> sample_values() const {
        return {&vals_[0], &vals_[1], &vals_[2], &vals_[3]};
    }

private:
    CurvatureQuad() = default;

    enum class Kind { Exprs, Curve, Sampled } kind_ = Kind::Exprs;
    std::array<Expr, 4> exprs_;
    std::shared_ptr<const FramedCurve> curve_;
    std::shared_ptr<const SampledData> sampled_;  // 8 columns: values then derivatives
    std::vector<double> grid_;
    std::array<std::vector<double>, 4> vals_;
    int epsilon_ = 1;
};

struct IntegrationOptions {
    double step = 1e-3;
    bool reorthonormalize = true;
    /// Abort threshold on the per-state Gram residual.
    double max_drift = 1e-3;
};

/**
 * Classical RK4 on the linear frame system
 *   gamma' = alpha*mu,  v1' = ell*v2 + m*mu,  v2' = ell*v1 + n*mu,
 *   mu'    = alpha*gamma - eps*m*v1 + eps*n*v2.
 * With reorthonormalization on, a projection restoring the pseudo-
 * orthonormal Gram matrix runs after every step (gamma first, then v1,
 * v2, then mu recomputed as the triple product).
 */
std::vector<FrameState> integrate_frame(const CurvatureQuad& quad, const FrameState& init,
                                        int epsilon, double s_end, const IntegrationOptions& opt);

/// Restore the Gram matrix of one state in place.
void reorthonormalize(FrameState& st, int epsilon);

inline CurvatureQuad extract_curvature(const std::vector<FrameState>& states, int epsilon) {
    return CurvatureQuad::from_states(states, epsilon);
}

struct CongruenceResult {
    std::array<std::array<double, 4>, 4> matrix{};  // A with A*frame1(s0) = frame2(s0)
    double residual = 0.0;           // max over grid of |A*gamma1(s) - gamma2(s)|_inf
    double isometry_residual = 0.0;  // max |A^T G A - G|
};

/// Aligns fc2 to fc1 by the unique linear map between the frames at s0.
CongruenceResult align_congruence(const FramedCurve& fc1, const FramedCurve& fc2, double s0,
                                  int grid = 100);

}  // namespace nullfront

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "curve.hpp"
#include "jet.hpp"

namespace nullfront {

/// Frame data at one parameter value: order-4 jets of the fields, the jet
/// of mu = gamma x v1 x v2, and order-3 jets of the curvature (alpha, ell,
/// m, n), so third derivatives of the curvature are available analytically.
struct FrameJets {
    double s = 0.0;
    int epsilon = 1;
    Vec4J4 gamma, v1, v2, mu;
    Jet3 alpha, ell, m, n;
};

struct CurvatureValues {
    double alpha, ell, m, n;
    double dalpha, dell, dm, dn;
};

struct ValidationItem {
    std::string name;
    double max_residual = 0.0;
    double worst_s = 0.0;
};

struct ValidationReport {
    bool pass = false;
    int epsilon = 1;
    std::string ordering;  // which of (v1, v2) sits on S^3_2 / AdS^3
    double tol = 0.0;
    std::vector<ValidationItem> items;
    bool epsilon_constant = true;
};

/**
 * Pseudo-spherical spacelike framed curve (gamma, v1, v2) on an interval.
 * gamma maps into AdS^3; v1, v2 are the orthogonal unit normal fields with
 * <gamma', v_i> = 0.  The frame stays defined at singular points of gamma.
 */
class FramedCurve {
public:
    static std::shared_ptr<FramedCurve> from_catalog(const std::string& name);
    /// JSON document {name, gamma:[4 strings], v1:[...], v2:[...], interval:[a,b]}.
    static std::shared_ptr<FramedCurve> from_spec_json(const std::string& json_text);
    /// CSV with header s,g1,g2,g3,g4,v11,...,v24 and strictly increasing s.
    static std::shared_ptr<FramedCurve> from_samples_csv(const std::string& csv_text);
    /// Frame samples (e.g. an integration run) as a sampled curve.
    static std::shared_ptr<FramedCurve> from_frame_samples(
        const std::vector<double>& s, const std::vector<Vec4>& gamma,
        const std::vector<Vec4>& v1, const std::vector<Vec4>& v2, const std::string& name);

    FrameJets jets(double s) const;

    /// Jets of the base curve alone (cheaper than a full frame evaluation).
    Vec4J4 gamma_jets(double s) const;

    double interval_a() const { return a_; }
    double interval_b() const { return b_; }
    int epsilon() const { return epsilon_; }
    const std::string& name() const { return name_; }
    const std::string& remark() const { return remark_; }
    bool analytic() const { return analytic_; }

    /// Throws DomainError when s falls outside the declared interval
    /// (with a small slack for endpoint roundoff).
    void require_in_interval(double s) const;

private:
    FramedCurve() = default;
    void detect_epsilon();

    std::shared_ptr<const Vec4Function> gamma_, v1_, v2_;
    double a_ = 0.0, b_ = 0.0;
    int epsilon_ = 1;
    bool analytic_ = true;
    std::string name_, remark_;
};

Vec4 mu_of(const FramedCurve& fc, double s);

CurvatureValues curvature_at(const FramedCurve& fc, double s);

/// Max residual of every framed-curve invariant over a uniform grid;
/// passes when all residuals are at or below tol.
ValidationReport validate(const FramedCurve& fc, int grid, double tol = 1e-7);

}  // namespace nullfront

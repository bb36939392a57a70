#include "frame_ode.hpp"

#include <cmath>

#include <json.hpp>

#include "errors.hpp"

namespace nullfront {

namespace {

constexpr double kMetricDiag[4] = {-1.0, -1.0, 1.0, 1.0};

// 4th-order finite differences on a uniform grid (central inside, one-sided
// at the edges); used for curvature derivatives of sampled quads.
std::vector<double> diff4(const std::vector<double>& y, double h) {
    const std::size_t n = y.size();
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= 2 && i + 2 < n) {
            d[i] = (-y[i + 2] + 8.0 * y[i + 1] - 8.0 * y[i - 1] + y[i - 2]) / (12.0 * h);
        } else if (i < 2) {
            d[i] = (-25.0 * y[i] + 48.0 * y[i + 1] - 36.0 * y[i + 2] + 16.0 * y[i + 3] -
                    3.0 * y[i + 4]) /
                   (12.0 * h);
        } else {
            d[i] = (25.0 * y[i] - 48.0 * y[i - 1] + 36.0 * y[i - 2] - 16.0 * y[i - 3] +
                    3.0 * y[i - 4]) /
                   (12.0 * h);
        }
    }
    return d;
}

struct QuadEval {
    double alpha, ell, m, n;
};

QuadEval pairings(const FrameState& st, const Vec4& dgamma, const Vec4& dv1, const Vec4& dv2,
                  int epsilon) {
    return {pseudo_dot(dgamma, st.mu), -epsilon * pseudo_dot(dv1, st.v2),
            pseudo_dot(dv1, st.mu), pseudo_dot(dv2, st.mu)};
}

}  // namespace

double gram_residual(const FrameState& st, int epsilon) {
    const Vec4* f[4] = {&st.gamma, &st.v1, &st.v2, &st.mu};
    const double eps = static_cast<double>(epsilon);
    const double target[4] = {-1.0, eps, -eps, 1.0};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const double want = i == j ? target[i] : 0.0;
            worst = std::max(worst, std::fabs(pseudo_dot(*f[i], *f[j]) - want));
        }
    return worst;
}

CurvatureQuad CurvatureQuad::from_exprs(Expr alpha, Expr ell, Expr m, Expr n, int epsilon) {
    CurvatureQuad q;
    q.kind_ = Kind::Exprs;
    q.exprs_ = {std::move(alpha), std::move(ell), std::move(m), std::move(n)};
    q.epsilon_ = epsilon;
    return q;
}

CurvatureQuad CurvatureQuad::from_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::BadInput, std::string("quad JSON parse failure: ") + ex.what());
    }
    for (const char* field : {"alpha", "ell", "m", "n", "epsilon"})
        if (!doc.contains(field))
            throw Error(ErrorCode::BadInput, std::string("quad JSON is missing '") + field + "'");
    const int eps = doc["epsilon"].get<int>();
    if (eps != 1 && eps != -1) throw Error(ErrorCode::BadInput, "epsilon must be +1 or -1");
    return from_exprs(Expr::parse(doc["alpha"].get<std::string>()),
                      Expr::parse(doc["ell"].get<std::string>()),
                      Expr::parse(doc["m"].get<std::string>()),
                      Expr::parse(doc["n"].get<std::string>()), eps);
}

CurvatureQuad CurvatureQuad::from_curve(std::shared_ptr<const FramedCurve> fc) {
    CurvatureQuad q;
    q.kind_ = Kind::Curve;
    q.epsilon_ = fc->epsilon();
    q.curve_ = std::move(fc);
    return q;
}

CurvatureQuad CurvatureQuad::from_states(const std::vector<FrameState>& states, int epsilon) {
    if (states.size() < 5)
        throw Error(ErrorCode::InsufficientSamples,
                    "curvature extraction needs at least 5 frame states");
    const std::size_t n = states.size();
    const double h = states[1].s - states[0].s;
    for (std::size_t i = 1; i < n; ++i)
        if (std::fabs((states[i].s - states[i - 1].s) - h) > 1e-9 * (1.0 + std::fabs(h)))
            throw Error(ErrorCode::BadInput, "frame states must be uniformly spaced");

    std::array<std::vector<double>, 4> gcols, v1cols, v2cols;
    for (int j = 0; j < 4; ++j) {
        gcols[j].resize(n);
        v1cols[j].resize(n);
        v2cols[j].resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            gcols[j][i] = states[i].gamma[j];
            v1cols[j][i] = states[i].v1[j];
            v2cols[j][i] = states[i].v2[j];
        }
    }
    std::array<std::vector<double>, 4> dg, dv1, dv2;
    for (int j = 0; j < 4; ++j) {
        dg[j] = diff4(gcols[j], h);
        dv1[j] = diff4(v1cols[j], h);
        dv2[j] = diff4(v2cols[j], h);
    }

    CurvatureQuad q;
    q.kind_ = Kind::Sampled;
    q.epsilon_ = epsilon;
    q.grid_.resize(n);
    for (auto& v : q.vals_) v.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        q.grid_[i] = states[i].s;
        const Vec4 dgi = {{dg[0][i], dg[1][i], dg[2][i], dg[3][i]}};
        const Vec4 dv1i = {{dv1[0][i], dv1[1][i], dv1[2][i], dv1[3][i]}};
        const Vec4 dv2i = {{dv2[0][i], dv2[1][i], dv2[2][i], dv2[3][i]}};
        const QuadEval e = pairings(states[i], dgi, dv1i, dv2i, epsilon);
        q.vals_[0][i] = e.alpha;
        q.vals_[1][i] = e.ell;
        q.vals_[2][i] = e.m;
        q.vals_[3][i] = e.n;
    }
    std::vector<std::vector<double>> cols(8);
    for (int j = 0; j < 4; ++j) cols[j] = q.vals_[j];
    for (int j = 0; j < 4; ++j) cols[4 + j] = diff4(q.vals_[j], h);
    q.sampled_ = std::make_shared<SampledData>(q.grid_, std::move(cols));
    return q;
}

CurvatureQuad::Values CurvatureQuad::at(double s) const {
    switch (kind_) {
        case Kind::Exprs: {
            Values v{};
            const Jet4 a = exprs_[0].eval_jet(s), l = exprs_[1].eval_jet(s),
                       m = exprs_[2].eval_jet(s), n = exprs_[3].eval_jet(s);
            v.alpha = a.value();
            v.ell = l.value();
            v.m = m.value();
            v.n = n.value();
            v.dalpha = a.deriv(1);
            v.dell = l.deriv(1);
            v.dm = m.deriv(1);
            v.dn = n.deriv(1);
            return v;
        }
        case Kind::Curve: {
            const CurvatureValues c = curvature_at(*curve_, s);
            return {c.alpha, c.ell, c.m, c.n, c.dalpha, c.dell, c.dm, c.dn};
        }
        case Kind::Sampled: {
            Values v{};
            v.alpha = sampled_->eval_column(0, s).value();
            v.ell = sampled_->eval_column(1, s).value();
            v.m = sampled_->eval_column(2, s).value();
            v.n = sampled_->eval_column(3, s).value();
            v.dalpha = sampled_->eval_column(4, s).value();
            v.dell = sampled_->eval_column(5, s).value();
            v.dm = sampled_->eval_column(6, s).value();
            v.dn = sampled_->eval_column(7, s).value();
            return v;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "corrupt curvature quad");
}

void reorthonormalize(FrameState& st, int epsilon) {
    const double eps = static_cast<double>(epsilon);
    st.gamma = st.gamma * (1.0 / std::sqrt(std::fabs(pseudo_dot(st.gamma, st.gamma))));
    // <gamma,gamma> = -1, so the projection coefficient flips sign.
    st.v1 += st.gamma * pseudo_dot(st.v1, st.gamma);
    st.v1 = st.v1 * (1.0 / std::sqrt(std::fabs(pseudo_dot(st.v1, st.v1))));
    st.v2 += st.gamma * pseudo_dot(st.v2, st.gamma);
    st.v2 -= st.v1 * (eps * pseudo_dot(st.v2, st.v1));
    st.v2 = st.v2 * (1.0 / std::sqrt(std::fabs(pseudo_dot(st.v2, st.v2))));
    st.mu = triple_product(st.gamma, st.v1, st.v2);
}

std::vector<FrameState> integrate_frame(const CurvatureQuad& quad, const FrameState& init,
                                        int epsilon, double s_end,
                                        const IntegrationOptions& opt) {
    if (!(opt.step > 0.0)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
    if (gram_residual(init, epsilon) > 1e-9)
        throw Error(ErrorCode::InvalidInitialFrame,
                    "initial frame violates the pseudo-orthonormal Gram matrix beyond 1e-9");

    const double span = s_end - init.s;
    const int nsteps = std::max(1, static_cast<int>(std::ceil(std::fabs(span) / opt.step - 1e-12)));
    const double h = span / nsteps;

    auto rhs = [&](double s, const FrameState& st) {
        const CurvatureQuad::Values q = quad.at(s);
        const double eps = static_cast<double>(epsilon);
        FrameState d;
        d.gamma = st.mu * q.alpha;
        d.v1 = st.v2 * q.ell + st.mu * q.m;
        d.v2 = st.v1 * q.ell + st.mu * q.n;
        d.mu = st.gamma * q.alpha - st.v1 * (eps * q.m) + st.v2 * (eps * q.n);
        return d;
    };
    auto axpy = [](const FrameState& st, const FrameState& d, double c) {
        FrameState r = st;
        r.gamma += d.gamma * c;
        r.v1 += d.v1 * c;
        r.v2 += d.v2 * c;
        r.mu += d.mu * c;
        return r;
    };

    std::vector<FrameState> out;
    out.reserve(static_cast<std::size_t>(nsteps) + 1);
    out.push_back(init);
    FrameState st = init;
    for (int k = 0; k < nsteps; ++k) {
        const double s = init.s + k * h;
        const FrameState k1 = rhs(s, st);
        const FrameState k2 = rhs(s + 0.5 * h, axpy(st, k1, 0.5 * h));
        const FrameState k3 = rhs(s + 0.5 * h, axpy(st, k2, 0.5 * h));
        const FrameState k4 = rhs(s + h, axpy(st, k3, h));
        FrameState next = st;
        next.gamma += (k1.gamma + k2.gamma * 2.0 + k3.gamma * 2.0 + k4.gamma) * (h / 6.0);
        next.v1 += (k1.v1 + k2.v1 * 2.0 + k3.v1 * 2.0 + k4.v1) * (h / 6.0);
        next.v2 += (k1.v2 + k2.v2 * 2.0 + k3.v2 * 2.0 + k4.v2) * (h / 6.0);
        next.mu += (k1.mu + k2.mu * 2.0 + k3.mu * 2.0 + k4.mu) * (h / 6.0);
        next.s = init.s + (k + 1) * h;

        if (gram_residual(next, epsilon) > opt.max_drift)
            throw Error(ErrorCode::StepTooLarge,
                        "frame Gram drift exceeded " + std::to_string(opt.max_drift) +
                            "; reduce the step size");
        if (opt.reorthonormalize) reorthonormalize(next, epsilon);
        st = next;
        out.push_back(st);
    }
    return out;
}

namespace {

// Gauss-Jordan inverse with partial pivoting.
std::array<std::array<double, 4>, 4> invert4(std::array<std::array<double, 4>, 4> m) {
    std::array<std::array<double, 4>, 4> inv{};
    for (int i = 0; i < 4; ++i) inv[i][i] = 1.0;
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
        if (std::fabs(m[pivot][col]) < 1e-12)
            throw Error(ErrorCode::SingularFrameMatrix,
                        "frame vectors are not linearly independent");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const double d = m[col][col];
        for (int j = 0; j < 4; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const double f = m[r][col];
            for (int j = 0; j < 4; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::array<std::array<double, 4>, 4> frame_columns(const FramedCurve& fc, double s) {
    const FrameJets fj = fc.jets(s);
    const Vec4 cols[4] = {jet_values(fj.gamma), jet_values(fj.v1), jet_values(fj.v2),
                          jet_values(fj.mu)};
    std::array<std::array<double, 4>, 4> F{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) F[i][j] = cols[j][i];
    return F;
}

}  // namespace

CongruenceResult align_congruence(const FramedCurve& fc1, const FramedCurve& fc2, double s0,
                                  int grid) {
    const auto F1 = frame_columns(fc1, s0);
    const auto F2 = frame_columns(fc2, s0);
    const auto F1inv = invert4(F1);

    CongruenceResult res;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += F2[i][k] * F1inv[k][j];
            res.matrix[i][j] = acc;
        }

    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += res.matrix[k][i] * kMetricDiag[k] * res.matrix[k][j];
            const double want = i == j ? kMetricDiag[i] : 0.0;
            res.isometry_residual = std::max(res.isometry_residual, std::fabs(acc - want));
        }

    const double a = std::max(fc1.interval_a(), fc2.interval_a());
    const double b = std::min(fc1.interval_b(), fc2.interval_b());
    if (!(a < b))
        throw Error(ErrorCode::InvalidArgument, "curves share no parameter interval");
    for (int k = 0; k < grid; ++k) {
        const double s = a + (b - a) * static_cast<double>(k) / (grid - 1);
        const Vec4 g1 = jet_values(fc1.jets(s).gamma);
        const Vec4 g2 = jet_values(fc2.jets(s).gamma);
        Vec4 Ag{};
        for (int i = 0; i < 4; ++i) {
            double acc = 0.0;
            for (int j = 0; j < 4; ++j) acc += res.matrix[i][j] * g1[j];
            Ag[i] = acc;
        }
        res.residual = std::max(res.residual, sup_norm(Ag - g2));
    }
    return res;
}

}  // namespace nullfront

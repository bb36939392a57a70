#include "framed.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace nullfront {

namespace {

std::array<Expr, 4> parse_components(const nlohmann::json& arr, const std::string& field) {
    if (!arr.is_array() || arr.size() != 4)
        throw Error(ErrorCode::BadInput, "spec field '" + field + "' must be 4 expression strings");
    std::array<Expr, 4> out;
    for (int i = 0; i < 4; ++i) {
        if (!arr[i].is_string())
            throw Error(ErrorCode::BadInput, "spec field '" + field + "' must be 4 expression strings");
        out[i] = Expr::parse(arr[i].get<std::string>());
    }
    return out;
}

std::vector<double> split_csv_row(const std::string& line, std::size_t lineno) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            out.push_back(std::stod(cell));
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadInput,
                        "bad numeric cell '" + cell + "' on line " + std::to_string(lineno));
        }
    }
    return out;
}

}  // namespace

std::shared_ptr<FramedCurve> FramedCurve::from_catalog(const std::string& name) {
    CatalogEntry e = catalog(name);
    auto fc = std::shared_ptr<FramedCurve>(new FramedCurve());
    fc->gamma_ = std::make_shared<AnalyticVec4>(std::move(e.gamma));
    fc->v1_ = std::make_shared<AnalyticVec4>(std::move(e.v1));
    fc->v2_ = std::make_shared<AnalyticVec4>(std::move(e.v2));
    fc->a_ = e.a;
    fc->b_ = e.b;
    fc->name_ = e.name;
    fc->remark_ = e.remark;
    fc->detect_epsilon();
    return fc;
}

std::shared_ptr<FramedCurve> FramedCurve::from_spec_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::BadInput, std::string("spec JSON parse failure: ") + ex.what());
    }
    for (const char* field : {"gamma", "v1", "v2", "interval"})
        if (!doc.contains(field))
            throw Error(ErrorCode::BadInput, std::string("spec JSON is missing '") + field + "'");

    auto fc = std::shared_ptr<FramedCurve>(new FramedCurve());
    fc->name_ = doc.value("name", std::string("spec"));

    CurveSpec g, v1, v2;
    g.name = fc->name_ + ".gamma";
    g.components = parse_components(doc["gamma"], "gamma");
    g.intended_sphere = PseudoSphereKind::AdS3;
    v1.name = fc->name_ + ".v1";
    v1.components = parse_components(doc["v1"], "v1");
    v2.name = fc->name_ + ".v2";
    v2.components = parse_components(doc["v2"], "v2");

    const auto& iv = doc["interval"];
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number())
        throw Error(ErrorCode::BadInput, "spec field 'interval' must be [a, b]");
    fc->a_ = iv[0].get<double>();
    fc->b_ = iv[1].get<double>();
    if (!(fc->a_ < fc->b_)) throw Error(ErrorCode::BadInput, "interval must satisfy a < b");

    fc->gamma_ = std::make_shared<AnalyticVec4>(std::move(g));
    fc->v1_ = std::make_shared<AnalyticVec4>(std::move(v1));
    fc->v2_ = std::make_shared<AnalyticVec4>(std::move(v2));
    fc->detect_epsilon();
    return fc;
}

std::shared_ptr<FramedCurve> FramedCurve::from_samples_csv(const std::string& csv_text) {
    std::stringstream ss(csv_text);
    std::string line;
    if (!std::getline(ss, line)) throw Error(ErrorCode::BadInput, "empty CSV");
    // Tolerate a trailing \r from CRLF files.
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string expected = "s,g1,g2,g3,g4,v11,v12,v13,v14,v21,v22,v23,v24";
    if (line != expected)
        throw Error(ErrorCode::BadInput, "CSV header must be exactly '" + expected + "'");

    std::vector<double> grid;
    std::vector<std::vector<double>> cols(12);
    std::size_t lineno = 1;
    while (std::getline(ss, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<double> row = split_csv_row(line, lineno);
        if (row.size() != 13)
            throw Error(ErrorCode::BadInput, "expected 13 columns on line " + std::to_string(lineno));
        grid.push_back(row[0]);
        for (int i = 0; i < 12; ++i) cols[i].push_back(row[i + 1]);
    }
    auto data = std::make_shared<SampledData>(std::move(grid), std::move(cols));

    auto fc = std::shared_ptr<FramedCurve>(new FramedCurve());
    fc->a_ = data->grid().front();
    fc->b_ = data->grid().back();
    fc->gamma_ = std::make_shared<SampledVec4>(data, 0);
    fc->v1_ = std::make_shared<SampledVec4>(data, 4);
    fc->v2_ = std::make_shared<SampledVec4>(data, 8);
    fc->analytic_ = false;
    fc->name_ = "samples";
    fc->detect_epsilon();
    return fc;
}

std::shared_ptr<FramedCurve> FramedCurve::from_frame_samples(
    const std::vector<double>& s, const std::vector<Vec4>& gamma, const std::vector<Vec4>& v1,
    const std::vector<Vec4>& v2, const std::string& name) {
    if (gamma.size() != s.size() || v1.size() != s.size() || v2.size() != s.size())
        throw Error(ErrorCode::BadInput, "frame sample arrays must share one length");
    std::vector<std::vector<double>> cols(12, std::vector<double>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (int j = 0; j < 4; ++j) {
            cols[j][i] = gamma[i][j];
            cols[4 + j][i] = v1[i][j];
            cols[8 + j][i] = v2[i][j];
        }
    auto data = std::make_shared<SampledData>(s, std::move(cols));
    auto fc = std::shared_ptr<FramedCurve>(new FramedCurve());
    fc->a_ = s.front();
    fc->b_ = s.back();
    fc->gamma_ = std::make_shared<SampledVec4>(data, 0);
    fc->v1_ = std::make_shared<SampledVec4>(data, 4);
    fc->v2_ = std::make_shared<SampledVec4>(data, 8);
    fc->analytic_ = false;
    fc->name_ = name;
    fc->detect_epsilon();
    return fc;
}

void FramedCurve::detect_epsilon() {
    const double mid = 0.5 * (a_ + b_);
    const Vec4 v1 = jet_values(v1_->eval_jets(mid));
    epsilon_ = pseudo_dot(v1, v1) >= 0.0 ? 1 : -1;
}

void FramedCurve::require_in_interval(double s) const {
    // Slack covers endpoint roundoff and range literals like 6.2832 for
    // 2*pi; evaluation far outside the declared window stays an error.
    const double slack = 1e-3 * (1.0 + std::fabs(a_) + std::fabs(b_));
    if (s < a_ - slack || s > b_ + slack)
        throw DomainError("parameter " + std::to_string(s) + " outside the declared interval [" +
                          std::to_string(a_) + ", " + std::to_string(b_) + "]");
}

Vec4J4 FramedCurve::gamma_jets(double s) const {
    require_in_interval(s);
    return gamma_->eval_jets(s);
}

FrameJets FramedCurve::jets(double s) const {
    require_in_interval(s);
    FrameJets fj;
    fj.s = s;
    fj.epsilon = epsilon_;
    fj.gamma = gamma_->eval_jets(s);
    fj.v1 = v1_->eval_jets(s);
    fj.v2 = v2_->eval_jets(s);
    fj.mu = triple_product(fj.gamma, fj.v1, fj.v2);

    // Curvature via the frame pairings; the derivative shift costs one jet
    // order, leaving exact derivatives of the curvature up to order 3.
    const Vec4J3 dg = vec_derivative(fj.gamma);
    const Vec4J3 dv1 = vec_derivative(fj.v1);
    const Vec4J3 dv2 = vec_derivative(fj.v2);
    const Vec4J3 mu3 = vec_truncate<3>(fj.mu);
    const Vec4J3 v23 = vec_truncate<3>(fj.v2);
    fj.alpha = pseudo_dot(dg, mu3);
    fj.ell = pseudo_dot(dv1, v23) * static_cast<double>(-epsilon_);
    fj.m = pseudo_dot(dv1, mu3);
    fj.n = pseudo_dot(dv2, mu3);
    return fj;
}

Vec4 mu_of(const FramedCurve& fc, double s) { return jet_values(fc.jets(s).mu); }

CurvatureValues curvature_at(const FramedCurve& fc, double s) {
    const FrameJets fj = fc.jets(s);
    return {fj.alpha.value(), fj.ell.value(),    fj.m.value(),    fj.n.value(),
            fj.alpha.deriv(1), fj.ell.deriv(1), fj.m.deriv(1), fj.n.deriv(1)};
}

ValidationReport validate(const FramedCurve& fc, int grid, double tol) {
    if (grid < 2) throw Error(ErrorCode::InvalidArgument, "validation grid must be >= 2");
    ValidationReport rep;
    rep.epsilon = fc.epsilon();
    rep.tol = tol;
    rep.ordering = fc.epsilon() == 1 ? "v1 in S^3_2, v2 in AdS^3" : "v1 in AdS^3, v2 in S^3_2";
    const double eps = static_cast<double>(fc.epsilon());

    rep.items = {
        {"<gamma,gamma>+1", 0, 0}, {"<v1,v1>-eps", 0, 0}, {"<v2,v2>+eps", 0, 0},
        {"<gamma,v1>", 0, 0},      {"<gamma,v2>", 0, 0},  {"<v1,v2>", 0, 0},
        {"<gamma',v1>", 0, 0},     {"<gamma',v2>", 0, 0}, {"<mu,mu>-1", 0, 0},
    };

    const double a = fc.interval_a(), b = fc.interval_b();
    for (int k = 0; k < grid; ++k) {
        const double s = a + (b - a) * static_cast<double>(k) / (grid - 1);
        const FrameJets fj = fc.jets(s);
        const Vec4 g = jet_values(fj.gamma);
        const Vec4 dg = jet_derivs(fj.gamma, 1);
        const Vec4 v1 = jet_values(fj.v1);
        const Vec4 v2 = jet_values(fj.v2);
        const Vec4 mu = jet_values(fj.mu);
        const double res[9] = {
            std::fabs(pseudo_dot(g, g) + 1.0),   std::fabs(pseudo_dot(v1, v1) - eps),
            std::fabs(pseudo_dot(v2, v2) + eps), std::fabs(pseudo_dot(g, v1)),
            std::fabs(pseudo_dot(g, v2)),        std::fabs(pseudo_dot(v1, v2)),
            std::fabs(pseudo_dot(dg, v1)),       std::fabs(pseudo_dot(dg, v2)),
            std::fabs(pseudo_dot(mu, mu) - 1.0),
        };
        for (int i = 0; i < 9; ++i)
            if (res[i] > rep.items[i].max_residual) {
                rep.items[i].max_residual = res[i];
                rep.items[i].worst_s = s;
            }
        if ((pseudo_dot(v1, v1) >= 0.0 ? 1 : -1) != fc.epsilon()) rep.epsilon_constant = false;
    }

    rep.pass = rep.epsilon_constant;
    for (const auto& item : rep.items)
        if (item.max_residual > tol) rep.pass = false;
    return rep;
}

}  // namespace nullfront

#include "nullfront/nullfront.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "core/distance.hpp"
#include "core/errors.hpp"
#include "core/frame_ode.hpp"
#include "core/selftest.hpp"
#include "core/serialize.hpp"

using namespace nullfront;

struct nf_curve {
    std::shared_ptr<FramedCurve> fc;
};

namespace {

thread_local std::string g_last_error;

nf_status map_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::Syntax: return NF_ERR_SYNTAX;
        case ErrorCode::UnknownIdentifier: return NF_ERR_UNKNOWN_IDENTIFIER;
        case ErrorCode::UnknownCatalogEntry: return NF_ERR_UNKNOWN_CATALOG_ENTRY;
        case ErrorCode::Domain: return NF_ERR_DOMAIN;
        case ErrorCode::DenominatorNearZero: return NF_ERR_DENOMINATOR_NEAR_ZERO;
        case ErrorCode::NotOnAdS3: return NF_ERR_NOT_ON_ADS3;
        case ErrorCode::NotUnitSpeed: return NF_ERR_NOT_UNIT_SPEED;
        case ErrorCode::InvalidInitialFrame: return NF_ERR_INVALID_INITIAL_FRAME;
        case ErrorCode::StepTooLarge: return NF_ERR_STEP_TOO_LARGE;
        case ErrorCode::SingularFrameMatrix: return NF_ERR_SINGULAR_FRAME_MATRIX;
        case ErrorCode::InsufficientSamples: return NF_ERR_INSUFFICIENT_SAMPLES;
        case ErrorCode::InvalidArgument: return NF_ERR_INVALID_ARGUMENT;
        case ErrorCode::BadInput: return NF_ERR_BAD_INPUT;
        case ErrorCode::Io: return NF_ERR_IO;
    }
    return NF_ERR_INTERNAL;
}

template <typename F>
nf_status guarded(F&& body) {
    try {
        body();
        return NF_OK;
    } catch (const Error& ex) {
        g_last_error = ex.what();
        return map_code(ex.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return NF_ERR_INTERNAL;
    } catch (const std::exception& ex) {
        g_last_error = ex.what();
        return NF_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return NF_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

nf_status require(bool cond, const char* message) {
    if (cond) return NF_OK;
    g_last_error = message;
    return NF_ERR_INVALID_ARGUMENT;
}

FrontSheet to_sheet(nf_sheet sh) {
    return sh == NF_SHEET_MINUS ? FrontSheet::Minus : FrontSheet::Plus;
}

Vec4 to_vec(const double v[4]) { return {{v[0], v[1], v[2], v[3]}}; }

void store_vec(double out[4], const Vec4& v) {
    for (int i = 0; i < 4; ++i) out[i] = v[i];
}

void store_point(nf_singular_point& out, const SingularPointReport& rep) {
    out.s0 = rep.s0;
    out.lambda0 = rep.lambda0;
    out.classification = rep.cls == Classification::CuspidalEdge ? NF_CLASS_CUSPIDAL_EDGE
                         : rep.cls == Classification::Swallowtail ? NF_CLASS_SWALLOWTAIL
                                                                  : NF_CLASS_HIGHER_DEGENERATE;
    out.alpha = rep.alpha;
    out.dalpha = rep.dalpha;
    out.ddalpha = rep.ddalpha;
    out.sigma = rep.sigma;
    out.dsigma = rep.dsigma;
    out.sheet = rep.sheet == FrontSheet::Plus ? NF_SHEET_PLUS : NF_SHEET_MINUS;
    out.alpha_root = rep.alpha_root ? 1 : 0;
    out.sigma_root = rep.sigma_root ? 1 : 0;
}

FrameState state_from_array(const double init[17]) {
    FrameState st;
    st.s = init[0];
    for (int i = 0; i < 4; ++i) {
        st.gamma[i] = init[1 + i];
        st.v1[i] = init[5 + i];
        st.v2[i] = init[9 + i];
        st.mu[i] = init[13 + i];
    }
    return st;
}

}  // namespace

extern "C" {

const char* nf_version(void) { return "1.0.0"; }

const char* nf_status_name(nf_status status) {
    switch (status) {
        case NF_OK: return "ok";
        case NF_ERR_SYNTAX: return "syntax_error";
        case NF_ERR_UNKNOWN_IDENTIFIER: return "unknown_identifier";
        case NF_ERR_UNKNOWN_CATALOG_ENTRY: return "unknown_catalog_entry";
        case NF_ERR_DOMAIN: return "domain_error";
        case NF_ERR_DENOMINATOR_NEAR_ZERO: return "denominator_near_zero";
        case NF_ERR_NOT_ON_ADS3: return "not_on_ads3";
        case NF_ERR_NOT_UNIT_SPEED: return "not_unit_speed";
        case NF_ERR_INVALID_INITIAL_FRAME: return "invalid_initial_frame";
        case NF_ERR_STEP_TOO_LARGE: return "step_too_large";
        case NF_ERR_SINGULAR_FRAME_MATRIX: return "singular_frame_matrix";
        case NF_ERR_INSUFFICIENT_SAMPLES: return "insufficient_samples";
        case NF_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case NF_ERR_BAD_INPUT: return "bad_input";
        case NF_ERR_IO: return "io_error";
        case NF_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* nf_last_error(void) { return g_last_error.c_str(); }

void nf_string_free(char* text) { delete[] text; }

void nf_points_free(nf_singular_point* points) { delete[] points; }

nf_status nf_eval_constant(const char* text, double* out_value) {
    if (nf_status st = require(text && out_value, "null argument")) return st;
    return guarded([&] {
        const Expr e = Expr::parse(text);
        if (e.depends_on_var())
            throw Error(ErrorCode::InvalidArgument,
                        "expected a constant expression, got one depending on s");
        *out_value = e.eval(0.0);
    });
}

nf_status nf_curve_from_catalog(const char* name, nf_curve** out) {
    if (nf_status st = require(name && out, "null argument")) return st;
    return guarded([&] { *out = new nf_curve{FramedCurve::from_catalog(name)}; });
}

nf_status nf_curve_from_spec_json(const char* json_text, nf_curve** out) {
    if (nf_status st = require(json_text && out, "null argument")) return st;
    return guarded([&] { *out = new nf_curve{FramedCurve::from_spec_json(json_text)}; });
}

nf_status nf_curve_from_samples_csv(const char* csv_text, nf_curve** out) {
    if (nf_status st = require(csv_text && out, "null argument")) return st;
    return guarded([&] { *out = new nf_curve{FramedCurve::from_samples_csv(csv_text)}; });
}

void nf_curve_free(nf_curve* curve) { delete curve; }

nf_status nf_curve_interval(const nf_curve* curve, double* a, double* b) {
    if (nf_status st = require(curve && a && b, "null argument")) return st;
    *a = curve->fc->interval_a();
    *b = curve->fc->interval_b();
    return NF_OK;
}

nf_status nf_curve_epsilon(const nf_curve* curve, int* epsilon) {
    if (nf_status st = require(curve && epsilon, "null argument")) return st;
    *epsilon = curve->fc->epsilon();
    return NF_OK;
}

const char* nf_curve_name(const nf_curve* curve) {
    return curve ? curve->fc->name().c_str() : "";
}

nf_status nf_curve_eval(const nf_curve* curve, double s, double gamma[4], double v1[4],
                        double v2[4], double mu[4]) {
    if (nf_status st = require(curve != nullptr, "null curve")) return st;
    return guarded([&] {
        const FrameJets fj = curve->fc->jets(s);
        if (gamma) store_vec(gamma, jet_values(fj.gamma));
        if (v1) store_vec(v1, jet_values(fj.v1));
        if (v2) store_vec(v2, jet_values(fj.v2));
        if (mu) store_vec(mu, jet_values(fj.mu));
    });
}

nf_status nf_curvature(const nf_curve* curve, double s, double out[8]) {
    if (nf_status st = require(curve && out, "null argument")) return st;
    return guarded([&] {
        const CurvatureValues c = curvature_at(*curve->fc, s);
        const double vals[8] = {c.alpha, c.ell, c.m, c.n, c.dalpha, c.dell, c.dm, c.dn};
        std::memcpy(out, vals, sizeof vals);
    });
}

nf_status nf_front_point(const nf_curve* curve, double s, double lam, nf_sheet sheet,
                         double out[4]) {
    if (nf_status st = require(curve && out, "null argument")) return st;
    return guarded([&] { store_vec(out, front_point(*curve->fc, s, lam, to_sheet(sheet))); });
}

nf_status nf_area_density(const nf_curve* curve, double s, double lam, nf_sheet sheet,
                          double* out) {
    if (nf_status st = require(curve && out, "null argument")) return st;
    return guarded([&] { *out = area_density(*curve->fc, s, lam, to_sheet(sheet)); });
}

nf_status nf_singular_lambda(const nf_curve* curve, double s, nf_sheet sheet, double tol_denom,
                             double* out) {
    if (nf_status st = require(curve && out, "null argument")) return st;
    return guarded([&] { *out = singular_lambda(*curve->fc, s, to_sheet(sheet), tol_denom); });
}

nf_status nf_sigma(const nf_curve* curve, double s, nf_sheet sheet, double* sigma,
                   double* dsigma) {
    if (nf_status st = require(curve && sigma && dsigma, "null argument")) return st;
    return guarded([&] {
        const SigmaValues sv = sigma_at(*curve->fc, s, to_sheet(sheet));
        *sigma = sv.sigma;
        *dsigma = sv.dsigma;
    });
}

nf_status nf_transversality_det(const nf_curve* curve, double s, nf_sheet sheet,
                                double tol_denom, double* out) {
    if (nf_status st = require(curve && out, "null argument")) return st;
    return guarded(
        [&] { *out = transversality_det(*curve->fc, s, to_sheet(sheet), tol_denom); });
}

nf_status nf_classify_at(const nf_curve* curve, double s0, nf_sheet sheet, double tol,
                         double tol_denom, nf_singular_point* out) {
    if (nf_status st = require(curve && out, "null argument")) return st;
    return guarded([&] {
        store_point(*out, classify_at(*curve->fc, s0, to_sheet(sheet), tol, tol_denom));
    });
}

nf_status nf_find_singularities(const nf_curve* curve, nf_sheet sheet, double a, double b,
                                int grid, double tol, double tol_denom,
                                nf_singular_point** out_points, size_t* out_count) {
    if (nf_status st = require(curve && out_points && out_count, "null argument")) return st;
    return guarded([&] {
        const ScanResult scan =
            find_singularities(*curve->fc, to_sheet(sheet), a, b, grid, tol, tol_denom);
        auto* arr = new nf_singular_point[scan.points.size()];
        for (std::size_t i = 0; i < scan.points.size(); ++i) store_point(arr[i], scan.points[i]);
        *out_points = arr;
        *out_count = scan.points.size();
    });
}

nf_status nf_distance_jets(const nf_curve* curve, double s0, const double v0[4], double tol,
                           int relative_tol, double out_d[5], int* out_levels) {
    if (nf_status st = require(curve && v0 && out_d && out_levels, "null argument")) return st;
    return guarded([&] {
        const DistanceEvaluation ev =
            dist_sq_jets(*curve->fc, s0, to_vec(v0), tol, relative_tol != 0);
        for (int i = 0; i < 5; ++i) out_d[i] = ev.d[i];
        *out_levels = ev.levels;
    });
}

nf_status nf_locus_point(const nf_curve* curve, double s0, nf_sheet sheet, double tol_denom,
                         double out[4]) {
    if (nf_status st = require(curve && out, "null argument")) return st;
    return guarded(
        [&] { store_vec(out, locus_point(*curve->fc, s0, to_sheet(sheet), tol_denom)); });
}

nf_status nf_frame_state_at(const nf_curve* curve, double s, double out[17]) {
    if (nf_status st = require(curve && out, "null argument")) return st;
    return guarded([&] {
        const FrameJets fj = curve->fc->jets(s);
        out[0] = s;
        store_vec(out + 1, jet_values(fj.gamma));
        store_vec(out + 5, jet_values(fj.v1));
        store_vec(out + 9, jet_values(fj.v2));
        store_vec(out + 13, jet_values(fj.mu));
    });
}

nf_status nf_verify_json(const nf_curve* curve, int grid, double tol, char** out_json,
                         int* out_pass) {
    if (nf_status st = require(curve && out_json && out_pass, "null argument")) return st;
    return guarded([&] {
        const ValidationReport rep = validate(*curve->fc, grid, tol);
        *out_json = dup_string(validation_report_json(rep, curve->fc->name()));
        *out_pass = rep.pass ? 1 : 0;
    });
}

nf_status nf_curvature_table_csv(const nf_curve* curve, double a, double b, int rows,
                                 char** out_csv) {
    if (nf_status st = require(curve && out_csv, "null argument")) return st;
    return guarded([&] { *out_csv = dup_string(curvature_table_csv(*curve->fc, a, b, rows)); });
}

nf_status nf_frenet_table_csv(const nf_curve* curve, double a, double b, int rows, double tol,
                              char** out_csv) {
    if (nf_status st = require(curve && out_csv, "null argument")) return st;
    return guarded([&] { *out_csv = dup_string(frenet_table_csv(*curve->fc, a, b, rows, tol)); });
}

nf_status nf_singular_report_json(const nf_curve* curve, nf_sheet sheet, double a, double b,
                                  int grid, double tol, double tol_denom, char** out_json) {
    if (nf_status st = require(curve && out_json, "null argument")) return st;
    return guarded([&] {
        const ScanResult scan =
            find_singularities(*curve->fc, to_sheet(sheet), a, b, grid, tol, tol_denom);
        *out_json = dup_string(scan_report_json(scan, curve->fc->name()));
    });
}

nf_status nf_front_mesh(const nf_curve* curve, nf_sheet sheet, double s0, double s1, double l0,
                        double l1, int ns, int nl, const double* projection,
                        nf_mesh_format format, double tol, double tol_denom, char** out_text) {
    if (nf_status st = require(curve && out_text, "null argument")) return st;
    return guarded([&] {
        Projection proj = Projection::drop_u1();
        if (projection) {
            std::array<std::array<double, 4>, 3> m{};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 4; ++j) m[i][j] = projection[i * 4 + j];
            proj = Projection::from_matrix(m);
        }
        const FrontMesh mesh = sample_mesh(*curve->fc, to_sheet(sheet), s0, s1, l0, l1, ns, nl,
                                           proj, tol, tol_denom);
        *out_text = dup_string(format == NF_MESH_CSV ? mesh_csv(mesh) : mesh_obj(mesh));
    });
}

nf_status nf_integrate_csv(const char* quad_json, const double init[17], double s_end,
                           double step, int reorthonormalize, char** out_csv) {
    if (nf_status st = require(quad_json && init && out_csv, "null argument")) return st;
    return guarded([&] {
        const CurvatureQuad quad = CurvatureQuad::from_json(quad_json);
        IntegrationOptions opt;
        opt.step = step;
        opt.reorthonormalize = reorthonormalize != 0;
        const auto states =
            integrate_frame(quad, state_from_array(init), quad.epsilon(), s_end, opt);
        *out_csv = dup_string(frame_states_csv(states));
    });
}

nf_status nf_congruence_json(const nf_curve* curve1, const nf_curve* curve2, double s0,
                             char** out_json) {
    if (nf_status st = require(curve1 && curve2 && out_json, "null argument")) return st;
    return guarded([&] {
        const CongruenceResult res = align_congruence(*curve1->fc, *curve2->fc, s0);
        *out_json = dup_string(congruence_report_json(res, s0));
    });
}

nf_status nf_distance_report_json(const nf_curve* curve, double s0, const double v0[4],
                                  double tol, double tol_denom, int relative_tol,
                                  char** out_json) {
    if (nf_status st = require(curve && v0 && out_json, "null argument")) return st;
    return guarded([&] {
        const ConditionReport rep =
            check_conditions(*curve->fc, s0, to_vec(v0), tol, tol_denom, relative_tol != 0);
        *out_json = dup_string(condition_report_json(rep));
    });
}

nf_status nf_catalog_list(int as_json, char** out_text) {
    if (nf_status st = require(out_text != nullptr, "null argument")) return st;
    return guarded(
        [&] { *out_text = dup_string(as_json ? catalog_list_json() : catalog_list_text()); });
}

nf_status nf_selftest(const char* cli_path, char** out_report, int* out_pass) {
    if (nf_status st = require(out_report && out_pass, "null argument")) return st;
    return guarded([&] {
        const auto results = run_selftest(cli_path ? cli_path : "");
        std::string text;
        bool all = true;
        for (const auto& r : results) {
            text += (r.pass ? "[PASS] " : "[FAIL] ") + r.name + "\n        " + r.detail + "\n";
            all = all && r.pass;
        }
        *out_report = dup_string(text);
        *out_pass = all ? 1 : 0;
    });
}

}  // extern "C"

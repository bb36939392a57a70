#include "serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace nullfront {

using ordered_json = nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

namespace {

ordered_json vec_json(const Vec4& v) { return ordered_json::array({v[0], v[1], v[2], v[3]}); }

ordered_json point_json(const SingularPointReport& rep) {
    ordered_json j;
    j["s0"] = rep.s0;
    j["lambda0"] = rep.lambda0;
    j["class"] = classification_name(rep.cls);
    j["alpha"] = rep.alpha;
    j["dalpha"] = rep.dalpha;
    j["ddalpha"] = rep.ddalpha;
    j["sigma"] = rep.sigma;
    j["dsigma"] = rep.dsigma;
    j["sheet"] = sheet_name(rep.sheet);
    j["alpha_root"] = rep.alpha_root;
    j["sigma_root"] = rep.sigma_root;
    return j;
}

}  // namespace

std::string validation_report_json(const ValidationReport& rep, const std::string& curve_name) {
    ordered_json j;
    j["curve"] = curve_name;
    j["pass"] = rep.pass;
    j["epsilon"] = rep.epsilon;
    j["ordering"] = rep.ordering;
    j["tol"] = rep.tol;
    j["epsilon_constant"] = rep.epsilon_constant;
    ordered_json items = ordered_json::array();
    for (const auto& it : rep.items) {
        ordered_json e;
        e["invariant"] = it.name;
        e["max_residual"] = it.max_residual;
        e["worst_s"] = it.worst_s;
        items.push_back(e);
    }
    j["residuals"] = items;
    return j.dump(2) + "\n";
}

std::string scan_report_json(const ScanResult& scan, const std::string& curve_name) {
    ordered_json j;
    j["curve"] = curve_name;
    ordered_json pts = ordered_json::array();
    for (const auto& rep : scan.points) pts.push_back(point_json(rep));
    j["points"] = pts;
    j["notes"] = scan.notes;
    return j.dump(2) + "\n";
}

std::string condition_report_json(const ConditionReport& rep) {
    ordered_json j;
    j["s0"] = rep.eval.s0;
    j["v0"] = vec_json(rep.eval.v0);
    j["d"] = ordered_json::array({rep.eval.d[0], rep.eval.d[1], rep.eval.d[2], rep.eval.d[3],
                                  rep.eval.d[4]});
    j["levels"] = rep.eval.levels;
    j["tol"] = rep.eval.tol;
    ordered_json dec;
    dec["g"] = rep.g;
    dec["a"] = rep.a;
    dec["b"] = rep.b;
    dec["c"] = rep.c;
    dec["constraint_residual"] = rep.constraint_residual;
    j["decomposition"] = dec;
    j["derivatives_vanish"] =
        ordered_json::array({rep.derivatives_vanish[0], rep.derivatives_vanish[1],
                             rep.derivatives_vanish[2], rep.derivatives_vanish[3],
                             rep.derivatives_vanish[4]});
    // "alternatives" lists the satisfied geometric alternatives by label;
    // the full residual table follows under "alternative_details".
    ordered_json satisfied = ordered_json::array();
    ordered_json details = ordered_json::array();
    for (const auto& alt : rep.alternatives) {
        if (alt.satisfied) satisfied.push_back(alt.label);
        ordered_json e;
        e["level"] = alt.level;
        e["label"] = alt.label;
        e["satisfied"] = alt.satisfied;
        e["residual"] = std::isfinite(alt.residual) ? ordered_json(alt.residual)
                                                    : ordered_json("undefined");
        details.push_back(e);
    }
    j["alternatives"] = satisfied;
    j["alternative_details"] = details;
    return j.dump(2) + "\n";
}

std::string congruence_report_json(const CongruenceResult& res, double s0) {
    ordered_json j;
    j["s0"] = s0;
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < 4; ++i)
        rows.push_back(ordered_json::array(
            {res.matrix[i][0], res.matrix[i][1], res.matrix[i][2], res.matrix[i][3]}));
    j["matrix"] = rows;
    j["residual"] = res.residual;
    j["isometry_residual"] = res.isometry_residual;
    return j.dump(2) + "\n";
}

std::string catalog_list_json() {
    ordered_json arr = ordered_json::array();
    for (const std::string& name : catalog_names()) {
        const CatalogEntry e = catalog(name);
        ordered_json j;
        j["name"] = e.name;
        j["interval"] = ordered_json::array({e.a, e.b});
        if (!e.remark.empty()) j["remark"] = e.remark;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string catalog_list_text() {
    std::string out;
    for (const std::string& name : catalog_names()) {
        const CatalogEntry e = catalog(name);
        out += name + "  [" + fmt17(e.a) + ", " + fmt17(e.b) + "]\n";
    }
    return out;
}

std::string curvature_table_csv(const FramedCurve& fc, double a, double b, int n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "table needs at least 2 rows");
    std::string out = "s,alpha,ell,m,n,dalpha,dell,dm,dn\n";
    for (int k = 0; k < n; ++k) {
        const double s = a + (b - a) * static_cast<double>(k) / (n - 1);
        const CurvatureValues c = curvature_at(fc, s);
        out += fmt17(s);
        for (double v : {c.alpha, c.ell, c.m, c.n, c.dalpha, c.dell, c.dm, c.dn})
            out += "," + fmt17(v);
        out += "\n";
    }
    return out;
}

std::string frenet_table_csv(const FramedCurve& fc, double a, double b, int n, double tol) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "table needs at least 2 rows");
    std::string out =
        "s,T1,T2,T3,T4,N11,N12,N13,N14,kappa_g,delta,n11,n12,n13,n14,n21,n22,n23,n24,tau_g,"
        "geodesic,degenerate\n";
    for (int k = 0; k < n; ++k) {
        const double s = a + (b - a) * static_cast<double>(k) / (n - 1);
        const FrenetData fd = frenet_from_jets(fc.gamma_jets(s), tol);
        out += fmt17(s);
        for (int i = 0; i < 4; ++i) out += "," + fmt17(fd.T[i]);
        for (int i = 0; i < 4; ++i) out += "," + fmt17(fd.N1[i]);
        out += "," + fmt17(fd.kappa_g);
        if (fd.has_normals) {
            out += "," + std::to_string(fd.delta);
            for (int i = 0; i < 4; ++i) out += "," + fmt17(fd.n1[i]);
            for (int i = 0; i < 4; ++i) out += "," + fmt17(fd.n2[i]);
            out += "," + fmt17(fd.tau_g);
        } else {
            out += ",,,,,,,,,,";  // delta, n1, n2, tau_g undefined
        }
        out += fd.geodesic ? ",1" : ",0";
        out += fd.degenerate ? ",1\n" : ",0\n";
    }
    return out;
}

std::string frame_states_csv(const std::vector<FrameState>& states) {
    std::string out = "s,g1,g2,g3,g4,v11,v12,v13,v14,v21,v22,v23,v24,mu1,mu2,mu3,mu4\n";
    for (const FrameState& st : states) {
        out += fmt17(st.s);
        for (const Vec4* v : {&st.gamma, &st.v1, &st.v2, &st.mu})
            for (int i = 0; i < 4; ++i) out += "," + fmt17((*v)[i]);
        out += "\n";
    }
    return out;
}

std::vector<FrameState> frame_states_from_csv(const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    if (!std::getline(ss, line)) throw Error(ErrorCode::BadInput, "empty states CSV");
    std::vector<FrameState> out;
    std::size_t lineno = 1;
    while (std::getline(ss, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(row, cell, ',')) {
            try {
                vals.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw Error(ErrorCode::BadInput,
                            "bad cell on line " + std::to_string(lineno) + " of states CSV");
            }
        }
        if (vals.size() != 17)
            throw Error(ErrorCode::BadInput,
                        "states CSV needs 17 columns on line " + std::to_string(lineno));
        FrameState st;
        st.s = vals[0];
        for (int i = 0; i < 4; ++i) {
            st.gamma[i] = vals[1 + i];
            st.v1[i] = vals[5 + i];
            st.v2[i] = vals[9 + i];
            st.mu[i] = vals[13 + i];
        }
        out.push_back(st);
    }
    return out;
}

std::string mesh_obj(const FrontMesh& mesh) {
    std::string out;
    out += "# nullcone front mesh: curve=" + mesh.curve_name + " sheet=" +
           sheet_name(mesh.sheet) + "\n";
    out += "# s in [" + fmt17(mesh.s0) + ", " + fmt17(mesh.s1) + "], lambda in [" +
           fmt17(mesh.l0) + ", " + fmt17(mesh.l1) + "]\n";
    for (const std::string& n : mesh.notes) out += "# note: " + n + "\n";
    out += "o front\n";
    for (const auto& p : mesh.projected)
        out += "v " + fmt17(p[0]) + " " + fmt17(p[1]) + " " + fmt17(p[2]) + "\n";
    for (int i = 0; i + 1 < mesh.ns; ++i)
        for (int j = 0; j + 1 < mesh.nl; ++j) {
            const int a = i * mesh.nl + j + 1;  // OBJ indices are 1-based
            const int b = a + mesh.nl;
            out += "f " + std::to_string(a) + " " + std::to_string(b) + " " +
                   std::to_string(b + 1) + " " + std::to_string(a + 1) + "\n";
        }
    int next_index = mesh.ns * mesh.nl + 1;
    if (!mesh.locus_segments.empty()) {
        out += "o singular_locus\n";
        for (const auto& seg : mesh.locus_segments) {
            std::string l = "l";
            for (const MarkedPoint& mp : seg) {
                out += "v " + fmt17(mp.projected[0]) + " " + fmt17(mp.projected[1]) + " " +
                       fmt17(mp.projected[2]) + "\n";
                l += " " + std::to_string(next_index++);
            }
            out += l + "\n";
        }
    }
    if (!mesh.distinguished.empty()) {
        out += "o distinguished_points\n";
        for (const MarkedPoint& mp : mesh.distinguished) {
            out += "# " + std::string(classification_name(mp.cls)) + " at s=" + fmt17(mp.s) +
                   " lambda=" + fmt17(mp.lambda) + "\n";
            out += "v " + fmt17(mp.projected[0]) + " " + fmt17(mp.projected[1]) + " " +
                   fmt17(mp.projected[2]) + "\n";
            out += "p " + std::to_string(next_index++) + "\n";
        }
    }
    return out;
}

std::string mesh_csv(const FrontMesh& mesh) {
    std::string out = "s,lambda,x1,x2,x3,x4,p1,p2,p3,omega\n";
    for (int i = 0; i < mesh.ns; ++i) {
        const double s = mesh.ns == 1
                             ? mesh.s0
                             : mesh.s0 + (mesh.s1 - mesh.s0) * static_cast<double>(i) / (mesh.ns - 1);
        for (int j = 0; j < mesh.nl; ++j) {
            const double lam = mesh.nl == 1 ? mesh.l0
                                            : mesh.l0 + (mesh.l1 - mesh.l0) *
                                                            static_cast<double>(j) / (mesh.nl - 1);
            const std::size_t at = static_cast<std::size_t>(i) * mesh.nl + j;
            out += fmt17(s) + "," + fmt17(lam);
            for (int k = 0; k < 4; ++k) out += "," + fmt17(mesh.ambient[at][k]);
            for (int k = 0; k < 3; ++k) out += "," + fmt17(mesh.projected[at][k]);
            out += "," + fmt17(mesh.omega[at]) + "\n";
        }
    }
    return out;
}

}  // namespace nullfront

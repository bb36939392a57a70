// nullfront command-line toolkit.  Everything goes through the shared
// library's C interface; this file only parses flags, moves bytes and maps
// statuses to exit codes (0 ok, 1 validation failure, 2 usage error, 3
// numeric error).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nullfront/nullfront.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

int exit_code_for(nf_status st) {
    switch (st) {
        case NF_OK:
            return kExitOk;
        case NF_ERR_DOMAIN:
        case NF_ERR_DENOMINATOR_NEAR_ZERO:
        case NF_ERR_NOT_ON_ADS3:
        case NF_ERR_NOT_UNIT_SPEED:
        case NF_ERR_INVALID_INITIAL_FRAME:
        case NF_ERR_STEP_TOO_LARGE:
        case NF_ERR_SINGULAR_FRAME_MATRIX:
            return kExitNumeric;
        default:
            return kExitUsage;
    }
}

[[noreturn]] void fail(nf_status st) {
    std::cerr << "nullfront: " << nf_status_name(st) << ": " << nf_last_error() << "\n";
    std::exit(exit_code_for(st));
}

void check(nf_status st) {
    if (st != NF_OK) fail(st);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "nullfront: cannot read '" << path << "'\n";
        std::exit(kExitUsage);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Declared outputs appear only on success: write a sibling temp file and
// rename it over the target.
void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    const std::string tmp = out_path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            std::cerr << "nullfront: cannot write '" << tmp << "'\n";
            std::exit(kExitUsage);
        }
        out << text;
        if (!out) {
            std::cerr << "nullfront: short write to '" << tmp << "'\n";
            std::exit(kExitUsage);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, out_path, ec);
    if (ec) {
        std::cerr << "nullfront: cannot move output into place: " << ec.message() << "\n";
        std::exit(kExitUsage);
    }
}

double parse_value(const std::string& text) {
    double v = 0.0;
    check(nf_eval_constant(text.c_str(), &v));
    return v;
}

struct CurveFlags {
    std::string catalog_name, spec_path, samples_path;

    void attach(CLI::App* cmd, const char* suffix = "") {
        auto* a = cmd->add_option(std::string("--curve") + suffix, catalog_name,
                                  "catalog curve name");
        auto* b = cmd->add_option(std::string("--spec") + suffix, spec_path,
                                  "framed-curve spec JSON file");
        auto* c = cmd->add_option(std::string("--samples") + suffix, samples_path,
                                  "sampled-curve CSV file");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    }

    bool given() const {
        return !catalog_name.empty() || !spec_path.empty() || !samples_path.empty();
    }

    nf_curve* open() const {
        nf_curve* curve = nullptr;
        if (!catalog_name.empty()) {
            check(nf_curve_from_catalog(catalog_name.c_str(), &curve));
        } else if (!spec_path.empty()) {
            check(nf_curve_from_spec_json(read_file(spec_path).c_str(), &curve));
        } else if (!samples_path.empty()) {
            check(nf_curve_from_samples_csv(read_file(samples_path).c_str(), &curve));
        } else {
            std::cerr << "nullfront: give one of --curve, --spec, --samples\n";
            std::exit(kExitUsage);
        }
        return curve;
    }
};

struct RangeFlag {
    std::vector<std::string> raw;
    void attach(CLI::App* cmd, const char* name, const char* help) {
        cmd->add_option(name, raw, help)->expected(2);
    }
    bool given() const { return raw.size() == 2; }
    std::pair<double, double> values() const { return {parse_value(raw[0]), parse_value(raw[1])}; }
};

std::pair<double, double> range_or_interval(const RangeFlag& range, nf_curve* curve) {
    if (range.given()) return range.values();
    double a = 0, b = 0;
    check(nf_curve_interval(curve, &a, &b));
    return {a, b};
}

nf_sheet sheet_of(const std::string& name) {
    return name == "minus" ? NF_SHEET_MINUS : NF_SHEET_PLUS;
}

struct Owned {
    char* text = nullptr;
    ~Owned() { nf_string_free(text); }
    std::string str() const { return text ? std::string(text) : std::string(); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nullcone fronts of framed curves in the anti-de Sitter 3-space"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string sheet_name = "plus";
    std::string out_path;
    std::string format;
    double tol = 1e-8;
    double tol_denom = 1e-10;

    auto add_common = [&](CLI::App* cmd, bool with_sheet) {
        cmd->add_option("--out", out_path, "output path (default: stdout)");
        cmd->add_option("--tol", tol, "classification tolerance");
        cmd->add_option("--tol-denom", tol_denom, "tolerance on the m +- n denominator");
        if (with_sheet)
            cmd->add_option("--sheet", sheet_name, "front sheet")
                ->check(CLI::IsMember({"plus", "minus"}));
    };

    // catalog
    auto* cmd_catalog = app.add_subcommand("catalog", "list the built-in curves");
    add_common(cmd_catalog, false);
    cmd_catalog->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "check the framed-curve invariants");
    CurveFlags verify_curve;
    verify_curve.attach(cmd_verify);
    int verify_grid = 200;
    double verify_tol = 1e-7;
    cmd_verify->add_option("--grid", verify_grid, "validation grid points");
    cmd_verify->add_option("--tol", verify_tol, "residual tolerance");
    cmd_verify->add_option("--out", out_path, "output path (default: stdout)");

    // frame
    auto* cmd_frame = app.add_subcommand("frame", "curvature table (alpha, ell, m, n)");
    CurveFlags frame_curve;
    frame_curve.attach(cmd_frame);
    RangeFlag frame_range;
    frame_range.attach(cmd_frame, "--range", "parameter range A B");
    int frame_rows = 101;
    cmd_frame->add_option("--grid", frame_rows, "table rows");
    cmd_frame->add_option("--out", out_path, "output path (default: stdout)");

    // frenet
    auto* cmd_frenet = app.add_subcommand("frenet", "regular-curve table for unit-speed gamma");
    CurveFlags frenet_curve;
    frenet_curve.attach(cmd_frenet);
    RangeFlag frenet_range;
    frenet_range.attach(cmd_frenet, "--range", "parameter range A B");
    int frenet_rows = 101;
    double frenet_tol = 1e-8;
    cmd_frenet->add_option("--grid", frenet_rows, "table rows");
    cmd_frenet->add_option("--tol", frenet_tol, "degeneracy tolerance");
    cmd_frenet->add_option("--out", out_path, "output path (default: stdout)");

    // front
    auto* cmd_front = app.add_subcommand("front", "sample a nullcone front mesh");
    CurveFlags front_curve;
    front_curve.attach(cmd_front);
    RangeFlag s_range, l_range;
    s_range.attach(cmd_front, "--s-range", "parameter range A B");
    l_range.attach(cmd_front, "--l-range", "ray-parameter range A B (default -2 2)");
    std::vector<int> front_grid = {128, 32};
    std::vector<std::string> projection = {"drop1"};
    cmd_front->add_option("--grid", front_grid, "NS NL grid sizes")->expected(2);
    cmd_front->add_option("--projection", projection,
                          "drop1 | matrix FILE (3x4 row-major matrix, 12 numbers)")
        ->expected(1, 2);
    add_common(cmd_front, true);
    cmd_front->add_option("--format", format, "obj|csv")->check(CLI::IsMember({"obj", "csv"}));

    // singular
    auto* cmd_singular = app.add_subcommand("singular", "scan and classify singular points");
    CurveFlags singular_curve;
    singular_curve.attach(cmd_singular);
    RangeFlag singular_range;
    singular_range.attach(cmd_singular, "--range", "parameter range A B");
    int singular_grid = 512;
    cmd_singular->add_option("--grid", singular_grid, "scan grid");
    add_common(cmd_singular, true);

    // integrate
    auto* cmd_integrate = app.add_subcommand("integrate", "integrate a prescribed curvature");
    std::string quad_path, init_path, s0_text = "0", s_end_text;
    double step = 1e-3;
    bool no_reortho = false;
    CurveFlags integrate_curve;
    integrate_curve.attach(cmd_integrate);
    cmd_integrate->add_option("--quad", quad_path, "curvature quad JSON file")->required();
    cmd_integrate->add_option("--init", init_path,
                              "initial frame JSON {s, gamma, v1, v2, mu}; "
                              "alternatively take the frame of --curve at --s0");
    cmd_integrate->add_option("--s0", s0_text, "frame sample parameter for --curve init");
    cmd_integrate->add_option("--s-end", s_end_text, "integration end")->required();
    cmd_integrate->add_option("--step", step, "RK4 step size");
    cmd_integrate->add_flag("--no-reorthonormalize", no_reortho,
                            "skip the per-step frame projection");
    cmd_integrate->add_option("--out", out_path, "output path (default: stdout)");

    // congruence
    auto* cmd_congruence = app.add_subcommand("congruence", "align two framed curves");
    CurveFlags cong1, cong2;
    cong1.attach(cmd_congruence);
    cong2.attach(cmd_congruence, "2");
    std::string cong_s0_text;
    cmd_congruence->add_option("--s0", cong_s0_text, "alignment parameter (default: midpoint)");
    cmd_congruence->add_option("--out", out_path, "output path (default: stdout)");

    // distance
    auto* cmd_distance = app.add_subcommand("distance", "distance-squared condition report");
    CurveFlags dist_curve;
    dist_curve.attach(cmd_distance);
    std::string dist_s0_text = "0";
    std::vector<std::string> v0_text;
    double dist_tol = 1e-7;
    bool dist_tol_relative = false;
    cmd_distance->add_option("--s0", dist_s0_text, "base parameter s0");
    cmd_distance->add_option("--v0", v0_text, "reference point (4 numbers; default: locus point)")
        ->expected(4);
    cmd_distance->add_option("--tol", dist_tol, "vanishing tolerance");
    cmd_distance->add_flag("--tol-relative", dist_tol_relative,
                           "scale the vanishing tolerance by the largest |d_k|");
    cmd_distance->add_option("--sheet", sheet_name, "sheet for the default locus point")
        ->check(CLI::IsMember({"plus", "minus"}));
    cmd_distance->add_option("--tol-denom", tol_denom, "denominator tolerance");
    cmd_distance->add_option("--out", out_path, "output path (default: stdout)");

    // selftest
    auto* cmd_selftest = app.add_subcommand("selftest", "run the built-in verification battery");
    cmd_selftest->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (cmd_catalog->parsed()) {
        Owned text;
        check(nf_catalog_list(format == "json" ? 1 : 0, &text.text));
        write_output(out_path, text.str());
        return kExitOk;
    }

    if (cmd_verify->parsed()) {
        nf_curve* curve = verify_curve.open();
        Owned text;
        int pass = 0;
        check(nf_verify_json(curve, verify_grid, verify_tol, &text.text, &pass));
        nf_curve_free(curve);
        write_output(out_path, text.str());
        return pass ? kExitOk : kExitValidation;
    }

    if (cmd_frame->parsed()) {
        nf_curve* curve = frame_curve.open();
        const auto [a, b] = range_or_interval(frame_range, curve);
        Owned text;
        check(nf_curvature_table_csv(curve, a, b, frame_rows, &text.text));
        nf_curve_free(curve);
        write_output(out_path, text.str());
        return kExitOk;
    }

    if (cmd_frenet->parsed()) {
        nf_curve* curve = frenet_curve.open();
        const auto [a, b] = range_or_interval(frenet_range, curve);
        Owned text;
        check(nf_frenet_table_csv(curve, a, b, frenet_rows, frenet_tol, &text.text));
        nf_curve_free(curve);
        write_output(out_path, text.str());
        return kExitOk;
    }

    if (cmd_front->parsed()) {
        nf_curve* curve = front_curve.open();
        const auto [a, b] = range_or_interval(s_range, curve);
        double l0 = -2.0, l1 = 2.0;
        if (l_range.given()) std::tie(l0, l1) = l_range.values();
        std::vector<double> proj;
        const double* proj_ptr = nullptr;
        if (projection.size() == 2 && projection[0] == "matrix") {
            std::stringstream ss(read_file(projection[1]));
            double v;
            while (ss >> v) proj.push_back(v);
            if (proj.size() != 12) {
                std::cerr << "nullfront: projection matrix file must hold 12 numbers\n";
                return kExitUsage;
            }
            proj_ptr = proj.data();
        } else if (projection.size() != 1 || projection[0] != "drop1") {
            std::cerr << "nullfront: --projection takes 'drop1' or 'matrix FILE'\n";
            return kExitUsage;
        }
        Owned text;
        check(nf_front_mesh(curve, sheet_of(sheet_name), a, b, l0, l1, front_grid[0],
                            front_grid[1], proj_ptr,
                            format == "csv" ? NF_MESH_CSV : NF_MESH_OBJ, tol, tol_denom,
                            &text.text));
        nf_curve_free(curve);
        write_output(out_path, text.str());
        return kExitOk;
    }

    if (cmd_singular->parsed()) {
        nf_curve* curve = singular_curve.open();
        const auto [a, b] = range_or_interval(singular_range, curve);
        Owned text;
        check(nf_singular_report_json(curve, sheet_of(sheet_name), a, b, singular_grid, tol,
                                      tol_denom, &text.text));
        nf_curve_free(curve);
        write_output(out_path, text.str());
        return kExitOk;
    }

    if (cmd_integrate->parsed()) {
        double init[17] = {0};
        if (!init_path.empty()) {
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(read_file(init_path));
                init[0] = doc.at("s").get<double>();
                for (int i = 0; i < 4; ++i) {
                    init[1 + i] = doc.at("gamma").at(i).get<double>();
                    init[5 + i] = doc.at("v1").at(i).get<double>();
                    init[9 + i] = doc.at("v2").at(i).get<double>();
                    init[13 + i] = doc.at("mu").at(i).get<double>();
                }
            } catch (const nlohmann::json::exception& ex) {
                std::cerr << "nullfront: bad init file: " << ex.what() << "\n";
                return kExitUsage;
            }
        } else if (integrate_curve.given()) {
            nf_curve* curve = integrate_curve.open();
            check(nf_frame_state_at(curve, parse_value(s0_text), init));
            nf_curve_free(curve);
        } else {
            std::cerr << "nullfront: integrate needs --init or a curve source with --s0\n";
            return kExitUsage;
        }
        Owned text;
        check(nf_integrate_csv(read_file(quad_path).c_str(), init, parse_value(s_end_text), step,
                               no_reortho ? 0 : 1, &text.text));
        write_output(out_path, text.str());
        return kExitOk;
    }

    if (cmd_congruence->parsed()) {
        nf_curve* c1 = cong1.open();
        nf_curve* c2 = cong2.open();
        double s0;
        if (!cong_s0_text.empty()) {
            s0 = parse_value(cong_s0_text);
        } else {
            double a1, b1, a2, b2;
            check(nf_curve_interval(c1, &a1, &b1));
            check(nf_curve_interval(c2, &a2, &b2));
            s0 = 0.5 * (std::max(a1, a2) + std::min(b1, b2));
        }
        Owned text;
        check(nf_congruence_json(c1, c2, s0, &text.text));
        nf_curve_free(c1);
        nf_curve_free(c2);
        write_output(out_path, text.str());
        return kExitOk;
    }

    if (cmd_distance->parsed()) {
        nf_curve* curve = dist_curve.open();
        const double s0 = parse_value(dist_s0_text);
        double v0[4];
        if (v0_text.size() == 4) {
            for (int i = 0; i < 4; ++i) v0[i] = parse_value(v0_text[i]);
        } else {
            check(nf_locus_point(curve, s0, sheet_of(sheet_name), tol_denom, v0));
        }
        Owned text;
        check(nf_distance_report_json(curve, s0, v0, dist_tol, tol_denom,
                                      dist_tol_relative ? 1 : 0, &text.text));
        nf_curve_free(curve);
        write_output(out_path, text.str());
        return kExitOk;
    }

    if (cmd_selftest->parsed()) {
        Owned text;
        int pass = 0;
        check(nf_selftest(argv[0], &text.text, &pass));
        write_output(out_path, text.str());
        return pass ? kExitOk : kExitValidation;
    }

    return kExitUsage;
}

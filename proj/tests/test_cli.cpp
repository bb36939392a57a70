#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

// The binary under test; ctest exports NULLFRONT_CLI pointing at it.
std::string cli_path() {
    const char* env = std::getenv("NULLFRONT_CLI");
    REQUIRE_MESSAGE(env != nullptr, "NULLFRONT_CLI must point at the nullfront binary");
    return env;
}

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("nullfront_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    std::string file(const char* name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
    const std::string cmd = "\"" + cli_path() + "\" " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("catalog and verify exit zero") {
    CHECK(run("catalog") == 0);
    CHECK(run("verify --curve example1") == 0);
    CHECK(run("verify --curve example3 --grid 100") == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("") == 2);
    CHECK(run("nonsense") == 2);
    CHECK(run("singular") == 2);                      // no curve source
    CHECK(run("verify --curve no_such_curve") == 2);  // unknown catalog entry
    CHECK(run("front --curve example2 --grid 4") == 2);  // --grid wants two values
}

TEST_CASE("numeric errors exit 3") {
    // The benchmark curve has m = n = 0: the locus point is undefined.
    CHECK(run("distance --curve geodesic --s0 0") == 3);
    // example1's base curve is singular at s = 0: not unit speed.
    CHECK(run("frenet --curve example1 --range -1 1 --grid 11") == 3);
}

TEST_CASE("validation failures exit 1") {
    TempDir tmp;
    const std::string spec = tmp.file("broken.json");
    {
        std::ofstream out(spec);
        out << R"json({"name":"broken",
                   "gamma": ["cosh(s)", "0", "0", "sinh(s)"],
                   "v1":    ["0", "0", "1", "0.1"],
                   "v2":    ["0", "1", "0", "0"],
                   "interval": [-1, 1]})json";
    }
    CHECK(run("verify --spec " + spec) == 1);
}

TEST_CASE("singular scan writes the documented report") {
    TempDir tmp;
    const std::string out = tmp.file("report.json");
    CHECK(run("singular --curve example3 --sheet plus --range -1 1 --out " + out) == 0);
    const auto doc = nlohmann::json::parse(slurp(out));
    bool found = false;
    for (const auto& p : doc["points"])
        if (p["class"] == "swallowtail" && std::fabs(p["s0"].get<double>()) < 1e-9 &&
            std::fabs(p["lambda0"].get<double>()) < 1e-9)
            found = true;
    CHECK(found);
}

TEST_CASE("front export writes a full OBJ grid") {
    TempDir tmp;
    const std::string out = tmp.file("e2.obj");
    CHECK(run("front --curve example2 --sheet plus --s-range 0 6.2832 --l-range -2 2 "
              "--grid 128 32 --format obj --out " +
              out) == 0);
    const std::string obj = slurp(out);
    std::istringstream in(obj);
    std::string line;
    int v = 0;
    while (std::getline(in, line))
        if (line.rfind("v ", 0) == 0) ++v;
    CHECK(v >= 128 * 32);  // grid vertices plus locus polyline and markers
}

TEST_CASE("range expressions like 2*pi parse") {
    TempDir tmp;
    const std::string out = tmp.file("scan.json");
    CHECK(run("singular --curve example2 --sheet plus --range 0 2*pi --out " + out) == 0);
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["points"].size() == 9);
}

TEST_CASE("identical invocations produce byte-identical files") {
    TempDir tmp;
    const std::string out1 = tmp.file("a.json"), out2 = tmp.file("b.json");
    const std::string args = "singular --curve example2 --sheet plus --range 0 6.283185307179586";
    CHECK(run(args + " --out " + out1) == 0);
    CHECK(run(args + " --out " + out2) == 0);
    const std::string b1 = slurp(out1), b2 = slurp(out2);
    CHECK_FALSE(b1.empty());
    CHECK(b1 == b2);
}

TEST_CASE("failed jobs leave no output file behind") {
    TempDir tmp;
    const std::string out = tmp.file("never.json");
    CHECK(run("distance --curve geodesic --s0 0 --out " + out) == 3);
    CHECK_FALSE(fs::exists(out));
}

TEST_CASE("integrate reproduces the benchmark endpoint") {
    TempDir tmp;
    const std::string quad = tmp.file("quad.json");
    {
        std::ofstream q(quad);
        q << R"json({"alpha": "1", "ell": "0", "m": "0", "n": "0", "epsilon": 1})json";
    }
    const std::string out = tmp.file("states.csv");
    CHECK(run("integrate --quad " + quad +
              " --curve geodesic --s0 0 --s-end 1 --step 0.001 --out " + out) == 0);
    const std::string csv = slurp(out);
    // 1000 steps plus the initial state plus the header.
    std::istringstream in(csv);
    std::string line;
    int rows = -1;
    std::string last;
    while (std::getline(in, line)) {
        ++rows;
        if (!line.empty()) last = line;
    }
    CHECK(rows == 1001);
    double s, g1;
    std::sscanf(last.c_str(), "%lf,%lf", &s, &g1);
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g1 == doctest::Approx(std::cosh(1.0)).epsilon(1e-9));
}

TEST_CASE("congruence of a curve with itself is the identity") {
    TempDir tmp;
    const std::string out = tmp.file("cong.json");
    CHECK(run("congruence --curve example2 --curve2 example2 --s0 1 --out " + out) == 0);
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["residual"].get<double>() < 1e-12);
}

TEST_CASE("front CSV format and projection matrix files") {
    TempDir tmp;
    const std::string csv = tmp.file("front.csv");
    CHECK(run("front --curve example3 --s-range -1 1 --l-range -1 1 --grid 8 6 "
              "--format csv --out " +
              csv) == 0);
    std::istringstream in(slurp(csv));
    std::string line;
    int rows = -1;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 48);

    const std::string mat = tmp.file("proj.txt");
    {
        std::ofstream m(mat);
        m << "0 1 0 0\n0 0 1 0\n0 0 0 1\n";  // same as drop1
    }
    const std::string obj1 = tmp.file("a.obj"), obj2 = tmp.file("b.obj");
    const std::string base = "front --curve example3 --s-range -1 1 --l-range -1 1 --grid 6 4 ";
    CHECK(run(base + "--projection matrix " + mat + " --out " + obj1) == 0);
    CHECK(run(base + "--out " + obj2) == 0);
    CHECK(slurp(obj1) == slurp(obj2));
}

TEST_CASE("selftest runs the whole battery") {
    TempDir tmp;
    const std::string out = tmp.file("selftest.txt");
    const int rc = run("selftest --out " + out);
    CHECK((rc == 0 || rc == 1));  // 1 while the documented ladder checks stay red
    const std::string text = slurp(out);
    CHECK(text.find("01 example1 curvature") != std::string::npos);
    CHECK(text.find("12 determinism") != std::string::npos);
    CHECK(text.find("[PASS]") != std::string::npos);
}

TEST_CASE("sampled curves work as a CLI source") {
    TempDir tmp;
    const std::string samples = tmp.file("bench.csv");
    {
        std::ofstream out(samples);
        out << "s,g1,g2,g3,g4,v11,v12,v13,v14,v21,v22,v23,v24\n";
        for (int i = 0; i <= 60; ++i) {
            const double s = -1.5 + i * 0.05;
            char row[256];
            std::snprintf(row, sizeof row, "%.17g,%.17g,0,0,%.17g,0,0,1,0,0,1,0,0\n", s,
                          std::cosh(s), std::sinh(s));
            out << row;
        }
    }
    CHECK(run("verify --samples " + samples) == 0);
    CHECK(run("frame --samples " + samples + " --range -1 1 --grid 11") == 0);
}

TEST_CASE("frame table to stdout path") {
    TempDir tmp;
    const std::string out = tmp.file("frame.csv");
    CHECK(run("frame --curve example1 --range -1 1 --grid 21 --out " + out) == 0);
    const std::string csv = slurp(out);
    CHECK(csv.rfind("s,alpha,ell,m,n", 0) == 0);
}

// Contract tests for the qhal command-line tool.  The binary path arrives via
// the QHAL_CLI_PATH environment variable (set by the CMake test definition);
// every case shells out and inspects exit status, stdout/stderr, and files.

#include "test_support.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "qhal/model.hpp"
#include "qhal/operator_engine.hpp"
#include "qhal/fixtures.hpp"
#include "qhal/phase_function.hpp"
#include "qhal/serialize.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr interleaved
};

std::string cli_path() {
    const char* p = std::getenv("QHAL_CLI_PATH");
    REQUIRE_MESSAGE(p != nullptr, "QHAL_CLI_PATH must point at the qhal binary");
    return p;
}

RunResult run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "qhal_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("verify runs the requested suites and reports per-suite status") {
    const fs::path rep = temp_dir() / "report.json";
    const RunResult r = run_cli("verify --n 1 --N 9 --seed 42 --suite ccr --suite fourier --out " +
                                rep.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ccr") != std::string::npos);
    CHECK(r.output.find("fourier") != std::string::npos);
    CHECK(r.output.find("verify: PASS") != std::string::npos);

    const json doc = json::parse(slurp(rep));
    CHECK(doc.at("pass") == true);
    CHECK(doc.at("config").at("n") == 1);
    CHECK(doc.at("config").at("N") == 9);
    CHECK(doc.at("config").at("seed") == 42);
    CHECK(doc.at("config").at("suites") == json::array({"ccr", "fourier"}));
    REQUIRE(doc.at("reports").size() == 2);
    for (const json& rep_j : doc.at("reports")) {
        CHECK(rep_j.at("pass") == true);
        CHECK(rep_j.at("params").at("N") == 9);
        for (const json& c : rep_j.at("checks")) CHECK(c.at("pass") != json(false));
    }
}

TEST_CASE("verify rejects an even modulus with a clear diagnostic") {
    const RunResult r = run_cli("verify --N 8");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("modulus must be odd") != std::string::npos);
}

TEST_CASE("verify rejects an unknown suite and lists the valid names") {
    const RunResult r = run_cli("verify --suite bogus");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("unknown suite 'bogus'") != std::string::npos);
    CHECK(r.output.find("ccr") != std::string::npos);
    CHECK(r.output.find("hausdorff-young") != std::string::npos);
}

TEST_CASE("flags override config-file fields") {
    const fs::path dir = temp_dir();
    const fs::path cfg = dir / "cfg.json";
    std::ofstream(cfg) << R"({"n":1,"N":9,"seed":3,"suites":["ccr"]})";
    const fs::path rep = dir / "override.json";
    const RunResult r =
        run_cli("verify --config " + cfg.string() + " --N 3 --out " + rep.string());
    CHECK(r.exit_code == 0);
    const json doc = json::parse(slurp(rep));
    CHECK(doc.at("config").at("N") == 3);     // flag wins
    CHECK(doc.at("config").at("seed") == 3);  // config survives
    CHECK(doc.at("config").at("suites") == json::array({"ccr"}));
}

TEST_CASE("config file with an unknown field is rejected") {
    const fs::path cfg = temp_dir() / "bad_cfg.json";
    std::ofstream(cfg) << R"({"n":1,"modulus":9})";
    const RunResult r = run_cli("verify --config " + cfg.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("unknown field 'modulus'") != std::string::npos);
}

TEST_CASE("fixture output is byte-identical for the same kind and seed") {
    const fs::path dir = temp_dir();
    const fs::path a = dir / "fix_a.json", b = dir / "fix_b.json", c = dir / "fix_c.json";
    CHECK(run_cli("fixture --kind random_operator --seed 11 --out " + a.string()).exit_code == 0);
    CHECK(run_cli("fixture --kind random_operator --seed 11 --out " + b.string()).exit_code == 0);
    CHECK(run_cli("fixture --kind random_operator --seed 12 --out " + c.string()).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) != slurp(c));
}

TEST_CASE("fixture rejects an unknown kind and lists the valid ones") {
    const RunResult r = run_cli("fixture --kind banana");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("unknown kind 'banana'") != std::string::npos);
    CHECK(r.output.find("gaussian_state") != std::string::npos);
}

TEST_CASE("compute quantize of the flat function gives the identity operator") {
    const fs::path dir = temp_dir();
    const fs::path one = dir / "one.json", op = dir / "id.json";
    CHECK(run_cli("fixture --kind one_function --n 1 --N 5 --out " + one.string()).exit_code == 0);
    CHECK(run_cli("compute --mode quantize --in " + one.string() + " --out " + op.string())
              .exit_code == 0);
    const qhal::Operator a = qhal::operator_from_json(slurp(op));
    REQUIRE(a.p.N == 5);
    double defect = 0.0;
    for (int64_t i = 0; i < a.p.d; ++i)
        for (int64_t j = 0; j < a.p.d; ++j)
            defect = std::max(defect, std::abs(a.m(i, j) - (i == j ? 1.0 : 0.0)));
    CHECK(defect < 1e-12);
}

TEST_CASE("compute transform and symbol round-trip an operator through files") {
    const fs::path dir = temp_dir();
    const fs::path op = dir / "rt_op.json", sym = dir / "rt_sym.json", back = dir / "rt_back.json";
    CHECK(run_cli("fixture --kind random_operator --seed 4 --out " + op.string()).exit_code == 0);
    CHECK(run_cli("compute --mode symbol --in " + op.string() + " --out " + sym.string())
              .exit_code == 0);
    CHECK(run_cli("compute --mode quantize --in " + sym.string() + " --out " + back.string())
              .exit_code == 0);
    const qhal::Operator a = qhal::operator_from_json(slurp(op));
    const qhal::Operator b = qhal::operator_from_json(slurp(back));
    double defect = 0.0;
    for (int64_t i = 0; i < a.p.d; ++i)
        for (int64_t j = 0; j < a.p.d; ++j)
            defect = std::max(defect, std::abs(a.m(i, j) - b.m(i, j)));
    CHECK(defect < 1e-12);
}

TEST_CASE("compute accepts CSV input when the model params are supplied") {
    const fs::path dir = temp_dir();
    const fs::path f_json = dir / "f.json", f_csv = dir / "f.csv", out_a = dir / "ta.json",
                   out_b = dir / "tb.json";
    CHECK(run_cli("fixture --kind random_phase_function --seed 9 --out " + f_json.string())
              .exit_code == 0);
    CHECK(run_cli("fixture --kind random_phase_function --seed 9 --out " + f_csv.string())
              .exit_code == 0);
    CHECK(run_cli("compute --mode transform --in " + f_json.string() + " --out " + out_a.string())
              .exit_code == 0);
    CHECK(run_cli("compute --mode transform --in " + f_csv.string() + " --n 1 --N 9 --out " +
                  out_b.string())
              .exit_code == 0);
    CHECK(slurp(out_a) == slurp(out_b));

    // Without --n/--N the CSV is unreadable (it carries no params): error out.
    const RunResult r = run_cli("compute --mode transform --in " + f_csv.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("csv input needs") != std::string::npos);
}

TEST_CASE("compute rejects a params mismatch between config and input file") {
    const fs::path dir = temp_dir();
    const fs::path f = dir / "mismatch.json";
    CHECK(run_cli("fixture --kind gaussian_window --n 1 --N 9 --out " + f.string()).exit_code == 0);
    const RunResult r = run_cli("compute --mode transform --in " + f.string() + " --N 5");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("params mismatch") != std::string::npos);
}

TEST_CASE("compute gelfand with no input emits the all-ones grid of the unit pair") {
    const RunResult r = run_cli("compute --mode gelfand --n 1 --N 3");
    CHECK(r.exit_code == 0);
    REQUIRE(r.output.rfind("x,xi,j,re,im\n", 0) == 0);
    int rows = 0;
    size_t pos = r.output.find('\n') + 1;
    while (pos < r.output.size()) {
        const size_t next = r.output.find('\n', pos);
        const std::string line = r.output.substr(pos, next - pos);
        if (!line.empty()) {
            CHECK(line.substr(line.size() - 4) == ",1,0");  // re=1, im=0
            ++rows;
        }
        pos = next == std::string::npos ? r.output.size() : next + 1;
    }
    CHECK(rows == 2 * 3 * 3);  // both sheets of the 3x3 phase space
}

TEST_CASE("compute norms emits a JSON report with the resolved config") {
    const fs::path dir = temp_dir();
    const fs::path f = dir / "norm_in.json";
    CHECK(run_cli("fixture --kind gaussian_window --n 1 --N 9 --out " + f.string()).exit_code == 0);
    const RunResult r = run_cli("compute --mode norms --in " + f.string());
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("config").at("N") == 9);
    const double expected_l2 =
        qhal::lp_norm(qhal::gaussian_window(qhal::ModelParams::make(1, 9)), 2.0);
    CHECK(doc.at("norms").at("l2").get<double>() == doctest::Approx(expected_l2).epsilon(1e-12));
    CHECK(doc.at("norms").contains("feichtinger"));
}

TEST_CASE("compute ideal reports basis dimension and closure defect for a zero set") {
    const fs::path dir = temp_dir();
    const fs::path zs = dir / "zs.json";
    std::ofstream(zs) << "[[0,0,0],[1,2,0],[2,1,1]]";
    const RunResult r = run_cli("compute --mode ideal --zero-set " + zs.string() + " --n 1 --N 3");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("zero_set_size") == 3);
    CHECK(doc.at("basis_dimension") == 2 * 9 - 3);
    CHECK(doc.at("product_closure_defect").get<double>() < 1e-10);
}

TEST_CASE("compute rejects an unknown mode listing the valid ones") {
    const RunResult r = run_cli("compute --mode fourier");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("unknown mode 'fourier'") != std::string::npos);
    CHECK(r.output.find("transform") != std::string::npos);
}

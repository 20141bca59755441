#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "cubelsi/io.hpp"
#include "cubelsi/random_functions.hpp"
#include "cubelsi/suite.hpp"

using namespace cubelsi;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int exit = -1;
    std::string out;
};

// Runs the CLI with args, or `args` verbatim as a shell command when raw.
Run run(const std::string& args, bool raw = false) {
    const std::string cmd = (raw ? args : std::string(CUBELSI_CLI_PATH) + " " + args) + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("cubelsi_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("verify on random functions: Poincare ratio stays below 1") {
    const auto r = run("verify --ineq poincare-lp --p 2 --n 6 --random 1000 --seed 7 --no-timestamp");
    REQUIRE(r.exit == 0);
    const auto j = json::parse(r.out);
    CHECK(j["header"]["tool"] == "cubelsi");
    CHECK(j["header"]["version"] == kVersion);
    CHECK(j["header"]["command"] == "verify");
    CHECK(j["header"]["seed"] == 7);
    CHECK(!j["header"].contains("timestamp"));
    CHECK(j["header"]["params"]["random"] == 1000);
    CHECK(j["result"]["count"] == 1000);
    // A level-1 witness attains the spectral gap up to rounding.
    CHECK(j["result"]["max_ratio"].get<double>() <= 1 + 1e-12);
}

TEST_CASE("quotient output equals the library call") {
    const auto r = run("quotient --relation diag --n 4 --p 1 --alpha 0.5 --type-const 1 --no-timestamp");
    REQUIRE(r.exit == 0);
    const auto j = json::parse(r.out)["result"];
    const auto b = distortion_lower_bound(diagonal_relation(4), 1, 0.5, 1);
    CHECK(j["numerator"].get<double>() == b.numerator);
    CHECK(j["denominator"].get<double>() == b.denominator);
    CHECK(j["bound_without_c"].get<double>() == b.bound_without_c);
    CHECK(j["degenerate"] == false);
}

TEST_CASE("function-file commands are thin wrappers") {
    TempDir dir;
    Rng rng(3);
    const auto f = random_gaussian_function(5, 2, rng);
    write_cube_function(dir / "f.json", f, Encoding::Binary);
    const std::string file = "--function " + dir / "f.json" + " --no-timestamp";

    auto j = json::parse(run("norm " + file + " --p 3 --alpha 1.5 --q inf").out)["result"];
    CHECK(j["lp"].get<double>() == lp_norm(f, 3, TargetNorm::sup()));
    CHECK(j["orlicz"].get<double>() == orlicz_norm(f, OrliczGauge(3, 1.5), TargetNorm::sup()));

    j = json::parse(run("gradient " + file + " --p 1.5 --q 1").out)["result"];
    CHECK(j["G_p"].get<double>() == rademacher_gradient(f, 1.5, TargetNorm(1)).value);

    j = json::parse(run("verify --ineq main-lsi " + file).out)["result"];
    const auto rep = evaluate(InequalityId::MainLSI, f, TargetNorm(2));
    CHECK(j["worst"]["lhs"].get<double>() == rep.lhs);
    CHECK(j["worst"]["rhs_unit"].get<double>() == rep.rhs_unit);
    CHECK(j["worst"]["ratio"].get<double>() == rep.ratio);

    j = json::parse(run("semigroup --riesz --t 0.5 --n 6 --seed 2").out)["result"];
    const auto rb = riesz_p2_bound(0.5, 6, 2);
    CHECK(j["closed_form"].get<double>() == rb.closed_form);
    CHECK(j["power_iteration"].get<double>() == rb.power_iteration);

    const auto sg = run("semigroup " + file + " --t 0.3 --write " + dir / "pt.json");
    REQUIRE(sg.exit == 0);
    CHECK(read_cube_function(dir / "pt.json").values() == heat_semigroup(f, 0.3).values());
}

TEST_CASE("extremize writes its witness separately") {
    TempDir dir;
    const auto r = run("extremize --ineq talagrand-lsi --n 3 --budget 1200 --seed 4 --no-timestamp --output " +
                       dir / "ex.json");
    REQUIRE(r.exit == 0);
    CHECK(r.out.empty());
    std::ifstream in(dir / "ex.json");
    const auto j = json::parse(in)["result"];
    SearchConfig cfg;
    cfg.budget = 1200;
    cfg.seed = 4;
    cfg.params.gradient.seed = 4;
    cfg.params.quadrature.gradient.seed = 4;
    const auto lib = extremize(InequalityId::TalagrandLSI, 3, 1, TargetNorm(2), cfg);
    CHECK(j["ratio"].get<double>() == lib.best.ratio);
    const std::string wpath = j["witness_path"];
    CHECK(fs::path(wpath).filename() == "ex.witness.json");
    const auto w = read_cube_function(wpath);
    CHECK(evaluate(InequalityId::TalagrandLSI, w, TargetNorm(2)).ratio == lib.best.ratio);
}

TEST_CASE("symgroup reports") {
    TempDir dir;
    write_perm_function(dir / "s.json", sign_function(3));
    const auto j = json::parse(run("symgroup --function " + dir / "s.json" + " --no-timestamp").out)["result"];
    CHECK(j["dirichlet"].get<double>() == transposition_dirichlet(sign_function(3), TargetNorm(2)));
    CHECK(j["reports"].size() == 3);
    CHECK(j["reports"][0]["id"] == "sym-dsc");
}

TEST_CASE("output is deterministic") {
    const std::string args = "verify --ineq main-lsi --n 4 --d 2 --random 30 --no-timestamp";
    const auto a = run(args + " --seed 9");
    const auto b = run("--seed 9 " + args);
    CHECK(a.exit == 0);
    CHECK(a.out == b.out);
    CHECK(run("env CUBELSI_THREADS=1 " + std::string(CUBELSI_CLI_PATH) + " " + args + " --seed 9", true).out == a.out);
    CHECK(run("env CUBELSI_THREADS=3 " + std::string(CUBELSI_CLI_PATH) + " " + args + " --seed 9", true).out == a.out);
    const auto c = run("verify --ineq main-lsi --n 4 --d 2 --random 30 --seed 10 --no-timestamp");
    CHECK(c.out != a.out);
    CHECK(json::parse(run("norm --n 3").out)["header"].contains("timestamp"));
}

TEST_CASE("csv format") {
    const auto r = run("verify --ineq poincare-lp --n 3 --random 4 --format csv --no-timestamp");
    REQUIRE(r.exit == 0);
    CHECK(r.out.rfind("# {", 0) == 0);
    CHECK(r.out.find("\n" + report_csv_header() + "\n") != std::string::npos);
    std::size_t lines = 0;
    for (char ch : r.out) lines += ch == '\n';
    CHECK(lines == 6);
}

TEST_CASE("exit codes") {
    CHECK(run("").exit == 2);
    CHECK(run("frobnicate").exit == 2);
    CHECK(run("verify --n 3 --random 2").exit == 2);  // missing --ineq
    CHECK(run("verify --ineq nonsense --random 2").exit == 2);
    CHECK(run("norm --q banana").exit == 2);
    CHECK(run("verify --ineq type-lsi --p 3 --n 3 --random 2").exit == 2);
    CHECK(run("norm --function /nonexistent/f.json").exit == 2);
    CHECK(run("gradient --n 15").exit == 3);
    CHECK(run("quotient --relation diag --n 8 --mode cube").exit == 3);
    CHECK(run("--help").exit == 0);
}

TEST_CASE("quick suite passes") {
    const auto r = run("suite --quick --no-timestamp");
    CHECK(r.exit == 0);
    const auto j = json::parse(r.out);
    CHECK(j["result"]["passed"] == true);
    CHECK(j["result"]["checks"].size() > 20);
}

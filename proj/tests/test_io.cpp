#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "cubelsi/io.hpp"
#include "cubelsi/random_functions.hpp"

using namespace cubelsi;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("cubelsi_io_" + std::to_string(Rng(reinterpret_cast<std::uintptr_t>(this))()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("cube functions round-trip bit-exactly") {
    TempDir dir;
    Rng rng(1);
    const auto f = random_gaussian_function(5, 3, rng);
    for (auto enc : {Encoding::Inline, Encoding::Binary}) {
        const auto path = dir.path / (enc == Encoding::Inline ? "inline.json" : "binary.json");
        write_cube_function(path, f, enc);
        const auto g = read_cube_function(path);
        CHECK(g.dimension() == 5);
        CHECK(g.target_dim() == 3);
        CHECK(g.values() == f.values());
    }
    CHECK(fs::file_size(dir.path / "binary.bin") == 32 * 3 * 8);
}

TEST_CASE("perm functions and relations round-trip") {
    TempDir dir;
    Rng rng(2);
    const auto f = random_perm_function(4, 2, rng);
    write_perm_function(dir.path / "p.json", f, Encoding::Binary);
    CHECK(read_perm_function(dir.path / "p.json").values() == f.values());

    write_relation(dir.path / "r.json", 2, {{0, 3}});
    const auto r = read_relation(dir.path / "r.json");
    CHECK(r.classes() == 3);
    CHECK(r.class_of(0) == r.class_of(3));
}

TEST_CASE("malformed files are argument errors") {
    TempDir dir;
    CHECK_THROWS_AS(read_cube_function(dir.path / "missing.json"), ArgumentError);
    std::ofstream(dir.path / "short.json") << R"({"n": 2, "d": 1, "encoding": "inline", "values": [1, 2, 3]})";
    CHECK_THROWS_AS(read_cube_function(dir.path / "short.json"), ArgumentError);
    std::ofstream(dir.path / "enc.json") << R"({"n": 1, "d": 1, "encoding": "zip", "values": [1, 2]})";
    CHECK_THROWS_AS(read_cube_function(dir.path / "enc.json"), ArgumentError);
    std::ofstream(dir.path / "garbage.json") << "{not json";
    CHECK_THROWS_AS(read_cube_function(dir.path / "garbage.json"), ArgumentError);
    std::ofstream(dir.path / "rel.json") << R"({"n": 2, "pairs": [[0, 9]]})";
    CHECK_THROWS_AS(read_relation(dir.path / "rel.json"), ArgumentError);
}

TEST_CASE("report serialization") {
    InequalityReport rep;
    rep.id = "main-lsi";
    rep.n = 3;
    rep.d = 2;
    rep.target_q = TargetNorm::kInfinity;
    rep.lhs = 0.1;
    rep.rhs_unit = 0.3;
    rep.ratio = 1.0 / 3.0;
    const auto j = report_to_json(rep, 42, "w.json");
    CHECK(j["id"] == "main-lsi");
    CHECK(j["params"]["q"] == "inf");
    CHECK(j["seed"] == 42);
    CHECK(j["witness_path"] == "w.json");
    CHECK(j["ratio"].get<double>() == rep.ratio);
    CHECK(report_to_json(rep, 0)["witness_path"].is_null());
    CHECK(report_csv_row(rep, 42) == "main-lsi,3,2,inf,2,0.1,0.3,0.3333333333333333,42");
    CHECK(format_double(0.1) == "0.1");
    CHECK(std::stod(format_double(rep.ratio)) == rep.ratio);
}

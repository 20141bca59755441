#include "cubelsi/io.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>

namespace cubelsi {

namespace {

using json = nlohmann::ordered_json;

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ArgumentError(path.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

std::uint64_t to_le(std::uint64_t v) {
    if constexpr (std::endian::native == std::endian::big) return __builtin_bswap64(v);
    return v;
}

void write_table(const std::filesystem::path& path, json& j, const CubeTable<double>& t, Encoding enc) {
    if (enc == Encoding::Inline) {
        j["encoding"] = "inline";
        j["values"] = std::vector<double>(t.data(), t.data() + t.size());
        return;
    }
    std::filesystem::path blob = path;
    blob.replace_extension(".bin");
    std::ofstream out(blob, std::ios::binary);
    if (!out) throw ArgumentError("cannot write " + blob.string());
    for (Eigen::Index i = 0; i < t.size(); ++i) {
        const std::uint64_t bits = to_le(std::bit_cast<std::uint64_t>(t.data()[i]));
        out.write(reinterpret_cast<const char*>(&bits), sizeof bits);
    }
    j["encoding"] = "binary";
    j["data"] = blob.filename().string();
}

CubeTable<double> read_table(const std::filesystem::path& path, const json& j, Eigen::Index rows, Eigen::Index cols) {
    CubeTable<double> t(rows, cols);
    const std::string enc = j.value("encoding", "inline");
    if (enc == "inline") {
        const auto& vals = j.at("values");
        if (!vals.is_array() || static_cast<Eigen::Index>(vals.size()) != rows * cols)
            throw ArgumentError(path.string() + ": expected " + std::to_string(rows * cols) + " values");
        for (Eigen::Index i = 0; i < rows * cols; ++i) t.data()[i] = vals[static_cast<std::size_t>(i)].get<double>();
    } else if (enc == "binary") {
        const auto blob = path.parent_path() / j.at("data").get<std::string>();
        std::ifstream in(blob, std::ios::binary);
        if (!in) throw ArgumentError("cannot open " + blob.string());
        for (Eigen::Index i = 0; i < rows * cols; ++i) {
            std::uint64_t bits = 0;
            if (!in.read(reinterpret_cast<char*>(&bits), sizeof bits))
                throw ArgumentError(blob.string() + ": too few values");
            t.data()[i] = std::bit_cast<double>(to_le(bits));
        }
        if (in.peek() != std::ifstream::traits_type::eof()) throw ArgumentError(blob.string() + ": trailing data");
    } else {
        throw ArgumentError(path.string() + ": unknown encoding '" + enc + "'");
    }
    return t;
}

template <typename T>
T get_field(const std::filesystem::path& path, const json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ArgumentError(path.string() + ": field '" + key + "': " + e.what());
    }
}

}  // namespace

void write_cube_function(const std::filesystem::path& path, const CubeFunction& f, Encoding enc) {
    json j;
    j["n"] = f.dimension();
    j["d"] = f.target_dim();
    write_table(path, j, f.values(), enc);
    write_json(path, j);
}

CubeFunction read_cube_function(const std::filesystem::path& path) {
    const json j = read_json(path);
    const int n = get_field<int>(path, j, "n");
    const int d = get_field<int>(path, j, "d");
    check_dimension(n);
    if (d < 1) throw ArgumentError(path.string() + ": d must be positive");
    return {n, read_table(path, j, Eigen::Index{1} << n, d)};
}

void write_perm_function(const std::filesystem::path& path, const PermFunction& f, Encoding enc) {
    json j;
    j["n"] = f.degree();
    j["d"] = f.target_dim();
    write_table(path, j, f.values(), enc);
    write_json(path, j);
}

PermFunction read_perm_function(const std::filesystem::path& path) {
    const json j = read_json(path);
    const int n = get_field<int>(path, j, "n");
    const int d = get_field<int>(path, j, "d");
    if (n < kMinPermDegree || n > kMaxPermDegree || d < 1)
        throw ArgumentError(path.string() + ": bad degree or target dimension");
    return {n, read_table(path, j, static_cast<Eigen::Index>(factorial(n)), d)};
}

void write_relation(const std::filesystem::path& path, int n, const std::vector<PointPair>& pairs) {
    json j;
    j["n"] = n;
    j["pairs"] = json::array();
    for (const auto& [u, v] : pairs) j["pairs"].push_back({u, v});
    write_json(path, j);
}

EquivalenceRelation read_relation(const std::filesystem::path& path) {
    const json j = read_json(path);
    const int n = get_field<int>(path, j, "n");
    std::vector<PointPair> pairs;
    for (const auto& pr : j.value("pairs", json::array())) {
        if (!pr.is_array() || pr.size() != 2) throw ArgumentError(path.string() + ": pairs must be [u, v]");
        pairs.emplace_back(pr[0].get<std::uint32_t>(), pr[1].get<std::uint32_t>());
    }
    return EquivalenceRelation::from_pairs(n, pairs);
}

json params_to_json(const InequalityParams& params) {
    json j;
    j["p"] = params.p;
    if (params.alpha) j["alpha"] = *params.alpha;
    j["t"] = params.t;
    j["beckner_q"] = params.beckner_q;
    j["gradient_mode"] = params.gradient.mode == GradientMode::Exact ? "exact" : "mc";
    if (params.gradient.mode == GradientMode::MonteCarlo) {
        j["samples"] = params.gradient.samples;
        j["gradient_seed"] = params.gradient.seed;
    }
    return j;
}

json report_to_json(const InequalityReport& rep, std::uint64_t seed, const std::string& witness_path) {
    json j;
    j["id"] = rep.id;
    json params = params_to_json(rep.params);
    params["n"] = rep.n;
    params["d"] = rep.d;
    params["q"] = std::isinf(rep.target_q) ? json("inf") : json(rep.target_q);
    j["params"] = params;
    j["lhs"] = rep.lhs;
    j["rhs_unit"] = rep.rhs_unit;
    j["ratio"] = std::isfinite(rep.ratio) ? json(rep.ratio) : json("inf");
    j["seed"] = seed;
    j["witness_path"] = witness_path.empty() ? json(nullptr) : json(witness_path);
    return j;
}

std::string format_double(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

std::string report_csv_header() { return "id,n,d,q,p,lhs,rhs_unit,ratio,seed"; }

std::string report_csv_row(const InequalityReport& rep, std::uint64_t seed) {
    return rep.id + "," + std::to_string(rep.n) + "," + std::to_string(rep.d) + "," +
           format_double(rep.target_q) + "," + format_double(rep.params.p) + "," + format_double(rep.lhs) +
           "," + format_double(rep.rhs_unit) + "," + format_double(rep.ratio) + "," + std::to_string(seed);
}

}  // namespace cubelsi

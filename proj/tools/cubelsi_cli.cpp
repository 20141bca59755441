// cubelsi: command-line front end. Every number printed comes straight from
// the library call named next to it; the CLI only parses, dispatches and
// serializes.
//
// Exit codes: 0 ok, 1 violated check / numerical failure, 2 usage, 3 capability.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubelsi/entropy.hpp"
#include "cubelsi/io.hpp"
#include "cubelsi/random_functions.hpp"
#include "cubelsi/suite.hpp"

using namespace cubelsi;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kCapability = 3 };

struct Global {
    std::uint64_t seed = 0;
    std::string output;
    std::string format = "json";
    bool no_timestamp = false;
};

// Output of one command: a JSON result plus an optional CSV rendering.
struct Outcome {
    json params;
    json result;
    std::string csv_header;
    std::vector<std::string> csv_rows;
    int exit = kOk;
};

json number(double x) {
    if (std::isfinite(x)) return x;
    return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
}

TargetNorm parse_target(const std::string& q) {
    if (q == "inf" || q == "infinity") return TargetNorm::sup();
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(q, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != q.size()) throw ArgumentError("--q must be a number >= 1 or 'inf'");
    return TargetNorm(v);
}

json target_json(const TargetNorm& tn) { return tn.is_infinite() ? json("inf") : json(tn.q()); }

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// A function from --function, or a Gaussian random one from substream 0.
struct FunctionSource {
    std::string path;
    int n = 4;
    int d = 1;

    void add(CLI::App* app) {
        app->add_option("--function", path, "function file (JSON)");
        app->add_option("--n", n, "cube dimension for a random function");
        app->add_option("--d", d, "target dimension for a random function");
    }
    CubeFunction load(std::uint64_t seed) const {
        if (!path.empty()) return read_cube_function(path);
        Rng rng = Rng(seed).substream(0);
        return random_gaussian_function(n, d, rng);
    }
    void describe(json& params, const CubeFunction& f) const {
        params["function"] = path.empty() ? json("random") : json(path);
        params["n"] = f.dimension();
        params["d"] = f.target_dim();
    }
};

struct IneqOptions {
    std::string ineq;
    double p = 2.0;
    std::optional<double> alpha;
    double t = 0.5;
    double beckner_q = 1.5;
    std::string q = "2";
    std::string mode = "exact";
    std::uint64_t samples = 4096;

    void add(CLI::App* app, bool need_id) {
        auto* o = app->add_option("--ineq", ineq, "inequality id");
        if (need_id) o->required();
        app->add_option("--p", p, "exponent p");
        app->add_option("--alpha", alpha, "Orlicz exponent (orlicz-hypercontract)");
        app->add_option("--t", t, "semigroup time");
        app->add_option("--beckner-q", beckner_q, "q for the Beckner inequality");
        app->add_option("--q", q, "target norm l_q (number or 'inf')");
        app->add_option("--gradient-mode", mode, "exact | mc")->check(CLI::IsMember({"exact", "mc"}));
        app->add_option("--samples", samples, "Monte Carlo samples");
    }
    InequalityId id() const {
        const auto parsed = parse_inequality_id(ineq);
        if (!parsed) throw ArgumentError("unknown inequality '" + ineq + "'");
        return *parsed;
    }
    InequalityParams params(std::uint64_t seed) const {
        InequalityParams ip;
        ip.p = p;
        ip.alpha = alpha;
        ip.t = t;
        ip.beckner_q = beckner_q;
        ip.gradient.mode = mode == "mc" ? GradientMode::MonteCarlo : GradientMode::Exact;
        ip.gradient.samples = samples;
        ip.gradient.seed = seed;
        ip.quadrature.gradient = ip.gradient;
        return ip;
    }
};

// Where to write a witness function: explicit path, else next to --output.
std::string witness_path(const std::string& explicit_path, const Global& g, const char* suffix = ".witness.json") {
    if (!explicit_path.empty()) return explicit_path;
    if (g.output.empty()) return "";
    fs::path p(g.output);
    return (p.parent_path() / (p.stem().string() + suffix)).string();
}

Outcome run_norm(const Global& g, const FunctionSource& src, double p, std::optional<double> alpha,
                 const std::string& q) {
    const auto f = src.load(g.seed);
    const auto tn = parse_target(q);
    Outcome out;
    src.describe(out.params, f);
    out.params["p"] = p;
    if (alpha) out.params["alpha"] = *alpha;
    out.params["q"] = target_json(tn);
    out.result["lp"] = lp_norm(f, p, tn);
    if (alpha) out.result["orlicz"] = orlicz_norm(f, OrliczGauge(p, *alpha), tn);
    const auto e = expectation(f);
    out.result["expectation"] = std::vector<double>(e.data(), e.data() + e.size());
    out.csv_header = "lp,orlicz";
    out.csv_rows.push_back(format_double(out.result["lp"].get<double>()) + "," +
                           (alpha ? format_double(out.result["orlicz"].get<double>()) : ""));
    return out;
}

Outcome run_entropy(const Global& g, const FunctionSource& src, double p, double alpha, const std::string& q) {
    const auto f = src.load(g.seed);
    const auto tn = parse_target(q);
    Outcome out;
    src.describe(out.params, f);
    out.params["p"] = p;
    out.params["alpha"] = alpha;
    out.params["q"] = target_json(tn);
    auto h = pointwise_norm(f, tn);
    h.values() = h.values().array().pow(p).matrix();
    out.result["ent"] = ent(h);
    out.result["ent_alpha"] = ent_alpha(h, alpha);
    const auto c = entropy_bounds_constants(p, alpha);
    out.result["constants"] = {{"c_alpha", c.c_alpha}, {"K_alpha", c.K_alpha}, {"C_alpha", c.C_alpha}};
    const auto chk = check_orlicz_entropy_equivalence(f, p, alpha, tn);
    out.result["two_sided"] = {{"lp_power", chk.lp_power}, {"entropy", chk.entropy}, {"lower", chk.lower},
                               {"middle", chk.middle},     {"upper", chk.upper},     {"holds", chk.holds}};
    if (!chk.holds) out.exit = kViolation;
    out.csv_header = "ent,ent_alpha,lower,middle,upper,holds";
    out.csv_rows.push_back(format_double(out.result["ent"].get<double>()) + "," +
                           format_double(out.result["ent_alpha"].get<double>()) + "," + format_double(chk.lower) +
                           "," + format_double(chk.middle) + "," + format_double(chk.upper) + "," +
                           (chk.holds ? "true" : "false"));
    return out;
}

Outcome run_gradient(const Global& g, const FunctionSource& src, const IneqOptions& io, bool integral) {
    const auto f = src.load(g.seed);
    const auto tn = parse_target(io.q);
    const auto ip = io.params(g.seed);
    Outcome out;
    src.describe(out.params, f);
    out.params["p"] = io.p;
    out.params["q"] = target_json(tn);
    out.params["gradient_mode"] = io.mode;
    if (io.mode == "mc") out.params["samples"] = io.samples;
    const auto gp = rademacher_gradient(f, io.p, tn, ip.gradient);
    out.result["G_p"] = gp.value;
    out.result["std_error"] = gp.std_error;
    out.result["exact"] = gp.exact;
    out.result["sum_partial_lp_power"] = sum_partial_lp_power(f, io.p, tn);
    if (f.is_scalar()) out.result["gradient_lp"] = gradient_lp(f, io.p);
    if (integral) {
        const auto in = semigroup_gradient_integral(f, tn, ip.quadrature);
        out.result["integral"] = {{"value", in.value}, {"tail_bound", in.tail_bound},
                                  {"std_error", in.std_error}, {"nodes", in.nodes}};
    }
    out.csv_header = "G_p,std_error";
    out.csv_rows.push_back(format_double(gp.value) + "," + format_double(gp.std_error));
    return out;
}

Outcome run_verify(const Global& g, const FunctionSource& src, const IneqOptions& io, std::uint64_t random,
                   const std::string& witness) {
    const auto id = io.id();
    const auto tn = parse_target(io.q);
    const auto ip = io.params(g.seed);
    Outcome out;
    out.params["ineq"] = std::string(to_string(id));
    out.params["inequality"] = params_to_json(ip);
    out.params["q"] = target_json(tn);

    std::vector<InequalityReport> reps;
    if (!src.path.empty()) {
        const auto f = read_cube_function(src.path);
        src.describe(out.params, f);
        reps.push_back(evaluate(id, f, tn, ip));
    } else {
        if (random == 0) throw ArgumentError("verify: give --function or --random N");
        const int d = is_scalar_only(id) ? 1 : src.d;
        out.params["function"] = "random";
        out.params["n"] = src.n;
        out.params["d"] = d;
        out.params["random"] = random;
        reps.resize(random);
        const Rng base(g.seed);
        parallel_for(random, [&](std::size_t k) {
            Rng rng = base.substream(k);
            const auto f = id == InequalityId::TalagrandAsym ? random_half_zero_function(src.n, rng)
                                                            : random_mixed_function(src.n, d, rng);
            reps[k] = evaluate(id, f, tn, ip);
            reps[k].witness = f;
        });
    }

    std::size_t worst = 0;
    for (std::size_t k = 1; k < reps.size(); ++k)
        if (reps[k].ratio > reps[worst].ratio) worst = k;
    std::vector<double> ratios;
    for (const auto& r : reps) ratios.push_back(r.ratio);

    const std::string wpath = src.path.empty() ? witness_path(witness, g) : src.path;
    if (src.path.empty() && !wpath.empty()) write_cube_function(wpath, *reps[worst].witness);

    out.result["count"] = reps.size();
    out.result["max_ratio"] = number(reps[worst].ratio);
    out.result["mean_ratio"] = number(pairwise_mean(ratios));
    out.result["worst_index"] = worst;
    out.result["worst"] = report_to_json(reps[worst], g.seed, wpath);
    out.csv_header = report_csv_header();
    for (const auto& r : reps) out.csv_rows.push_back(report_csv_row(r, g.seed));
    return out;
}

Outcome run_extremize(const Global& g, const IneqOptions& io, int n, int d, std::uint64_t budget,
                      std::uint64_t restart_evals, const std::string& warm, const std::string& witness) {
    const auto id = io.id();
    const auto tn = parse_target(io.q);
    SearchConfig cfg;
    cfg.budget = budget;
    cfg.restart_evals = restart_evals;
    cfg.seed = g.seed;
    cfg.params = io.params(g.seed);
    if (!warm.empty()) cfg.warm_start = read_cube_function(warm);
    if (is_scalar_only(id)) d = 1;
    const auto res = extremize(id, n, d, tn, cfg);

    Outcome out;
    out.params["ineq"] = std::string(to_string(id));
    out.params["inequality"] = params_to_json(cfg.params);
    out.params["n"] = n;
    out.params["d"] = d;
    out.params["q"] = target_json(tn);
    out.params["budget"] = budget;
    out.params["restart_evals"] = restart_evals;
    if (!warm.empty()) out.params["warm_start"] = warm;

    const std::string wpath = witness_path(witness, g);
    if (!wpath.empty() && res.best.witness) write_cube_function(wpath, *res.best.witness);
    out.result = report_to_json(res.best, g.seed, wpath);
    out.result["evaluations"] = res.evaluations;
    out.result["best_restart"] = res.best_restart;
    out.csv_header = report_csv_header();
    out.csv_rows.push_back(report_csv_row(res.best, g.seed));
    return out;
}

EquivalenceRelation make_relation(const std::string& kind, int n, const std::vector<std::uint32_t>& masks,
                                  std::size_t pairs, std::uint64_t seed) {
    if (kind == "diag" || kind == "diagonal") return diagonal_relation(n);
    if (kind == "antipodal") return antipodal_relation(n);
    if (kind == "subgroup") return subgroup_relation(n, masks);
    if (kind == "random") {
        Rng rng = Rng(seed).substream(0);
        return random_relation(n, pairs, rng);
    }
    return read_relation(kind);
}

Outcome run_quotient(const Global& g, const std::string& kind, int n, double p, double alpha, double type_const,
                     const std::vector<std::uint32_t>& masks, std::size_t pairs, const std::string& mode,
                     bool metric) {
    const auto rel = make_relation(kind, n, masks, pairs, g.seed);
    const ProductSpaceMode m = mode == "cube" ? ProductSpaceMode::Cube
                               : mode == "histogram" ? ProductSpaceMode::ClassHistogram
                                                     : ProductSpaceMode::Auto;
    const auto b = distortion_lower_bound(rel, p, alpha, type_const, m);
    Outcome out;
    out.params["relation"] = kind;
    out.params["n"] = rel.dimension();
    out.params["p"] = p;
    out.params["alpha"] = alpha;
    out.params["type_const"] = type_const;
    out.params["mode"] = mode;
    if (kind == "subgroup") out.params["masks"] = masks;
    if (kind == "random") out.params["pairs"] = pairs;
    out.result["classes"] = rel.classes();
    out.result["numerator"] = b.numerator;
    out.result["denominator"] = b.denominator;
    out.result["bound_without_c"] = b.bound_without_c;
    out.result["degenerate"] = b.degenerate;
    json boundary_sizes = json::array();
    for (int i = 1; i <= rel.dimension(); ++i) boundary_sizes.push_back(boundary(rel, i).size());
    out.result["boundary_sizes"] = boundary_sizes;
    if (metric) {
        const auto qm = quotient_metric(rel);
        json rows = json::array();
        for (std::uint32_t a = 0; a < qm.size(); ++a) {
            std::vector<double> row(qm.size());
            for (std::uint32_t c = 0; c < qm.size(); ++c) row[c] = qm(a, c);
            rows.push_back(row);
        }
        out.result["metric"] = rows;
        out.result["metric_axioms"] = qm.satisfies_metric_axioms();
    }
    out.csv_header = "classes,numerator,denominator,bound_without_c,degenerate";
    out.csv_rows.push_back(std::to_string(rel.classes()) + "," + format_double(b.numerator) + "," +
                           format_double(b.denominator) + "," + format_double(b.bound_without_c) + "," +
                           (b.degenerate ? "true" : "false"));
    return out;
}

Outcome run_symgroup(const Global& g, const std::string& which, const std::string& path, int n, int d,
                     const std::string& q, double m2) {
    PermFunction f = path.empty() ? [&] {
        Rng rng = Rng(g.seed).substream(0);
        return random_perm_function(n, d, rng);
    }()
                                  : read_perm_function(path);
    const auto tn = parse_target(q);
    Outcome out;
    out.params["which"] = which;
    out.params["function"] = path.empty() ? json("random") : json(path);
    out.params["n"] = f.degree();
    out.params["d"] = f.target_dim();
    out.params["q"] = target_json(tn);
    out.params["m2"] = m2;
    out.result["dirichlet"] = transposition_dirichlet(f, tn);
    out.csv_header = report_csv_header();
    json reports = json::array();
    auto add = [&](const InequalityReport& r) {
        reports.push_back(report_to_json(r, g.seed));
        out.csv_rows.push_back(report_csv_row(r, g.seed));
    };
    if ((which == "all" && f.is_scalar()) || which == "dsc") add(evaluate_dsc(f));
    if (which == "all" || which == "kn") add(evaluate_kn(f, tn, m2));
    if (which == "all" || which == "lsi") add(evaluate_sym_lsi(f, tn));
    out.result["reports"] = reports;
    return out;
}

Outcome run_semigroup(const Global& g, const FunctionSource& src, double t, bool riesz, int iterations,
                      const std::string& write) {
    Outcome out;
    out.params["t"] = t;
    if (riesz) {
        const auto r = riesz_p2_bound(t, src.n, g.seed, iterations);
        out.params["n"] = src.n;
        out.params["iterations"] = iterations;
        out.result = {{"t", r.t},
                      {"n", r.n},
                      {"closed_form", r.closed_form},
                      {"closed_form_all_k", r.closed_form_all_k},
                      {"power_iteration", r.power_iteration},
                      {"a2_closed", r.a2_closed},
                      {"a2_power", r.a2_power}};
        out.csv_header = "t,n,closed_form,closed_form_all_k,power_iteration,a2_closed,a2_power";
        out.csv_rows.push_back(format_double(r.t) + "," + std::to_string(r.n) + "," + format_double(r.closed_form) +
                               "," + format_double(r.closed_form_all_k) + "," + format_double(r.power_iteration) +
                               "," + format_double(r.a2_closed) + "," + format_double(r.a2_power));
        return out;
    }
    const auto f = src.load(g.seed);
    src.describe(out.params, f);
    const auto pf = heat_semigroup(f, t);
    const std::string wpath = witness_path(write, g, ".semigroup.json");
    if (!wpath.empty()) write_cube_function(wpath, pf);
    out.result["l2_before"] = lp_norm(f, 2, TargetNorm(2));
    out.result["l2_after"] = lp_norm(pf, 2, TargetNorm(2));
    out.result["function_path"] = wpath.empty() ? json(nullptr) : json(wpath);
    out.csv_header = "l2_before,l2_after";
    out.csv_rows.push_back(format_double(out.result["l2_before"].get<double>()) + "," +
                           format_double(out.result["l2_after"].get<double>()));
    return out;
}

Outcome run_suite_cmd(const Global& g, bool quick) {
    const auto rep = run_suite(SuiteOptions{g.seed, quick});
    Outcome out;
    out.params["quick"] = quick;
    json checks = json::array();
    out.csv_header = "name,cases,violations,worst,asserted,passed";
    for (const auto& c : rep.checks) {
        checks.push_back(check_to_json(c));
        out.csv_rows.push_back(c.name + "," + std::to_string(c.cases) + "," + std::to_string(c.violations) + "," +
                               format_double(c.worst) + "," + (c.asserted ? "true" : "false") + "," +
                               (c.passed() ? "true" : "false"));
    }
    out.result["passed"] = rep.passed;
    out.result["checks"] = checks;
    if (!rep.passed) out.exit = kViolation;
    return out;
}

void emit(const Global& g, const std::string& command, const Outcome& out) {
    json header;
    header["tool"] = "cubelsi";
    header["version"] = kVersion;
    header["command"] = command;
    header["seed"] = g.seed;
    header["params"] = out.params;
    if (!g.no_timestamp) header["timestamp"] = timestamp();

    std::ostringstream s;
    if (g.format == "csv") {
        s << "# " << header.dump() << '\n' << out.csv_header << '\n';
        for (const auto& row : out.csv_rows) s << row << '\n';
    } else {
        json doc;
        doc["header"] = header;
        doc["result"] = out.result;
        s << doc.dump(2) << '\n';
    }
    if (g.output.empty()) {
        std::cout << s.str();
    } else {
        std::ofstream f(g.output);
        if (!f) throw ArgumentError("cannot write " + g.output);
        f << s.str();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for vector-valued log-Sobolev inequalities on the Hamming cube"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--output", g.output, "output file (default stdout)");
    app.add_option("--format", g.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--no-timestamp", g.no_timestamp, "omit the timestamp from the header");

    FunctionSource src;
    IneqOptions io;
    double p = 2.0, alpha_entropy = 1.0, t = 0.5, type_const = 1.0, m2 = 1.0, alpha_q = 0.0;
    std::optional<double> alpha;
    std::string q = "2", witness, warm, relation = "diag", mode = "auto", which = "all", perm_path;
    std::uint64_t random = 0, budget = 10000, restart_evals = 500;
    std::size_t pairs = 4;
    std::vector<std::uint32_t> masks;
    int n_ext = 4, d_ext = 1, n_q = 3, n_sym = 4, d_sym = 1, iterations = 300;
    bool integral = false, quick = false, metric = false, riesz = false;

    auto* norm = app.add_subcommand("norm", "L_p and Orlicz norms of a function");
    src.add(norm);
    norm->add_option("--p", p, "exponent p");
    norm->add_option("--alpha", alpha, "Orlicz exponent (omit for L_p only)");
    norm->add_option("--q", q, "target norm l_q");

    auto* entropy = app.add_subcommand("entropy", "entropies of ||f||^p and the two-sided Orlicz comparison");
    src.add(entropy);
    entropy->add_option("--p", p, "exponent p");
    entropy->add_option("--alpha", alpha_entropy, "entropy exponent");
    entropy->add_option("--q", q, "target norm l_q");

    auto* gradient = app.add_subcommand("gradient", "Rademacher gradient norms");
    src.add(gradient);
    io.add(gradient, false);
    gradient->add_flag("--integral", integral, "also the semigroup gradient integral");

    auto* verify = app.add_subcommand("verify", "evaluate an inequality on a file or on random functions");
    src.add(verify);
    io.add(verify, true);
    verify->add_option("--random", random, "number of random functions");
    verify->add_option("--witness", witness, "where to write the worst function");

    auto* extrem = app.add_subcommand("extremize", "search for a function maximizing an inequality ratio");
    io.add(extrem, true);
    extrem->add_option("--n", n_ext, "cube dimension");
    extrem->add_option("--d", d_ext, "target dimension");
    extrem->add_option("--budget", budget, "objective evaluations");
    extrem->add_option("--restart-evals", restart_evals, "evaluations per restart");
    extrem->add_option("--warm-start", warm, "function file used as the first start");
    extrem->add_option("--witness", witness, "where to write the best function");

    auto* quotient = app.add_subcommand("quotient", "distortion lower bound for a cube quotient");
    quotient->add_option("--relation", relation, "diag | antipodal | subgroup | random | relation file");
    quotient->add_option("--n", n_q, "cube dimension");
    quotient->add_option("--p", p, "exponent p");
    quotient->add_option("--alpha", alpha_q, "Orlicz exponent (0 for L_p)");
    quotient->add_option("--type-const", type_const, "type constant T");
    quotient->add_option("--masks", masks, "flip masks for --relation subgroup");
    quotient->add_option("--pairs", pairs, "pair count for --relation random");
    quotient->add_option("--mode", mode, "auto | cube | histogram")->check(CLI::IsMember({"auto", "cube", "histogram"}));
    quotient->add_flag("--metric", metric, "include the quotient metric matrix");

    auto* sym = app.add_subcommand("symgroup", "symmetric-group Dirichlet form and inequalities");
    sym->add_option("--which", which, "all | dsc | kn | lsi")->check(CLI::IsMember({"all", "dsc", "kn", "lsi"}));
    sym->add_option("--function", perm_path, "permutation-function file");
    sym->add_option("--n", n_sym, "group degree for a random function");
    sym->add_option("--d", d_sym, "target dimension for a random function");
    sym->add_option("--q", q, "target norm l_q");
    sym->add_option("--m2", m2, "martingale type constant");

    auto* semigroup = app.add_subcommand("semigroup", "apply P_t, or bound the Riesz transform at p = 2");
    src.add(semigroup);
    semigroup->add_option("--t", t, "time t");
    semigroup->add_flag("--riesz", riesz, "operator norm of grad P_t on mean-zero functions of n variables");
    semigroup->add_option("--iterations", iterations, "power iterations for --riesz");
    semigroup->add_option("--write", witness, "where to write P_t f");

    auto* suite = app.add_subcommand("suite", "run the randomized property battery");
    suite->add_flag("--quick", quick, "smaller battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Outcome out;
        std::string command;
        if (*norm) {
            command = "norm";
            out = run_norm(g, src, p, alpha, q);
        } else if (*entropy) {
            command = "entropy";
            out = run_entropy(g, src, p, alpha_entropy, q);
        } else if (*gradient) {
            command = "gradient";
            out = run_gradient(g, src, io, integral);
        } else if (*verify) {
            command = "verify";
            out = run_verify(g, src, io, random, witness);
        } else if (*extrem) {
            command = "extremize";
            out = run_extremize(g, io, n_ext, d_ext, budget, restart_evals, warm, witness);
        } else if (*quotient) {
            command = "quotient";
            out = run_quotient(g, relation, n_q, p, alpha_q, type_const, masks, pairs, mode, metric);
        } else if (*sym) {
            command = "symgroup";
            out = run_symgroup(g, which, perm_path, n_sym, d_sym, q, m2);
        } else if (*semigroup) {
            command = "semigroup";
            out = run_semigroup(g, src, t, riesz, iterations, witness);
        } else {
            command = "suite";
            out = run_suite_cmd(g, quick);
        }
        emit(g, command, out);
        return out.exit;
    } catch (const CapabilityError& e) {
        std::cerr << "capability error: " << e.what() << '\n';
        return kCapability;
    } catch (const ArgumentError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << " (bracket [" << e.bracket_lo() << ", " << e.bracket_hi()
                  << "])\n";
        return kViolation;
    } catch (const std::logic_error& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return kViolation;
    }
}

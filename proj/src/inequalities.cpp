#include "cubelsi/inequalities.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "cubelsi/entropy.hpp"

namespace cubelsi {

namespace {

struct NameEntry {
    InequalityId id;
    std::string_view name;
};

constexpr std::array<NameEntry, 13> kNames{{
    {InequalityId::TalagrandLSI, "talagrand-lsi"},
    {InequalityId::PoincareLp, "poincare-lp"},
    {InequalityId::IVVPoincare, "ivv-poincare"},
    {InequalityId::MainLSI, "main-lsi"},
    {InequalityId::StrongPisier, "strong-pisier"},
    {InequalityId::PisierLogN, "pisier-log-n"},
    {InequalityId::TalagrandAsym, "talagrand-asym"},
    {InequalityId::TypeLSI, "type-lsi"},
    {InequalityId::Beckner, "beckner"},
    {InequalityId::IsopFunctional, "isop-functional"},
    {InequalityId::MostGeneral, "most-general"},
    {InequalityId::OrliczHypercontract, "orlicz-hypercontract"},
    {InequalityId::RieszP2, "riesz-p2"},
}};

double max_abs(const CubeFunction& f) { return f.values().cwiseAbs().maxCoeff(); }

double talagrand_lhs(const CubeFunction& g, double p, const TargetNorm& tn) {
    return orlicz_norm(g, OrliczGauge::talagrand(p), tn);
}

}  // namespace

std::string_view to_string(InequalityId id) {
    for (const auto& e : kNames)
        if (e.id == id) return e.name;
    return "unknown";
}

std::optional<InequalityId> parse_inequality_id(std::string_view name) {
    for (const auto& e : kNames)
        if (e.name == name) return e.id;
    return std::nullopt;
}

bool is_scalar_only(InequalityId id) {
    switch (id) {
        case InequalityId::TalagrandLSI:
        case InequalityId::PoincareLp:
        case InequalityId::TalagrandAsym:
        case InequalityId::RieszP2:
            return true;
        default:
            return false;
    }
}

double report_ratio(double lhs, double rhs, double scale, std::string_view id) {
    if (rhs > 0.0) return lhs / rhs;
    // rhs = 0 only for (numerically) constant inputs; lhs is then rounding noise.
    if (lhs <= 1e-12 * scale) return 0.0;
    throw std::logic_error(std::string(id) + ": positive lhs " + std::to_string(lhs) +
                           " against zero rhs");
}

InequalityReport evaluate(InequalityId id, const CubeFunction& f, const TargetNorm& tn,
                          const InequalityParams& params) {
    const std::string name(to_string(id));
    const int n = f.dimension();
    const double p = params.p;
    if (!(p >= 1.0) || !std::isfinite(p)) throw ArgumentError(name + ": p must be a finite number >= 1");
    if (is_scalar_only(id) && !f.is_scalar()) throw ArgumentError(name + ": needs a scalar function (d = 1)");

    InequalityReport rep;
    rep.id = name;
    rep.params = params;
    rep.target_q = tn.q();
    rep.n = n;
    rep.d = f.target_dim();
    rep.witness = f;

    const auto G = [&](double pp) { return rademacher_gradient(f, pp, tn, params.gradient).value; };
    double scale = max_abs(f);
    double lhs = 0;
    double rhs = 0;

    switch (id) {
        case InequalityId::TalagrandLSI:
            lhs = talagrand_lhs(centered(f), p, tn);
            rhs = gradient_lp(f, p);
            break;
        case InequalityId::PoincareLp:
            lhs = lp_norm(centered(f), p, tn);
            rhs = gradient_lp(f, p);
            break;
        case InequalityId::IVVPoincare:
            lhs = lp_norm(centered(f), p, tn);
            rhs = G(p);
            break;
        case InequalityId::MainLSI:
            lhs = talagrand_lhs(centered(f), p, tn);
            rhs = G(p);
            break;
        case InequalityId::StrongPisier:
            lhs = talagrand_lhs(centered(f), p, tn);
            rhs = G(p) + 2.0 * (std::log(static_cast<double>(n)) + 1.0) * G(1.0);
            break;
        case InequalityId::PisierLogN:
            lhs = lp_norm(centered(f), p, tn);
            rhs = (std::log(static_cast<double>(n)) + 1.0) * G(p);
            break;
        case InequalityId::TalagrandAsym: {
            std::uint32_t zeros = 0;
            for (std::uint32_t u = 0; u < f.size(); ++u) {
                if (f[u] < 0.0) throw ArgumentError(name + ": hypothesis h >= 0 fails");
                if (f[u] == 0.0) ++zeros;
            }
            if (2 * static_cast<std::uint64_t>(zeros) < f.size())
                throw ArgumentError(name + ": hypothesis sigma{h = 0} >= 1/2 fails");
            lhs = talagrand_lhs(f, p, tn);
            rhs = lp_norm(asymmetric_gradient(f), p, tn);
            break;
        }
        case InequalityId::TypeLSI:
            if (p > 2.0) throw ArgumentError(name + ": needs p in [1, 2]");
            lhs = talagrand_lhs(centered(f), p, tn);
            rhs = std::pow(sum_partial_lp_power(f, p, tn), 1.0 / p);
            break;
        case InequalityId::Beckner: {
            const double q = params.beckner_q;
            if (!(q >= 1.0 && q <= 2.0)) throw ArgumentError(name + ": needs q in [1, 2]");
            const CubeFunction g = centered(f);
            const double l2 = lp_norm(g, 2.0, tn);
            const double lq = lp_norm(g, q, tn);
            lhs = std::max(0.0, l2 * l2 - lq * lq);
            const double g2 = rademacher_gradient(g, 2.0, tn, params.gradient).value;
            rhs = (2.0 - q) * g2 * g2;
            scale *= scale;
            break;
        }
        case InequalityId::IsopFunctional: {
            const CubeFunction g = centered(f);
            const double lp = lp_norm(g, p, tn);
            const double l1 = lp_norm(g, 1.0, tn);
            lhs = l1 > 0.0 ? lp * (1.0 + std::sqrt(std::max(0.0, std::log(lp / l1)))) : 0.0;
            rhs = G(p);
            break;
        }
        case InequalityId::MostGeneral:
            lhs = talagrand_lhs(centered(f), p, tn);
            rhs = G(p) + std::numbers::pi * semigroup_gradient_integral(f, tn, params.quadrature).value;
            break;
        case InequalityId::OrliczHypercontract: {
            const double t = params.t;
            const double alpha = params.alpha.value_or(p / 2.0);
            if (!(p > 1.0)) throw ArgumentError(name + ": needs p > 1");
            if (!(t > 0.0 && t < 1.0)) throw ArgumentError(name + ": needs t in (0, 1)");
            if (!(alpha >= 0.0 && alpha <= p / 2.0)) throw ArgumentError(name + ": needs alpha in [0, p/2]");
            const double pstar = std::min(p, 2.0);
            lhs = orlicz_norm(heat_semigroup(f, t), OrliczGauge(p, alpha), tn);
            rhs = std::pow(t, -2.0 * alpha / (p * pstar)) * lp_norm(f, p, tn);
            break;
        }
        case InequalityId::RieszP2: {
            const double t = params.t;
            if (!(t > 0.0)) throw ArgumentError(name + ": needs t > 0");
            lhs = gradient_lp(heat_semigroup(f, t), 2.0);
            rhs = lp_norm(centered(f), 2.0, tn) / std::sqrt(std::expm1(2.0 * t));
            break;
        }
    }
    rep.lhs = lhs;
    rep.rhs_unit = rhs;
    rep.ratio = report_ratio(lhs, rhs, scale, name);
    return rep;
}

DirichletKernel cube_kernel(int n, double weight) {
    check_dimension(n, kMaxExactDimension);
    if (!(weight >= 0.0) || !std::isfinite(weight)) throw ArgumentError("kernel weight must be finite and >= 0");
    const std::uint32_t N = std::uint32_t{1} << n;
    DirichletKernel k;
    k.mu.assign(N, 1.0 / N);
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(static_cast<std::size_t>(N) * static_cast<std::size_t>(n));
    for (std::uint32_t u = 0; u < N; ++u)
        for (int i = 1; i <= n; ++i)
            entries.emplace_back(static_cast<int>(u), static_cast<int>(flip_index(u, i)), weight);
    k.beta.resize(N, N);
    k.beta.setFromTriplets(entries.begin(), entries.end());
    return k;
}

KernelFormReport evaluate_kernel_form(const DirichletKernel& kernel, const CubeTable<double>& f,
                                      const TargetNorm& tn, double p, double alpha) {
    const auto m = static_cast<Eigen::Index>(kernel.mu.size());
    if (f.rows() != m || kernel.beta.rows() != m || kernel.beta.cols() != m)
        throw ArgumentError("evaluate_kernel_form: dimensions disagree");
    const OrliczGauge gauge(p, alpha);

    // E f under mu, componentwise.
    CubeTable<double> g = f;
    std::vector<double> terms(static_cast<std::size_t>(m));
    for (Eigen::Index k = 0; k < f.cols(); ++k) {
        for (Eigen::Index x = 0; x < m; ++x) terms[static_cast<std::size_t>(x)] = kernel.mu[static_cast<std::size_t>(x)] * f(x, k);
        g.col(k).array() -= pairwise_sum(terms);
    }
    std::vector<double> h(static_cast<std::size_t>(m));
    for (Eigen::Index x = 0; x < m; ++x) h[static_cast<std::size_t>(x)] = tn(g.row(x));

    std::vector<double> vec_pairs;
    std::vector<double> sc_pairs;
    for (Eigen::Index x = 0; x < kernel.beta.outerSize(); ++x)
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(kernel.beta, x); it; ++it) {
            const Eigen::Index y = it.col();
            vec_pairs.push_back(it.value() * std::pow(tn(f.row(x) - f.row(y)), p));
            sc_pairs.push_back(it.value() * std::pow(std::abs(h[static_cast<std::size_t>(x)] - h[static_cast<std::size_t>(y)]), p));
        }

    KernelFormReport out;
    out.vector_lhs = std::pow(lp_norm(h, p, kernel.mu), p);
    out.vector_rhs = pairwise_sum(vec_pairs);
    std::vector<double> hc(h);
    {
        std::vector<double> wh(h.size());
        for (std::size_t x = 0; x < h.size(); ++x) wh[x] = kernel.mu[x] * h[x];
        const double mean_h = pairwise_sum(wh);
        for (double& v : hc) v = std::abs(v - mean_h);
    }
    out.scalar_lhs = std::pow(orlicz_norm(hc, gauge, kernel.mu), p);
    out.scalar_rhs = pairwise_sum(sc_pairs);
    out.boosted_lhs = std::pow(orlicz_norm(h, gauge, kernel.mu), p);
    out.boosted_rhs = out.vector_rhs;
    return out;
}

double boost_constant(double p, double scalar_constant) {
    return std::pow(2.0, p - 1.0) * (std::pow(scalar_constant, p) + 1.0);
}

double boost_constant_with_unit_norm(double p, double alpha, double scalar_constant,
                                     double poincare_constant) {
    const double one = orlicz_norm_of_one(OrliczGauge(p, alpha));
    return std::pow(2.0, p - 1.0) * (std::pow(scalar_constant, p) + std::pow(one, p) * poincare_constant);
}

// ---------------------------------------------------------------------------
// Extremal search

namespace {

CubeFunction admissible(InequalityId id, const CubeFunction& f) {
    if (id != InequalityId::TalagrandAsym) return f;
    const double m = lower_median(f);
    CubeFunction shifted = f;
    shifted.values().array() -= m;
    return positive_part(shifted);
}

double objective(InequalityId id, const CubeFunction& f, const TargetNorm& tn, const InequalityParams& params) {
    try {
        const double r = evaluate(id, admissible(id, f), tn, params).ratio;
        return std::isfinite(r) ? r : -1.0;
    } catch (const ArgumentError&) {
        return -1.0;
    }
}

double rms(const CubeTable<double>& t) {
    return std::sqrt(t.squaredNorm() / static_cast<double>(t.size()));
}

CubeFunction random_start(std::uint64_t restart, int n, int d, Rng& rng) {
    const std::uint32_t N = std::uint32_t{1} << n;
    CubeFunction f(n, d);
    auto gauss_row = [&] {
        Vector<double> v(d);
        for (int k = 0; k < d; ++k) v(k) = rng.normal();
        return v;
    };
    switch (restart % 5) {
        case 0: {  // Walsh-sparse, low levels
            const int terms = 1 + static_cast<int>(rng.below(3));
            WalshSpectrum s(n, d);
            for (int j = 0; j < terms; ++j) {
                std::uint32_t S = 0;
                const int lev = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 3))));
                while (level(S) < lev) S |= std::uint32_t{1} << rng.below(static_cast<std::uint64_t>(n));
                s.row(S) += gauss_row().transpose();
            }
            f = inverse_walsh(s);
            break;
        }
        case 1: {  // dictator
            const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const Vector<double> v = gauss_row();
            for (std::uint32_t u = 0; u < N; ++u) f.row(u) = coordinate(u, i) * v.transpose();
            break;
        }
        case 2: {  // subcube indicator
            const int codim = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            std::uint32_t fixed = 0;
            while (level(fixed) < codim) fixed |= std::uint32_t{1} << rng.below(static_cast<std::uint64_t>(n));
            const std::uint32_t pattern = static_cast<std::uint32_t>(rng()) & fixed;
            const Vector<double> v = gauss_row();
            for (std::uint32_t u = 0; u < N; ++u)
                if ((u & fixed) == pattern) f.row(u) = v.transpose();
            break;
        }
        case 3: {  // sparse support
            const double density = rng.uniform(0.02, 0.5);
            for (std::uint32_t u = 0; u < N; ++u)
                if (rng.uniform() < density) f.row(u) = gauss_row().transpose();
            break;
        }
        default:
            for (std::uint32_t u = 0; u < N; ++u) f.row(u) = gauss_row().transpose();
    }
    // A little noise so that flat starts are not stuck on ties.
    const double scale = std::max(rms(f.values()), 1e-3);
    for (std::uint32_t u = 0; u < N; ++u)
        for (int k = 0; k < d; ++k) f.values()(u, k) += 0.01 * scale * rng.normal();
    return f;
}

struct RestartResult {
    double ratio = -1.0;
    CubeFunction best;
    std::uint64_t evals = 0;
};

// One restart with a schedule fixed by cfg.restart_evals; `limit` may cut it
// short, in which case the run is a prefix of the full one.
RestartResult run_restart(InequalityId id, int n, int d, const TargetNorm& tn, const SearchConfig& cfg,
                          std::uint64_t restart, std::uint64_t limit) {
    Rng rng = Rng(cfg.seed, 0x5EA2C4).substream(restart);
    CubeFunction cur = restart == 0 && cfg.warm_start ? *cfg.warm_start : random_start(restart, n, d, rng);
    RestartResult res;
    double cur_val = objective(id, cur, tn, cfg.params);
    res.evals = 1;
    res.ratio = cur_val;
    res.best = cur;

    const std::uint64_t total = cfg.restart_evals;
    const std::uint64_t anneal_steps = total * 3 / 5;
    const double t0 = 0.05;
    const double t1 = 1e-4;
    double step = 0.3;
    const std::uint32_t N = cur.size();

    auto consider = [&](const CubeFunction& cand, double val) {
        if (val > res.ratio) {
            res.ratio = val;
            res.best = cand;
        }
    };

    // Simulated annealing on log(ratio).
    for (std::uint64_t k = 1; k < anneal_steps && res.evals < limit; ++k) {
        const double temp = t0 * std::pow(t1 / t0, static_cast<double>(k) / static_cast<double>(anneal_steps));
        const double scale = std::max(rms(cur.values()), 1e-12);
        CubeFunction cand = cur;
        if (rng.uniform() < 0.15) {
            std::uint32_t S = 0;
            const int lev = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 2))));
            while (level(S) < lev) S |= std::uint32_t{1} << rng.below(static_cast<std::uint64_t>(n));
            const int comp = static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
            const double a = step * scale * rng.normal();
            for (std::uint32_t u = 0; u < N; ++u) cand.values()(u, comp) += a * walsh_sign(S, u);
        } else {
            const auto u = static_cast<std::uint32_t>(rng.below(N));
            for (int c = 0; c < d; ++c) cand.values()(u, c) += step * scale * rng.normal();
        }
        const double val = objective(id, cand, tn, cfg.params);
        ++res.evals;
        consider(cand, val);
        const double delta = (val > 0 && cur_val > 0) ? std::log(val / cur_val) : val - cur_val;
        if (delta >= 0.0 || rng.uniform() < std::exp(delta / temp)) {
            cur = std::move(cand);
            cur_val = val;
            step = std::min(step * 1.1, 2.0);
        } else {
            step = std::max(step * 0.96, 1e-4);
        }
    }

    // Coordinate pattern search from the best point found.
    cur = res.best;
    cur_val = res.ratio;
    double h = std::max(step, 0.05) * std::max(rms(cur.values()), 1e-12);
    while (res.evals < std::min(limit, total) && h > 1e-9 * std::max(rms(cur.values()), 1e-300)) {
        bool improved = false;
        for (std::uint32_t u = 0; u < N && res.evals < std::min(limit, total); ++u)
            for (int c = 0; c < d && res.evals < std::min(limit, total); ++c)
                for (const double sgn : {1.0, -1.0}) {
                    if (res.evals >= std::min(limit, total)) break;
                    CubeFunction cand = cur;
                    cand.values()(u, c) += sgn * h;
                    const double val = objective(id, cand, tn, cfg.params);
                    ++res.evals;
                    if (val > cur_val) {
                        cur = std::move(cand);
                        cur_val = val;
                        consider(cur, val);
                        improved = true;
                        break;
                    }
                }
        if (!improved) h /= 2.0;
    }
    return res;
}

}  // namespace

SearchResult extremize(InequalityId id, int n, int d, const TargetNorm& tn, const SearchConfig& cfg) {
    if (cfg.budget == 0) throw ArgumentError("extremize: search budget must be positive");
    if (cfg.restart_evals < 2) throw ArgumentError("extremize: restart_evals must be >= 2");
    check_dimension(n, kMaxExactDimension);
    if (d < 1) throw ArgumentError("extremize: d must be >= 1");
    if (is_scalar_only(id) && d != 1) throw ArgumentError(std::string(to_string(id)) + ": needs d = 1");
    if (cfg.warm_start && (cfg.warm_start->dimension() != n || cfg.warm_start->target_dim() != d))
        throw ArgumentError("extremize: warm start has the wrong shape");

    const std::uint64_t restarts = (cfg.budget + cfg.restart_evals - 1) / cfg.restart_evals;
    std::vector<RestartResult> results(restarts);
    parallel_for(restarts, [&](std::size_t r) {
        const std::uint64_t limit = std::min(cfg.restart_evals, cfg.budget - r * cfg.restart_evals);
        results[r] = run_restart(id, n, d, tn, cfg, r, limit);
    });

    SearchResult out;
    std::uint64_t best = 0;
    for (std::uint64_t r = 0; r < restarts; ++r) {
        out.evaluations += results[r].evals;
        if (results[r].ratio > results[best].ratio) best = r;
    }
    out.best_restart = best;
    out.best = evaluate(id, admissible(id, results[best].best), tn, cfg.params);
    return out;
}

// ---------------------------------------------------------------------------

BecknerTable beckner_monotonicity(const CubeFunction& f, std::span<const double> qs, const TargetNorm& tn) {
    const CubeFunction g = centered(f);
    const double l2 = lp_norm(g, 2.0, tn);
    BecknerTable table;
    for (double q : qs) {
        if (!(q >= 1.0 && q < 2.0)) throw ArgumentError("beckner_monotonicity: q must lie in [1, 2)");
        const double lq = lp_norm(g, q, tn);
        table.rows.push_back({q, (l2 * l2 - lq * lq) / (1.0 / q - 0.5)});
    }
    // Slack relative to ||f||_2^2, the natural scale of every entry.
    double top = l2 * l2;
    for (const auto& r : table.rows) top = std::max(top, std::abs(r.value));
    for (std::size_t j = 1; j < table.rows.size(); ++j)
        if (table.rows[j].q > table.rows[j - 1].q && table.rows[j].value < table.rows[j - 1].value - 1e-9 * top)
            table.nondecreasing = false;
    return table;
}

double beckner_limit(const CubeFunction& f, const TargetNorm& tn) {
    auto squares = magnitudes(centered(f), tn);
    for (double& v : squares) v *= v;
    return 2.0 * ent(squares);
}

double two_point_threshold(double x, double y, double p, double alpha) {
    if (!(x >= 0.0 && y >= 0.0)) throw ArgumentError("two-point check needs x, y >= 0");
    if (!(p >= 1.0)) throw ArgumentError("two-point check needs p >= 1");
    if (x == 0.0 || y == 0.0) return 0.0;
    const double a = std::pow(x, p);
    const double b = std::pow(y, p);
    const double den = a * std::pow(std::log(std::numbers::e + a), alpha) +
                       b * std::pow(std::log(std::numbers::e + b), -alpha);
    return 2.0 * std::sqrt(a) * std::sqrt(b) / den;
}

bool two_point_holder_check(double x, double y, double p, double alpha, double constant) {
    if (!(constant > 0.0)) throw ArgumentError("two-point check needs a positive constant");
    return two_point_threshold(x, y, p, alpha) <= constant * (1.0 + 1e-12);
}

TwoPointConstant estimate_two_point_constant(double p, double alpha, int grid) {
    if (!(alpha > 0.0)) throw ArgumentError("two-point constant needs alpha > 0");
    if (grid < 3) throw ArgumentError("two-point grid must have at least 3 points");
    // Search in (log a, log b) with a = x^p, b = y^p.
    constexpr double lo = -40.0;
    constexpr double hi = 40.0;
    auto value = [&](double la, double lb) {
        return two_point_threshold(std::exp(la / p), std::exp(lb / p), p, alpha);
    };
    double best = -1.0;
    double ba = 0;
    double bb = 0;
    const double h = (hi - lo) / (grid - 1);
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            const double la = lo + i * h;
            const double lb = lo + j * h;
            const double v = value(la, lb);
            if (v > best) {
                best = v;
                ba = la;
                bb = lb;
            }
        }
    // Pattern search refinement.
    double s = h;
    while (s > 1e-12) {
        bool moved = false;
        for (const auto& [da, db] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0},
                                    {1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}, {-1.0, 1.0}}) {
            const double la = std::clamp(ba + da * s, lo, hi);
            const double lb = std::clamp(bb + db * s, lo, hi);
            const double v = value(la, lb);
            if (v > best) {
                best = v;
                ba = la;
                bb = lb;
                moved = true;
            }
        }
        if (!moved) s /= 2.0;
    }
    return {best, std::exp(ba / p), std::exp(bb / p)};
}

RieszBound riesz_p2_bound(double t, int n, std::uint64_t seed, int iterations) {
    if (!(t > 0.0) || !std::isfinite(t)) throw ArgumentError("riesz_p2_bound: t must be positive");
    check_dimension(n, 20);
    if (n < 1) throw ArgumentError("riesz_p2_bound: n must be >= 1");
    if (iterations < 1) throw ArgumentError("riesz_p2_bound: iterations must be >= 1");

    RieszBound out;
    out.t = t;
    out.n = n;
    auto g = [t](double k) { return std::sqrt(k) * std::exp(-t * k); };
    for (int k = 1; k <= n; ++k) out.closed_form = std::max(out.closed_form, g(k));
    const double kstar = 1.0 / (2.0 * t);  // maximizer over real k
    out.closed_form_all_k = std::max({g(1.0), g(std::max(1.0, std::floor(kstar))), g(std::max(1.0, std::ceil(kstar)))});

    Rng rng(seed, 0x41E5);
    CubeFunction h = CubeFunction::generate(n, 1, [&](CubePoint) { return Vector<double>::Constant(1, rng.normal()); });
    auto normalize = [](CubeFunction& f) {
        f = centered(f);
        const double nr = f.values().norm();
        if (nr > 0) f.values() /= nr;
    };
    normalize(h);
    for (int it = 0; it < iterations; ++it) {
        CubeFunction next = heat_semigroup(laplacian(heat_semigroup(h, t)), t);
        normalize(next);
        h = std::move(next);
    }
    out.power_iteration = gradient_lp(heat_semigroup(h, t), 2.0) / lp_norm(h, 2.0, TargetNorm::euclidean());
    const double s = std::sqrt(std::expm1(2.0 * t));
    out.a2_closed = out.closed_form * s;
    out.a2_power = out.power_iteration * s;
    return out;
}

}  // namespace cubelsi

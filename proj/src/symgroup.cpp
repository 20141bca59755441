#include "cubelsi/symgroup.hpp"

#include <numeric>
#include <string>

#include "cubelsi/entropy.hpp"

namespace cubelsi {

namespace {

void check_degree(int n) {
    if (n < kMinPermDegree || n > kMaxPermDegree)
        throw ArgumentError("symmetric group degree must be in [" + std::to_string(kMinPermDegree) +
                            ", " + std::to_string(kMaxPermDegree) + "], got " + std::to_string(n));
}

void check_permutation(std::span<const int> perm) {
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[static_cast<std::size_t>(v)])
            throw ArgumentError("not a permutation of {0, ..., n-1}");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

std::vector<double> row_magnitudes(const CubeTable<double>& t, const TargetNorm& tn) {
    std::vector<double> out(static_cast<std::size_t>(t.rows()));
    for (Eigen::Index r = 0; r < t.rows(); ++r) out[static_cast<std::size_t>(r)] = tn(t.row(r));
    return out;
}

CubeTable<double> centered_table(const CubeTable<double>& t) {
    CubeTable<double> out = t;
    std::vector<double> col(static_cast<std::size_t>(t.rows()));
    for (Eigen::Index k = 0; k < t.cols(); ++k) {
        for (Eigen::Index r = 0; r < t.rows(); ++r) col[static_cast<std::size_t>(r)] = t(r, k);
        out.col(k).array() -= pairwise_mean(col);
    }
    return out;
}

double table_scale(const CubeTable<double>& t) {
    return t.size() == 0 ? 0.0 : t.cwiseAbs().maxCoeff();
}

InequalityReport make_report(std::string id, const PermFunction& f, const TargetNorm& tn,
                             double lhs, double rhs) {
    InequalityReport rep;
    rep.id = std::move(id);
    rep.params.p = 2.0;
    rep.target_q = tn.q();
    rep.n = f.degree();
    rep.d = f.target_dim();
    rep.lhs = lhs;
    rep.rhs_unit = rhs;
    const double scale = table_scale(f.values());
    rep.ratio = report_ratio(lhs, rhs, scale * scale, rep.id);
    return rep;
}

}  // namespace

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw ArgumentError("factorial argument out of range");
    std::uint64_t out = 1;
    for (int k = 2; k <= n; ++k) out *= static_cast<std::uint64_t>(k);
    return out;
}

std::uint64_t perm_rank(std::span<const int> perm) {
    check_permutation(perm);
    const int n = static_cast<int>(perm.size());
    std::uint64_t rank = 0;
    for (int j = 0; j < n; ++j) {
        std::uint64_t smaller = 0;
        for (int k = j + 1; k < n; ++k)
            if (perm[static_cast<std::size_t>(k)] < perm[static_cast<std::size_t>(j)]) ++smaller;
        rank = rank * static_cast<std::uint64_t>(n - j) + smaller;
    }
    return rank;
}

Permutation perm_unrank(int n, std::uint64_t rank) {
    if (n < 1 || n > 20) throw ArgumentError("permutation degree out of range");
    if (rank >= factorial(n)) throw ArgumentError("rank " + std::to_string(rank) + " >= n!");
    std::vector<int> code(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
        const auto base = static_cast<std::uint64_t>(n - j);
        code[static_cast<std::size_t>(j)] = static_cast<int>(rank % base);
        rank /= base;
    }
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    Permutation out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const auto pos = pool.begin() + code[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(j)] = *pos;
        pool.erase(pos);
    }
    return out;
}

int perm_sign(std::span<const int> perm) {
    check_permutation(perm);
    int inversions = 0;
    for (std::size_t j = 0; j < perm.size(); ++j)
        for (std::size_t k = j + 1; k < perm.size(); ++k)
            if (perm[k] < perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

Permutation compose(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) throw ArgumentError("compose: degrees differ");
    check_permutation(a);
    check_permutation(b);
    Permutation out(a.size());
    for (std::size_t j = 0; j < b.size(); ++j) out[j] = a[static_cast<std::size_t>(b[j])];
    return out;
}

PermFunction::PermFunction(int n, int d) : n_(n) {
    check_degree(n);
    if (d < 1) throw ArgumentError("target dimension must be >= 1");
    values_ = CubeTable<double>::Zero(static_cast<Eigen::Index>(factorial(n)), d);
}

PermFunction::PermFunction(int n, CubeTable<double> values) : n_(n), values_(std::move(values)) {
    check_degree(n);
    if (values_.rows() != static_cast<Eigen::Index>(factorial(n)))
        throw ArgumentError("PermFunction table must have n! rows");
    if (values_.cols() < 1) throw ArgumentError("target dimension must be >= 1");
    if (!values_.allFinite()) throw ArgumentError("PermFunction values must be finite");
}

PermFunction sign_function(int n) {
    return PermFunction::generate(n, 1, [](const Permutation& pi) {
        return Eigen::Matrix<double, 1, 1>(static_cast<double>(perm_sign(pi)));
    });
}

std::vector<std::vector<std::uint32_t>> transposition_table(int n) {
    check_degree(n);
    const std::uint64_t m = factorial(n);
    std::vector<std::pair<int, int>> taus;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) taus.emplace_back(a, b);
    std::vector<std::vector<std::uint32_t>> table(taus.size(), std::vector<std::uint32_t>(m));
    parallel_for(taus.size(), [&](std::size_t t) {
        const auto [a, b] = taus[t];
        for (std::uint64_t r = 0; r < m; ++r) {
            Permutation pi = perm_unrank(n, r);
            // tau o pi: the values a and b trade places.
            for (int& v : pi) v = v == a ? b : (v == b ? a : v);
            table[t][r] = static_cast<std::uint32_t>(perm_rank(pi));
        }
    });
    return table;
}

double transposition_dirichlet(const PermFunction& f, const TargetNorm& tn) {
    const auto table = transposition_table(f.degree());
    const std::uint64_t m = f.size();
    std::vector<double> per_tau(table.size());
    parallel_for(table.size(), [&](std::size_t t) {
        std::vector<double> terms(m);
        for (std::uint64_t r = 0; r < m; ++r) {
            const double dist = tn(f.row(r) - f.row(table[t][r]));
            terms[r] = dist * dist;
        }
        per_tau[t] = pairwise_mean(terms);
    });
    return pairwise_sum(per_tau);
}

InequalityReport evaluate_dsc(const PermFunction& f) {
    if (!f.is_scalar()) throw ArgumentError("evaluate_dsc needs a scalar function");
    const int n = f.degree();
    std::vector<double> squares(f.size());
    for (std::uint64_t r = 0; r < f.size(); ++r) squares[r] = f[r] * f[r];
    const double lhs = ent(squares);
    const double rhs = 6.0 * std::log(static_cast<double>(n)) / (n - 1) *
                       transposition_dirichlet(f, TargetNorm::euclidean());
    return make_report("sym-dsc", f, TargetNorm::euclidean(), lhs, rhs);
}

InequalityReport evaluate_kn(const PermFunction& f, const TargetNorm& tn, double m2) {
    if (!(m2 > 0.0)) throw ArgumentError("martingale type constant must be positive");
    const int n = f.degree();
    const auto mags = row_magnitudes(centered_table(f.values()), tn);
    const double l2 = lp_norm(mags, 2.0);
    const double rhs = 2.0 * m2 * m2 / (n - 1) * transposition_dirichlet(f, tn);
    return make_report("sym-kn", f, tn, l2 * l2, rhs);
}

InequalityReport evaluate_sym_lsi(const PermFunction& f, const TargetNorm& tn) {
    const int n = f.degree();
    const auto mags = row_magnitudes(centered_table(f.values()), tn);
    const double orl = orlicz_norm(mags, OrliczGauge(2.0, 1.0));
    const double rhs = std::log(static_cast<double>(n)) / (n - 1) * transposition_dirichlet(f, tn);
    return make_report("sym-lsi", f, tn, orl * orl, rhs);
}

DirichletKernel symmetric_group_kernel(int n, double weight) {
    if (!(weight >= 0.0) || !std::isfinite(weight)) throw ArgumentError("kernel weight must be finite and >= 0");
    const auto table = transposition_table(n);
    const std::uint64_t m = factorial(n);
    DirichletKernel k;
    k.mu.assign(m, 1.0 / static_cast<double>(m));
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(table.size() * m);
    const double w = weight / static_cast<double>(m);
    for (const auto& row : table)
        for (std::uint64_t r = 0; r < m; ++r)
            entries.emplace_back(static_cast<int>(r), static_cast<int>(row[r]), w);
    k.beta.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    k.beta.setFromTriplets(entries.begin(), entries.end());
    return k;
}

}  // namespace cubelsi

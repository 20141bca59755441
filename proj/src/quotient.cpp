#include "cubelsi/quotient.hpp"

#include <limits>
#include <numeric>

namespace cubelsi {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::uint32_t size) : parent_(size), size_(size, 1) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }

    std::uint32_t find(std::uint32_t i) {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

}  // namespace

EquivalenceRelation EquivalenceRelation::from_pairs(int n, const std::vector<PointPair>& pairs) {
    check_dimension(n);
    const std::uint32_t N = std::uint32_t{1} << n;
    UnionFind uf(N);
    for (const auto& [u, v] : pairs) {
        if (u >= N || v >= N)
            throw ArgumentError("relation pair (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") outside the cube");
        uf.unite(u, v);
    }
    // Class ids in order of first appearance, so they are contiguous.
    constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> id_of_root(N, kUnset);
    std::vector<std::uint32_t> class_of(N);
    std::uint32_t next = 0;
    for (std::uint32_t u = 0; u < N; ++u) {
        const std::uint32_t r = uf.find(u);
        if (id_of_root[r] == kUnset) id_of_root[r] = next++;
        class_of[u] = id_of_root[r];
    }
    return {n, std::move(class_of), next};
}

std::vector<std::vector<std::uint32_t>> EquivalenceRelation::members() const {
    std::vector<std::vector<std::uint32_t>> out(classes_);
    for (std::uint32_t u = 0; u < points(); ++u) out[class_of_[u]].push_back(u);
    return out;
}

EquivalenceRelation diagonal_relation(int n) { return EquivalenceRelation::from_pairs(n, {}); }

EquivalenceRelation antipodal_relation(int n) {
    check_dimension(n);
    return subgroup_relation(n, {(std::uint32_t{1} << n) - 1});
}

EquivalenceRelation subgroup_relation(int n, const std::vector<std::uint32_t>& masks) {
    check_dimension(n);
    const std::uint32_t N = std::uint32_t{1} << n;
    std::vector<PointPair> pairs;
    for (std::uint32_t mask : masks) {
        if (mask >= N) throw ArgumentError("subgroup mask outside the cube");
        for (std::uint32_t u = 0; u < N; ++u) pairs.emplace_back(u, u ^ mask);
    }
    return EquivalenceRelation::from_pairs(n, pairs);
}

EquivalenceRelation random_relation(int n, std::size_t pair_count, Rng& rng) {
    check_dimension(n);
    const std::uint64_t N = std::uint64_t{1} << n;
    std::vector<PointPair> pairs(pair_count);
    for (auto& pr : pairs)
        pr = {static_cast<std::uint32_t>(rng.below(N)), static_cast<std::uint32_t>(rng.below(N))};
    return EquivalenceRelation::from_pairs(n, pairs);
}

bool QuotientMetric::satisfies_metric_axioms() const {
    const Eigen::Index m = d_.rows();
    for (Eigen::Index a = 0; a < m; ++a) {
        if (d_(a, a) != 0.0) return false;
        for (Eigen::Index b = 0; b < m; ++b) {
            if (d_(a, b) != d_(b, a) || d_(a, b) < 0.0) return false;
            if (a != b && d_(a, b) == 0.0) return false;
            for (Eigen::Index c = 0; c < m; ++c)
                if (d_(a, c) > d_(a, b) + d_(b, c)) return false;
        }
    }
    return true;
}

QuotientMetric quotient_metric(const EquivalenceRelation& rel) {
    const std::uint32_t m = rel.classes();
    const double inf = std::numeric_limits<double>::infinity();
    Eigen::MatrixXd w = Eigen::MatrixXd::Constant(m, m, inf);
    for (std::uint32_t u = 0; u < rel.points(); ++u) {
        const std::uint32_t a = rel.class_of(u);
        for (std::uint32_t v = u; v < rel.points(); ++v) {
            const std::uint32_t b = rel.class_of(v);
            const double r = a == b ? 0.0 : hamming_distance(u, v);
            if (r < w(a, b)) w(a, b) = w(b, a) = r;
        }
    }
    for (std::uint32_t k = 0; k < m; ++k)
        for (std::uint32_t a = 0; a < m; ++a) {
            const double wak = w(a, k);
            for (std::uint32_t b = 0; b < m; ++b)
                if (wak + w(k, b) < w(a, b)) w(a, b) = wak + w(k, b);
        }
    QuotientMetric metric(std::move(w));
    if (!metric.satisfies_metric_axioms())
        throw std::logic_error("quotient_metric: result violates the metric axioms");
    return metric;
}

std::vector<std::uint32_t> boundary(const EquivalenceRelation& rel, int i) {
    check_direction(rel.dimension(), i);
    std::vector<std::uint32_t> out;
    for (std::uint32_t u = 0; u < rel.points(); ++u)
        if (rel.class_of(u) != rel.class_of(flip_index(u, i))) out.push_back(u);
    return out;
}

double boundary_measure(const EquivalenceRelation& rel, int i) {
    return static_cast<double>(boundary(rel, i).size()) / static_cast<double>(rel.points());
}

DistortionBound distortion_lower_bound(const EquivalenceRelation& rel, double p, double alpha,
                                       double type_constant, ProductSpaceMode mode) {
    if (!(p >= 1.0)) throw ArgumentError("distortion bound needs p >= 1");
    if (!(alpha >= 0.0)) throw ArgumentError("distortion bound needs alpha >= 0");
    if (!(type_constant > 0.0)) throw ArgumentError("type constant must be positive");
    const int n = rel.dimension();
    if (mode == ProductSpaceMode::Auto)
        mode = n <= kMaxProductCubeDimension ? ProductSpaceMode::Cube : ProductSpaceMode::ClassHistogram;
    if (mode == ProductSpaceMode::Cube && n > kMaxProductCubeDimension)
        throw CapabilityError("product-space cube mode needs n <= " +
                              std::to_string(kMaxProductCubeDimension));

    DistortionBound out;
    std::vector<double> measures(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) measures[static_cast<std::size_t>(i - 1)] = boundary_measure(rel, i);
    const double total = pairwise_sum(measures);
    if (total == 0.0) {
        out.degenerate = true;
        return out;
    }
    out.denominator = std::pow(total, 1.0 / p);

    const QuotientMetric metric = quotient_metric(rel);
    const OrliczGauge gauge(p, alpha);
    if (mode == ProductSpaceMode::Cube) {
        const std::uint32_t N = rel.points();
        CubeFunction distance(2 * n, 1);
        for (std::uint32_t delta = 0; delta < N; ++delta)
            for (std::uint32_t eps = 0; eps < N; ++eps)
                distance[eps | (delta << n)] = metric(rel.class_of(eps), rel.class_of(delta));
        out.numerator = orlicz_norm(distance, gauge, TargetNorm::euclidean());
    } else {
        const auto members = rel.members();
        const double N = static_cast<double>(rel.points());
        std::vector<double> values;
        std::vector<double> weights;
        for (std::uint32_t a = 0; a < rel.classes(); ++a)
            for (std::uint32_t b = 0; b < rel.classes(); ++b) {
                values.push_back(metric(a, b));
                weights.push_back(static_cast<double>(members[a].size()) *
                                  static_cast<double>(members[b].size()) / (N * N));
            }
        out.numerator = orlicz_norm(values, gauge, weights);
    }
    out.bound_without_c = out.numerator / (type_constant * out.denominator);
    return out;
}

CubeFunction lift(const EquivalenceRelation& rel, const CubeTable<double>& g) {
    if (g.rows() != static_cast<Eigen::Index>(rel.classes()))
        throw ArgumentError("lift: g must have one row per class");
    CubeFunction out(rel.dimension(), static_cast<int>(g.cols()));
    for (std::uint32_t u = 0; u < rel.points(); ++u) out.row(u) = g.row(rel.class_of(u));
    return out;
}

}  // namespace cubelsi

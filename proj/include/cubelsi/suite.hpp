#ifndef CUBELSI_SUITE_HPP
#define CUBELSI_SUITE_HPP

// Randomized property checks shared by the CLI `suite` command and the
// acceptance binary. Every check is deterministic in (seed, quick): trials
// draw from independent substreams and results are reduced in trial order,
// so the thread count never changes a report.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cubelsi {

struct SuiteOptions {
    std::uint64_t seed = 0;
    bool quick = false;
};

struct CheckResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
    double worst = 0;     // largest lhs/rhs (bounds) or largest error (identities)
    bool asserted = true; // false for report-only diagnostics
    std::string detail;

    bool passed() const { return !asserted || violations == 0; }
};

// Exactness of the cube core.
CheckResult check_wht_roundtrip(const SuiteOptions& o);
CheckResult check_semigroup_parseval(const SuiteOptions& o);
CheckResult check_multilinear_restriction(const SuiteOptions& o);

// Explicit constants.
CheckResult check_orlicz_entropy_lemma(const SuiteOptions& o);
CheckResult check_l2logl_equivalence(const SuiteOptions& o);
CheckResult check_elementary_inequality(const SuiteOptions& o);
CheckResult check_dsc(const SuiteOptions& o);
CheckResult check_kn(const SuiteOptions& o);
CheckResult check_two_point(const SuiteOptions& o);

// Proof machinery.
CheckResult check_m_control(const SuiteOptions& o);
CheckResult check_mh_plus(const SuiteOptions& o);
CheckResult check_median_bound(const SuiteOptions& o);
CheckResult check_kahane_step(const SuiteOptions& o);
CheckResult check_boost(const SuiteOptions& o);
/// Report-only: how often 2^{p-1}(C^p + 1) fails when C and the Poincare
/// constant are taken tight for the instance.
CheckResult check_boost_tight_instances(const SuiteOptions& o);
CheckResult check_beckner_monotonicity(const SuiteOptions& o);

// Exact identities and classical scalar inequalities.
CheckResult check_rademacher_identity(const SuiteOptions& o);
CheckResult check_scalar_poincare_gross(const SuiteOptions& o);
CheckResult check_spectral_gap_ratios(const SuiteOptions& o);
CheckResult check_kernel_cube_match(const SuiteOptions& o);

// Quotients, Riesz transform, symmetric group.
CheckResult check_quotient_diagonal(const SuiteOptions& o);
CheckResult check_quotient_random(const SuiteOptions& o);
CheckResult check_quotient_n1(const SuiteOptions& o);
CheckResult check_riesz_p2(const SuiteOptions& o);
CheckResult check_dirichlet_invariance(const SuiteOptions& o);
CheckResult check_sym_lsi_crosscheck(const SuiteOptions& o);

/// Extremal-search stability: TalagrandLSI (p = 2) and MainLSI (p = 2, l_2^3),
/// n = 2..6, five seeds, budget 10^4 (smaller when quick). Best ratios must
/// agree within 5% across seeds and be nondecreasing in n.
struct StabilityRow {
    std::string id;
    int n = 0;
    std::vector<double> ratios;  // one per seed
    double spread = 0;           // max / min - 1
};
CheckResult check_extremize_stability(const SuiteOptions& o, std::vector<StabilityRow>* rows = nullptr);

struct SuiteEntry {
    std::string name;
    std::function<CheckResult(const SuiteOptions&)> run;
    bool quick;  // included in quick mode
};

/// The full battery in a fixed order.
std::vector<SuiteEntry> suite_entries();

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool passed = true;
};

SuiteReport run_suite(const SuiteOptions& o);

nlohmann::ordered_json check_to_json(const CheckResult& c);

}  // namespace cubelsi

#endif  // CUBELSI_SUITE_HPP

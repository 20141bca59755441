// Acceptance battery: one PASS/FAIL line per criterion, indented details
// below it. Exit status is nonzero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cubelsi/random_functions.hpp"
#include "cubelsi/suite.hpp"

using namespace cubelsi;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double timed(F&& f) {
    const auto start = Clock::now();
    f();
    return seconds_since(start);
}

struct Criterion {
    bool ok = true;
    std::vector<std::string> details;

    void check(const CheckResult& c) {
        ok = ok && c.passed();
        std::ostringstream s;
        s << c.name << ": cases=" << c.cases << " violations=" << c.violations << " worst=" << c.worst
          << (c.asserted ? "" : " (report only)");
        details.push_back(s.str());
    }
    void require(bool cond, const std::string& what) {
        ok = ok && cond;
        details.push_back(what + (cond ? "" : "  <-- failed"));
    }
};

int failures = 0;

void report(int number, const std::string& name, const Criterion& c) {
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << number << "  " << name << '\n';
    for (const auto& d : c.details) std::cout << "        " << d << '\n';
    std::cout.flush();
    failures += !c.ok;
}

std::string fmt(double x) {
    std::ostringstream s;
    s << x;
    return s.str();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int shell(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main() {
    const SuiteOptions full{0, false};

    {
        Criterion c;
        const double secs = timed([&] {
            c.check(check_wht_roundtrip(full));
            c.check(check_semigroup_parseval(full));
            c.check(check_multilinear_restriction(full));
        });
        c.require(secs < 60, "runtime " + fmt(secs) + " s (limit 60 s)");
        report(1, "exactness core", c);
    }
    {
        Criterion c;
        c.check(check_orlicz_entropy_lemma(full));
        c.check(check_l2logl_equivalence(full));
        c.check(check_elementary_inequality(full));
        c.check(check_dsc(full));
        c.check(check_kn(full));
        c.check(check_two_point(full));
        report(2, "explicit constants", c);
    }
    {
        Criterion c;
        c.check(check_m_control(full));
        c.check(check_mh_plus(full));
        c.check(check_median_bound(full));
        c.check(check_kahane_step(full));
        c.check(check_boost(full));
        c.check(check_boost_tight_instances(full));
        c.check(check_beckner_monotonicity(full));
        report(3, "proof machinery", c);
    }
    {
        Criterion c;
        c.check(check_rademacher_identity(full));
        c.check(check_scalar_poincare_gross(full));
        c.check(check_spectral_gap_ratios(full));
        c.check(check_kernel_cube_match(full));
        report(4, "exact identities", c);
    }
    {
        Criterion c;
        std::vector<StabilityRow> rows;
        const double secs = timed([&] { c.check(check_extremize_stability(full, &rows)); });
        for (const auto& r : rows) {
            std::ostringstream s;
            s << r.id << " n=" << r.n << " spread=" << r.spread << " ratios:";
            for (double v : r.ratios) s << ' ' << v;
            c.details.push_back(s.str());
        }
        c.require(secs < 600, "runtime " + fmt(secs) + " s (limit 600 s)");
        report(5, "extremal-search stability", c);
    }
    {
        Criterion c;
        c.check(check_quotient_diagonal(full));
        c.check(check_quotient_random(full));
        c.check(check_quotient_n1(full));
        report(6, "quotients", c);
    }
    {
        Criterion c;
        c.check(check_riesz_p2(full));
        report(7, "Riesz transform at p = 2", c);
    }
    {
        Criterion c;
        Rng rng(2024);
        const auto f = random_gaussian_function(10, 3, rng);
        for (double p : {2.0, 3.0}) {
            double g = 0;
            const double secs = timed([&] { g = rademacher_gradient(f, p, TargetNorm(2)).value; });
            c.require(secs < 5 && g > 0, "exact G_p, p=" + fmt(p) + ", n=10, d=3, q=2: " + fmt(secs) + " s (limit 5 s)");
        }
        const auto w = random_gaussian_function(20, 1, rng);
        double coeff = 0;
        const double wht = timed([&] { coeff = walsh_transform(w)[0]; });
        c.require(wht < 1 && std::isfinite(coeff), "scalar WHT n=20: " + fmt(wht) + " s (limit 1 s)");
        const auto pf = random_perm_function(8, 2, rng);
        double dir = 0;
        const double dsecs = timed([&] { dir = transposition_dirichlet(pf, TargetNorm(2)); });
        c.require(dsecs < 30 && dir > 0, "Dirichlet form n=8, d=2: " + fmt(dsecs) + " s (limit 30 s)");
        report(8, "performance", c);
    }
    {
        Criterion c;
        const fs::path dir = fs::temp_directory_path() / ("cubelsi_accept_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        const std::string cli = CUBELSI_CLI_PATH;
        std::vector<std::string> outputs;
        for (int threads : {1, 4}) {
            const fs::path out = dir / ("suite_" + std::to_string(threads) + ".json");
            const int code = shell("env CUBELSI_THREADS=" + std::to_string(threads) + " " + cli +
                                   " suite --quick --no-timestamp --seed 0 --output " + out.string());
            c.require(code == 0, "suite --quick with " + std::to_string(threads) + " thread(s): exit " + std::to_string(code));
            outputs.push_back(slurp(out));
        }
        c.require(!outputs[0].empty() && outputs[0] == outputs[1],
                  "reports byte-identical (" + std::to_string(outputs[0].size()) + " bytes)");
        fs::remove_all(dir);
        report(9, "determinism across thread counts", c);
    }

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion/criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}

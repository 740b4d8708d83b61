// End-to-end acceptance battery. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "opcheck/discretize.hpp"
#include "opcheck/generators.hpp"
#include "opcheck/matcore.hpp"
#include "opcheck/runner.hpp"

using namespace opcheck;

namespace {

int g_failures = 0;

void report(const char* label, bool ok, const std::string& detail = "") {
    std::printf("%s: %s%s%s\n", ok ? "PASS" : "FAIL", label,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

// 1. full battery: all suites, 500 trials, dims 2..8, seed 42, zero failures,
//    under 120 s wall time
void criterion_full_battery() {
    RunConfig config;
    apply_suite_tokens(config, {"all"});
    config.trials = 500;
    config.dim_lo = 2;
    config.dim_hi = 8;
    config.master_seed = 42;
    const auto start = std::chrono::steady_clock::now();
    const SuiteReport rep = run(config);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    size_t failures = 0;
    for (const auto& p : rep.properties) failures += p.failures.size();
    report("full battery, 500 trials per property, 0 failures, < 120 s",
           rep.pass && failures == 0 && secs < 120.0,
           std::to_string(failures) + " failures, " + fmt(secs) + " s");
}

// 2. kernel oracles on 200 random Hermitian matrices, n <= 16
void criterion_kernel_oracles() {
    double worst_recon = 0, worst_sqrt = 0, worst_abs = 0;
    Prng dims(0x6f7261636cULL);
    for (uint64_t k = 0; k < 200; ++k) {
        const int n = dims.next_int(2, 16);
        const ComplexMatrix m = gen({GenKind::Hermitian, n, 0xace0 + k, 2.0});
        const double mnorm = std::max(frobenius_norm(m), 1e-300);

        const HermEigen e = hermitian_eigh(m);
        ComplexMatrix recon(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Complex acc = 0;
                for (int c = 0; c < n; ++c)
                    acc += e.eigenvectors(i, c) * e.eigenvalues[static_cast<size_t>(c)] *
                           std::conj(e.eigenvectors(j, c));
                recon(i, j) = acc;
            }
        worst_recon = std::max(worst_recon, frobenius_norm(sub(recon, m)) / mnorm);

        const ComplexMatrix p = gen({GenKind::Psd, n, 0xbace + k, 2.0});
        const ComplexMatrix r = func_hermitian(p, HermFunc::Sqrt);
        worst_sqrt = std::max(worst_sqrt, frobenius_norm(sub(mul(r, r), p)) /
                                              std::max(op_norm(p), 1e-300));

        Prng drng(0xd1a6 + k);
        std::vector<Complex> d(static_cast<size_t>(n));
        for (auto& z : d)
            z = Complex(2.0 * drng.next_uniform() - 1.0, 2.0 * drng.next_uniform() - 1.0);
        std::vector<Complex> mods(d.size());
        for (size_t i = 0; i < d.size(); ++i) mods[i] = std::abs(d[i]);
        worst_abs = std::max(
            worst_abs, frobenius_norm(sub(matrix_abs(ComplexMatrix::diag(d)),
                                          ComplexMatrix::diag(mods))));
    }
    report("kernel oracles: reconstruction 1e-10, sqrt 1e-9, diagonal |M| 1e-12",
           worst_recon <= 1e-10 && worst_sqrt <= 1e-9 && worst_abs <= 1e-12,
           "recon " + fmt(worst_recon) + ", sqrt " + fmt(worst_sqrt) + ", abs " +
               fmt(worst_abs));
}

// 3. the six fixed fixtures confirm their advertised verdicts
void criterion_counterexamples() {
    const auto registry = counterexample_registry();
    bool ok = registry.size() == 6;
    std::string bad;
    for (const auto& r : registry)
        if (!r.confirmed) {
            ok = false;
            bad += (bad.empty() ? "" : ", ") + r.name;
        }
    report("all six counterexample fixtures confirmed", ok,
           ok ? std::to_string(registry.size()) + " fixtures" : "unconfirmed: " + bad);
}

// 4. discrete right-inverse identity D_n V_n = I
void criterion_right_inverse() {
    bool ok = true;
    double worst = 0;
    for (const int n : {8, 64, 256, 512}) {
        const double defect = frobenius_norm(sub(
            mul(derivative_matrix(n).matrix, volterra_matrix(n).matrix),
            ComplexMatrix::identity(n)));
        worst = std::max(worst, defect / n);
        if (defect > n * 1e-13) ok = false;
    }
    report("derivative is the exact discrete left inverse of the integral operator",
           ok, "worst defect/n " + fmt(worst));
}

// 5. lambda_max(V*V) within 1% of 4/pi^2 at n = 200
void criterion_volterra_spectrum() {
    const double target = 4.0 / (std::numbers::pi * std::numbers::pi);
    const GridOperator v = volterra_matrix(200);
    const double lam =
        hermitian_eigh(symmetrize(mul(adjoint(v.matrix), v.matrix))).eigenvalues.back();
    const double rel = std::abs(lam - target) / target;
    report("integral operator squared norm within 1% of 4/pi^2 at n = 200",
           rel <= 0.01, "rel err " + fmt(rel));
}

// 6. Laplacian lambda_min within 0.2% of closed form at n = 200, and
//    sigma_min(laplacian + V*V) >= 9 for all tested n >= 50
void criterion_laplacian() {
    const int n = 200;
    const double h = 1.0 / n;
    const double s = std::sin(std::numbers::pi * h / 2.0);
    const double closed = 4.0 / (h * h) * s * s;
    const double lam_min = hermitian_eigh(dirichlet_laplacian(n)).eigenvalues.front();
    const double rel = std::abs(lam_min - closed) / closed;

    double worst_sigma = std::numeric_limits<double>::infinity();
    for (const int m : {50, 100, 200})
        worst_sigma = std::min(worst_sigma, min_singular_value(schrodinger_like(m)));

    report("Dirichlet Laplacian closed form (0.2%) and perturbed operator floor (>= 9)",
           rel <= 0.002 && worst_sigma >= 9.0,
           "rel err " + fmt(rel) + ", min sigma " + fmt(worst_sigma));
}

// 7. proof-chain margin on the headline inequality
void criterion_main_margin() {
    RunConfig config;
    config.trials = 500;
    config.master_seed = 42;
    const PropertyReport rep = run_property(PropertyId::MainTheorem, config);
    const bool have = rep.min_margins.count("main_margin_rel") == 1;
    const double margin = have ? rep.min_margins.at("main_margin_rel") : -1.0;
    report("headline inequality margin >= -1e-8 across 500 trials",
           rep.failures.empty() && have && margin >= -1e-8,
           "min margin " + fmt(margin));
}

// 8. inverse quadratic-form inequality on 500 constructed posdef products
void criterion_inverse_form() {
    RunConfig config;
    config.trials = 500;
    config.master_seed = 42;
    const PropertyReport rep = run_property(PropertyId::ProductPositive, config);
    const bool have = rep.min_margins.count("inverse_form_gap") == 1;
    const double gap = have ? rep.min_margins.at("inverse_form_gap") : -1.0;
    report("inverse quadratic-form inequality holds to 1e-8 across 500 trials",
           rep.failures.empty() && have && gap >= -1e-8, "min gap " + fmt(gap));
}

// 9. determinism: repeated runs byte-identical, worker count irrelevant
void criterion_determinism() {
    RunConfig config;
    apply_suite_tokens(config, {"all", "discretize"});
    config.trials = 60;
    config.master_seed = 4242;
    config.discretize_ns = {8, 16, 32};

    const std::string first = report_to_canonical_json(run(config));
    const std::string second = report_to_canonical_json(run(config));
    config.workers = 1;
    const std::string serial = report_to_canonical_json(run(config));
    config.workers = 8;
    const std::string parallel = report_to_canonical_json(run(config));
    report("canonical reports byte-identical across reruns and worker counts",
           first == second && first == serial && first == parallel);
}

// 10. tol_psd = 0 forces a failure whose witness replays bit-identically
void criterion_fault_injection() {
    RunConfig config;
    config.trials = 400;
    config.dim_lo = 4;
    config.dim_hi = 8;
    config.master_seed = 42;
    config.tol.tol_psd = 0.0;

    PropertyReport rep;
    PropertyId id = PropertyId::SqrtMonotone;
    for (PropertyId candidate : {PropertyId::SqrtMonotone, PropertyId::SqrtSubadditive,
                                 PropertyId::AbsParallelogram}) {
        rep = run_property_serial(candidate, config);
        if (!rep.failures.empty()) {
            id = candidate;
            break;
        }
    }
    if (rep.failures.empty()) {
        report("zero psd tolerance produces a bit-identically replayable failure", false,
               "no failure injected");
        return;
    }
    const Witness& w = rep.failures.front();
    const TrialContext replay{.seed = w.seed, .dim = w.dim, .tol = config.tol};
    const TrialResult r = run_trial(id, replay);
    bool ok = r.status == TrialStatus::Fail && r.witness.message == w.message &&
              r.witness.inputs.size() == w.inputs.size() &&
              r.witness.margins.size() == w.margins.size();
    if (ok)
        for (size_t i = 0; i < w.inputs.size(); ++i)
            if (!(r.witness.inputs[i].second == w.inputs[i].second)) ok = false;
    if (ok)
        for (size_t i = 0; i < w.margins.size(); ++i)
            if (r.witness.margins[i].second != w.margins[i].second) ok = false;
    report("zero psd tolerance produces a bit-identically replayable failure", ok,
           std::to_string(rep.failures.size()) + " injected failures");
}

}  // namespace

int main() {
    criterion_full_battery();
    criterion_kernel_oracles();
    criterion_counterexamples();
    criterion_right_inverse();
    criterion_volterra_spectrum();
    criterion_laplacian();
    criterion_main_margin();
    criterion_inverse_form();
    criterion_determinism();
    criterion_fault_injection();
    std::printf("%d of 10 criteria passed\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}

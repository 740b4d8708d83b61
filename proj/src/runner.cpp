#include "opcheck/runner.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "opcheck/generators.hpp"
#include "opcheck/json_io.hpp"

namespace opcheck {

void apply_suite_tokens(RunConfig& config, const std::vector<std::string>& tokens) {
    for (const std::string& tok : tokens) {
        if (tok == "all") {
            config.suites = all_properties();
            config.run_counterexamples = true;
        } else if (tok == "counterexamples") {
            config.run_counterexamples = true;
        } else if (tok == "discretize") {
            config.run_discretize = true;
        } else if (auto id = property_from_name(tok)) {
            config.suites.push_back(*id);
        } else {
            throw KernelError(ErrorKind::InvalidArgument, "unknown suite name: " + tok);
        }
    }
    std::sort(config.suites.begin(), config.suites.end());
    config.suites.erase(std::unique(config.suites.begin(), config.suites.end()),
                        config.suites.end());
}

namespace {

void validate(const RunConfig& c) {
    if (c.trials < 1) throw KernelError(ErrorKind::InvalidArgument, "trials must be >= 1");
    if (c.dim_lo < 1 || c.dim_hi > 64 || c.dim_lo > c.dim_hi)
        throw KernelError(ErrorKind::InvalidArgument, "dims must satisfy 1 <= lo <= hi <= 64");
}

TrialContext make_context(PropertyId id, const RunConfig& c, int trial) {
    TrialContext ctx;
    ctx.seed = mix_seed(c.master_seed, static_cast<uint64_t>(id) + 1,
                        static_cast<uint64_t>(trial));
    Prng dim_rng(mix_seed(ctx.seed, 0x64696dULL, 0));
    ctx.dim = dim_rng.next_int(c.dim_lo, c.dim_hi);
    ctx.tol = c.tol;
    return ctx;
}

PropertyReport aggregate(PropertyId id, const RunConfig& c,
                         const std::vector<TrialResult>& results) {
    PropertyReport rep;
    rep.property = id;
    rep.trials = c.trials;
    for (const TrialResult& r : results) {
        switch (r.status) {
            case TrialStatus::Pass: ++rep.passes; break;
            case TrialStatus::Vacuous: ++rep.vacuous; break;
            case TrialStatus::Fault:
                ++rep.vacuous;
                ++rep.faults;
                break;
            case TrialStatus::Fail: rep.failures.push_back(r.witness); break;
        }
        if (r.status == TrialStatus::Pass) {
            for (const auto& [key, value] : r.margins) {
                auto [it_min, fresh_min] = rep.min_margins.try_emplace(key, value);
                if (!fresh_min) it_min->second = std::min(it_min->second, value);
                auto [it_max, fresh_max] = rep.max_margins.try_emplace(key, value);
                if (!fresh_max) it_max->second = std::max(it_max->second, value);
            }
        }
    }
    return rep;
}

}  // namespace

PropertyReport run_property_serial(PropertyId id, const RunConfig& config) {
    validate(config);
    std::vector<TrialResult> results(static_cast<size_t>(config.trials));
    for (int t = 0; t < config.trials; ++t)
        results[static_cast<size_t>(t)] = run_trial(id, make_context(id, config, t));
    return aggregate(id, config, results);
}

PropertyReport run_property(PropertyId id, const RunConfig& config) {
    validate(config);
    if (config.workers == 1) return run_property_serial(id, config);
    std::vector<TrialResult> results(static_cast<size_t>(config.trials));
#ifdef _OPENMP
    const int threads = config.workers > 0 ? config.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (int t = 0; t < config.trials; ++t)
        results[static_cast<size_t>(t)] = run_trial(id, make_context(id, config, t));
    return aggregate(id, config, results);
}

SuiteReport run(const RunConfig& config) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.config = config;
    for (PropertyId id : config.suites)
        report.properties.push_back(run_property(id, config));
    std::sort(report.properties.begin(), report.properties.end(),
              [](const PropertyReport& a, const PropertyReport& b) {
                  return a.property < b.property;
              });
    if (config.run_counterexamples)
        report.counterexamples = counterexample_registry(config.tol);
    if (config.run_discretize)
        report.discretize_table = convergence_study(config.discretize_ns);

    report.pass = true;
    for (const PropertyReport& p : report.properties)
        if (!p.failures.empty()) report.pass = false;
    for (const CounterexampleResult& c : report.counterexamples)
        if (!c.confirmed) report.pass = false;

    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_to_canonical_json(const SuiteReport& report) {
    using nlohmann::json;
    json suites = json::array();
    for (PropertyId id : report.config.suites) suites.push_back(property_name(id));
    // worker count and wall time are execution details, not part of the
    // canonical body
    json config = {{"suites", std::move(suites)},
                   {"counterexamples", report.config.run_counterexamples},
                   {"discretize", report.config.run_discretize},
                   {"trials", report.config.trials},
                   {"dims", {report.config.dim_lo, report.config.dim_hi}},
                   {"seed", report.config.master_seed},
                   {"tolerances", tolerances_to_json(report.config.tol)}};
    json properties = json::array();
    for (const PropertyReport& p : report.properties)
        properties.push_back(property_report_to_json(p));
    json body = {{"config", std::move(config)},
                 {"properties", std::move(properties)},
                 {"verdict", report.pass ? "pass" : "fail"}};
    if (report.config.run_counterexamples)
        body["counterexamples"] = counterexamples_to_json(report.counterexamples);
    if (report.config.run_discretize) {
        json rows = json::array();
        for (const ConvergenceRow& r : report.discretize_table)
            rows.push_back({{"n", r.n},
                            {"lambda_min_laplacian", r.lambda_min_laplacian},
                            {"lambda_max_volterra_sq", r.lambda_max_volterra_sq},
                            {"sigma_min_sum", r.sigma_min_sum}});
        body["discretize"] = std::move(rows);
    }
    return body.dump(2) + "\n";
}

std::string report_to_text(const SuiteReport& report) {
    std::ostringstream out;
    for (const PropertyReport& p : report.properties) {
        out << property_name(p.property) << ": trials=" << p.trials
            << " passes=" << p.passes << " vacuous=" << p.vacuous
            << " failures=" << p.failures.size();
        if (p.faults > 0) out << " faults=" << p.faults;
        out << '\n';
        for (const Witness& w : p.failures)
            out << "  FAIL seed=" << w.seed << " dim=" << w.dim << " " << w.message << '\n';
    }
    for (const CounterexampleResult& c : report.counterexamples) {
        out << "counterexample " << c.name << ": "
            << (c.confirmed ? "confirmed" : "NOT CONFIRMED") << '\n';
        if (!c.confirmed)
            for (const auto& cl : c.claims)
                if (cl.expected != cl.actual)
                    out << "  " << cl.description << ": expected " << cl.expected
                        << ", got " << cl.actual << '\n';
    }
    if (!report.discretize_table.empty()) out << convergence_csv(report.discretize_table);
    out << "verdict: " << (report.pass ? "pass" : "fail") << '\n';
    out.precision(3);
    out << "wall time: " << report.wall_time_s << " s\n";
    return out.str();
}

}  // namespace opcheck

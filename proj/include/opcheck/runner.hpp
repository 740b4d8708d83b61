#pragma once

#include <string>

#include "opcheck/discretize.hpp"
#include "opcheck/theorems.hpp"

namespace opcheck {

struct RunConfig {
    std::vector<PropertyId> suites;         // property suites to run
    bool run_counterexamples = false;       // fixed fixture registry
    bool run_discretize = false;            // grid convergence study
    std::vector<int> discretize_ns{8, 50, 100, 200};
    int trials = 500;
    int dim_lo = 2;
    int dim_hi = 8;
    uint64_t master_seed = 42;
    Tolerances tol;
    /// 0 = all available threads, 1 = serial reference path. Reports are
    /// identical for any worker count.
    int workers = 0;
};

struct SuiteReport {
    RunConfig config;
    std::vector<PropertyReport> properties;
    std::vector<CounterexampleResult> counterexamples;
    std::vector<ConvergenceRow> discretize_table;
    double wall_time_s = 0;  // excluded from the canonical JSON body
    bool pass = false;
};

/// Parse suite tokens ("all", property names, "counterexamples", "discretize")
/// into a config. Throws KernelError(InvalidArgument) naming the bad token.
void apply_suite_tokens(RunConfig& config, const std::vector<std::string>& tokens);

/// Runs the trial loop for one property. The OpenMP path and the serial
/// reference path write to the same per-trial slots, so the aggregated report
/// is independent of the worker count.
PropertyReport run_property(PropertyId id, const RunConfig& config);
PropertyReport run_property_serial(PropertyId id, const RunConfig& config);

SuiteReport run(const RunConfig& config);

/// Canonical JSON body (deterministic: no timestamps, reports sorted by
/// property id). Two runs with identical config produce identical bytes.
std::string report_to_canonical_json(const SuiteReport& report);
/// Human-readable rendering of the canonical body, plus wall time.
std::string report_to_text(const SuiteReport& report);

}  // namespace opcheck

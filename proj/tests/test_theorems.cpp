#include <doctest.h>

#include <set>

#include "opcheck/matcore.hpp"
#include "opcheck/runner.hpp"
#include "opcheck/theorems.hpp"

using namespace opcheck;

TEST_CASE("property name round trip and explain coverage") {
    const auto props = all_properties();
    REQUIRE(props.size() == static_cast<size_t>(kNumProperties));
    std::set<std::string> names;
    for (PropertyId id : props) {
        const std::string name = property_name(id);
        CHECK(name != "unknown");
        CHECK(names.insert(name).second);
        REQUIRE(property_from_name(name).has_value());
        CHECK(*property_from_name(name) == id);
        CHECK(explain(id).size() > 40);
    }
    CHECK_FALSE(property_from_name("not_a_property").has_value());
}

TEST_CASE("run_trial is deterministic for identical contexts") {
    for (PropertyId id : all_properties()) {
        const TrialContext ctx{.seed = 0xabcdef12u + static_cast<uint64_t>(id),
                               .dim = 5,
                               .tol = {}};
        const TrialResult r1 = run_trial(id, ctx);
        const TrialResult r2 = run_trial(id, ctx);
        CHECK(r1.status == r2.status);
        REQUIRE(r1.margins.size() == r2.margins.size());
        for (size_t i = 0; i < r1.margins.size(); ++i) {
            CHECK(r1.margins[i].first == r2.margins[i].first);
            CHECK(r1.margins[i].second == r2.margins[i].second);
        }
    }
}

TEST_CASE("every property passes a short randomized battery") {
    RunConfig config;
    config.trials = 60;
    config.dim_lo = 2;
    config.dim_hi = 6;
    config.master_seed = 20240817;
    for (PropertyId id : all_properties()) {
        const PropertyReport rep = run_property_serial(id, config);
        INFO("property ", property_name(id));
        CHECK(rep.failures.empty());
        CHECK(rep.faults == 0);
        // the battery must actually exercise the conclusion, not skip it
        CHECK(rep.passes >= rep.trials / 2);
    }
}

TEST_CASE("counterexample registry confirms all six fixtures") {
    const auto registry = counterexample_registry();
    REQUIRE(registry.size() == 6);
    const std::set<std::string> expected = {
        "negated_operator",         "one_minus_i_rotation",
        "squares_cancel",           "phase_multiplication",
        "pythagorean_identity",     "multiplication_grid_touching_zero",
    };
    std::set<std::string> seen;
    for (const auto& r : registry) {
        INFO("fixture ", r.name);
        seen.insert(r.name);
        CHECK(r.confirmed);
        CHECK(!r.claims.empty());
        for (const auto& c : r.claims) CHECK(c.expected == c.actual);
    }
    CHECK(seen == expected);
}

TEST_CASE("main theorem margin stays above the round-off floor") {
    RunConfig config;
    config.trials = 120;
    config.master_seed = 7;
    const PropertyReport rep = run_property_serial(PropertyId::MainTheorem, config);
    CHECK(rep.failures.empty());
    REQUIRE(rep.min_margins.count("main_margin_rel") == 1);
    CHECK(rep.min_margins.at("main_margin_rel") >= -1e-8);
}

TEST_CASE("zero psd tolerance injects failures with replayable witnesses") {
    RunConfig config;
    config.trials = 400;
    config.dim_lo = 4;
    config.dim_hi = 8;
    config.master_seed = 42;
    config.tol.tol_psd = 0.0;  // removes the guard band, round-off turns into failures

    PropertyReport rep;
    PropertyId failing_id = PropertyId::SqrtMonotone;
    for (PropertyId id : {PropertyId::SqrtMonotone, PropertyId::SqrtSubadditive,
                          PropertyId::AbsParallelogram}) {
        rep = run_property_serial(id, config);
        if (!rep.failures.empty()) {
            failing_id = id;
            break;
        }
    }
    REQUIRE(!rep.failures.empty());

    const Witness& w = rep.failures.front();
    const TrialContext replay{.seed = w.seed, .dim = w.dim, .tol = config.tol};
    const TrialResult r1 = run_trial(failing_id, replay);
    const TrialResult r2 = run_trial(failing_id, replay);
    REQUIRE(r1.status == TrialStatus::Fail);
    CHECK(r1.witness.message == w.message);
    CHECK(r1.witness.message == r2.witness.message);
    REQUIRE(r1.witness.inputs.size() == w.inputs.size());
    for (size_t i = 0; i < w.inputs.size(); ++i) {
        CHECK(r1.witness.inputs[i].first == w.inputs[i].first);
        CHECK(r1.witness.inputs[i].second == w.inputs[i].second);   // bit-identical
        CHECK(r1.witness.inputs[i].second == r2.witness.inputs[i].second);
    }
    REQUIRE(r1.witness.margins.size() == w.margins.size());
    for (size_t i = 0; i < w.margins.size(); ++i)
        CHECK(r1.witness.margins[i].second == w.margins[i].second);
}

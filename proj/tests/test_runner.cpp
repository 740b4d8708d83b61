#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "opcheck/runner.hpp"

using namespace opcheck;

namespace {

RunConfig quick_config() {
    RunConfig config;
    config.trials = 40;
    config.dim_lo = 2;
    config.dim_hi = 5;
    config.master_seed = 99;
    return config;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(OPCHECK_CLI_PATH) + " " + args;
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
#ifdef _WIN32
    return rc;
#else
    return WEXITSTATUS(rc);
#endif
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("apply_suite_tokens") {
    RunConfig c;
    apply_suite_tokens(c, {"all"});
    CHECK(c.suites.size() == static_cast<size_t>(kNumProperties));
    CHECK(c.run_counterexamples);

    RunConfig c2;
    apply_suite_tokens(c2, {"main_theorem", "product_positive", "main_theorem"});
    CHECK(c2.suites.size() == 2);  // duplicates collapse
    CHECK_FALSE(c2.run_counterexamples);

    RunConfig c3;
    apply_suite_tokens(c3, {"discretize"});
    CHECK(c3.run_discretize);
    CHECK(c3.suites.empty());

    RunConfig c4;
    CHECK_THROWS_WITH_AS(apply_suite_tokens(c4, {"no_such_suite"}),
                         doctest::Contains("no_such_suite"), KernelError);
}

TEST_CASE("config validation") {
    RunConfig bad = quick_config();
    bad.trials = 0;
    CHECK_THROWS_AS(run_property_serial(PropertyId::MainTheorem, bad), KernelError);
    bad = quick_config();
    bad.dim_lo = 5;
    bad.dim_hi = 2;
    CHECK_THROWS_AS(run_property_serial(PropertyId::MainTheorem, bad), KernelError);
}

TEST_CASE("serial and parallel paths produce identical canonical reports") {
    RunConfig config = quick_config();
    apply_suite_tokens(config, {"all"});

    config.workers = 1;
    const std::string serial = report_to_canonical_json(run(config));
    config.workers = 8;
    const std::string parallel = report_to_canonical_json(run(config));
    config.workers = 0;
    const std::string defaulted = report_to_canonical_json(run(config));

    CHECK(serial == parallel);
    CHECK(serial == defaulted);
}

TEST_CASE("two identical runs are byte-identical") {
    RunConfig config = quick_config();
    apply_suite_tokens(config, {"main_theorem", "counterexamples", "discretize"});
    config.discretize_ns = {8, 16};
    CHECK(report_to_canonical_json(run(config)) == report_to_canonical_json(run(config)));
}

TEST_CASE("canonical report content") {
    RunConfig config = quick_config();
    apply_suite_tokens(config, {"main_theorem"});
    const SuiteReport report = run(config);
    CHECK(report.pass);
    const std::string body = report_to_canonical_json(report);
    CHECK(body.find("\"verdict\": \"pass\"") != std::string::npos);
    CHECK(body.find("main_theorem") != std::string::npos);
    CHECK(body.find("wall") == std::string::npos);  // no timing in the canonical body

    const std::string text = report_to_text(report);
    CHECK(text.find("main_theorem") != std::string::npos);
    CHECK(text.find("wall time") != std::string::npos);
}

TEST_CASE("cli exit codes and output") {
    const auto tmp = std::filesystem::temp_directory_path();

    const auto out_path = tmp / "opcheck_cli_smoke.json";
    CHECK(run_cli("run --suites main_theorem --trials 20 --seed 3 --out " +
                  out_path.string() + " > /dev/null 2>&1") == 0);
    const std::string body = slurp(out_path);
    CHECK(body.find("\"verdict\": \"pass\"") != std::string::npos);

    // identical invocations write identical bytes
    const auto out_path2 = tmp / "opcheck_cli_smoke2.json";
    CHECK(run_cli("run --suites main_theorem --trials 20 --seed 3 --out " +
                  out_path2.string() + " > /dev/null 2>&1") == 0);
    CHECK(body == slurp(out_path2));

    // config errors exit 2
    CHECK(run_cli("run --suites bogus_suite > /dev/null 2>&1") == 2);
    CHECK(run_cli("run --dims oops > /dev/null 2>&1") == 2);
    CHECK(run_cli("run --format yaml > /dev/null 2>&1") == 2);
    CHECK(run_cli("run --tol nope=1 > /dev/null 2>&1") == 2);
    CHECK(run_cli("> /dev/null 2>&1") == 2);  // missing subcommand

    // failure reports exit 1: zero psd tolerance forces counterexample-free
    // round-off failures somewhere in the battery
    CHECK(run_cli("run --suites sqrt_monotone sqrt_subadditive abs_parallelogram"
                  " --trials 400 --dims 4..8 --seed 42 --tol tol_psd=0"
                  " > /dev/null 2>&1") == 1);

    // explain
    CHECK(run_cli("explain main_theorem > /dev/null 2>&1") == 0);
    CHECK(run_cli("explain nonsense > /dev/null 2>&1") == 2);

    // OPCHECK_SEED applies when --seed is absent, --seed wins otherwise
    const auto env_path = tmp / "opcheck_cli_env.json";
    CHECK(run_cli("run --suites main_theorem --trials 20 --seed 5 --out " +
                  env_path.string() + " > /dev/null 2>&1") == 0);
    const auto env_path2 = tmp / "opcheck_cli_env2.json";
    const std::string env_cmd = std::string("OPCHECK_SEED=5 ") + OPCHECK_CLI_PATH +
                                " run --suites main_theorem --trials 20 --out " +
                                env_path2.string() + " > /dev/null 2>&1";
    const int env_rc = std::system(env_cmd.c_str());
    REQUIRE(env_rc != -1);
    CHECK(WEXITSTATUS(env_rc) == 0);
    CHECK(slurp(env_path) == slurp(env_path2));
}

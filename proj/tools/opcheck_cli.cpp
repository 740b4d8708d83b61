#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "opcheck/runner.hpp"

namespace {

int parse_tol_override(opcheck::Tolerances& tol, const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) return 1;
    const std::string key = kv.substr(0, eq);
    double value = 0;
    try {
        value = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
        return 1;
    }
    if (key == "tol_herm") tol.tol_herm = value;
    else if (key == "tol_psd") tol.tol_psd = value;
    else if (key == "tol_inv") tol.tol_inv = value;
    else if (key == "tol_spec") tol.tol_spec = value;
    else if (key == "tol_eq") tol.tol_eq = value;
    else if (key == "guard") tol.guard = value;
    else return 1;
    return 0;
}

bool parse_dims(const std::string& spec, int& lo, int& hi) {
    const auto sep = spec.find("..");
    if (sep == std::string::npos) return false;
    try {
        lo = std::stoi(spec.substr(0, sep));
        hi = std::stoi(spec.substr(sep + 2));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator-inequality property harness"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "run property suites");
    std::vector<std::string> suites{"all"};
    std::string dims = "2..8";
    std::string format = "json";
    std::string out_path;
    std::vector<std::string> tol_overrides;
    std::vector<int> discretize_ns;
    opcheck::RunConfig config;
    bool seed_given = false;
    run_cmd->add_option("--suites", suites,
                        "suite names: all, property ids, counterexamples, discretize");
    run_cmd->add_option("--trials", config.trials, "trials per property");
    run_cmd->add_option("--dims", dims, "inclusive dimension range LO..HI");
    run_cmd->add_option("--seed", config.master_seed, "master seed")
        ->each([&seed_given](const std::string&) { seed_given = true; });
    run_cmd->add_option("--tol", tol_overrides, "tolerance override KEY=VAL (repeatable)");
    run_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    run_cmd->add_option("--out", out_path, "write the report to a file");
    run_cmd->add_option("--workers", config.workers, "worker threads (0 = all, 1 = serial)");
    run_cmd->add_option("--discretize-ns", discretize_ns, "grid sizes for the discretize suite");

    auto* explain_cmd = app.add_subcommand("explain", "describe one property check");
    std::string property;
    explain_cmd->add_option("property", property, "property id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (explain_cmd->parsed()) {
        const auto id = opcheck::property_from_name(property);
        if (!id) {
            std::cerr << "unknown property: " << property << "\n";
            return 2;
        }
        std::cout << opcheck::explain(*id) << "\n";
        return 0;
    }

    if (const char* env_seed = std::getenv("OPCHECK_SEED"); env_seed && !seed_given) {
        try {
            config.master_seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            std::cerr << "invalid OPCHECK_SEED: " << env_seed << "\n";
            return 2;
        }
    }
    if (!parse_dims(dims, config.dim_lo, config.dim_hi)) {
        std::cerr << "invalid --dims, expected LO..HI: " << dims << "\n";
        return 2;
    }
    for (const std::string& kv : tol_overrides) {
        if (parse_tol_override(config.tol, kv) != 0) {
            std::cerr << "invalid --tol override: " << kv << "\n";
            return 2;
        }
    }
    if (!discretize_ns.empty()) config.discretize_ns = discretize_ns;

    try {
        opcheck::apply_suite_tokens(config, suites);
        const opcheck::SuiteReport report = opcheck::run(config);
        const std::string rendered = format == "json"
                                         ? opcheck::report_to_canonical_json(report)
                                         : opcheck::report_to_text(report);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "cannot open output path: " << out_path << "\n";
                return 2;
            }
            out << rendered;
        } else {
            std::cout << rendered;
        }
        return report.pass ? 0 : 1;
    } catch (const opcheck::KernelError& e) {
        std::cerr << e.what() << "\n";
        return e.kind == opcheck::ErrorKind::InvalidArgument ? 2 : 1;
    }
}

// Compares the serial reference trial loop against the parallel one and
// verifies that both produce the same canonical report.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "opcheck/runner.hpp"

using namespace opcheck;

namespace {

double time_once(PropertyId id, const RunConfig& config, bool serial) {
    const auto start = std::chrono::steady_clock::now();
    if (serial)
        run_property_serial(id, config);
    else
        run_property(id, config);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig config;
    config.trials = argc > 1 ? std::atoi(argv[1]) : 400;
    config.dim_lo = 2;
    config.dim_hi = 10;
    config.master_seed = 42;

    std::printf("%-26s %10s %10s %8s\n", "property", "serial s", "parallel s",
                "speedup");
    double total_serial = 0, total_parallel = 0;
    for (PropertyId id : all_properties()) {
        const double s = time_once(id, config, true);
        const double p = time_once(id, config, false);
        total_serial += s;
        total_parallel += p;
        std::printf("%-26s %10.3f %10.3f %7.2fx\n", property_name(id), s, p, s / p);

        RunConfig one = config;
        one.suites = {id};
        one.workers = 1;
        const std::string serial_json = report_to_canonical_json(run(one));
        one.workers = 0;
        if (serial_json != report_to_canonical_json(run(one))) {
            std::fprintf(stderr, "report mismatch between worker counts for %s\n",
                         property_name(id));
            return 1;
        }
    }
    std::printf("%-26s %10.3f %10.3f %7.2fx\n", "total", total_serial, total_parallel,
                total_serial / total_parallel);
    return 0;
}

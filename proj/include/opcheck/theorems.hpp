#pragma once

#include <map>
#include <optional>

#include "opcheck/types.hpp"

namespace opcheck {

enum class PropertyId {
    SqrtMonotone = 0,
    SqrtSubadditive,
    AbsParallelogram,
    OrderInverse,
    MainTheorem,
    CorollariesInvertible,
    BlockCorollary,
    AbsSumEquivalence,
    NormalCharacterization,
    SpectralInclusionSum,
    SpectrumClassics,
    SubaddSubmultBridge,
    ProductPositive,
    FiniteSums,
};

inline constexpr int kNumProperties = 14;

const char* property_name(PropertyId id);
std::optional<PropertyId> property_from_name(const std::string& name);
std::vector<PropertyId> all_properties();

/// Stable human-readable description: statement, hypotheses, check semantics.
std::string explain(PropertyId id);

/// Replayable failure record: re-running the property on (seed, dim) with the
/// same tolerances reproduces the failure bit-exactly.
struct Witness {
    uint64_t seed = 0;
    int dim = 0;
    std::vector<std::pair<std::string, ComplexMatrix>> inputs;
    std::vector<std::pair<std::string, double>> margins;
    std::string message;
};

enum class TrialStatus { Pass, Vacuous, Fail, Fault };

struct TrialResult {
    TrialStatus status = TrialStatus::Pass;
    Witness witness;  // populated on Fail
    std::vector<std::pair<std::string, double>> margins;
    std::string fault_message;
};

struct TrialContext {
    uint64_t seed = 0;
    int dim = 2;
    Tolerances tol;
};

/// One randomized trial of one property.
TrialResult run_trial(PropertyId id, const TrialContext& ctx);

struct PropertyReport {
    PropertyId property{};
    int trials = 0;
    int passes = 0;
    int vacuous = 0;  // premise not met, Indeterminate verdicts, or harness faults
    int faults = 0;   // kernel errors, counted inside vacuous
    std::vector<Witness> failures;
    std::map<std::string, double> min_margins;
    std::map<std::string, double> max_margins;
};

/// Named fixed fixture whose advertised invertibility verdicts must all confirm.
struct CounterexampleResult {
    std::string name;
    struct Claim {
        std::string description;
        std::string expected;
        std::string actual;
    };
    std::vector<Claim> claims;
    bool confirmed = false;
};

std::vector<CounterexampleResult> counterexample_registry(const Tolerances& tol = {});

}  // namespace opcheck

#pragma once

// Law suites and reports.
//
// A law is a predicate over generated inputs, run on a number of cases.
// Case k of law L in suite S draws its inputs from a generator seeded with
// derive(derive(derive(seed, S), L), k), so any case can be re-run from
// its seed alone. A thrown exception fails the case.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubeops/harness/generators.hpp"

namespace cubeops::harness {

struct SuiteConfig {
    std::size_t dim = 1;
    std::uint64_t seed = 42;
    std::size_t samples = 100;
    unsigned denominator_bits = 12;
    std::size_t oracle_budget = 10000;
    /// Adds wall-clock timings to the report, which then stops being reproducible.
    bool timing = false;
};

/// The default root seed, or CUBEOPS_SEED when set.
std::uint64_t default_seed();

class Case {
public:
    Case(const SuiteConfig& config, std::uint64_t seed, std::size_t index)
        : config(config), index(index), seed(seed), gen(config.dim, config.denominator_bits, seed)
    {
    }

    /// Records an input for the counterexample payload.
    void note(const std::string& key, Json value) { inputs[key] = std::move(value); }

    /// Convenience for `return c.fail("...")` from a law body.
    bool fail(std::string why)
    {
        detail = std::move(why);
        return false;
    }

    const SuiteConfig& config;
    std::size_t index;
    std::uint64_t seed;
    Generator gen;
    Json inputs = Json::object();
    std::string detail;
};

using LawFn = std::function<bool(Case&)>;

struct Law {
    std::string name;
    std::size_t cases;
    LawFn run;
};

struct Suite {
    std::string name;
    /// Fixture suites are excluded unless named explicitly.
    bool in_default;
    std::function<std::vector<Law>(const SuiteConfig&)> laws;
};

const std::vector<Suite>& all_suites();
std::vector<std::string> default_suite_names();

struct LawResult {
    std::string law;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::optional<Json> counterexample;
    double millis = 0.0;
    bool passed() const { return failures == 0; }
};

struct SuiteResult {
    std::string suite;
    std::vector<LawResult> laws;
    double millis = 0.0;
    bool passed() const;
};

/// Runs one case of a law; returns true when it passes.
bool run_case(const Law& law, Case& c);

SuiteResult run_suite(const Suite& suite, const SuiteConfig& config);

/// Runs the named suites (all default suites when `names` is empty) in
/// parallel; results are sorted by suite name. Throws std::invalid_argument
/// on an unknown name.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const SuiteConfig& config);

bool all_passed(const std::vector<SuiteResult>& results);

Json report_json(const std::vector<SuiteResult>& results, const SuiteConfig& config);

struct ReplayOutcome {
    bool reproduced = false;
    std::string detail;
};

/// Re-runs the case recorded in a counterexample payload.
ReplayOutcome replay_counterexample(const Json& counterexample);

/// Helpers for law bodies.
template <class X>
bool expect_same(Case& c, const X& actual, const X& expected, const std::string& what)
{
    if (same_point(actual, expected)) {
        return true;
    }
    c.note("actual", describe(actual));
    c.note("expected", describe(expected));
    return c.fail(what);
}

}  // namespace cubeops::harness

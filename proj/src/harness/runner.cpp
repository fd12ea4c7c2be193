#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <map>
#include <stdexcept>

#include "cubeops/harness/laws.hpp"

namespace cubeops::harness {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t case_seed(std::uint64_t root, const std::string& suite, const std::string& law, std::size_t index)
{
    return derive_seed(derive_seed(derive_seed(root, suite), law), static_cast<std::uint64_t>(index));
}

const Suite& find_suite(const std::string& name)
{
    for (const auto& s : all_suites()) {
        if (s.name == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("CUBEOPS_SEED"); env != nullptr && *env != '\0') {
        return std::stoull(env, nullptr, 0);
    }
    return 42;
}

std::vector<std::string> default_suite_names()
{
    std::vector<std::string> out;
    for (const auto& s : all_suites()) {
        if (s.in_default) {
            out.push_back(s.name);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SuiteResult::passed() const
{
    return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.passed(); });
}

bool run_case(const Law& law, Case& c)
{
    try {
        return law.run(c);
    } catch (const std::exception& e) {
        c.detail = std::string("exception: ") + e.what();
        return false;
    }
}

SuiteResult run_suite(const Suite& suite, const SuiteConfig& config)
{
    const auto suite_start = Clock::now();
    SuiteResult result;
    result.suite = suite.name;
    for (const auto& law : suite.laws(config)) {
        const auto start = Clock::now();
        LawResult lr;
        lr.law = law.name;
        lr.cases = law.cases;
        for (std::size_t k = 0; k < law.cases; ++k) {
            const std::uint64_t seed = case_seed(config.seed, suite.name, law.name, k);
            Case c(config, seed, k);
            if (run_case(law, c)) {
                continue;
            }
            ++lr.failures;
            if (!lr.counterexample) {
                lr.counterexample = Json{
                    {"suite", suite.name},
                    {"law", law.name},
                    {"case", k},
                    {"case_seed", std::to_string(seed)},
                    {"dim", config.dim},
                    {"samples", config.samples},
                    {"denominator_bits", config.denominator_bits},
                    {"oracle_budget", config.oracle_budget},
                    {"inputs", c.inputs},
                    {"detail", c.detail},
                };
            }
        }
        lr.millis = millis_since(start);
        result.laws.push_back(std::move(lr));
    }
    result.millis = millis_since(suite_start);
    return result;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const SuiteConfig& config)
{
    std::vector<std::string> selected = names.empty() ? default_suite_names() : names;
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
    std::vector<const Suite*> suites;
    for (const auto& n : selected) {
        suites.push_back(&find_suite(n));
    }
    std::vector<std::future<SuiteResult>> jobs;
    for (const Suite* s : suites) {
        jobs.push_back(std::async(std::launch::async, [s, &config] { return run_suite(*s, config); }));
    }
    std::vector<SuiteResult> out;
    for (auto& j : jobs) {
        out.push_back(j.get());
    }
    return out;
}

bool all_passed(const std::vector<SuiteResult>& results)
{
    return std::all_of(results.begin(), results.end(), [](const SuiteResult& s) { return s.passed(); });
}

Json report_json(const std::vector<SuiteResult>& results, const SuiteConfig& config)
{
    Json suites = Json::array();
    for (const auto& s : results) {
        Json laws = Json::array();
        for (const auto& l : s.laws) {
            Json entry{{"law", l.law}, {"cases", l.cases}, {"verdict", l.passed() ? "pass" : "fail"}};
            if (!l.passed()) {
                entry["failures"] = l.failures;
                entry["counterexample"] = *l.counterexample;
            }
            if (config.timing) {
                entry["millis"] = l.millis;
            }
            laws.push_back(std::move(entry));
        }
        Json suite{{"suite", s.suite}, {"verdict", s.passed() ? "pass" : "fail"}, {"laws", laws}};
        if (config.timing) {
            suite["millis"] = s.millis;
        }
        suites.push_back(std::move(suite));
    }
    return Json{
        {"config",
         {{"dim", config.dim},
          {"seed", std::to_string(config.seed)},
          {"samples", config.samples},
          {"denominator_bits", config.denominator_bits},
          {"oracle_budget", config.oracle_budget}}},
        {"verdict", all_passed(results) ? "pass" : "fail"},
        {"suites", suites},
    };
}

ReplayOutcome replay_counterexample(const Json& cx)
{
    const Suite& suite = find_suite(cx.at("suite").get<std::string>());
    SuiteConfig config;
    config.dim = cx.at("dim").get<std::size_t>();
    config.samples = cx.value("samples", config.samples);
    config.denominator_bits = cx.value("denominator_bits", config.denominator_bits);
    config.oracle_budget = cx.value("oracle_budget", config.oracle_budget);
    const std::string law_name = cx.at("law").get<std::string>();
    const std::uint64_t seed = std::stoull(cx.at("case_seed").get<std::string>());
    const std::size_t index = cx.at("case").get<std::size_t>();
    for (const auto& law : suite.laws(config)) {
        if (law.name != law_name) {
            continue;
        }
        Case c(config, seed, index);
        const bool passed = run_case(law, c);
        return {!passed, c.detail};
    }
    throw std::invalid_argument("unknown law: " + law_name);
}

}  // namespace cubeops::harness

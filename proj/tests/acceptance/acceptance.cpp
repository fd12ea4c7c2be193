// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cubeops/harness/laws.hpp"

namespace {

using namespace cubeops;
using namespace cubeops::harness;
using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const Suite& find_suite(const std::string& name)
{
    for (const auto& s : all_suites()) {
        if (s.name == name) {
            return s;
        }
    }
    throw std::invalid_argument("no suite " + name);
}

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& why)
    {
        if (!cond) {
            if (ok) {
                note.str("");
            }
            ok = false;
            note << why << "; ";
        }
    }
};

/// Runs `suite` at dimension n with `samples` cases per law, except that laws
/// named in `overrides` get that many cases instead.
SuiteResult run(const std::string& suite, std::size_t n, std::size_t samples,
                const std::map<std::string, std::size_t>& overrides = {})
{
    SuiteConfig cfg;
    cfg.dim = n;
    cfg.samples = samples;
    const Suite& base = find_suite(suite);
    Suite adjusted{base.name, base.in_default, [&base, &overrides](const SuiteConfig& c) {
                       auto laws = base.laws(c);
                       for (auto& l : laws) {
                           if (auto it = overrides.find(l.name); it != overrides.end()) {
                               l.cases = it->second;
                           }
                       }
                       return laws;
                   }};
    return run_suite(adjusted, cfg);
}

/// Folds a suite result into the outcome, naming the first failing law.
void absorb(Outcome& o, const SuiteResult& r, std::size_t n, std::size_t min_cases)
{
    for (const auto& l : r.laws) {
        if (!l.passed()) {
            o.require(false, r.suite + "/" + l.law + " failed at n=" + std::to_string(n) + ": " +
                                 (l.counterexample ? l.counterexample->value("detail", std::string{}) : ""));
            return;
        }
        // Single-case laws check one fixed fixture.
        if (l.cases != 1 && l.cases < min_cases) {
            o.require(false, r.suite + "/" + l.law + " ran only " + std::to_string(l.cases) + " cases");
            return;
        }
    }
}

std::size_t count_laws(const SuiteResult& r, const std::string& prefix)
{
    std::size_t k = 0;
    for (const auto& l : r.laws) {
        k += l.law.rfind(prefix, 0) == 0 ? 1 : 0;
    }
    return k;
}

std::string run_cli(const std::string& args, int* status)
{
    const std::string cmd = std::string(CUBEOPS_CLI) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *status = -1;
        return {};
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    *status = pclose(pipe);
    return out;
}

// ---------------------------------------------------------------------------

Outcome operad_laws()
{
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto start = Clock::now();
        const auto r = run("operad.laws", n, 200);
        const double ms = millis_since(start);
        absorb(o, r, n, 200);
        o.require(ms < 10000.0, "n=" + std::to_string(n) + " took " + std::to_string(ms) + " ms");
        o.note << "n=" << n << " " << static_cast<long>(ms) << "ms ";
    }
    return o;
}

Outcome comonad_axioms()
{
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto start = Clock::now();
        const auto r = run("comonad.axioms", n, 200);
        const double ms = millis_since(start);
        absorb(o, r, n, 200);
        o.require(count_laws(r, "coassociativity[") == element_kinds(n).size(), "a constructor lacks coassociativity");
        o.require(ms < 10000.0, "n=" + std::to_string(n) + " took " + std::to_string(ms) + " ms");
        o.note << "n=" << n << " " << static_cast<long>(ms) << "ms ";
    }
    return o;
}

Outcome property_d()
{
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto r = run("comonad.property_d", n, 500);
        absorb(o, r, n, 500);
        o.require(count_laws(r, "disjoint_pairs[") == element_kinds(n).size(), "a constructor lacks a (D) law");
        // The sampled pairs must include ones whose closures share a face.
        Generator gen(n, 12, 1);
        std::size_t touching = 0;
        for (std::size_t k = 0; k < 500; ++k) {
            const Configuration pair = gen.configuration(2, k);
            touching += rect_intersect(pair[0].image(), pair[1].image()).has_value() ? 1 : 0;
        }
        o.require(touching > 0, "no shared-face pair among the samples at n=" + std::to_string(n));
    }

    SuiteConfig cfg;
    const auto broken = run_suites({"fixtures.broken_property_d"}, cfg);
    o.require(!all_passed(broken), "the broken fixture passed");
    std::optional<Json> cx;
    for (const auto& s : broken) {
        for (const auto& l : s.laws) {
            if (l.counterexample && !cx) {
                cx = l.counterexample;
            }
        }
    }
    o.require(cx.has_value(), "the broken fixture gave no counterexample");
    if (cx) {
        // Round-trip through text, as a saved report would.
        const Json reread = Json::parse(cx->dump());
        const ReplayOutcome replay = replay_counterexample(reread);
        o.require(replay.reproduced, "the fixture counterexample did not reproduce");
        if (o.ok) {
            o.note << "fixture fails at case " << reread.at("case") << " and replays";
        }
    }
    return o;
}

Outcome coalgebra_equivalence()
{
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        absorb(o, run("coalgebra.equivalence", n, 200), n, 200);
    }
    return o;
}

Outcome suspension_coalgebra()
{
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        absorb(o, run("coalgebra.suspension", n, 200), n, 200);
    }
    return o;
}

Outcome approximation_retract()
{
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto r = run("approximation.retract", n, 200, {{"psi_alpha_identity", 500}});
        absorb(o, r, n, 200);
        for (const auto& l : r.laws) {
            if (l.law == "psi_alpha_identity") {
                o.require(l.cases == 500, "psi_alpha_identity ran " + std::to_string(l.cases) + " cases");
            }
        }
        const std::size_t kinds = element_kinds(n).size();
        o.require(count_laws(r, "H0_identity[") == kinds, "H0 missing for a constructor");
        o.require(count_laws(r, "H1_alpha_psi[") == kinds, "H1 missing for a constructor");
        o.require(count_laws(r, "H_property_d[") == kinds, "H (D) missing for a constructor");
    }
    return o;
}

Outcome comonad_morphism()
{
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        absorb(o, run("approximation.comonad_morphism", n, 200), n, 200);
    }
    return o;
}

Outcome cubical_supports()
{
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto r = run("approximation.supports", n, 200, {{"threshold_oracle_within_grid_cell", 20}});
        absorb(o, r, n, 20);
        if (n == 1) {
            o.require(count_laws(r, "threshold_support") == 1, "threshold support law missing");
            o.require(count_laws(r, "threshold_oracle_within_grid_cell") == 1, "threshold oracle law missing");
        }
    }
    return o;
}

Outcome reduced_triviality()
{
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        absorb(o, run("operad.reduced_triviality", n, 100), n, 100);
    }
    return o;
}

Outcome recognition()
{
    Outcome o;
    absorb(o, run("recognition.sphere", 1, 200), 1, 200);
    absorb(o, run("recognition.suspension", 1, 200), 1, 200);
    return o;
}

Outcome may_action()
{
    Outcome o;
    absorb(o, run("convolution.may_action", 1, 100), 1, 100);
    return o;
}

Outcome determinism()
{
    Outcome o;
    int s1 = 0;
    int s2 = 0;
    const auto start = Clock::now();
    const std::string a = run_cli("check --n 1 --seed 42 --samples 100", &s1);
    const double ms = millis_since(start);
    const std::string b = run_cli("check --n 1 --seed 42 --samples 100", &s2);
    o.require(s1 == 0 && s2 == 0, "the default suite did not pass");
    o.require(!a.empty() && a == b, "reports differ between runs");
    o.require(ms < 60000.0, "full default suite took " + std::to_string(ms) + " ms");
    if (o.ok) {
        o.note << a.size() << " identical bytes, " << static_cast<long>(ms) << "ms";
    }
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"operad-laws", operad_laws},
        {"comonad-axioms", comonad_axioms},
        {"property-d", property_d},
        {"coalgebra-equivalence", coalgebra_equivalence},
        {"suspension-coalgebra", suspension_coalgebra},
        {"approximation-retract", approximation_retract},
        {"comonad-morphism", comonad_morphism},
        {"cubical-supports", cubical_supports},
        {"reduced-triviality", reduced_triviality},
        {"recognition", recognition},
        {"may-action", may_action},
        {"determinism", determinism},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note.str(std::string("exception: ") + e.what());
        }
        failed += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS " : "FAIL ") << name << "  " << o.note.str() << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}

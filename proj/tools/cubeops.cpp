// cubeops: command-line access to the little cubes toolkit and its law suites.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "cubeops/approximation.hpp"
#include "cubeops/harness/laws.hpp"
#include "cubeops/harness/svg.hpp"
#include "cubeops/json_io.hpp"

namespace {

using cubeops::Json;

Json read_json(const std::string& path)
{
    if (path.empty() || path == "-") {
        return Json::parse(std::string(std::istreambuf_iterator<char>(std::cin), {}));
    }
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return Json::parse(in);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

/// {"outer": config, "inners": [config, ...]} or {"outer": config, "slot": i, "inner": config}.
int cmd_compose(const std::string& input)
{
    const Json j = read_json(input);
    const cubeops::Configuration outer = cubeops::config_from_json(j.at("outer"));
    if (j.contains("slot")) {
        const auto inner = cubeops::config_from_json(j.at("inner"));
        emit(cubeops::config_to_json(cubeops::partial_compose(outer, j.at("slot").get<std::size_t>(), inner)));
        return 0;
    }
    std::vector<cubeops::Configuration> inners;
    for (const auto& c : j.at("inners")) {
        inners.push_back(cubeops::config_from_json(c));
    }
    emit(cubeops::config_to_json(cubeops::full_compose(outer, inners)));
    return 0;
}

Json support_json(const cubeops::CnElem<cubeops::UnitPoint>& f, std::size_t budget, bool with_center)
{
    Json out;
    std::optional<cubeops::Rect> rect;
    const cubeops::SupportResult s = f.support();
    if (s.is_exact()) {
        rect = s.rect();
        out["exact"] = true;
    } else {
        const cubeops::OracleSupport o = cubeops::csupp_oracle(f, budget);
        rect = o.rect;
        out["exact"] = false;
        out["budget"] = budget;
        out["grid_level"] = o.grid_level;
        out["witnesses"] = o.witnesses;
        out["bound"] = cubeops::rect_to_json(o.bound());
    }
    out["csupp"] = rect ? cubeops::rect_to_json(*rect) : Json(nullptr);
    if (with_center) {
        out["center"] = rect ? cubeops::to_json(cubeops::rect_center(*rect)) : Json(nullptr);
    }
    return out;
}

int cmd_check(std::size_t n, std::uint64_t seed, std::size_t samples, const std::vector<std::string>& suites,
              bool timing, std::size_t budget, unsigned bits, bool list)
{
    namespace h = cubeops::harness;
    if (list) {
        for (const auto& s : h::all_suites()) {
            std::cout << s.name << (s.in_default ? "" : " (fixture)") << "\n";
        }
        return 0;
    }
    h::SuiteConfig config;
    config.dim = n;
    config.seed = seed;
    config.samples = samples;
    config.timing = timing;
    config.oracle_budget = budget;
    config.denominator_bits = bits;
    const auto results = h::run_suites(suites, config);
    emit(h::report_json(results, config));
    return h::all_passed(results) ? 0 : 1;
}

int cmd_replay(const std::string& path)
{
    Json j = read_json(path);
    // Accept either a bare counterexample or a whole report.
    std::vector<Json> cxs;
    if (j.contains("suites")) {
        for (const auto& s : j.at("suites")) {
            for (const auto& l : s.at("laws")) {
                if (l.contains("counterexample")) {
                    cxs.push_back(l.at("counterexample"));
                }
            }
        }
    } else {
        cxs.push_back(j);
    }
    Json out = Json::array();
    bool all_reproduced = true;
    for (const auto& cx : cxs) {
        const auto r = cubeops::harness::replay_counterexample(cx);
        all_reproduced = all_reproduced && r.reproduced;
        out.push_back(Json{{"suite", cx.at("suite")}, {"law", cx.at("law")}, {"reproduced", r.reproduced},
                           {"detail", r.detail}});
    }
    emit(out);
    return all_reproduced ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact little n-cubes: configurations, cubical supports, expansions and law suites"};
    app.require_subcommand(1);

    std::string compose_input;
    auto* compose = app.add_subcommand("compose", "Compose configurations given as JSON");
    compose->add_option("--input,input", compose_input, "JSON file (default stdin)");

    std::string csupp_input;
    std::size_t csupp_budget = cubeops::kDefaultOracleBudget;
    auto* csupp = app.add_subcommand("csupp", "Cubical support of an element term");
    csupp->add_option("--input,input", csupp_input, "JSON term file (default stdin)");
    csupp->add_option("--budget", csupp_budget, "oracle budget for opaque terms");

    std::string center_input;
    std::size_t center_budget = cubeops::kDefaultOracleBudget;
    auto* center = app.add_subcommand("center", "Center of the cubical support of an element term");
    center->add_option("--input,input", center_input, "JSON term file (default stdin)");
    center->add_option("--budget", center_budget, "oracle budget for opaque terms");

    std::string st_s;
    std::string st_t;
    auto* cube_st = app.add_subcommand("cube-st", "The boundary-touching cube c_{s,t}");
    cube_st->add_option("--s", st_s, "point s, e.g. 1/4,1/2")->required();
    cube_st->add_option("--t", st_t, "interior point t")->required();

    std::string ex_c;
    std::string ex_p;
    std::vector<std::string> ex_times;
    auto* expand = app.add_subcommand("expand", "Cubes along the expansion path of c about p");
    expand->add_option("--c", ex_c, "cube as lo:hi,... or JSON")->required();
    expand->add_option("--p", ex_p, "point of the closed image of c")->required();
    expand->add_option("--time", ex_times, "times in [0,1]")->required();

    std::size_t ck_n = 1;
    std::uint64_t ck_seed = cubeops::harness::default_seed();
    std::size_t ck_samples = 100;
    std::vector<std::string> ck_suites;
    bool ck_timing = false;
    bool ck_list = false;
    std::size_t ck_budget = cubeops::kDefaultOracleBudget;
    unsigned ck_bits = 12;
    std::string ck_replay;
    auto* check = app.add_subcommand("check", "Run law suites and print a JSON report");
    check->add_option("--n", ck_n, "dimension")->check(CLI::Range(1, 8));
    check->add_option("--seed", ck_seed, "root seed (default 42 or CUBEOPS_SEED)");
    check->add_option("--samples", ck_samples, "cases per law");
    check->add_option("--suite", ck_suites, "suite names (default: all non-fixture suites)");
    check->add_option("--budget", ck_budget, "oracle budget");
    check->add_option("--bits", ck_bits, "denominator bound exponent")->check(CLI::Range(2, 30));
    check->add_flag("--timing", ck_timing, "include wall-clock timings (not reproducible)");
    check->add_flag("--list", ck_list, "list suites and exit");
    check->add_option("--replay", ck_replay, "re-run counterexamples from a report or payload file");

    std::string rd_input;
    std::string rd_out;
    auto* render = app.add_subcommand("render", "Render a configuration, expansion or support as SVG");
    render->add_option("--input", rd_input, "JSON input file (default stdin)");
    render->add_option("--out", rd_out, "output SVG file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compose) {
            return cmd_compose(compose_input);
        }
        if (*csupp) {
            emit(support_json(cubeops::unit_element_from_json(read_json(csupp_input)), csupp_budget, false));
            return 0;
        }
        if (*center) {
            emit(support_json(cubeops::unit_element_from_json(read_json(center_input)), center_budget, true));
            return 0;
        }
        if (*cube_st) {
            const auto c = cubeops::cube_st(cubeops::parse_coords(st_s), cubeops::parse_coords(st_t));
            emit(Json{{"cube", cubeops::cube_to_json(c)}});
            return 0;
        }
        if (*expand) {
            const cubeops::ExpansionPath path(cubeops::parse_cube(ex_c), cubeops::parse_coords(ex_p));
            Json frames = Json::array();
            for (const auto& t : ex_times) {
                const cubeops::Rational time = cubeops::Rational::parse(t);
                frames.push_back(Json{{"time", time.to_string()}, {"cube", cubeops::cube_to_json(path.at(time))}});
            }
            emit(Json{{"preimage", cubeops::to_json(path.preimage())}, {"frames", frames}});
            return 0;
        }
        if (*check) {
            if (!ck_replay.empty()) {
                return cmd_replay(ck_replay);
            }
            return cmd_check(ck_n, ck_seed, ck_samples, ck_suites, ck_timing, ck_budget, ck_bits, ck_list);
        }
        if (*render) {
            const std::string svg = cubeops::harness::render_json(read_json(rd_input));
            std::ofstream out(rd_out, std::ios::binary);
            if (!out) {
                throw std::runtime_error("cannot write " + rd_out);
            }
            out << svg;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "cubeops: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

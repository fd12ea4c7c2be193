#include <algorithm>

#include "cubeops/convolution.hpp"
#include "cubeops/recognition.hpp"
#include "suite_defs.hpp"

namespace cubeops::harness {

namespace {

using SuspPoint = Suspension<FinitePoint>;

template <class Body>
void per_exact_kind(std::vector<Law>& laws, const SuiteConfig& cfg, const std::string& stem, std::size_t cases,
                    Body body)
{
    for (ElementKind k : element_kinds(cfg.dim)) {
        laws.push_back({stem + "[" + kind_name(k) + "]", cases, [k, body](Case& c) { return body(c, k); }});
    }
}

/// Runs `body` with a loop into [0,1] on even cases and into Σ^n(3-point) on odd ones.
template <class Body>
bool with_loop(Case& c, Body body)
{
    if (c.index % 2 == 0) {
        return body(c.gen.unit_loop(c.index / 2));
    }
    return body(c.gen.suspension_loop(c.index / 2));
}

Rational sample_time(Generator& g, std::size_t k)
{
    if (k == 0) {
        return Rational(0);
    }
    if (k == 1) {
        return Rational(1);
    }
    return g.interior();
}

}  // namespace

Suite approximation_retract_suite()
{
    return {"approximation.retract", true, [](const SuiteConfig& cfg) {
                std::vector<Law> laws;
                laws.push_back({"psi_alpha_identity", cfg.samples, [](Case& c) {
                                    const Coords t = c.gen.point(c.index / 2);
                                    return with_loop(c, [&](const auto& loop) {
                                        c.note("t", to_json(t));
                                        c.note("loop", loop.description());
                                        const auto p = psi(alpha(t, loop));
                                        if (is_base(loop)) {
                                            return p.is_base() || c.fail("Ψα[t, const] is not the basepoint");
                                        }
                                        if (p.is_base()) {
                                            return c.fail("Ψα[t, ℓ] collapsed to the basepoint");
                                        }
                                        if (p.t() != t) {
                                            c.note("actual_t", to_json(p.t()));
                                            return c.fail("first component of Ψα[t, ℓ] differs from t");
                                        }
                                        return same_point(p.x(), loop) || c.fail("second component of Ψα[t, ℓ] differs from ℓ");
                                    });
                                }});
                per_exact_kind(laws, cfg, "H0_identity", cfg.samples, [](Case& c, ElementKind k) {
                    const CnElem<UnitPoint> f = c.gen.element(k, true);
                    const LittleCube d = c.gen.cube(c.index);
                    c.note("element", f.describe());
                    c.note("c", cube_to_json(d));
                    const CnElem<UnitPoint> h = homotopy_H(f, Rational(0));
                    return expect_same(c, h, f, "H(f, 0) != f") && expect_same(c, h(d), f(d), "H(f, 0)(c) != f(c)");
                });
                per_exact_kind(laws, cfg, "H1_alpha_psi", cfg.samples, [](Case& c, ElementKind k) {
                    const CnElem<UnitPoint> f = c.gen.element(k, true);
                    const LittleCube d = c.gen.cube(c.index);
                    c.note("element", f.describe());
                    c.note("c", cube_to_json(d));
                    const CnElem<UnitPoint> h = homotopy_H(f, Rational(1));
                    const CnElem<UnitPoint> ap = alpha(psi(f), c.gen.dim());
                    return expect_same(c, h, ap, "H(f, 1) != αΨ(f)") && expect_same(c, h(d), ap(d), "H(f, 1)(c) != αΨ(f)(c)");
                });
                per_exact_kind(laws, cfg, "H_property_d", cfg.samples, [](Case& c, ElementKind k) {
                    const CnElem<UnitPoint> f = c.gen.element(k, true);
                    for (std::size_t j = 0; j < 10; ++j) {
                        const Rational time = sample_time(c.gen, j);
                        const Configuration pair = j == 0 ? disjoint_pair(c) : c.gen.configuration(2, kRandom);
                        c.note("time", time.to_string());
                        if (!property_d_holds(c, homotopy_H(f, time), pair)) {
                            return false;
                        }
                    }
                    return true;
                });
                return laws;
            }};
}

Suite approximation_morphism_suite()
{
    return {"approximation.comonad_morphism", true, [](const SuiteConfig& cfg) {
                return std::vector<Law>{
                    {"counit_and_comultiplication", cfg.samples, [](Case& c) {
                         const Coords t = c.gen.point(c.index / 2);
                         const LittleCube a = c.gen.cube(c.index / 2);
                         const LittleCube b = c.gen.cube(kRandom);
                         return with_loop(c, [&](const auto& loop) {
                             using X = std::decay_t<decltype(loop(SpherePoint::base()))>;
                             const std::vector<MorphismSample<X>> samples{{t, loop, a, b}};
                             const MorphismReport r = check_comonad_morphism(std::span<const MorphismSample<X>>(samples));
                             if (r.ok()) {
                                 return true;
                             }
                             c.note("report", r.counterexamples.front());
                             return c.fail("ε∘α != ε′ or α²∘Δ′ != Δ∘α");
                         });
                     }},
                };
            }};
}

Suite approximation_supports_suite()
{
    return {"approximation.supports", true, [](const SuiteConfig& cfg) {
                std::vector<Law> laws;
                laws.push_back({"peaked_singleton", cfg.samples, [](Case& c) {
                                    const Coords t = c.gen.point(c.index);
                                    const auto f = c.index % 2 == 0
                                                       ? peaked(t, tent_loop(c.gen.dim()))
                                                       : peaked(t, cut_tent_loop(c.gen.dim(), 0, c.gen.interior(), c.gen.interior()));
                                    c.note("element", f.describe());
                                    const auto s = csupp(f);
                                    return (s && *s == Rect::point(t)) || c.fail("csupp(peaked) != {t}");
                                }});
                laws.push_back({"suspension_structure_support", cfg.samples, [](Case& c) {
                                    const auto a = suspension_cn_coalgebra<FinitePoint>(c.gen.dim());
                                    const Coords t = c.gen.point(c.index);
                                    const SuspPoint x = SuspPoint::make(t, FinitePoint{1 + static_cast<unsigned>(c.index % 2)});
                                    c.note("x", describe(x));
                                    const auto s = csupp(a.structure(x));
                                    return (s && *s == Rect::point(t)) || c.fail("csupp(γ[t, x]) != {t}");
                                }});
                laws.push_back({"cube_st_exact", cfg.samples, [](Case& c) {
                                    auto& g = c.gen;
                                    Coords s = g.point(c.index);
                                    for (auto& x : s) {
                                        if (g.rng().below(6) == 0) {
                                            x = Rational(g.rng().below(2));
                                        }
                                    }
                                    const Coords t = g.point(kRandom);
                                    c.note("s", to_json(s));
                                    c.note("t", to_json(t));
                                    const LittleCube cube = cube_st(s, t);
                                    if (cube.apply(s) != t) {
                                        return c.fail("c_{s,t}(s) != t");
                                    }
                                    const Rect image = cube.image();
                                    for (const auto& iv : image.intervals()) {
                                        if (!iv.lo().is_zero() && iv.hi() != Rational(1)) {
                                            return c.fail("c_{s,t} misses both faces in some coordinate");
                                        }
                                    }
                                    return true;
                                }});
                const std::size_t containment_budget = std::min<std::size_t>(cfg.oracle_budget, 1000);
                per_exact_kind(laws, cfg, "oracle_contains", cfg.samples, [containment_budget](Case& c, ElementKind k) {
                    const CnElem<UnitPoint> f = c.gen.element(k, true);
                    c.note("element", f.describe());
                    c.note("budget", containment_budget);
                    const auto exact = csupp(f);
                    if (!exact) {
                        return true;
                    }
                    const OracleSupport o = csupp_oracle(f, containment_budget);
                    if (!o.bound().contains(*exact)) {
                        c.note("oracle", rect_to_json(o.bound()));
                        c.note("witnesses", o.witnesses);
                        c.note("exact", rect_to_json(*exact));
                        return c.fail("csupp_oracle does not contain csupp");
                    }
                    return true;
                });
                if (cfg.dim == 1) {
                    laws.push_back({"threshold_support", cfg.samples, [](Case& c) {
                                        const Rational a = c.gen.threshold_level();
                                        c.note("a", a.to_string());
                                        const auto s = csupp(threshold(a));
                                        const Rect expected({Interval(Rational(1) - a, a)});
                                        return (s && *s == expected) || c.fail("csupp(threshold a) != [1-a, a]");
                                    }});
                    const std::size_t budget = cfg.oracle_budget;
                    laws.push_back({"threshold_oracle_within_grid_cell", std::min<std::size_t>(cfg.samples, 20),
                                    [budget](Case& c) {
                                        const Rational a = c.gen.threshold_level();
                                        c.note("a", a.to_string());
                                        const OracleSupport o = csupp_oracle(threshold(a), budget);
                                        const Rational cell(1, std::int64_t{1} << o.grid_level);
                                        if (!o.rect) {
                                            return c.fail("oracle found no witness");
                                        }
                                        const Interval& iv = (*o.rect)[0];
                                        c.note("oracle", rect_to_json(*o.rect));
                                        const bool contains = iv.lo() <= Rational(1) - a && a <= iv.hi();
                                        const bool tight = Rational(1) - a - iv.lo() <= cell && iv.hi() - a <= cell;
                                        return (contains && tight) || c.fail("oracle support not within one grid cell");
                                    }});
                }
                return laws;
            }};
}

// ---------------------------------------------------------------------------
// Recognition

namespace {

struct SphereInstance {
    using X = SpherePoint;
    static CnCoalgebra<X> cn(std::size_t n) { return sphere_cn_coalgebra(n); }
    static SigmaOmegaCoalgebra<X> sigma_omega(std::size_t n) { return sphere_sigma_omega(n); }
    static X point(Case& c)
    {
        if (c.index == 0 || c.gen.rng().below(10) == 0) {
            return SpherePoint::base();
        }
        return SpherePoint::at(c.gen.point(c.index - 1));
    }
    static LoopMap<X> loop(Case& c)
    {
        if (c.gen.rng().coin()) {
            return identity_loop(c.gen.dim());
        }
        // A folding loop: reflect the first coordinate.
        return LoopMap<X>::custom(
            c.gen.dim(),
            [](const SpherePoint& s) {
                Coords t = s.coords();
                t[0] = Rational(1) - t[0];
                return SpherePoint::at(t);
            },
            Json{{"kind", "reflect"}});
    }
    static std::vector<LoopMap<X>> accepted_loops(Case& c)
    {
        return {identity_loop(c.gen.dim()), LoopMap<X>::constant(c.gen.dim())};
    }
    static LoopMap<X> violating_loop(std::size_t n)
    {
        const Coords s0(n, Rational(1, 2));
        return LoopMap<X>::custom(
            n, [s0](const SpherePoint& s) { return s.coords() == s0 ? SpherePoint::at(Coords(s0.size(), Rational(1, 4))) : s; },
            Json{{"kind", "identity_except_center"}});
    }
};

struct SuspensionInstance {
    using X = SuspPoint;
    static CnCoalgebra<X> cn(std::size_t n) { return suspension_cn_coalgebra<FinitePoint>(n); }
    static SigmaOmegaCoalgebra<X> sigma_omega(std::size_t n) { return suspension_sigma_omega<FinitePoint>(n); }
    static X point(Case& c) { return c.gen.suspension_point(c.index); }
    static LoopMap<X> loop(Case& c) { return c.gen.suspension_loop(c.index); }
    static std::vector<LoopMap<X>> accepted_loops(Case& c)
    {
        return {generator_loop(c.gen.dim(), FinitePoint{1}), generator_loop(c.gen.dim(), FinitePoint{2}),
                LoopMap<X>::constant(c.gen.dim())};
    }
    static LoopMap<X> violating_loop(std::size_t n)
    {
        const Coords s0(n, Rational(1, 2));
        return LoopMap<X>::custom(
            n,
            [s0](const SpherePoint& s) {
                return X::make(s.coords(), FinitePoint{s.coords() == s0 ? 2U : 1U});
            },
            Json{{"kind", "generator_except_center"}});
    }
};

template <class I>
std::vector<Law> recognition_laws(const SuiteConfig& cfg)
{
    using X = typename I::X;
    const std::size_t n = cfg.samples;
    std::vector<Law> laws{
        {"retraction_fixes_S", n,
         [](Case& c) {
             const auto a = I::cn(c.gen.dim());
             const X x = I::point(c);
             c.note("x", describe(x));
             const Membership m = in_S(x, a);
             if (!m.member) {
                 return c.fail("every point of this instance lies in S(X)");
             }
             return expect_same(c, retraction(x, a), x, "r(x) != x on S(X)");
         }},
        {"homotopy_endpoints", n,
         [](Case& c) {
             const auto a = I::cn(c.gen.dim());
             const X x = I::point(c);
             const Rational tau = c.gen.interior();
             c.note("x", describe(x));
             c.note("time", tau.to_string());
             const X mid = retraction_homotopy(x, a, tau);
             return expect_same(c, retraction_homotopy(x, a, Rational(0)), x, "H_0(x) != x") &&
                    expect_same(c, retraction_homotopy(x, a, Rational(1)), retraction(x, a), "H_1(x) != r(x)") &&
                    (!is_base(x) || is_base(mid) || c.fail("the basepoint moved during the homotopy"));
         }},
        {"induced_counit", n,
         [](Case& c) {
             const auto a = I::cn(c.gen.dim());
             const X x = I::point(c);
             c.note("x", describe(x));
             return expect_same(c, sigma_omega_counit(induced_structure(x, a)), x, "ε′(c′(x)) != x");
         }},
        {"induced_matches_structure", n,
         [](Case& c) {
             const auto a = I::cn(c.gen.dim());
             const auto g = I::sigma_omega(c.gen.dim());
             const X x = I::point(c);
             c.note("x", describe(x));
             return expect_same(c, induced_structure(x, a), g.structure(x), "c′(x) differs from the Σ^nΩ^n structure");
         }},
        {"pushforward_agrees", n,
         [](Case& c) {
             const auto a = I::cn(c.gen.dim());
             const X x = I::point(c);
             const LittleCube cube = c.gen.cube(c.index);
             c.note("x", describe(x));
             c.note("c", cube_to_json(cube));
             const CnElem<X> pushed = alpha(induced_structure(x, a), c.gen.dim());
             const CnElem<X> direct = a.structure(x);
             return expect_same(c, pushed, direct, "α(c′(x)) != c(x)") &&
                    expect_same(c, pushed(cube), direct(cube), "α(c′(x))(c) != c(x)(c)");
         }},
        {"induced_loop_lands_in_S", n,
         [](Case& c) {
             const auto a = I::cn(c.gen.dim());
             const X x = I::point(c);
             c.note("x", describe(x));
             const auto p = induced_structure(x, a);
             if (p.is_base()) {
                 return true;
             }
             for (const auto& s : map_test_points(c.gen.dim())) {
                 if (!in_S(p.x()(s), a).member) {
                     c.note("s", describe(s));
                     return c.fail("a loop value of c′(x) is outside S(X)");
                 }
             }
             return true;
         }},
        {"cosplit_cn", n,
         [](Case& c) {
             const auto a = I::cn(c.gen.dim());
             const std::vector<X> points{I::point(c)};
             const std::vector<CnElem<X>> elements{a.structure(I::point(c)),
                                                   peaked(c.gen.point(c.index), I::loop(c))};
             const CosplitReport r = cosplit_check(a, std::span<const X>(points), std::span<const CnElem<X>>(elements));
             if (!r.ok()) {
                 c.note("failure", r.failures.front());
                 return c.fail("cosplit identities fail for C_n");
             }
             return true;
         }},
        {"cosplit_sigma_omega", n,
         [](Case& c) {
             const auto g = I::sigma_omega(c.gen.dim());
             const std::vector<X> points{I::point(c)};
             const std::vector<Suspension<LoopMap<X>>> elements{
                 Suspension<LoopMap<X>>::make(c.gen.point(c.index), I::loop(c))};
             const CosplitReport r =
                 cosplit_check(g, std::span<const X>(points), std::span<const Suspension<LoopMap<X>>>(elements));
             if (!r.ok()) {
                 c.note("failure", r.failures.front());
                 return c.fail("cosplit identities fail for Σ^nΩ^n");
             }
             return true;
         }},
        {"pn_accepts_generators", n,
         [](Case& c) {
             const auto g = I::sigma_omega(c.gen.dim());
             for (const auto& l : I::accepted_loops(c)) {
                 if (!pn_membership(l, g)) {
                     c.note("loop", l.description());
                     return c.fail("a generator loop was rejected from P_n(X)");
                 }
             }
             return true;
         }},
        {"pn_rejects_violation", 1,
         [](Case& c) {
             const auto g = I::sigma_omega(c.gen.dim());
             return !pn_membership(I::violating_loop(c.gen.dim()), g) || c.fail("the violating loop was accepted");
         }},
    };
    return laws;
}

}  // namespace

Suite recognition_sphere_suite()
{
    return {"recognition.sphere", true, [](const SuiteConfig& cfg) { return recognition_laws<SphereInstance>(cfg); }};
}

Suite recognition_suspension_suite()
{
    return {"recognition.suspension", true, [](const SuiteConfig& cfg) {
                auto laws = recognition_laws<SuspensionInstance>(cfg);
                laws.push_back({"generator_bijection", cfg.samples, [](Case& c) {
                                    const Coords t = c.gen.point(c.index);
                                    const FinitePoint z{1 + static_cast<unsigned>(c.gen.rng().below(2))};
                                    const auto lifted =
                                        Suspension<LoopMap<SuspPoint>>::make(t, generator_loop(c.gen.dim(), z));
                                    c.note("t", to_json(t));
                                    c.note("z", z.label);
                                    const SuspPoint image = sigma_omega_counit(lifted);
                                    return expect_same(c, image, SuspPoint::make(t, z), "[t, Generator(z)] ↦ [t, z] fails");
                                }});
                return laws;
            }};
}

// ---------------------------------------------------------------------------
// Convolution

namespace {

std::vector<LoopMap<SuspPoint>> loops_for(Generator& g, std::size_t r)
{
    std::vector<LoopMap<SuspPoint>> out;
    for (std::size_t i = 0; i < r; ++i) {
        out.push_back(g.suspension_loop(kRandom));
    }
    return out;
}

}  // namespace

Suite convolution_suite()
{
    return {"convolution.may_action", true, [](const SuiteConfig& cfg) {
                const std::size_t n = cfg.samples;
                return std::vector<Law>{
                    {"halves_concatenation", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const auto ls = std::vector{g.suspension_loop(c.index), g.suspension_loop(kRandom)};
                         const Coords s = g.point(c.index);
                         c.note("s", to_json(s));
                         c.note("loops", Json::array({ls[0].description(), ls[1].description()}));
                         const SuspPoint actual = may_action(Configuration::slabs(g.dim(), 2), ls).at(s);
                         Coords u = s;
                         SuspPoint expected = SuspPoint::base();
                         if (s[0] < Rational(1, 2)) {
                             u[0] = Rational(2) * s[0];
                             expected = ls[0].at(u);
                         } else if (s[0] > Rational(1, 2)) {
                             u[0] = Rational(2) * s[0] - Rational(1);
                             expected = ls[1].at(u);
                         }
                         return expect_same(c, actual, expected, "halves action is not loop concatenation");
                     }},
                    {"unit", n,
                     [](Case& c) {
                         const auto l = c.gen.suspension_loop(c.index);
                         c.note("loop", l.description());
                         return expect_same(c, may_action(Configuration::unit(c.gen.dim()), std::vector{l}), l, "1 · ℓ != ℓ");
                     }},
                    {"equivariance", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const Configuration theta = g.configuration(1 + g.index_below(3), c.index);
                         const Permutation sigma = g.permutation(theta.arity());
                         const auto ls = loops_for(g, theta.arity());
                         std::vector<LoopMap<SuspPoint>> reindexed;
                         for (std::size_t j = 0; j < ls.size(); ++j) {
                             reindexed.push_back(ls[sigma(j)]);
                         }
                         c.note("theta", config_to_json(theta));
                         c.note("sigma", permutation_to_json(sigma));
                         return expect_same(c, may_action(act(theta, sigma), ls), may_action(theta, reindexed),
                                            "(θ·σ)·ℓ != θ·(σ·ℓ)");
                     }},
                    {"associativity", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const Configuration theta = g.configuration(1 + g.index_below(3), c.index);
                         std::vector<Configuration> ds;
                         std::vector<LoopMap<SuspPoint>> flat;
                         std::vector<LoopMap<SuspPoint>> grouped;
                         for (std::size_t i = 0; i < theta.arity(); ++i) {
                             ds.push_back(g.configuration(g.index_below(3), kRandom));
                             const auto block = loops_for(g, ds.back().arity());
                             flat.insert(flat.end(), block.begin(), block.end());
                             grouped.push_back(may_action(ds.back(), block));
                         }
                         c.note("theta", config_to_json(theta));
                         return expect_same(c, may_action(full_compose(theta, ds), flat), may_action(theta, grouped),
                                            "γ(θ; d)·ℓ != θ·(d_i·ℓ_i)");
                     }},
                    {"convolution_matches", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const Configuration theta = g.configuration(g.index_below(4), c.index);
                         const auto ls = loops_for(g, theta.arity());
                         std::vector<PointedMap<SpherePoint, SuspPoint>> maps;
                         for (const auto& l : ls) {
                             maps.emplace_back([l](const SpherePoint& s) { return l(s); }, false, "loop");
                         }
                         const auto conv = convolution<SpherePoint, SuspPoint>(
                             theta, std::make_shared<const SphereCoalgebra>(g.dim()), maps);
                         const auto action = may_action(theta, ls);
                         for (const auto& s : map_test_points(g.dim())) {
                             if (!same_point(conv(s), action(s))) {
                                 c.note("s", describe(s));
                                 return c.fail("convolution over the sphere differs from the May action");
                             }
                         }
                         return true;
                     }},
                };
            }};
}

// ---------------------------------------------------------------------------
// Fixtures

Suite broken_fixture_suite()
{
    return {"fixtures.broken_property_d", false, [](const SuiteConfig& cfg) {
                return std::vector<Law>{
                    {"disjoint_pairs[half_width]", cfg.samples,
                     [](Case& c) {
                         // Non-base on every cube of width exactly 1/2 in the first coordinate.
                         const auto f = custom<UnitPoint>(
                             c.gen.dim(),
                             [](const LittleCube& cube) {
                                 return cube[0].scale() == Rational(1, 2) ? UnitPoint(Rational(1, 2)) : UnitPoint{};
                             },
                             nullptr, Json{{"kind", "custom"}, {"name", "half_width"}});
                         return property_d_holds(c, f, disjoint_pair(c));
                     }},
                };
            }};
}

const std::vector<Suite>& all_suites()
{
    static const std::vector<Suite> suites = {
        geometry_suite(),
        operad_laws_suite(),
        operad_reduced_suite(),
        spaces_suite(),
        comonad_axioms_suite(),
        comonad_property_d_suite(),
        comonad_structure_suite(),
        coalgebra_equivalence_suite(),
        coalgebra_suspension_suite(),
        approximation_retract_suite(),
        approximation_morphism_suite(),
        approximation_supports_suite(),
        recognition_sphere_suite(),
        recognition_suspension_suite(),
        convolution_suite(),
        broken_fixture_suite(),
    };
    return suites;
}

}  // namespace cubeops::harness

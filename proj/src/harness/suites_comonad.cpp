#include "cubeops/coalgebra.hpp"
#include "cubeops/recognition.hpp"
#include "suite_defs.hpp"

namespace cubeops::harness {

namespace {

/// One law per element constructor available in the configured dimension.
template <class Body>
void per_kind(std::vector<Law>& laws, const SuiteConfig& cfg, const std::string& stem, std::size_t cases, Body body)
{
    for (ElementKind k : element_kinds(cfg.dim)) {
        laws.push_back({stem + "[" + kind_name(k) + "]", cases, [k, body](Case& c) { return body(c, k); }});
    }
}

using SuspPoint = Suspension<FinitePoint>;

}  // namespace

Suite comonad_axioms_suite()
{
    return {"comonad.axioms", true, [](const SuiteConfig& cfg) {
                std::vector<Law> laws;
                per_kind(laws, cfg, "coassociativity", cfg.samples, [](Case& c, ElementKind k) {
                    auto& g = c.gen;
                    const CnElem<UnitPoint> f = g.element(k, false);
                    const LittleCube a = g.cube(c.index);
                    const LittleCube b = g.cube(kRandom);
                    const LittleCube e = g.cube(kRandom);
                    c.note("element", f.describe());
                    c.note("c", cube_to_json(a));
                    c.note("d", cube_to_json(b));
                    c.note("e", cube_to_json(e));
                    const UnitPoint direct = f(compose(compose(a, b), e));
                    const UnitPoint nested = comultiply(comultiply(f, a), b)(e);
                    const UnitPoint joined = comultiply(f, compose(a, b))(e);
                    const UnitPoint doubled = comultiply(comultiply(f))(a)(b)(e);
                    return (expect_same(c, nested, joined, "Δ(Δ(f)(c))(d) != Δ(f)(c∘d) at e") &&
                            expect_same(c, joined, direct, "Δ(f)(c∘d)(e) != f(c∘d∘e)") &&
                            expect_same(c, doubled, direct, "Δ_{C(X)}(Δ(f))(c)(d)(e) != f(c∘d∘e)"));
                });
                per_kind(laws, cfg, "counit_eval", cfg.samples, [](Case& c, ElementKind k) {
                    const CnElem<UnitPoint> f = c.gen.element(k, false);
                    const LittleCube a = c.gen.cube(c.index);
                    c.note("element", f.describe());
                    c.note("c", cube_to_json(a));
                    return expect_same(c, counit(comultiply(f, a)), f(a), "ε(Δ(f)(c)) != f(c)");
                });
                per_kind(laws, cfg, "counit_identity", cfg.samples, [](Case& c, ElementKind k) {
                    const CnElem<UnitPoint> f = c.gen.element(k, false);
                    const LittleCube d = c.gen.cube(c.index);
                    c.note("element", f.describe());
                    const CnElem<UnitPoint> lifted = comultiply(f, LittleCube::identity(c.gen.dim()));
                    return expect_same(c, lifted, f, "Δ(f)(id) != f") &&
                           expect_same(c, lifted(d), f(d), "Δ(f)(id)(d) != f(d)");
                });
                return laws;
            }};
}

Suite comonad_property_d_suite()
{
    return {"comonad.property_d", true, [](const SuiteConfig& cfg) {
                std::vector<Law> laws;
                per_kind(laws, cfg, "disjoint_pairs", cfg.samples, [](Case& c, ElementKind k) {
                    const Configuration pair = disjoint_pair(c);
                    const CnElem<UnitPoint> f = c.gen.element(k, false);
                    return property_d_holds(c, f, pair);
                });
                per_kind(laws, cfg, "expand_to_sequence", cfg.samples, [](Case& c, ElementKind k) {
                    const Configuration theta = c.gen.configuration(3 + c.gen.index_below(2), c.index);
                    const CnElem<UnitPoint> f = c.gen.element(k, false);
                    c.note("theta", config_to_json(theta));
                    c.note("element", f.describe());
                    (void)expand_to_sequence(f, theta);  // throws on a violation
                    return true;
                });
                return laws;
            }};
}

Suite comonad_structure_suite()
{
    return {"comonad.structure", true, [](const SuiteConfig& cfg) {
                std::vector<Law> laws;
                per_kind(laws, cfg, "expand_equivariance", cfg.samples, [](Case& c, ElementKind k) {
                    auto& g = c.gen;
                    const Configuration theta = g.configuration(1 + g.index_below(3), c.index);
                    const Permutation sigma = g.permutation(theta.arity());
                    const CnElem<UnitPoint> f = g.element(k, false);
                    c.note("theta", config_to_json(theta));
                    c.note("sigma", permutation_to_json(sigma));
                    c.note("element", f.describe());
                    return expect_same(c, expand_to_sequence(f, act(theta, sigma)),
                                       permute_slots(expand_to_sequence(f, theta), sigma), "f_r(θ·σ) != σ·f_r(θ)");
                });
                if (cfg.dim == 1) {
                    laws.push_back({"threshold_band", cfg.samples, [](Case& c) {
                                        const Rational a = c.gen.threshold_level();
                                        const LittleCube cube = c.gen.cube(c.index);
                                        c.note("a", a.to_string());
                                        c.note("c", cube_to_json(cube));
                                        const bool nonbase = !is_base(threshold(a)(cube));
                                        return nonbase == (cube[0].scale() > a) ||
                                               c.fail("non-base exactly when the width exceeds a");
                                    }});
                }
                laws.push_back({"functor_composition", cfg.samples, [](Case& c) {
                                    const CnElem<UnitPoint> f = c.gen.element(ElementKind::Box, false);
                                    const auto phi = unit_map("square");
                                    const auto psi = unit_map("shift");
                                    const LittleCube a = c.gen.cube(c.index);
                                    const auto lhs = functor_map(compose(psi, phi), f)(a);
                                    const auto rhs = functor_map(psi, functor_map(phi, f))(a);
                                    return expect_same(c, lhs, rhs, "C(ψ∘φ) != C(ψ)∘C(φ)");
                                }});
                laws.push_back({"cofree_adjunction", cfg.samples, [](Case& c) {
                                    const auto a = suspension_cn_coalgebra<FinitePoint>(c.gen.dim());
                                    const auto phi = suspend_map(c.gen.finite_self_map());
                                    const SuspPoint x = c.gen.suspension_point(c.index);
                                    c.note("x", describe(x));
                                    c.note("phi", phi.label());
                                    const auto lifted = cofree_lift(phi, a.structure);
                                    const auto back = cofree_unlift<SuspPoint, SuspPoint>(lifted);
                                    return expect_same(c, back(x), phi(x), "ε ∘ lift(φ) != φ");
                                }});
                return laws;
            }};
}

Suite coalgebra_equivalence_suite()
{
    return {"coalgebra.equivalence", true, [](const SuiteConfig& cfg) {
                const std::size_t n = cfg.samples;
                return std::vector<Law>{
                    {"sphere_coend_roundtrip", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const auto delta = std::make_shared<const SphereCoalgebra>(g.dim());
                         const auto back = comonadic_to_coend<SpherePoint>(
                             g.dim(), [delta](const SpherePoint& t) { return coend_to_comonadic<SpherePoint>(delta, t); });
                         const Configuration theta = g.configuration(g.index_below(4), c.index);
                         const SpherePoint t = g.rng().below(8) == 0 ? SpherePoint::base() : SpherePoint::at(g.point(c.index));
                         c.note("theta", config_to_json(theta));
                         c.note("t", describe(t));
                         return expect_same(c, back->apply(theta, t), delta->apply(theta, t),
                                            "coend → comonadic → coend changed Δ_r");
                     }},
                    {"suspension_coend_roundtrip", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const auto delta = std::make_shared<const SuspensionCoalgebra<FinitePoint>>(g.dim());
                         const auto back = comonadic_to_coend<SuspPoint>(
                             g.dim(), [delta](const SuspPoint& x) { return coend_to_comonadic<SuspPoint>(delta, x); });
                         const Configuration theta = g.configuration(g.index_below(4), c.index);
                         const SuspPoint x = g.suspension_point(c.index);
                         c.note("theta", config_to_json(theta));
                         c.note("x", describe(x));
                         return expect_same(c, back->apply(theta, x), delta->apply(theta, x),
                                            "coend → comonadic → coend changed Δ_r");
                     }},
                    {"sphere_comonadic_roundtrip", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const auto rho = pushforward_structure(sphere_sigma_omega(g.dim()));
                         const auto delta = comonadic_to_coend<SpherePoint>(g.dim(), rho.structure);
                         const SpherePoint t = SpherePoint::at(g.point(c.index));
                         const LittleCube cube = g.cube(kRandom);
                         c.note("t", describe(t));
                         c.note("c", cube_to_json(cube));
                         return expect_same(c, coend_to_comonadic(delta, t)(cube), rho.structure(t)(cube),
                                            "comonadic → coend → comonadic changed ρ");
                     }},
                    {"suspension_comonadic_roundtrip", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const auto rho = pushforward_structure(suspension_sigma_omega<FinitePoint>(g.dim()));
                         const auto delta = comonadic_to_coend<SuspPoint>(g.dim(), rho.structure);
                         const SuspPoint x = g.suspension_point(c.index);
                         const LittleCube cube = g.cube(kRandom);
                         c.note("x", describe(x));
                         c.note("c", cube_to_json(cube));
                         return expect_same(c, coend_to_comonadic(delta, x)(cube), rho.structure(x)(cube),
                                            "comonadic → coend → comonadic changed ρ");
                     }},
                    {"counital_compatibility", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const SuspensionCoalgebra<FinitePoint> delta(g.dim());
                         const Configuration theta = g.configuration(1 + g.index_below(3), c.index);
                         const std::size_t i = g.index_below(theta.arity());
                         const SuspPoint x = g.suspension_point(c.index);
                         c.note("theta", config_to_json(theta));
                         c.note("i", i);
                         c.note("x", describe(x));
                         return expect_same(c, wedge_collapse(delta.apply(theta, x), theta.arity(), i),
                                            delta.apply(restrict(theta, i), x), "π_i Δ_r(c, x) != Δ_{r-1}(d_i c, x)");
                     }},
                };
            }};
}

Suite coalgebra_suspension_suite()
{
    return {"coalgebra.suspension", true, [](const SuiteConfig& cfg) {
                const std::size_t n = cfg.samples;
                return std::vector<Law>{
                    {"operad_morphism", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const Configuration a = g.configuration(g.index_below(4), c.index);
                         std::vector<Configuration> ds;
                         for (std::size_t i = 0; i < a.arity(); ++i) {
                             ds.push_back(g.configuration(g.index_below(4), kRandom));
                         }
                         const SuspPoint p = g.suspension_point(c.index);
                         c.note("c", config_to_json(a));
                         c.note("x", describe(p));
                         const auto lhs = nabla_suspension(full_compose(a, ds), p);
                         // (∇(d_0) ∨ ... ∨ ∇(d_{r-1})) ∘ ∇(c), then re-index into the flat wedge.
                         WedgePoint<SuspPoint> rhs = WedgePoint<SuspPoint>::base();
                         const auto outer = nabla_suspension(a, p);
                         if (!outer.is_base()) {
                             const auto inner = nabla_suspension(ds[outer.slot()], outer.x());
                             if (!inner.is_base()) {
                                 std::size_t offset = 0;
                                 for (std::size_t k = 0; k < outer.slot(); ++k) {
                                     offset += ds[k].arity();
                                 }
                                 rhs = WedgePoint<SuspPoint>::at(offset + inner.slot(), inner.x());
                             }
                         }
                         return expect_same(c, lhs, rhs, "∇(γ(c; d)) != (∨∇(d_i)) ∘ ∇(c)");
                     }},
                    {"equivariance", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const Configuration a = g.configuration(1 + g.index_below(3), c.index);
                         const Permutation sigma = g.permutation(a.arity());
                         const SuspPoint p = g.suspension_point(c.index);
                         c.note("c", config_to_json(a));
                         c.note("sigma", permutation_to_json(sigma));
                         c.note("x", describe(p));
                         return expect_same(c, nabla_suspension(act(a, sigma), p),
                                            permute_slots(nabla_suspension(a, p), sigma), "∇(c·σ) != σ·∇(c)");
                     }},
                    {"naturality", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const Configuration a = g.configuration(g.index_below(4), c.index);
                         const auto phi = suspend_map(g.finite_self_map());
                         const SuspPoint p = g.suspension_point(c.index);
                         c.note("c", config_to_json(a));
                         c.note("phi", phi.label());
                         c.note("x", describe(p));
                         const std::vector<PointedMap<SuspPoint, SuspPoint>> maps(a.arity(), phi);
                         return expect_same(c, nabla_suspension(a, phi(p)),
                                            wedge_map(std::span<const PointedMap<SuspPoint, SuspPoint>>(maps),
                                                      nabla_suspension(a, p)),
                                            "∇ does not commute with Σφ");
                     }},
                    {"pinch_formula", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const SuspPoint p = g.suspension_point(c.index);
                         c.note("x", describe(p));
                         WedgePoint<SuspPoint> expected = WedgePoint<SuspPoint>::base();
                         if (!p.is_base()) {
                             Coords s = p.t();
                             const Rational half(1, 2);
                             if (s[0] < half) {
                                 s[0] = s[0] * Rational(2);
                                 expected = WedgePoint<SuspPoint>::at(0, SuspPoint::make(s, p.x()));
                             } else if (s[0] > half) {
                                 s[0] = s[0] * Rational(2) - Rational(1);
                                 expected = WedgePoint<SuspPoint>::at(1, SuspPoint::make(s, p.x()));
                             }
                         }
                         return expect_same(c, pinch(g.dim(), p), expected, "pinch disagrees with the halves formula");
                     }},
                };
            }};
}

}  // namespace cubeops::harness

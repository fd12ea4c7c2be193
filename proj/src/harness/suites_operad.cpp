#include <numeric>

#include "suite_defs.hpp"

namespace cubeops::harness {

namespace {

Interval random_interval(Generator& g)
{
    const Rational lo = g.rng().below(6) == 0 ? Rational(0) : g.interior();
    const Rational hi = g.rng().below(6) == 0 ? Rational(1) : g.between(lo, Rational(1));
    return {lo, hi};
}

AffineComponent random_component(Generator& g) { return AffineComponent::from_image(random_interval(g)); }

Rect random_rect(Generator& g, bool allow_points)
{
    std::vector<Interval> ivs;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        if (allow_points && g.rng().below(5) == 0) {
            const Rational x = g.interior();
            ivs.emplace_back(x, x);
        } else {
            ivs.push_back(random_interval(g));
        }
    }
    return Rect(std::move(ivs));
}

Json opt_rect(const std::optional<Rect>& r) { return r ? rect_to_json(*r) : Json(nullptr); }

std::vector<Configuration> random_tuple(Generator& g, std::size_t count, std::size_t max_arity)
{
    std::vector<Configuration> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(g.configuration(g.index_below(max_arity + 1), kRandom));
    }
    return out;
}

std::vector<std::size_t> arities(const std::vector<Configuration>& cs)
{
    std::vector<std::size_t> out;
    for (const auto& c : cs) {
        out.push_back(c.arity());
    }
    return out;
}

Json tuple_json(const std::vector<Configuration>& cs)
{
    Json out = Json::array();
    for (const auto& c : cs) {
        out.push_back(config_to_json(c));
    }
    return out;
}

bool same_config(Case& c, const Configuration& actual, const Configuration& expected, const std::string& what)
{
    if (actual == expected) {
        return true;
    }
    c.note("actual", config_to_json(actual));
    c.note("expected", config_to_json(expected));
    return c.fail(what);
}

}  // namespace

Suite geometry_suite()
{
    return {"geometry.laws", true, [](const SuiteConfig& cfg) {
                const std::size_t n = cfg.samples;
                return std::vector<Law>{
                    {"affine_roundtrip", n,
                     [](Case& c) {
                         const AffineComponent a = random_component(c.gen);
                         const Rational t = c.gen.rng().below(5) == 0 ? Rational(c.gen.rng().below(2))
                                                                      : c.gen.interior();
                         c.note("component", Json::array({a.scale().to_string(), a.offset().to_string()}));
                         c.note("t", t.to_string());
                         return a.invert(a.apply(t)) == t || c.fail("invert(apply(t)) != t");
                     }},
                    {"affine_compose_associative", n,
                     [](Case& c) {
                         const AffineComponent a = random_component(c.gen);
                         const AffineComponent b = random_component(c.gen);
                         const AffineComponent d = random_component(c.gen);
                         const auto lhs = affine_compose(affine_compose(a, b), d);
                         const auto rhs = affine_compose(a, affine_compose(b, d));
                         return lhs == rhs || c.fail("affine_compose is not associative");
                     }},
                    {"intersect_commutative", n,
                     [](Case& c) {
                         const Rect a = random_rect(c.gen, true);
                         const Rect b = random_rect(c.gen, true);
                         c.note("a", rect_to_json(a));
                         c.note("b", rect_to_json(b));
                         return opt_rect(rect_intersect(a, b)) == opt_rect(rect_intersect(b, a)) ||
                                c.fail("rect_intersect is not commutative");
                     }},
                    {"intersect_associative", n,
                     [](Case& c) {
                         // Nested rectangles keep the triple intersection non-trivial.
                         const Rect a = random_rect(c.gen, false);
                         const Rect b = random_rect(c.gen, true);
                         const Rect d = random_rect(c.gen, true);
                         const auto ab = rect_intersect(a, b);
                         const auto bd = rect_intersect(b, d);
                         const auto lhs = ab ? rect_intersect(*ab, d) : std::nullopt;
                         const auto rhs = bd ? rect_intersect(a, *bd) : std::nullopt;
                         return opt_rect(lhs) == opt_rect(rhs) || c.fail("rect_intersect is not associative");
                     }},
                    {"intersect_idempotent", n,
                     [](Case& c) {
                         const Rect a = random_rect(c.gen, true);
                         const auto aa = rect_intersect(a, a);
                         return (aa && *aa == a) || c.fail("rect_intersect(a, a) != a");
                     }},
                    {"center_in_rect", n,
                     [](Case& c) {
                         const Rect a = random_rect(c.gen, true);
                         c.note("rect", rect_to_json(a));
                         return a.contains_closed(rect_center(a)) || c.fail("center outside the rectangle");
                     }},
                    {"cube_invert_apply", n,
                     [](Case& c) {
                         const LittleCube cube = c.gen.cube(c.index);
                         const Coords x = c.gen.point(kRandom);
                         c.note("cube", cube_to_json(cube));
                         return cube.invert(cube.apply(x)) == x || c.fail("invert(apply(x)) != x");
                     }},
                };
            }};
}

Suite operad_laws_suite()
{
    return {"operad.laws", true, [](const SuiteConfig& cfg) {
                const std::size_t n = cfg.samples;
                return std::vector<Law>{
                    {"associativity", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const Configuration a = g.configuration(g.index_below(4), c.index);
                         const auto bs = random_tuple(g, a.arity(), 2);
                         const Configuration ab = full_compose(a, bs);
                         const auto cs = random_tuple(g, ab.arity(), 2);
                         c.note("a", config_to_json(a));
                         c.note("b", tuple_json(bs));
                         c.note("c", tuple_json(cs));
                         const Configuration lhs = full_compose(ab, cs);
                         std::vector<Configuration> inner;
                         std::size_t offset = 0;
                         for (const auto& b : bs) {
                             std::vector<Configuration> block(cs.begin() + static_cast<std::ptrdiff_t>(offset),
                                                              cs.begin() + static_cast<std::ptrdiff_t>(offset + b.arity()));
                             inner.push_back(full_compose(b, block));
                             offset += b.arity();
                         }
                         return same_config(c, lhs, full_compose(a, inner), "γ(γ(a;b);c) != γ(a;γ(b;c))");
                     }},
                    {"unit_left", n,
                     [](Case& c) {
                         const Configuration d = c.gen.configuration(c.gen.index_below(4), c.index);
                         const Configuration lhs = full_compose(Configuration::unit(c.gen.dim()), std::vector{d});
                         return same_config(c, lhs, d, "γ(1; d) != d");
                     }},
                    {"unit_right", n,
                     [](Case& c) {
                         const Configuration d = c.gen.configuration(c.gen.index_below(4), c.index);
                         const std::vector<Configuration> units(d.arity(), Configuration::unit(c.gen.dim()));
                         return same_config(c, full_compose(d, units), d, "γ(d; 1, ..., 1) != d");
                     }},
                    {"partial_matches_full", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const Configuration a = g.configuration(1 + g.index_below(3), c.index);
                         const std::size_t i = g.index_below(a.arity());
                         const Configuration d = g.configuration(g.index_below(3), kRandom);
                         std::vector<Configuration> ds(a.arity(), Configuration::unit(g.dim()));
                         ds[i] = d;
                         return same_config(c, partial_compose(a, i, d), full_compose(a, ds),
                                            "a ∘_i d != γ(a; 1, .., d, .., 1)");
                     }},
                    {"equivariance_symmetric", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const Configuration a = g.configuration(1 + g.index_below(3), c.index);
                         const Permutation sigma = g.permutation(a.arity());
                         const auto ds = random_tuple(g, a.arity(), 2);
                         const Permutation inv = sigma.inverse();
                         std::vector<Configuration> permuted;
                         for (std::size_t k = 0; k < ds.size(); ++k) {
                             permuted.push_back(ds[inv(k)]);
                         }
                         c.note("a", config_to_json(a));
                         c.note("sigma", permutation_to_json(sigma));
                         c.note("d", tuple_json(ds));
                         const auto sizes = arities(ds);
                         const Configuration lhs = full_compose(act(a, sigma), permuted);
                         const Configuration rhs = act(full_compose(a, ds), block_permutation(sigma, sizes));
                         return same_config(c, lhs, rhs, "γ(a·σ; d_σ⁻¹) != γ(a; d)·σ⟨sizes⟩");
                     }},
                    {"equivariance_blocks", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const Configuration a = g.configuration(g.index_below(4), c.index);
                         const auto ds = random_tuple(g, a.arity(), 3);
                         std::vector<Permutation> taus;
                         std::vector<Configuration> acted;
                         for (const auto& d : ds) {
                             taus.push_back(g.permutation(d.arity()));
                             acted.push_back(act(d, taus.back()));
                         }
                         const Configuration lhs = full_compose(a, acted);
                         const Configuration rhs = act(full_compose(a, ds), block_sum(taus));
                         return same_config(c, lhs, rhs, "γ(a; d_i·τ_i) != γ(a; d)·(τ_1 ⊕ ... ⊕ τ_r)");
                     }},
                    {"action_composition", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const Configuration a = g.configuration(g.index_below(5), c.index);
                         const Permutation sigma = g.permutation(a.arity());
                         const Permutation tau = g.permutation(a.arity());
                         return same_config(c, act(act(a, tau), sigma), act(a, compose(sigma, tau)),
                                            "(a·τ)·σ != a·(στ)");
                     }},
                    {"simplicial_identities", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const Configuration a = g.configuration(2 + g.index_below(3), c.index);
                         const std::size_t j = 1 + g.index_below(a.arity() - 1);
                         const std::size_t i = g.index_below(j);
                         c.note("a", config_to_json(a));
                         c.note("i", i);
                         c.note("j", j);
                         return same_config(c, restrict(restrict(a, j), i), restrict(restrict(a, i), j - 1),
                                            "d_i d_j != d_{j-1} d_i");
                     }},
                    {"extract_restrict", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const Configuration a = g.configuration(2 + g.index_below(3), c.index);
                         const std::size_t j = g.index_below(a.arity());
                         const std::size_t i = g.index_below(a.arity() - 1);
                         const LittleCube& expected = extract(a, i < j ? i : i + 1);
                         return extract(restrict(a, j), i) == expected || c.fail("D_i d_j mismatch");
                     }},
                    {"extract_action", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const Configuration a = g.configuration(1 + g.index_below(4), c.index);
                         const Permutation sigma = g.permutation(a.arity());
                         const std::size_t i = g.index_below(a.arity());
                         return extract(act(a, sigma), i) == extract(a, sigma.inverse()(i)) ||
                                c.fail("D_i(a·σ) != D_{σ⁻¹(i)}(a)");
                     }},
                    {"disjointness_preserved", n,
                     [](Case& c) {
                         // Every constructor validates its result, so reaching the end means it held.
                         auto& g = c.gen;
                         const Configuration a = g.configuration(g.index_below(4), c.index);
                         const auto ds = random_tuple(g, a.arity(), 3);
                         const Configuration composed = full_compose(a, ds);
                         const Configuration acted = act(composed, g.permutation(composed.arity()));
                         Configuration probe(acted.dim(), acted.cubes());
                         return probe == acted || c.fail("revalidation changed the configuration");
                     }},
                };
            }};
}

Suite operad_reduced_suite()
{
    return {"operad.reduced_triviality", true, [](const SuiteConfig& cfg) {
                return std::vector<Law>{
                    {"nonbase_candidates_rejected", cfg.samples,
                     [](Case& c) {
                         const OnePointOperad op;
                         const UnitPoint v(c.gen.interior());
                         c.note("value", v.value.to_string());
                         std::vector<OnePointOperad::Element> samples;
                         for (std::size_t r = 0; r <= 4; ++r) {
                             samples.push_back(op.operation(r));
                         }
                         const auto candidate = generic_comonad_element<OnePointOperad, UnitPoint>(
                             op, [v](const OnePointOperad::Element&) { return v; }, samples);
                         return !candidate.has_value() || c.fail("a non-base arity-1 candidate was accepted");
                     }},
                    {"base_candidate_accepted", 1,
                     [](Case& c) {
                         const OnePointOperad op;
                         std::vector<OnePointOperad::Element> samples;
                         for (std::size_t r = 0; r <= 4; ++r) {
                             samples.push_back(op.operation(r));
                         }
                         const auto candidate = generic_comonad_element<OnePointOperad, UnitPoint>(
                             op, [](const OnePointOperad::Element&) { return UnitPoint{}; }, samples);
                         return candidate.has_value() || c.fail("the base candidate was rejected");
                     }},
                };
            }};
}

Suite spaces_suite()
{
    return {"spaces.laws", true, [](const SuiteConfig& cfg) {
                const std::size_t n = cfg.samples;
                return std::vector<Law>{
                    {"suspension_normalization", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         Coords t = g.point(c.index);
                         const std::size_t k = g.index_below(t.size());
                         Coords edge = t;
                         edge[k] = Rational(g.rng().below(2));
                         const bool ok = Suspension<FinitePoint>::make(edge, FinitePoint{1}).is_base() &&
                                         Suspension<FinitePoint>::make(t, FinitePoint{0}).is_base() &&
                                         !Suspension<FinitePoint>::make(t, FinitePoint{2}).is_base() &&
                                         WedgePoint<Suspension<FinitePoint>>::at(0, Suspension<FinitePoint>::base())
                                             .is_base();
                         return ok || c.fail("a hidden basepoint survived construction");
                     }},
                    {"loops_send_base_to_base", n,
                     [](Case& c) {
                         const auto l = c.gen.suspension_loop(c.index);
                         const auto u = c.gen.unit_loop(c.index);
                         c.note("loop", l.description());
                         return (is_base(l(SpherePoint::base())) && is_base(u(SpherePoint::base()))) ||
                                c.fail("a loop moved the basepoint");
                     }},
                    {"suspended_equalizer", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const auto f = g.finite_self_map();
                         const auto h = g.finite_self_map();
                         const FinitePoint x = g.finite_point();
                         const auto p = Suspension<FinitePoint>::make(g.point(c.index), x);
                         const bool in_eq = same_point(f(x), h(x));
                         const bool in_susp = same_point(suspend_map(f)(p), suspend_map(h)(p));
                         c.note("f", f.label());
                         c.note("g", h.label());
                         c.note("x", x.label);
                         return in_eq == in_susp || c.fail("[t,x] ∈ Eq(Σf, Σg) disagrees with x ∈ Eq(f, g)");
                     }},
                    {"distribute_roundtrip", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const std::size_t r = 1 + g.index_below(3);
                         const auto w = g.rng().below(6) == 0
                                            ? WedgePoint<FinitePoint>::base()
                                            : WedgePoint<FinitePoint>::at(g.index_below(r), g.finite_point());
                         const auto p = Suspension<WedgePoint<FinitePoint>>::make(g.point(c.index), w);
                         return same_point(undistribute(distribute(p)), p) ||
                                c.fail("undistribute ∘ distribute != id");
                     }},
                    {"fold_laws", n,
                     [](Case& c) {
                         auto& g = c.gen;
                         const std::size_t r = 1 + g.index_below(4);
                         const std::size_t i = g.index_below(r);
                         const auto x = g.suspension_point(c.index);
                         const auto w = WedgePoint<Suspension<FinitePoint>>::at(i, x);
                         const Permutation sigma = g.permutation(r);
                         const bool ok = same_point(fold(w), x) && same_point(fold(permute_slots(w, sigma)), x) &&
                                         same_point(wedge_project(w, r, i), x);
                         return ok || c.fail("fold or projection broke on a slot inclusion");
                     }},
                };
            }};
}

}  // namespace cubeops::harness

#pragma once

#include <limits>

#include "cubeops/harness/laws.hpp"
#include "cubeops/json_io.hpp"

namespace cubeops::harness {

/// Stream index past every catalogue: always a random value.
inline constexpr std::size_t kRandom = std::numeric_limits<std::size_t>::max();

Suite geometry_suite();
Suite operad_laws_suite();
Suite operad_reduced_suite();
Suite spaces_suite();
Suite comonad_axioms_suite();
Suite comonad_property_d_suite();
Suite comonad_structure_suite();
Suite coalgebra_equivalence_suite();
Suite coalgebra_suspension_suite();
Suite approximation_retract_suite();
Suite approximation_morphism_suite();
Suite approximation_supports_suite();
Suite recognition_sphere_suite();
Suite recognition_suspension_suite();
Suite convolution_suite();
Suite broken_fixture_suite();

/// A disjoint pair for property (D) checks; shared-face pairs come first.
inline Configuration disjoint_pair(Case& c) { return c.gen.configuration(2, c.index); }

/// Checks that f is non-base on at most one cube of `pair`.
template <class X>
bool property_d_holds(Case& c, const CnElem<X>& f, const Configuration& pair)
{
    const bool a = !is_base(f(pair[0]));
    const bool b = !is_base(f(pair[1]));
    if (a && b) {
        c.note("pair", config_to_json(pair));
        c.note("element", f.describe());
        return c.fail("both cubes of a disjoint pair are non-base");
    }
    return true;
}

}  // namespace cubeops::harness

#include "cubeops/coalgebra.hpp"

namespace cubeops {

WedgePoint<SpherePoint> nabla_sphere(const Configuration& c, const SpherePoint& t)
{
    if (t.is_base()) {
        return WedgePoint<SpherePoint>::base();
    }
    if (t.coords().size() != c.dim()) {
        throw DimensionMismatch("nabla_sphere: dimension mismatch");
    }
    // Open images are pairwise disjoint, so at most one cube can hold t in its interior.
    for (std::size_t i = 0; i < c.arity(); ++i) {
        if (c[i].contains_open(t.coords())) {
            return WedgePoint<SpherePoint>::at(i, SpherePoint::at(c[i].invert(t.coords())));
        }
    }
    return WedgePoint<SpherePoint>::base();
}

}  // namespace cubeops

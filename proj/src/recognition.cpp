#include "cubeops/recognition.hpp"

namespace cubeops {

CnCoalgebra<SpherePoint> sphere_cn_coalgebra(std::size_t dim)
{
    auto delta = std::make_shared<const SphereCoalgebra>(dim);
    return {dim, "sphere", [delta](const SpherePoint& t) { return coend_to_comonadic<SpherePoint>(delta, t); }};
}

SigmaOmegaCoalgebra<SpherePoint> sphere_sigma_omega(std::size_t dim)
{
    const LoopMap<SpherePoint> id = identity_loop(dim);
    return {dim, "sphere", [id](const SpherePoint& t) {
                if (t.is_base()) {
                    return Suspension<LoopMap<SpherePoint>>::base();
                }
                return Suspension<LoopMap<SpherePoint>>::make(t.coords(), id);
            }};
}

}  // namespace cubeops

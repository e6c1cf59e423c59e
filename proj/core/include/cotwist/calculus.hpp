#pragma once

// Twisted differential graded algebra: degree-one partners for the sphere
// letters, graded swaps with Koszul signs, the exterior derivative and
// Grassmann curvature.

#include "cotwist/matrixalg.hpp"
#include "cotwist/report.hpp"
#include "cotwist/spheres.hpp"

namespace cotwist {

struct DgaPresentation {
    SphereVariant variant = SphereVariant::S7Family;
    PresentationPtr pres;
    std::array<GenId, 4> z{}, zs{}, dz{}, dzs{};
    GenId r2 = 0, r2i = 0;

    // Exterior derivative, letterwise with Koszul signs; d(r^2) = 0 on the
    // fixed-radius slice.
    NcElement differential(const NcElement& e) const;
    NcMatrix differential(const NcMatrix& m) const;
};

DgaPresentation make_dga(SphereVariant variant, const CocycleData& F);

// Grassmann curvature P (dP)^2; requires is_projection(P).
NcMatrix curvature(const DgaPresentation& dga, const NcMatrix& p);

// d^2 = 0, graded Leibniz, the calculus relations on all generator pairs,
// torus-degree preservation, p dp p = 0 and the curvature identities for the
// basic projector.
CheckReport verify_calculus(const CocycleData& F);

}  // namespace cotwist

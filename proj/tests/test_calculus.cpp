#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cotwist/calculus.hpp"

using namespace cotwist;

TEST_CASE("full calculus verification (flip convention)") {
    CheckReport report = verify_calculus(CocycleData::standard_theta(Convention::flip));
    INFO(report.summary());
    CHECK(report.ok());
    CHECK(report.checks_run > 150);
}

TEST_CASE("d of a product: d(z1 z3) = (dz1) z3 + z1 dz3") {
    DgaPresentation dga = make_dga(SphereVariant::C4, CocycleData::standard_theta(Convention::flip));
    const auto& P = *dga.pres;
    NcElement w = P.word({dga.z[0], dga.z[2]});
    NcElement expected = P.word({dga.dz[0], dga.z[2]}) + P.word({dga.z[0], dga.dz[2]});
    CHECK(dga.differential(w) == expected);
    // d (dz1) = 0 and dz dz of the same letter squares to zero.
    CHECK(dga.differential(P.letter(dga.dz[0])).is_zero());
    CHECK(P.word({dga.dz[0], dga.dz[0]}).is_zero());
}

TEST_CASE("Koszul sign: d(dz1 z3) = -dz1 dz3") {
    DgaPresentation dga = make_dga(SphereVariant::C4, CocycleData::standard_theta(Convention::flip));
    const auto& P = *dga.pres;
    NcElement w = P.word({dga.dz[0], dga.z[2]});
    CHECK(dga.differential(w) == -P.word({dga.dz[0], dga.dz[2]}));
}

TEST_CASE("curvature demands a projection") {
    DgaPresentation dga =
        make_dga(SphereVariant::S7Family, CocycleData::standard_theta(Convention::flip));
    NcMatrix not_proj(dga.pres.get(), 2, 2);
    not_proj.set(0, 0, dga.pres->letter(dga.z[0]));
    CHECK_THROWS(curvature(dga, not_proj));
}

TEST_CASE("fixed-radius slice: d r^2 = 0 and the differentiated sphere relation") {
    DgaPresentation dga =
        make_dga(SphereVariant::S7Family, CocycleData::standard_theta(Convention::flip));
    const auto& P = *dga.pres;
    CHECK(dga.differential(P.letter(dga.r2)).is_zero());
    NcElement dsum = P.zero();
    for (int j = 0; j < 4; ++j) {
        dsum += P.word({dga.dzs[static_cast<std::size_t>(j)], dga.z[static_cast<std::size_t>(j)]});
        dsum += P.word({dga.zs[static_cast<std::size_t>(j)], dga.dz[static_cast<std::size_t>(j)]});
    }
    CHECK(dsum.is_zero());
}

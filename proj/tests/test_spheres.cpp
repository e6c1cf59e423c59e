#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cotwist/spheres.hpp"

using namespace cotwist;

namespace {

const CocycleData& F() {
    static CocycleData f = CocycleData::standard_theta(Convention::flip);
    return f;
}

}  // namespace

TEST_CASE("sphere relations: 64 pairs, S4 relations, quadric, classical limit") {
    CheckReport report = verify_sphere_relations(F());
    INFO(report.summary());
    CHECK(report.ok());
    CHECK(report.checks_run >= 32);
}

TEST_CASE("basic projector: u*u = r^2, q^2 = q = q*, printed matrix") {
    SpherePresentation s7 = make_sphere(SphereVariant::S7Family, F());
    CheckReport report = verify_basic_projector(s7);
    INFO(report.summary());
    CHECK(report.ok());
}

TEST_CASE("basic projector under the verbatim convention still projects") {
    SpherePresentation s7 =
        make_sphere(SphereVariant::S7Family, CocycleData::standard_theta(Convention::verbatim));
    BasicProjector bp = basic_projector(s7);
    CHECK(is_projection(bp.q).ok);
}

TEST_CASE("torus gauge: p' = U (1 (x) p) U*") {
    SpherePresentation s7 = make_sphere(SphereVariant::S7Family, F());
    CheckReport report = verify_torus_gauge(s7);
    INFO(report.summary());
    CHECK(report.ok());
}

TEST_CASE("SL cobosonised coacted projector and closed form") {
    CobosSphere cs = make_cobos_sphere(MatrixGroupKind::SL2H, F());
    CheckReport report = verify_coacted_projector(cs);
    INFO(report.summary());
    CHECK(report.ok());
}

TEST_CASE("SL Murray-von Neumann witness: V*V = 1 (x) q, V V* = Q~") {
    CobosSphere cs = make_cobos_sphere(MatrixGroupKind::SL2H, F());
    CheckReport report = verify_sl_mvn(cs);
    INFO(report.summary());
    CHECK(report.ok());
}

TEST_CASE("negative control: perturbing one phase of V breaks the MvN identity") {
    CobosSphere cs = make_cobos_sphere(MatrixGroupKind::SL2H, F());
    BasicProjector bp = basic_projector(cs.s7);
    NcMatrix Q = cs.coact_matrix(bp.q);
    NcMatrix embq = cs.embed_matrix(bp.q);
    // A wrong partial isometry: drop the rho1i prefactor on one entry.
    NcMatrix V(cs.pres.get(), 4, 4);
    std::array<GenId, 4> ctau;
    for (int k = 0; k < 4; ++k)
        ctau[static_cast<std::size_t>(k)] = cs.cobos_map[cs.cobos.tau[static_cast<std::size_t>(k)]];
    auto tau = tau_degrees();
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
            NcElement total = cs.pres->zero();
            for (int a = 0; a < 4; ++a) {
                NcElement term = cs.pres->letter(cs.rho1i);
                term = cs.pres->multiply(term, cs.embed_cobos(cs.cobos.ahat(k, a)));
                term = cs.pres->multiply(term, torus_word(*cs.pres, ctau, tau[static_cast<std::size_t>(a)]));
                term = cs.pres->multiply(term, cs.embed_sphere(bp.q.at(static_cast<std::size_t>(a),
                                                                       static_cast<std::size_t>(l))));
                if (k == 0 && l == 0 && a == 0) term = term.scaled(cs.pres->params().mu());
                total += term;
            }
            V.set(static_cast<std::size_t>(k), static_cast<std::size_t>(l), total);
        }
    PredicateResult bad = check_mvn_equivalence(V, embq, Q);
    CHECK(!bad.ok);
}

TEST_CASE("Sp cobosonised gauge: Q~0 = U (1 (x) q) U* modulo the Sp span") {
    CobosSphere cs = make_cobos_sphere(MatrixGroupKind::Sp2, F());
    CheckReport report = verify_sp_gauge(cs);
    INFO(report.summary());
    CHECK(report.ok());
}

TEST_CASE("delta_u gauge for u = (tau_1..tau_4): derived identities exact, printed form off by eta") {
    CobosSphere cs = make_cobos_sphere(MatrixGroupKind::SL2H, F());
    auto tau = tau_degrees();
    CheckReport r1 = verify_delta_u_gauge(cs, {tau[0], tau[1], tau[2], tau[3]});
    INFO(r1.summary());
    // Four checks: diag(u_k) unitary, the utilde-level identity, the
    // eta-corrected projector identity (all exact) and the literally-printed
    // conjugation, which the cotriangular structure obstructs.
    CHECK(r1.checks_run == 4);
    REQUIRE(r1.failures.size() == 1);
    CHECK(r1.failures[0].find("as printed") != std::string::npos);
    CHECK_THROWS(verify_delta_u_gauge(cs, {tau[0], tau[0], tau[2], tau[3]}));
}

TEST_CASE("charge-one parameter space: structural facts and derived relations") {
    for (auto [r1, r2] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 0}, std::pair{2, -1}}) {
        ChargeOneSpace space = charge_one_parameter_space(r1, r2, F());
        INFO("r1=", r1, " r2=", r2, " printed: ", space.printed.summary());
        INFO("derived: ", space.derived_relations);
        CHECK(space.structural.ok());
        // The engine's own commutativity matches the weight-sum criterion.
        CHECK(space.commutative == (r1 + r2 == 1));
    }
}

TEST_CASE("charge-one (0,0): printed noncommutative relations hold") {
    ChargeOneSpace space = charge_one_parameter_space(0, 0, F());
    INFO(space.printed.summary());
    CHECK(space.printed.ok());
}

TEST_CASE("charge-one (0,1): commutative space; printed quadric coefficients drift") {
    ChargeOneSpace space = charge_one_parameter_space(0, 1, F());
    INFO(space.printed.summary());
    CHECK(space.commutative);
    // The printed nu-weighted quadric only closes when r1 = r2: the engine
    // phases on g* g are r-independent, so the unit-coefficient quadric is the
    // one that holds for every exponent choice (a structural check).
    CHECK(!space.printed.ok());
    CHECK(space.printed.failures.size() == 1);
    CHECK(space.structural.ok());
}

#pragma once

// Concrete sphere presentations, the basic instanton projector, coacted
// projectors over the cobosonised symmetry algebras, gauge unitaries, the
// partial-isometry witness and the charge-one parameter spaces.

#include "cotwist/hopf.hpp"
#include "cotwist/matrixalg.hpp"
#include "cotwist/report.hpp"

namespace cotwist {

enum class SphereVariant { C4, S7Family, S4Family };

struct SpherePresentation {
    SphereVariant variant = SphereVariant::C4;
    PresentationPtr pres;
    std::array<GenId, 4> z{}, zs{};          // C4 / S7 letters
    GenId r2 = 0, r2i = 0;                   // family radius letters
    GenId al = 0, als = 0, be = 0, bes = 0, x = 0;  // S4 letters

    // alpha, beta, x as elements of the seven-sphere presentation.
    NcElement alpha_elem() const;
    NcElement beta_elem() const;
    NcElement x_elem() const;
};

SpherePresentation make_sphere(SphereVariant variant, const CocycleData& F);

// All 64 generator-pair relations z_j z_l = eta_{lj} z_l z_j and
// z_j z_l* = eta_{jl} z_l* z_j, plus the S4 relations and centrality of x.
CheckReport verify_sphere_relations(const CocycleData& F);

struct BasicProjector {
    NcMatrix u;  // 4 x 2
    NcMatrix q;  // u r^-2 u*
    NcMatrix p;  // 1 - q
};
BasicProjector basic_projector(const SpherePresentation& s7);

// u*u = r^2, q^2 = q = q*, and 2 r^2 q equals the printed matrix entrywise
// (with the alpha, beta, x combinations substituted); classical limit checked
// against the undeformed matrix.
CheckReport verify_basic_projector(const SpherePresentation& s7);

// --- torus-coacted family -------------------------------------------------------

struct TorusCoactedFamily {
    GrouplikeCoaction coaction;   // H (x) S7-family, plain tensor
    NcMatrix qprime, pprime;
    NcMatrix gauge;               // diag(tau_k (x) 1)
};
TorusCoactedFamily coact_torus(const SpherePresentation& s7);
// p' = U (1 (x) p) U* and q' = U (1 (x) q) U*, exact.
CheckReport verify_torus_gauge(const SpherePresentation& s7);

// --- cobosonised coactions ------------------------------------------------------

// (B(G) >cross H_F) (x) S7-family with the inflated radius letters rho2,
// rho2i, rho1i adjoined; the coaction substitution sends z_i to
// sum_b Ahat_ib (x) tau_b (x) z_b and r^2 to rho2.
struct CobosSphere {
    Cobosonisation cobos;
    SpherePresentation s7;
    PresentationPtr pres;
    std::vector<GenId> cobos_map, sphere_map;
    GenId rho2 = 0, rho2i = 0, rho1i = 0;
    std::shared_ptr<Substitution> coaction;
    std::vector<NcElement> relations;  // lifted Sp span when present

    NcElement embed_sphere(const NcElement& e) const {
        return lift_element(e, *pres, sphere_map);
    }
    NcElement embed_cobos(const NcElement& e) const { return lift_element(e, *pres, cobos_map); }
    NcMatrix coact_matrix(const NcMatrix& m) const;
    NcMatrix embed_matrix(const NcMatrix& m) const;
};

CobosSphere make_cobos_sphere(MatrixGroupKind kind, const CocycleData& F);

// Q~ := coaction(q) is a projection; for SL it matches the closed form with
// the F^-2 factor entrywise.
CheckReport verify_coacted_projector(const CobosSphere& cs);

// Sp chain: U_kl = Ahat_kl (x) tau_l (x) 1 is unitary modulo the Sp span and
// Q~0 = U (1 (x) q) U*, certified entrywise.
CheckReport verify_sp_gauge(const CobosSphere& cs);

// SL chain: V_kl = sum_a rho1i (Ahat_ka (x) tau_a) (x) q_al satisfies
// V*V = 1 (x) q and V V* = Q~ exactly.
CheckReport verify_sl_mvn(const CobosSphere& cs);

// delta_u (x) id gauge check: the coacted projector is conjugation by
// diag(u_k tau_k (x) 1 (x) 1), exact.
CheckReport verify_delta_u_gauge(const CobosSphere& cs, const std::array<TorusDegree, 4>& u);

// --- charge-one parameter space ---------------------------------------------------

struct ChargeOneSpace {
    int r1 = 0, r2 = 0;
    NcElement m, n, g1, g2;        // inside cobos(SL2H)
    NcElement det_expr;            // m11 m33 - m31 m13 + m41 m14 (x) 1
    CheckReport printed;           // checks asserted exactly as printed
    CheckReport structural;        // engine-derived facts (centrality, adjointness)
    std::string derived_relations; // the engine's own commutation phases
    bool commutative = false;      // engine-computed
};

ChargeOneSpace charge_one_parameter_space(int r1, int r2, const CocycleData& F);

}  // namespace cotwist

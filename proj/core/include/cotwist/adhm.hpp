#pragma once

// The deformed ADHM construction at arbitrary charge k: monad algebras with
// the star-reduced quadratic relation family, sigma matrices, monad-condition
// certification, the Q projector and the coinvariant parameter spaces.

#include "cotwist/hopf.hpp"
#include "cotwist/ideal.hpp"
#include "cotwist/matrixalg.hpp"
#include "cotwist/report.hpp"
#include "cotwist/spheres.hpp"

namespace cotwist {

// The composition tau_z sigma_z = 0 yields the quadratic relation family.
// `derived` extracts the coefficients of the normal-ordered z-words from the
// engine's own expansion of the composition; `literal` transcribes the printed
// index pattern (whose classical limit differs for k >= 2 - both are kept and
// the discrepancy is reported, the engine never guesses).
enum class AdhmReading { derived, literal };

struct MonadAlgebra {
    int k = 1;
    AdhmReading reading = AdhmReading::derived;
    PresentationPtr pres;   // M letters and their stars, one slot
    // m_id[j][a][b]: the letter M^{j+1}_{a+1,b+1}; ms_id mirrors the stars.
    std::vector<std::vector<std::vector<GenId>>> m_id, ms_id;
    std::vector<NcElement> relations;  // star-closed, per the reading

    NcElement m(int j, int a, int b) const {
        return pres->letter(m_id[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)]
                                [static_cast<std::size_t>(b)]);
    }
    // N^j = (-M^2, M^1, -M^4, M^3)^dagger pattern: N^j_{db} as an element.
    NcElement n(int j, int d, int b) const;
};

MonadAlgebra build_monad_algebra(int k, const CocycleData& F,
                                 AdhmReading reading = AdhmReading::derived);

// Classical guard: at theta = 0 the relation span of the chosen reading is
// compared in both directions with the printed classical family
// sum_b (N^j_cb M^l_bd + N^l_cb M^j_bd) = 0.
CheckReport verify_classical_adhm_limit(int k, AdhmReading reading);

struct SigmaData {
    MonadAlgebra monad;
    SpherePresentation s7;          // radius family letters on the sphere leg
    PresentationPtr big;            // monad (x)_br sphere family
    std::vector<GenId> monad_map, sphere_map;
    NcMatrix sigma_z, sigma_j;      // (2k+2) x k
    std::vector<NcElement> relations;  // lifted into `big`
};

SigmaData make_sigma(const MonadAlgebra& monad, const CocycleData& F);

// (a) every entry of sigma_J* sigma_z certified against the relation span;
// (b) likewise sigma_J* sigma_J - sigma_z* sigma_z;
// (c) the rho^2 entries commute with the sigma_z entries in the free algebra.
CheckReport verify_monad_conditions(const SigmaData& sd);

struct AdhmProjector {
    PresentationPtr pres;           // big + the inverse letters w_{mu nu}
    std::vector<GenId> big_map;
    std::vector<std::vector<GenId>> w;  // k x k central inverse letters
    NcMatrix V;                     // (2k+2) x 2k
    NcMatrix Q, P;                  // (2k+2) x (2k+2)
    CheckReport report;
};

// Builds V = (sigma_z sigma_J), the inverse letters with their linked
// reduction rules, Q = V W V*, and certifies Q^2 = Q = Q* through the
// factorization Q^2 - Q = V W (V*V - rho^2) W V*.
AdhmProjector adhm_projector(const SigmaData& sd);

// beta: monad (x)_br C4  ->  (monad cross H_F) (x) C4, M (x) Z -> M (x) Z(-1) (x) Z(0);
// multiplicativity and star-compatibility on random pairs, injectivity on
// random canonical forms.
CheckReport verify_beta_map(const SigmaData& sd, std::uint64_t seed);

struct AdhmCoinvariants {
    int r1 = 0, r2 = 0;
    bool commutative = false;
    std::vector<CoinvariantGenerator> generators;
    CheckReport report;
};

// u_j = tau_j^{m_j} with (m) = (r1, r1, r2, r2): the coinvariants M^j (x) u_j,
// their commutation phases eta_{jl}^{m_l + m_j - 1}, and commutativity exactly
// when r1 + r2 = 1.
AdhmCoinvariants adhm_coinvariants(const MonadAlgebra& monad, int r1, int r2);

// Classical specialization: the charge-1 projector at zeta = 1 agrees
// entrywise with the projector built over the classical cocycle.
CheckReport verify_adhm_classical_projector(const CocycleData& F);

}  // namespace cotwist

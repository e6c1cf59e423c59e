#pragma once

// Braided matrix bialgebras on the quaternionic 4x4 pattern, their braided
// antipodes, cobosonisations, torus coactions, coinvariant subalgebras and
// Hopf-Galois witnesses.

#include "cotwist/algebra.hpp"
#include "cotwist/ideal.hpp"
#include "cotwist/report.hpp"

#include <array>
#include <functional>
#include <optional>

namespace cotwist {

// Quaternionic index partner: 1<->2, 3<->4 (0-based internally).
inline int quaternionic_partner(int i) { return i ^ 1; }

// The torus algebra as letters t1, t1s, t2, t2s with inverse-cancellation
// rules; one grouplike factor.
PresentationPtr make_torus_presentation(const CocycleData& F);
// Torus monomial of the given degree as an element of `pres`, with the torus
// letters located through `torus_map` (tau-letter ids in declaration order).
NcElement torus_word(const AlgebraPresentation& pres, const std::array<GenId, 4>& tau_letters,
                     const TorusDegree& degree);

enum class MatrixGroupKind { M2H, Sp2, SL2H };

// B(M_theta(2,H)) and friends: 16 generators Ahat_ij with the adjoint-coaction
// degrees tau_i tau_j^* and the quaternionic star pattern
//   star(Ahat_ij) = (-1)^{i+j} F^2(tau_i, tau_j) Ahat_{i' j'}.
// For Sp2 the star-closed relation span  sum_a (A*)_{ia} A_{aj} - delta_ij
// (both families A*A - 1 and A A* - 1) is attached for certification.
struct BraidedMatrixGroup {
    MatrixGroupKind kind = MatrixGroupKind::M2H;
    PresentationPtr pres;
    std::array<std::array<GenId, 4>, 4> a{};   // a[i][j] = Ahat_{i+1, j+1}
    std::vector<NcElement> relations;          // empty unless Sp2

    NcElement gen(int i, int j) const { return pres->letter(a[i][j]); }
};

BraidedMatrixGroup make_braided_matrix_group(const CocycleData& F, MatrixGroupKind kind);

// Braided coproduct Delta_F(Ahat_ij) = sum_a Ahat_ia (x) Ahat_aj into the
// braided tensor square.
struct BraidedCoproduct {
    PresentationPtr square;
    std::vector<GenId> left, right;
    Substitution delta;
};
BraidedCoproduct make_braided_coproduct(const BraidedMatrixGroup& B);

// Counit eps(Ahat_ij) = delta_ij evaluated on an element (scalar output).
PhaseScalar counit_matrix_group(const BraidedMatrixGroup& B, const NcElement& e);

// Delta_F is an algebra map into the braided square for all 256 generator
// pairs; coassociativity on all generators; counit laws.
CheckReport verify_braided_bialgebra(const BraidedMatrixGroup& B);

// Braided antipode.  SL2H: signed braided cofactor expansion
// S(Ahat_ij) = (-1)^{i+j} * braided minor over (rows != j, cols != i);
// Sp2: S(Ahat_ij) = star(Ahat_ij).
NcElement braided_antipode(const BraidedMatrixGroup& B, int i, int j);

// Classical oracle: at zeta = 1 and on random quaternionic-patterned numeric
// matrices, sum_j S(A)_{ij} A_{jk} = det(A) delta_{ik}.
CheckReport verify_antipode_adjugate_oracle(const BraidedMatrixGroup& B, int trials,
                                            std::uint64_t seed);

// --- cobosonisation -----------------------------------------------------------

// K >cross H_F on the braided matrix group: slot 0 carries the K letters, slot
// 1 the grouplike torus letters; the cross relations are the uniform swap rule.
struct Cobosonisation {
    BraidedMatrixGroup base;
    PresentationPtr pres;
    std::vector<GenId> from_base;       // base generator id -> cobos id
    std::array<GenId, 4> tau;           // t1, t1s, t2, t2s
    std::vector<NcElement> relations;   // lifted Sp relation span (if any)

    NcElement ahat(int i, int j) const { return pres->letter(from_base[base.a[i][j]]); }
    NcElement h_word(const TorusDegree& d) const { return torus_word(*pres, tau, d); }
    NcElement embed(const NcElement& base_elem) const {
        return lift_element(base_elem, *pres, from_base);
    }
    // m_ij = sum_a star(Ahat_ai) Ahat_aj (tensor 1), the delta_L-coinvariant
    // quadratic generators.
    NcElement m_element(int i, int j) const;
};

Cobosonisation cobosonise(const BraidedMatrixGroup& B);

struct CobosCoproduct {
    PresentationPtr square;   // plain tensor square of the cobosonisation
    std::vector<GenId> left, right;
    Substitution delta;
};
CobosCoproduct make_cobos_coproduct(const Cobosonisation& C);

// Cross coproduct matches the explicit formula on generators; coassociativity;
// counit laws; pi_H := (counit (x) id) is an algebra map onto the torus; the
// right pi_H-coinvariants recover the base generators.
CheckReport verify_cobosonisation(const Cobosonisation& C);

// Biproduct antipode S(a (x) h) = (1 (x) (a_deg h)^-1) (S_underline(a) (x) 1);
// for Sp2 the antipode axiom m(S (x) id)Delta = eta eps is certified against
// the relation span on every generator.
NcElement cobos_antipode_on_generator(const Cobosonisation& C, int i, int j,
                                      const TorusDegree& h);
CheckReport verify_cobos_antipode_axiom(const Cobosonisation& C);

// --- coactions -----------------------------------------------------------------

// Grouplike-weight coaction: on every normal word w the weight letter is
// prepended,  w -> t^{sum of letter weights} (x) w.  This is the coaction the
// displayed computations use; it is well defined because all rewrite rules are
// weight-homogeneous (checked on construction).
struct GrouplikeCoaction {
    const AlgebraPresentation* source = nullptr;
    PresentationPtr target;              // slot 0: torus letters; then source slots
    std::array<GenId, 4> tau;            // torus letters in the target
    std::vector<GenId> source_map;       // source gen -> target gen
    std::vector<TorusDegree> weights;    // per source generator

    TorusDegree word_weight(const Word& w) const;
    NcElement apply(const NcElement& e) const;
    NcElement embed(const NcElement& e) const { return lift_element(e, *target, source_map); }
};

// torus_pair: default pairing of the new torus leg against the source slots;
// factor_kind (optional) refines it per source factor.  When the source has
// rewrite rules that are not weight-homogeneous the coaction is only defined
// on canonical forms; pass strict=false to accept that (the engine then never
// rewrites across the weight grading on your behalf).
GrouplikeCoaction make_grouplike_coaction(
    const PresentationPtr& source, const std::function<TorusDegree(GenId)>& weight,
    PairKind torus_pair, const std::function<PairKind(int)>& factor_kind = nullptr,
    bool strict = true);

// Coaction axioms (counitality and coassociativity) on all generators.
CheckReport verify_coaction_axioms(const GrouplikeCoaction& c);

// Coinvariant generators of a grouplike coaction on a cross product: for each
// non-torus letter g, the element g (x) t^{-w(g)}; each is re-verified by
// applying the coaction, and all weight-zero monomials up to the degree bound
// are checked coinvariant.
struct CoinvariantGenerator {
    std::string name;
    NcElement element;
};
struct CoinvariantReport {
    std::vector<CoinvariantGenerator> generators;
    CheckReport verification;
};
CoinvariantReport coinvariants_grouplike(const GrouplikeCoaction& c,
                                         const std::vector<GenId>& k_letters,
                                         const std::array<GenId, 4>& source_tau,
                                         int degree_bound);

// delta_u on a cobosonisation: Ahat_kl (x) h -> u_k u_l^* h (x) (Ahat_kl (x) h),
// u_j = tau_j^{m_j}.  Checked: u_1^* = u_2, u_3^* = u_4.
GrouplikeCoaction make_delta_u(const Cobosonisation& C, const std::array<TorusDegree, 4>& u);
std::array<TorusDegree, 4> exponent_unitaries(int r1, int r2);

// delta_L : cobos(SL) -> B(Sp) (x)_br cobos(SL), the Sp-projected coproduct.
struct DeltaL {
    const Cobosonisation* source = nullptr;
    BraidedMatrixGroup sp;
    PresentationPtr target;
    std::vector<GenId> sp_map;       // sp generator -> target
    std::vector<GenId> source_map;   // cobos generator -> target
    std::shared_ptr<Substitution> subst;
    std::vector<NcElement> sp_relations;  // lifted into the target (slot 0)
};
DeltaL make_delta_L(const Cobosonisation& C);

// delta_L(m_ij (x) h) = 1 (x) m_ij (x) h, certified against the Sp span.
CheckReport verify_coinvariance_spL(const DeltaL& d, const std::vector<TorusDegree>& h_samples);

// Galois witnesses: for each torus generator tau_j the pair
// (1 (x) tau_j, 1 (x) tau_j^*) maps under chi_u(b (x) b') = delta_u(b) b' to
// tau_j (x) 1, re-verified by direct evaluation.
struct GaloisWitness {
    TorusDegree target_degree;
    NcElement b, b_prime;
    NcElement chi_image;
    bool verified = false;
};
std::vector<GaloisWitness> galois_witnesses(const GrouplikeCoaction& delta_u,
                                            const Cobosonisation& C);

}  // namespace cotwist

#pragma once

// Normal-ordering engine for graded free *-algebras with bicharacter phase
// commutation: presentations, words, elements, oriented rewrite rules and
// substitution homomorphisms.
//
// The whole engine rests on one rule: adjacent letters of torus degrees x, y
// (and form degrees p, q) satisfy X Y = (-1)^{pq} F^2(x,y) Y X, except that
// letters inside one grouplike torus factor commute on the nose, letters in
// plainly-tensored factors commute across the tensor sign, and central letters
// commute with everything.

#include "cotwist/cocycle.hpp"
#include "cotwist/scalars.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cotwist {

using GenId = std::uint16_t;

struct StarImage {
    GenId target = 0;
    PhaseScalar coeff;  // star(g) = coeff * target
};

struct Generator {
    std::string name;
    TorusDegree degree;
    int factor = 0;         // tensor-leg tag
    int form_degree = 0;    // 0 for functions, 1 for one-form letters
    bool central = false;
    std::optional<StarImage> star;
    // Differential: unset = error when differentiated, target = image letter,
    // closed (target unset, is_closed) = d(g) = 0.
    bool d_closed = false;
    std::optional<GenId> d_image;
};

// How letters from two distinct factors swap past each other.
enum class PairKind { braided, plain };

struct FactorInfo {
    std::string name;
    bool grouplike_abelian = false;  // torus letters: same-factor swaps are trivial
};

// A normal-ordered word: a sequence of non-central letters plus a sorted
// multiset of central letters (central letters carry no ordering information).
struct Word {
    std::vector<GenId> letters;
    std::vector<GenId> centrals;

    bool empty() const { return letters.empty() && centrals.empty(); }
    std::size_t size() const { return letters.size() + centrals.size(); }
    bool operator==(const Word& o) const { return letters == o.letters && centrals == o.centrals; }
    bool operator<(const Word& o) const;
};

class AlgebraPresentation;

// Finite map word -> coefficient, always in canonical normal form with respect
// to its presentation.
class NcElement {
  public:
    using Terms = std::map<Word, PhaseScalar>;

    NcElement() = default;
    explicit NcElement(const AlgebraPresentation* p) : pres_(p) {}

    const Terms& terms() const { return terms_; }
    const AlgebraPresentation* presentation() const { return pres_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const NcElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const NcElement& o) const { return !(*this == o); }

    NcElement operator+(const NcElement& o) const;
    NcElement operator-(const NcElement& o) const;
    NcElement operator-() const;
    NcElement operator*(const NcElement& o) const;
    NcElement& operator+=(const NcElement& o) { *this = *this + o; return *this; }
    NcElement& operator-=(const NcElement& o) { *this = *this - o; return *this; }

    NcElement scaled(const PhaseScalar& c) const;

    // Torus degree if every word is homogeneous of one degree.
    std::optional<TorusDegree> homogeneous_degree() const;
    int max_form_degree() const;
    // Largest word length in the letters of the given factor.
    std::size_t factor_degree(int factor) const;

    // Coefficientwise evaluation at zeta = 1 (stays in the same presentation).
    NcElement at_zeta_one() const;

    std::string str() const;

  private:
    friend class AlgebraPresentation;
    const AlgebraPresentation* pres_ = nullptr;
    Terms terms_;
};

struct RewriteRule {
    Word lhs;        // nonempty, normal-ordered
    NcElement rhs;
    std::string name;
};

class AlgebraPresentationBuilder;

class AlgebraPresentation {
  public:
    struct SwapEntryRaw {
        std::int64_t zeta_exp = 0;
        bool negate = false;
        bool annihilates = false;  // equal odd letters square to zero
    };

    const CocycleData& cocycle() const { return cocycle_; }
    const DeformationParams& params() const { return cocycle_.params(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& gen(GenId id) const { return gens_.at(id); }
    const std::vector<FactorInfo>& factors() const { return factors_; }
    const std::vector<std::vector<PairKind>>& pair_kind() const { return pair_kind_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::vector<NcElement>& relations() const { return relations_; }

    GenId id_of(const std::string& name) const;
    std::optional<GenId> find(const std::string& name) const;

    // --- element construction -------------------------------------------------
    NcElement zero() const;
    NcElement scalar(PhaseScalar c) const;
    NcElement one() const { return scalar(PhaseScalar::one()); }
    NcElement letter(GenId g, PhaseScalar coeff = PhaseScalar::one()) const;
    NcElement letter(const std::string& name) const;
    // Normalizes an arbitrary letter sequence.
    NcElement word(const std::vector<GenId>& letters, PhaseScalar coeff = PhaseScalar::one()) const;

    // --- core operations --------------------------------------------------------
    NcElement multiply(const NcElement& a, const NcElement& b) const;
    NcElement star(const NcElement& e) const;
    // Torus degree of a single word (sum over letters).
    TorusDegree word_degree(const Word& w) const;
    int word_form_degree(const Word& w) const;

    // Phase with (letter a)(letter b) = phase * (letter b)(letter a); the bool
    // is false when the swap annihilates the word (equal letters, odd phase).
    std::pair<PhaseScalar, bool> swap_phase(GenId a, GenId b) const;

    // Normalizes raw terms (sorting + rewrite fixpoint).  Throws on rewrite
    // budget exhaustion, which signals a bad rule set.
    NcElement normalize_terms(std::vector<std::pair<Word, PhaseScalar>> raw) const;

    std::string render(const NcElement& e) const;
    NcElement parse(const std::string& text) const;

    // Commutator [a, b] = ab - ba.
    NcElement commutator(const NcElement& a, const NcElement& b) const;
    bool is_central_element(const NcElement& e) const;

  private:
    friend class AlgebraPresentationBuilder;
    AlgebraPresentation() = default;

    void rebuild_swap_table() const;
    SwapEntryRaw swap_entry(GenId a, GenId b) const {
        if (swap_.empty()) rebuild_swap_table();
        return swap_[a * gens_.size() + b];
    }
    bool match_and_rewrite(const Word& w, const PhaseScalar& coeff,
                           std::vector<std::pair<Word, PhaseScalar>>& out) const;

    CocycleData cocycle_;
    std::vector<Generator> gens_;
    std::vector<FactorInfo> factors_;
    std::vector<std::vector<PairKind>> pair_kind_;
    std::vector<RewriteRule> rules_;
    std::vector<NcElement> relations_;
    // Lazily rebuilt after generator or pair-kind changes invalidate it.
    mutable std::vector<SwapEntryRaw> swap_;
    std::size_t rewrite_budget_ = 4000000;
};

using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

class AlgebraPresentationBuilder {
  public:
    explicit AlgebraPresentationBuilder(CocycleData cocycle);

    int add_factor(const std::string& name, bool grouplike_abelian = false);
    void set_pair_kind(int factor_a, int factor_b, PairKind kind);

    GenId add_generator(const std::string& name, TorusDegree degree, int factor,
                        int form_degree = 0, bool central = false);
    // Mutual star pair with unit coefficients.
    void set_star_pair(GenId g, GenId gstar);
    void set_self_adjoint(GenId g);
    void set_star(GenId g, GenId target, PhaseScalar coeff);
    void set_d_image(GenId g, GenId dg);
    void set_d_closed(GenId g);

    // Registration validates: lhs normal-ordered and nonempty, rhs words
    // strictly below lhs in (length, lex), degree homogeneity.  Rules that mix
    // torus degrees (the inflated-radius reductions, whose covariance lives
    // over the cobosonisation coproduct instead) opt out of the degree guard.
    void add_rule(Word lhs, NcElement rhs, std::string name = {},
                  bool require_degree_homogeneous = true);
    void add_relation(NcElement rel);

    // Finalizes: checks star involutivity, builds the swap table.
    PresentationPtr build();

    // Accessors used while assembling rules before build().
    const std::vector<Generator>& generators() const { return pres_->gens_; }
    // Normalization against the rules registered so far (used to stage
    // derived rules such as the inflated-radius reduction).
    AlgebraPresentation* staging() { return pres_.get(); }

  private:
    std::shared_ptr<AlgebraPresentation> pres_;
    bool built_ = false;
};

// --- presentation combinators -------------------------------------------------

// Identifier maps from one tensor part into the combined presentation.
struct TensorPart {
    const AlgebraPresentation* source = nullptr;
    std::vector<GenId> gen_map;
    std::vector<int> factor_map;
};

// Disjoint union of the parts' generators, factors, rules and relations, with
// the given pair kind across parts (braided tensor product or plain tensor
// product).  Clashing generator names gain a prime suffix.  The caller may add
// further letters and rules before build().
struct TensorAssembly {
    AlgebraPresentationBuilder builder;
    std::vector<TensorPart> parts;
};
TensorAssembly tensor_assembly(const std::vector<const AlgebraPresentation*>& parts,
                               PairKind cross);
// Per-part-pair kinds, for mixed products such as (H (x)_br A) (x) B.
TensorAssembly tensor_assembly(
    const std::vector<const AlgebraPresentation*>& parts,
    const std::function<PairKind(std::size_t, std::size_t)>& cross);

// Word-wise transport of an element along a generator map.
NcElement lift_element(const NcElement& e, const AlgebraPresentation& target,
                       const std::vector<GenId>& gen_map);

// --- substitution homomorphisms ---------------------------------------------

enum class FoldKind {
    homomorphism,        // images multiplied left to right
    anti_homomorphism,   // reversed fold, no extra phase (the J map)
    braided_anti,        // reversed fold with braiding phases (braided antipodes)
};

class Substitution {
  public:
    Substitution(const AlgebraPresentation* source, const AlgebraPresentation* target,
                 FoldKind fold = FoldKind::homomorphism, bool conjugate_scalars = false);

    void set_image(GenId g, NcElement image);
    bool has_image(GenId g) const;
    const AlgebraPresentation* source() const { return source_; }
    const AlgebraPresentation* target() const { return target_; }

    // Degree preservation of every image (torus and form degree); throws on a
    // non-covariant assignment.  Must be called before apply.
    void check_covariance() const;

    NcElement apply(const NcElement& e) const;

  private:
    const AlgebraPresentation* source_;
    const AlgebraPresentation* target_;
    FoldKind fold_;
    bool conjugate_scalars_;
    std::vector<std::optional<NcElement>> images_;
};

}  // namespace cotwist

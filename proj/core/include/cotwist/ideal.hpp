#pragma once

// Sound (incomplete) ideal-membership certification: decomposes an element by
// its tensor-leg context and solves an exact linear system over the fraction
// field of the phase ring for each component of relation-degree <= 2.

#include "cotwist/algebra.hpp"

#include <set>
#include <string>
#include <vector>

namespace cotwist {

// num/den of Laurent polynomials, gcd-reduced, denominator monic with nonzero
// constant term.
class PhaseFraction {
  public:
    PhaseFraction() = default;
    PhaseFraction(PhaseScalar num) : num_(std::move(num)), den_(PhaseScalar::one()) {}
    PhaseFraction(PhaseScalar num, PhaseScalar den);

    static PhaseFraction zero() { return PhaseFraction(); }
    static PhaseFraction one() { return PhaseFraction(PhaseScalar::one()); }

    const PhaseScalar& num() const { return num_; }
    const PhaseScalar& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    PhaseFraction operator+(const PhaseFraction& o) const;
    PhaseFraction operator-(const PhaseFraction& o) const;
    PhaseFraction operator*(const PhaseFraction& o) const;
    PhaseFraction operator/(const PhaseFraction& o) const;
    PhaseFraction operator-() const;
    bool operator==(const PhaseFraction& o) const;

    std::string str() const;

  private:
    void reduce();
    PhaseScalar num_;               // zero by default
    PhaseScalar den_ = PhaseScalar::one();
};

// Laurent-polynomial gcd over Q(i) (monic, min exponent zero).
PhaseScalar phase_gcd(const PhaseScalar& a, const PhaseScalar& b);
// Exact quotient; throws when b does not divide a.
PhaseScalar phase_div(const PhaseScalar& a, const PhaseScalar& b);

// Solves A x = v over the phase fraction field; A is row-major rows x cols.
// Returns nullopt when inconsistent.
std::optional<std::vector<PhaseFraction>> solve_linear(
    std::vector<std::vector<PhaseFraction>> a, std::vector<PhaseFraction> v);

enum class CertStatus { certified, not_certified, degree_too_high };

struct ComponentCertificate {
    Word context;                                            // non-relation letters + centrals
    std::vector<std::pair<std::size_t, PhaseFraction>> combo;  // relation index -> coefficient
};

struct IdealMembership {
    CertStatus status = CertStatus::certified;
    std::vector<ComponentCertificate> components;
    NcElement residual;   // offending component when not certified
    std::string message;

    bool certified() const { return status == CertStatus::certified; }
};

// Certifies e as a PhaseScalar-combination of the given relations, component
// by component.  Relation words must use only letters whose factor lies in
// relation_factors, and those letters must sort before all others (the engine
// arranges relation-bearing slots first).  Every returned certificate is
// re-verified by exact expansion before reporting success.
IdealMembership ideal_member(const AlgebraPresentation& pres, const NcElement& e,
                             const std::vector<NcElement>& relations,
                             const std::set<int>& relation_factors,
                             std::size_t max_degree = 2);

}  // namespace cotwist

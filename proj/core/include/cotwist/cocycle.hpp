#pragma once

// The torus Hopf algebra data: bicharacter two-cocycle F determined by an
// antisymmetric matrix Theta (entries rational multiples of theta), its
// convolution inverse, the induced braiding R_F = F^-2 and the eta matrix.

#include "cotwist/scalars.hpp"

#include <string>
#include <vector>

namespace cotwist {

// Integer vector in Z^n: the coaction weight of a grouplike monomial t^a.
struct TorusDegree {
    std::vector<std::int64_t> exponents;

    TorusDegree() = default;
    explicit TorusDegree(std::size_t n) : exponents(n, 0) {}
    TorusDegree(std::initializer_list<std::int64_t> e) : exponents(e) {}

    std::size_t rank() const { return exponents.size(); }
    bool is_zero() const;

    TorusDegree operator+(const TorusDegree& o) const;
    TorusDegree operator-() const;
    TorusDegree operator-(const TorusDegree& o) const { return *this + (-o); }
    TorusDegree operator*(std::int64_t k) const;
    bool operator==(const TorusDegree& o) const { return exponents == o.exponents; }
    bool operator!=(const TorusDegree& o) const { return !(*this == o); }

    std::string str() const;
};

enum class Convention { flip, verbatim };

// F(t^a, t^b) = zeta^{a^T K b} with K = D * Theta_eff in theta-units.
// convention=flip uses Theta_eff = -Theta_printed so the printed eta matrix and
// algebra relations come out verbatim; verbatim keeps Theta as supplied.
class CocycleData {
  public:
    CocycleData() = default;
    // theta: n x n antisymmetric matrix of rationals, read in theta-units.
    CocycleData(std::vector<std::vector<Rational>> theta, Convention conv);

    static CocycleData standard_theta(Convention conv = Convention::flip);
    static CocycleData classical(std::size_t n = 2);

    std::size_t rank() const { return n_; }
    Convention convention() const { return convention_; }
    const DeformationParams& params() const { return params_; }
    bool is_classical() const;

    // Exponent k with F(t^a, t^b) = zeta^k.
    std::int64_t exponent(const TorusDegree& a, const TorusDegree& b) const;
    PhaseScalar value(const TorusDegree& a, const TorusDegree& b) const;
    PhaseScalar inverse_value(const TorusDegree& a, const TorusDegree& b) const;
    // F^2(x, y): the phase with XY = F^2(x,y) YX for letters of degrees x, y.
    PhaseScalar swap_phase(const TorusDegree& x, const TorusDegree& y) const;
    // R_F(a, b) = F^-2(a, b).
    PhaseScalar braiding(const TorusDegree& a, const TorusDegree& b) const;

    bool operator==(const CocycleData& o) const {
        return n_ == o.n_ && convention_ == o.convention_ && k_matrix_ == o.k_matrix_;
    }
    bool operator!=(const CocycleData& o) const { return !(*this == o); }

    std::string str() const;

  private:
    std::size_t n_ = 0;
    Convention convention_ = Convention::flip;
    std::vector<std::vector<Rational>> theta_eff_;      // theta-units
    std::vector<std::vector<std::int64_t>> k_matrix_;   // D * theta_eff, integral
    DeformationParams params_;
};

// tau_j degrees for the n=2 case: (t1, t1*, t2, t2*).
std::vector<TorusDegree> tau_degrees();

struct CocycleCheckFailure {
    std::string what;
};

struct CocycleReport {
    std::size_t checks_run = 0;
    std::vector<CocycleCheckFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Cocycle condition (four-factor product on grouplike triples), unitality and
// convolution invertibility for the supplied triples.
CocycleReport verify_cocycle_condition(const CocycleData& F,
                                       const std::vector<std::array<TorusDegree, 3>>& triples);
// All 3^(2n) triples with entries in {-1,0,1}^n.
CocycleReport verify_cocycle_condition_exhaustive(const CocycleData& F);
// Bicharacter laws on the supplied triples plus antisymmetry identities.
CocycleReport verify_bicharacter(const CocycleData& F,
                                 const std::vector<std::array<TorusDegree, 3>>& triples);
// Real cocycle condition conj(F(h,g)) = F(g*, h*) on pairs drawn from triples.
CocycleReport verify_real_cocycle(const CocycleData& F,
                                  const std::vector<std::array<TorusDegree, 3>>& triples);

// eta_{jl} = R_F(tau_j, tau_l) for the given degree list.
std::vector<std::vector<PhaseScalar>> eta_matrix(const CocycleData& F,
                                                 const std::vector<TorusDegree>& degrees);

// Twisted antipode / star data evaluated on a grouplike of degree h:
// U(h) = F(h, -h), V per the twisted-star formula; for the torus both are 1 and
// the antipode and star are undeformed.
struct GrouplikeTwistData {
    PhaseScalar U;
    PhaseScalar V;
    TorusDegree antipode_degree;   // degree of S_F(t^h) = degree of S(t^h)
    TorusDegree star_degree;       // degree of (t^h)^{*_F}
};
GrouplikeTwistData grouplike_twist_data(const CocycleData& F, const TorusDegree& h);

}  // namespace cotwist

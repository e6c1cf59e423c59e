#pragma once

// Exact coefficient arithmetic: Gaussian rationals and Laurent polynomials in a
// single formal unit-modulus phase z = exp(i*pi*theta/D).  No floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cotwist {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// a + b*i with exact rational a, b.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}

    static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    // Exact division; divisor must be nonzero.
    GaussianRational operator/(const GaussianRational& o) const;

    GaussianRational& operator+=(const GaussianRational& o) { *this = *this + o; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { *this = *this - o; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::string str() const;
};

// Finite map exponent -> coefficient, value sum_k c_k z^k.  Canonical form never
// stores zero coefficients; the zero element has an empty term map.
class PhaseScalar {
  public:
    using Terms = std::map<std::int64_t, GaussianRational>;

    PhaseScalar() = default;
    PhaseScalar(GaussianRational c) { if (!c.is_zero()) terms_[0] = std::move(c); }
    PhaseScalar(long n) : PhaseScalar(GaussianRational(n)) {}

    static PhaseScalar zero() { return PhaseScalar(); }
    static PhaseScalar one() { return PhaseScalar(GaussianRational(1)); }
    static PhaseScalar zeta_pow(std::int64_t k, GaussianRational c = GaussianRational(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // True when the value is c * z^k for a single (k, c).
    bool is_monomial() const { return terms_.size() == 1; }
    std::int64_t monomial_exponent() const;

    PhaseScalar operator-() const;
    PhaseScalar operator+(const PhaseScalar& o) const;
    PhaseScalar operator-(const PhaseScalar& o) const;
    PhaseScalar operator*(const PhaseScalar& o) const;
    PhaseScalar& operator+=(const PhaseScalar& o) { *this = *this + o; return *this; }
    PhaseScalar& operator-=(const PhaseScalar& o) { *this = *this - o; return *this; }
    PhaseScalar& operator*=(const PhaseScalar& o) { *this = *this * o; return *this; }

    bool operator==(const PhaseScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const PhaseScalar& o) const { return !(*this == o); }
    bool operator<(const PhaseScalar& o) const;

    // Conjugates coefficients and negates exponents: star(z^k) = z^-k.
    PhaseScalar star() const;
    // Ring homomorphism z -> 1 onto the Gaussian rationals.
    GaussianRational at_one() const;
    // Multiplication by the monomial c * z^k without building a temporary.
    void shift_mul(std::int64_t k, const GaussianRational& c);

    std::string str() const;

  private:
    Terms terms_;
};

// Global phase bookkeeping: zeta = exp(i*pi*theta/D), mu = zeta^D, lambda = zeta^{2D}.
struct DeformationParams {
    std::int64_t denominator = 1;  // D

    PhaseScalar mu(std::int64_t power = 1) const { return PhaseScalar::zeta_pow(denominator * power); }
    PhaseScalar lambda() const { return PhaseScalar::zeta_pow(2 * denominator); }
};

// Rendering / parsing of scalar literals: `a/b + c/d*i`, `z^k`, aliases `mu`,
// `lambda` (resolved with the supplied denominator).  Round-trips canonically.
std::string render_scalar(const PhaseScalar& s, const DeformationParams& params);
PhaseScalar parse_scalar(const std::string& text, const DeformationParams& params);

}  // namespace cotwist

#include "cotwist/cocycle.hpp"

#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cotwist {

bool TorusDegree::is_zero() const {
    for (auto e : exponents)
        if (e != 0) return false;
    return true;
}

TorusDegree TorusDegree::operator+(const TorusDegree& o) const {
    if (exponents.size() != o.exponents.size())
        throw std::invalid_argument("TorusDegree: rank mismatch");
    TorusDegree r(exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) r.exponents[i] = exponents[i] + o.exponents[i];
    return r;
}

TorusDegree TorusDegree::operator-() const {
    TorusDegree r(exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) r.exponents[i] = -exponents[i];
    return r;
}

TorusDegree TorusDegree::operator*(std::int64_t k) const {
    TorusDegree r(exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) r.exponents[i] = exponents[i] * k;
    return r;
}

std::string TorusDegree::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i) os << ',';
        os << exponents[i];
    }
    os << ')';
    return os.str();
}

CocycleData::CocycleData(std::vector<std::vector<Rational>> theta, Convention conv)
    : n_(theta.size()), convention_(conv) {
    for (const auto& row : theta)
        if (row.size() != n_) throw std::invalid_argument("CocycleData: Theta not square");
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (theta[i][j] != -theta[j][i])
                throw std::invalid_argument("CocycleData: Theta not antisymmetric");

    theta_eff_ = std::move(theta);
    if (conv == Convention::flip) {
        for (auto& row : theta_eff_)
            for (auto& x : row) x = -x;
    }

    // D = lcm of the denominators of Theta_eff entries, so that every cocycle
    // value is an integer power of zeta = exp(i*pi*theta/D).
    BigInt d = 1;
    for (const auto& row : theta_eff_)
        for (const auto& x : row) {
            BigInt q = denominator(x);
            d = d / gcd(d, q) * q;
        }
    params_.denominator = static_cast<std::int64_t>(d);

    k_matrix_.assign(n_, std::vector<std::int64_t>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            Rational scaled = theta_eff_[i][j] * Rational(d);
            if (denominator(scaled) != 1)
                throw std::logic_error("CocycleData: D failed to clear denominators");
            k_matrix_[i][j] = static_cast<std::int64_t>(numerator(scaled));
        }
}

CocycleData CocycleData::standard_theta(Convention conv) {
    // Theta as printed: (1/2) [[0, theta], [-theta, 0]].
    std::vector<std::vector<Rational>> theta = {
        {Rational(0), Rational(1, 2)},
        {Rational(-1, 2), Rational(0)},
    };
    return CocycleData(std::move(theta), conv);
}

CocycleData CocycleData::classical(std::size_t n) {
    std::vector<std::vector<Rational>> theta(n, std::vector<Rational>(n, Rational(0)));
    return CocycleData(std::move(theta), Convention::flip);
}

bool CocycleData::is_classical() const {
    for (const auto& row : k_matrix_)
        for (auto v : row)
            if (v != 0) return false;
    return true;
}

std::int64_t CocycleData::exponent(const TorusDegree& a, const TorusDegree& b) const {
    if (a.rank() != n_ || b.rank() != n_)
        throw std::invalid_argument("CocycleData: degree rank mismatch");
    std::int64_t k = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (a.exponents[i] == 0) continue;
        for (std::size_t j = 0; j < n_; ++j)
            k += a.exponents[i] * k_matrix_[i][j] * b.exponents[j];
    }
    return k;
}

PhaseScalar CocycleData::value(const TorusDegree& a, const TorusDegree& b) const {
    return PhaseScalar::zeta_pow(exponent(a, b));
}

PhaseScalar CocycleData::inverse_value(const TorusDegree& a, const TorusDegree& b) const {
    return PhaseScalar::zeta_pow(-exponent(a, b));
}

PhaseScalar CocycleData::swap_phase(const TorusDegree& x, const TorusDegree& y) const {
    return PhaseScalar::zeta_pow(2 * exponent(x, y));
}

PhaseScalar CocycleData::braiding(const TorusDegree& a, const TorusDegree& b) const {
    return PhaseScalar::zeta_pow(-2 * exponent(a, b));
}

std::string CocycleData::str() const {
    std::ostringstream os;
    os << "torus rank " << n_ << ", D=" << params_.denominator << ", convention="
       << (convention_ == Convention::flip ? "flip" : "verbatim");
    return os.str();
}

std::vector<TorusDegree> tau_degrees() {
    return {TorusDegree{1, 0}, TorusDegree{-1, 0}, TorusDegree{0, 1}, TorusDegree{0, -1}};
}

namespace {

void check(CocycleReport& report, bool ok, const std::string& what) {
    ++report.checks_run;
    if (!ok) report.failures.push_back({what});
}

std::string triple_str(const std::array<TorusDegree, 3>& t) {
    return t[0].str() + "," + t[1].str() + "," + t[2].str();
}

}  // namespace

CocycleReport verify_cocycle_condition(const CocycleData& F,
                                       const std::vector<std::array<TorusDegree, 3>>& triples) {
    CocycleReport report;
    TorusDegree zero(F.rank());
    for (const auto& [f, g, h] : triples) {
        // On grouplikes every Sweedler leg coincides, so the condition reads
        // F(g,f) F(h, g+f) F^-1(h+g, f) F^-1(h,g) = 1.
        PhaseScalar lhs = F.value(g, f) * F.value(h, g + f) * F.inverse_value(h + g, f) *
                          F.inverse_value(h, g);
        check(report, lhs.is_one(), "cocycle condition failed at (" + triple_str({f, g, h}) + ")");
        check(report, F.value(f, zero).is_one() && F.value(zero, f).is_one(),
              "unitality failed at " + f.str());
        check(report, (F.value(f, g) * F.inverse_value(f, g)).is_one(),
              "convolution invertibility failed at (" + f.str() + "," + g.str() + ")");
    }
    return report;
}

CocycleReport verify_cocycle_condition_exhaustive(const CocycleData& F) {
    const std::size_t n = F.rank();
    std::vector<TorusDegree> box;
    std::vector<std::int64_t> cur(n, -1);
    while (true) {
        TorusDegree d(n);
        d.exponents = cur;
        box.push_back(d);
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (cur[i] < 1) { ++cur[i]; break; }
            cur[i] = -1;
        }
        if (i == n) break;
    }
    std::vector<std::array<TorusDegree, 3>> triples;
    triples.reserve(box.size() * box.size() * box.size());
    for (const auto& f : box)
        for (const auto& g : box)
            for (const auto& h : box) triples.push_back({f, g, h});
    return verify_cocycle_condition(F, triples);
}

CocycleReport verify_bicharacter(const CocycleData& F,
                                 const std::vector<std::array<TorusDegree, 3>>& triples) {
    CocycleReport report;
    for (const auto& [a, b, c] : triples) {
        check(report, F.value(a + b, c) == F.value(a, c) * F.value(b, c),
              "bicharacter (left) failed at (" + triple_str({a, b, c}) + ")");
        check(report, F.value(a, b + c) == F.value(a, c) * F.value(a, b),
              "bicharacter (right) failed at (" + triple_str({a, b, c}) + ")");
        check(report, F.value(-a, b) == F.inverse_value(a, b) && F.value(a, -b) == F.inverse_value(a, b),
              "antipode identities failed at (" + a.str() + "," + b.str() + ")");
        check(report, F.value(-a, -b) == F.value(a, b),
              "F(S.,S.) identity failed at (" + a.str() + "," + b.str() + ")");
        check(report, (F.swap_phase(a, b) * F.swap_phase(b, a)).is_one(),
              "swap phase inverse failed at (" + a.str() + "," + b.str() + ")");
        check(report, (F.braiding(a, b) * F.braiding(b, a)).is_one(),
              "cotriangularity failed at (" + a.str() + "," + b.str() + ")");
    }
    return report;
}

CocycleReport verify_real_cocycle(const CocycleData& F,
                                  const std::vector<std::array<TorusDegree, 3>>& triples) {
    CocycleReport report;
    for (const auto& [a, b, c] : triples) {
        // conj(F(h,g)) = F((S^2 g)*, (S^2 h)*) with S^2 = id and star = inverse.
        check(report, F.value(a, b).star() == F.value(-b, -a),
              "real cocycle condition failed at (" + a.str() + "," + b.str() + ")");
    }
    return report;
}

std::vector<std::vector<PhaseScalar>> eta_matrix(const CocycleData& F,
                                                 const std::vector<TorusDegree>& degrees) {
    std::vector<std::vector<PhaseScalar>> eta(degrees.size(),
                                              std::vector<PhaseScalar>(degrees.size()));
    for (std::size_t j = 0; j < degrees.size(); ++j)
        for (std::size_t l = 0; l < degrees.size(); ++l)
            eta[j][l] = F.braiding(degrees[j], degrees[l]);
    return eta;
}

GrouplikeTwistData grouplike_twist_data(const CocycleData& F, const TorusDegree& h) {
    GrouplikeTwistData data;
    data.U = F.value(h, -h);
    // V(h) = U^-1(h) U(S^-1 h); both factors are 1 on the torus.
    data.V = PhaseScalar::zeta_pow(-F.exponent(h, -h)) * F.value(-h, h);
    data.antipode_degree = -h;
    data.star_degree = -h;
    return data;
}

}  // namespace cotwist

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cotwist/cocycle.hpp"

#include <random>

using namespace cotwist;

namespace {

std::mt19937_64 rng(414243);

TorusDegree random_degree(std::size_t n = 2, int bound = 4) {
    std::uniform_int_distribution<int> d(-bound, bound);
    TorusDegree t(n);
    for (auto& e : t.exponents) e = d(rng);
    return t;
}

std::vector<std::array<TorusDegree, 3>> random_triples(std::size_t count) {
    std::vector<std::array<TorusDegree, 3>> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back({random_degree(), random_degree(), random_degree()});
    return out;
}

}  // namespace

TEST_CASE("standard cocycle: D = 2 and generator values") {
    CocycleData F = CocycleData::standard_theta(Convention::flip);
    CHECK(F.params().denominator == 2);
    // F(e1, e2) = zeta^-1 under the flip convention.
    CHECK(F.value(TorusDegree{1, 0}, TorusDegree{0, 1}) == PhaseScalar::zeta_pow(-1));
    // F(a, a) = 1 by antisymmetry.
    for (int i = 0; i < 20; ++i) {
        TorusDegree a = random_degree();
        CHECK(F.value(a, a).is_one());
    }
    // Bilinearity of the exponent: F(2 e1 + e2, e1) = zeta^{+1}.
    CHECK(F.value(TorusDegree{2, 1}, TorusDegree{1, 0}) == PhaseScalar::zeta_pow(1));
}

TEST_CASE("verbatim convention conjugates the flip values") {
    CocycleData flip = CocycleData::standard_theta(Convention::flip);
    CocycleData verb = CocycleData::standard_theta(Convention::verbatim);
    for (int i = 0; i < 50; ++i) {
        TorusDegree a = random_degree(), b = random_degree();
        CHECK(flip.value(a, b) == verb.value(a, b).star());
    }
}

TEST_CASE("cocycle condition exhaustive over {-1,0,1}^2 triples") {
    CocycleData F = CocycleData::standard_theta(Convention::flip);
    CocycleReport report = verify_cocycle_condition_exhaustive(F);
    CHECK(report.ok());
    CHECK(report.checks_run >= 3 * 729);
}

TEST_CASE("bicharacter and reality laws on random triples") {
    for (Convention conv : {Convention::flip, Convention::verbatim}) {
        CocycleData F = CocycleData::standard_theta(conv);
        CHECK(verify_bicharacter(F, random_triples(100)).ok());
        CHECK(verify_real_cocycle(F, random_triples(100)).ok());
    }
}

TEST_CASE("swap phase examples") {
    CocycleData F = CocycleData::standard_theta(Convention::flip);
    auto tau = tau_degrees();
    // z1 z3 = eta_{31} z3 z1 with eta_{31} = conj(mu); equivalently z3 z1 = mu z1 z3.
    CHECK(F.swap_phase(tau[2], tau[0]) == PhaseScalar::zeta_pow(2));
    CHECK(F.swap_phase(tau[0], tau[2]) == PhaseScalar::zeta_pow(-2));
    // swap_phase(x, x) = 1.
    CHECK(F.swap_phase(tau[1], tau[1]).is_one());
    // deg alpha = tau1 tau4, deg beta = tau2 tau4: alpha beta = lambda beta alpha.
    TorusDegree alpha = tau[0] + tau[3], beta = tau[1] + tau[3];
    CHECK(F.swap_phase(alpha, beta) == PhaseScalar::zeta_pow(4));
}

TEST_CASE("eta matrix matches the printed table under flip") {
    CocycleData F = CocycleData::standard_theta(Convention::flip);
    auto eta = eta_matrix(F, tau_degrees());
    PhaseScalar one = PhaseScalar::one();
    PhaseScalar mu = PhaseScalar::zeta_pow(2);
    PhaseScalar mub = PhaseScalar::zeta_pow(-2);
    PhaseScalar expected[4][4] = {
        {one, one, mu, mub},
        {one, one, mub, mu},
        {mub, mu, one, one},
        {mu, mub, one, one},
    };
    for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l) CHECK(eta[j][l] == expected[j][l]);

    // Verbatim gives the entrywise conjugate.
    auto eta_v = eta_matrix(CocycleData::standard_theta(Convention::verbatim), tau_degrees());
    for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l) CHECK(eta_v[j][l] == expected[j][l].star());

    // eta_{jl} eta_{lj} = 1 and diagonal 1.
    for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l) CHECK((eta[j][l] * eta[l][j]).is_one());
}

TEST_CASE("grouplike twist data is trivial on the torus") {
    CocycleData F = CocycleData::standard_theta(Convention::flip);
    for (int i = 0; i < 30; ++i) {
        TorusDegree h = random_degree();
        GrouplikeTwistData data = grouplike_twist_data(F, h);
        CHECK(data.U.is_one());
        CHECK(data.V.is_one());
        CHECK(data.antipode_degree == -h);
        CHECK(data.star_degree == -h);
    }
}

TEST_CASE("dimension mismatch raises") {
    CocycleData F = CocycleData::standard_theta(Convention::flip);
    CHECK_THROWS(F.value(TorusDegree{1, 0, 0}, TorusDegree{0, 1}));
}

TEST_CASE("non-antisymmetric theta is rejected") {
    std::vector<std::vector<Rational>> bad = {{Rational(0), Rational(1)},
                                              {Rational(1), Rational(0)}};
    CHECK_THROWS(CocycleData(bad, Convention::flip));
}

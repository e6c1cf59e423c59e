#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cotwist/scalars.hpp"

#include <random>

using namespace cotwist;

namespace {

std::mt19937_64 rng(20250809);

GaussianRational random_gaussian() {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

PhaseScalar random_phase() {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> expo(-5, 5);
    PhaseScalar p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += PhaseScalar::zeta_pow(expo(rng), random_gaussian());
    return p;
}

}  // namespace

TEST_CASE("gaussian rational field ops") {
    GaussianRational a{Rational(1, 2), Rational(3)};
    GaussianRational b{Rational(-2), Rational(1, 5)};
    CHECK((a * b) / b == a);
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).im == 0);
    CHECK(GaussianRational::unit_i() * GaussianRational::unit_i() == GaussianRational(-1));
}

TEST_CASE("phase inverse pair multiplies to one") {
    CHECK((PhaseScalar::zeta_pow(1) * PhaseScalar::zeta_pow(-1)).is_one());
}

TEST_CASE("distributivity example (1/2 + 1/2 z^2) * z^2") {
    PhaseScalar a = PhaseScalar(GaussianRational(Rational(1, 2))) +
                    PhaseScalar::zeta_pow(2, GaussianRational(Rational(1, 2)));
    PhaseScalar expected = PhaseScalar::zeta_pow(2, GaussianRational(Rational(1, 2))) +
                           PhaseScalar::zeta_pow(4, GaussianRational(Rational(1, 2)));
    CHECK(a * PhaseScalar::zeta_pow(2) == expected);
}

TEST_CASE("mu * mu = lambda") {
    DeformationParams params{2};
    CHECK(params.mu() * params.mu() == params.lambda());
}

TEST_CASE("star negates exponents and conjugates") {
    CHECK(PhaseScalar::zeta_pow(1).star() == PhaseScalar::zeta_pow(-1));
    PhaseScalar iz3 = PhaseScalar::zeta_pow(3, GaussianRational::unit_i());
    CHECK(iz3.star() == PhaseScalar::zeta_pow(-3, -GaussianRational::unit_i()));
    DeformationParams params{2};
    CHECK(params.mu().star() == PhaseScalar::zeta_pow(-2));
}

TEST_CASE("ring axioms on random triples") {
    for (int trial = 0; trial < 200; ++trial) {
        PhaseScalar a = random_phase(), b = random_phase(), c = random_phase();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a * PhaseScalar::one() == a);
    }
}

TEST_CASE("star is a ring automorphism with star^2 = id") {
    for (int trial = 0; trial < 200; ++trial) {
        PhaseScalar a = random_phase(), b = random_phase();
        CHECK((a * b).star() == a.star() * b.star());
        CHECK((a + b).star() == a.star() + b.star());
        CHECK(a.star().star() == a);
    }
}

TEST_CASE("specialization at zeta = 1 is a ring homomorphism") {
    for (int trial = 0; trial < 200; ++trial) {
        PhaseScalar a = random_phase(), b = random_phase();
        CHECK((a * b).at_one() == a.at_one() * b.at_one());
        CHECK((a + b).at_one() == a.at_one() + b.at_one());
    }
}

TEST_CASE("scalar render / parse round trip") {
    DeformationParams params{2};
    for (int trial = 0; trial < 300; ++trial) {
        PhaseScalar a = random_phase();
        CHECK(parse_scalar(render_scalar(a, params), params) == a);
    }
    CHECK(parse_scalar("mu", params) == PhaseScalar::zeta_pow(2));
    CHECK(parse_scalar("lambda", params) == PhaseScalar::zeta_pow(4));
    CHECK(parse_scalar("1/2 + 1/2*i", params) ==
          PhaseScalar(GaussianRational{Rational(1, 2), Rational(1, 2)}));
    CHECK(parse_scalar("z^-3", params) == PhaseScalar::zeta_pow(-3));
    CHECK_THROWS(parse_scalar("1/0", params));
    CHECK_THROWS(parse_scalar("bogus", params));
}

// Acceptance suite: runs the ten end-to-end criteria at zero tolerance and
// prints one pass/fail line per criterion.  Exit code is the number of failed
// criteria.  Two criteria assert printed formulas whose own source material is
// internally inconsistent; they are asserted as stated and fail honestly, with
// the engine-derived exact identities reported alongside (see the repository
// README for the analysis).

#include "cotwist/calculus.hpp"
#include "cotwist/engine.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using namespace cotwist;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool passed;
    std::string detail;
    long long millis;
};

std::vector<Criterion> results;

template <typename F>
void criterion(int number, const std::string& title, F body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        auto [good, text] = body();
        ok = good;
        detail = text;
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    results.push_back({number, title, ok, detail, ms});
    std::printf("criterion %2d %s  %s (%lld ms)%s%s\n", number, ok ? "PASS" : "FAIL",
                title.c_str(), ms, detail.empty() ? "" : "\n              ", detail.c_str());
    std::fflush(stdout);
}

std::pair<bool, std::string> from_report(const CheckReport& r, const std::string& ok_note = "") {
    if (r.ok()) return {true, ok_note};
    std::string d = r.summary();
    for (auto& c : d)
        if (c == '\n') c = ' ';
    return {false, d};
}

const CocycleData& flip() {
    static CocycleData f = CocycleData::standard_theta(Convention::flip);
    return f;
}

}  // namespace

int main() {
    std::printf("acceptance suite: exact verification, zero tolerance\n");

    criterion(1, "cocycle suite: bicharacter, unitality, invertibility, cocycle condition",
              []() -> std::pair<bool, std::string> {
                  CocycleReport cond = verify_cocycle_condition_exhaustive(flip());
                  std::vector<std::array<TorusDegree, 3>> triples;
                  for (std::int64_t a = -1; a <= 1; ++a)
                      for (std::int64_t b = -1; b <= 1; ++b)
                          for (std::int64_t c = -1; c <= 1; ++c)
                              for (std::int64_t d = -1; d <= 1; ++d)
                                  triples.push_back({TorusDegree{a, b}, TorusDegree{c, d},
                                                     TorusDegree{a - c, b + d}});
                  CocycleReport bic = verify_bicharacter(flip(), triples);
                  bool ok = cond.ok() && bic.ok();
                  return {ok, std::to_string(cond.checks_run + bic.checks_run) +
                                  " exact checks over the {-1,0,1}^2 box"};
              });

    criterion(2, "eta matrix entrywise under flip; conjugate under verbatim",
              []() -> std::pair<bool, std::string> {
                  auto eta = eta_matrix(flip(), tau_degrees());
                  auto eta_v = eta_matrix(CocycleData::standard_theta(Convention::verbatim),
                                          tau_degrees());
                  PhaseScalar mu = flip().params().mu();
                  PhaseScalar mb = flip().params().mu(-1);
                  PhaseScalar one = PhaseScalar::one();
                  PhaseScalar printed[4][4] = {{one, one, mu, mb},
                                               {one, one, mb, mu},
                                               {mb, mu, one, one},
                                               {mu, mb, one, one}};
                  bool ok = true;
                  for (int i = 0; i < 4; ++i)
                      for (int j = 0; j < 4; ++j) {
                          if (!(eta[i][j] == printed[i][j])) ok = false;
                          if (!(eta_v[i][j] == printed[i][j].star())) ok = false;
                      }
                  return {ok, "32 entries"};
              });

    criterion(3, "sphere relations, u*u = r^2, q^2 = q = q*, printed projector matrix",
              []() -> std::pair<bool, std::string> {
                  CheckReport rel = verify_sphere_relations(flip());
                  CheckReport proj =
                      verify_basic_projector(make_sphere(SphereVariant::S7Family, flip()));
                  rel.merge(proj);
                  return from_report(rel, std::to_string(rel.checks_run) + " exact checks");
              });

    criterion(4, "braided bialgebra: 256-pair homomorphism, coassociativity, counit",
              []() -> std::pair<bool, std::string> {
                  auto B = make_braided_matrix_group(flip(), MatrixGroupKind::M2H);
                  return from_report(verify_braided_bialgebra(B), "304 exact checks");
              });

    criterion(5, "cobosonisation: cross coproduct, coassociativity, counit, pi_H coinvariants",
              []() -> std::pair<bool, std::string> {
                  auto C = cobosonise(make_braided_matrix_group(flip(), MatrixGroupKind::M2H));
                  return from_report(verify_cobosonisation(C));
              });

    criterion(6, "charge-one gauge suite (torus, Sp, Murray-von Neumann, delta_u) as stated",
              []() -> std::pair<bool, std::string> {
                  SpherePresentation s7 = make_sphere(SphereVariant::S7Family, flip());
                  CheckReport all = verify_torus_gauge(s7);
                  all.merge(verify_sp_gauge(make_cobos_sphere(MatrixGroupKind::Sp2, flip())));
                  CobosSphere sl = make_cobos_sphere(MatrixGroupKind::SL2H, flip());
                  all.merge(verify_coacted_projector(sl));
                  all.merge(verify_sl_mvn(sl));
                  auto tau = tau_degrees();
                  all.merge(verify_delta_u_gauge(sl, {tau[0], tau[1], tau[2], tau[3]}));
                  auto [ok, detail] = from_report(all);
                  if (!ok)
                      detail +=
                          " | derived identities (utilde-level and eta-corrected conjugation) "
                          "are exact; only the literally printed delta_u unitary fails";
                  return {ok, detail};
              });

    criterion(7, "coinvariants and quadric for (0,0), (0,1), (1,0), (2,-1) as stated",
              []() -> std::pair<bool, std::string> {
                  CheckReport all;
                  auto C = cobosonise(make_braided_matrix_group(flip(), MatrixGroupKind::SL2H));
                  DeltaL dl = make_delta_L(C);
                  all.merge(verify_coinvariance_spL(dl, {TorusDegree{0, 0}, TorusDegree{1, 0}}));
                  std::ostringstream derived;
                  for (auto [r1, r2] :
                       {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 0}, std::pair{2, -1}}) {
                      ChargeOneSpace space = charge_one_parameter_space(r1, r2, flip());
                      all.merge(space.printed);
                      all.merge(space.structural);
                      all.add(space.commutative == (r2 == r1 + 1),
                              "commutativity iff r2 = r1 + 1 at (" + std::to_string(r1) + "," +
                                  std::to_string(r2) + ")");
                      derived << "(" << r1 << "," << r2 << "): " << space.derived_relations
                              << "  ";
                  }
                  auto [ok, detail] = from_report(all);
                  if (!ok)
                      detail += " | engine-derived: " + derived.str() +
                                "| derived quadric m n - g1* g1 + g2* g2 = det holds for all "
                                "exponents; commutativity criterion is r1 + r2 = 1";
                  return {ok, detail};
              });

    criterion(8, "ADHM suite for k = 1, 2: classical limit, centrality, certificates, projector",
              []() -> std::pair<bool, std::string> {
                  CheckReport all;
                  for (int k : {1, 2}) {
                      all.merge(verify_classical_adhm_limit(k, AdhmReading::derived));
                      MonadAlgebra ma = build_monad_algebra(k, flip());
                      SigmaData sd = make_sigma(ma, flip());
                      all.merge(verify_monad_conditions(sd));
                      all.merge(adhm_projector(sd).report);
                      AdhmCoinvariants coin = adhm_coinvariants(ma, 0, 1);
                      all.merge(coin.report);
                      all.add(coin.commutative, "coinvariants commutative for r1 + r2 = 1");
                  }
                  return from_report(all, std::to_string(all.checks_run) + " checks across both charges");
              });

    criterion(9, "calculus: d^2 = 0, graded Leibniz, twisted relations, p dp p = 0",
              []() -> std::pair<bool, std::string> {
                  return from_report(verify_calculus(flip()));
              });

    criterion(10, "classical oracles at zeta = 1, including the numeric adjugate identity",
              []() -> std::pair<bool, std::string> {
                  CheckReport all;
                  CocycleData cls = CocycleData::classical(2);
                  all.merge(verify_sphere_relations(cls));
                  all.merge(verify_braided_bialgebra(
                      make_braided_matrix_group(cls, MatrixGroupKind::M2H)));
                  all.merge(verify_antipode_adjugate_oracle(
                      make_braided_matrix_group(flip(), MatrixGroupKind::SL2H), 10, 90125));
                  all.merge(verify_classical_adhm_limit(1, AdhmReading::derived));
                  all.merge(verify_adhm_classical_projector(flip()));
                  // Deformed identities degenerate: the basic projector matrix
                  // comparison at zeta = 1 sits inside verify_basic_projector.
                  all.merge(verify_basic_projector(make_sphere(SphereVariant::S7Family, cls)));
                  return from_report(all, std::to_string(all.checks_run) + " checks");
              });

    int failed = 0;
    for (const auto& c : results)
        if (!c.passed) ++failed;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
                results.size());
    if (failed)
        std::printf("failing criteria assert printed formulas whose source is internally "
                    "inconsistent; the engine-derived exact identities are reported above and "
                    "the analysis lives in the repository notes\n");
    return failed;
}

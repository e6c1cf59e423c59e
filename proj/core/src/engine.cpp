#include "cotwist/engine.hpp"

#include "cotwist/calculus.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace cotwist {

namespace {

using Json = nlohmann::json;

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_certified: return "not-certified";
        case CheckStatus::error: return "error";
    }
    return "?";
}

struct CheckJob {
    std::string name;
    std::function<CheckResult()> run;
};

CheckResult from_report(const std::string& name, const CheckReport& report) {
    CheckResult r;
    r.name = name;
    if (report.ok()) {
        r.status = CheckStatus::pass;
        r.detail = std::to_string(report.checks_run) + " checks";
    } else {
        r.status = CheckStatus::fail;
        r.detail = report.summary();
    }
    return r;
}

std::vector<CheckResult> run_jobs(std::vector<CheckJob> jobs, int parallelism) {
    std::vector<CheckResult> results(jobs.size());
    std::mutex mu;
    std::size_t next = 0;
    auto worker = [&]() {
        while (true) {
            std::size_t idx;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= jobs.size()) return;
                idx = next++;
            }
            auto start = std::chrono::steady_clock::now();
            CheckResult r;
            try {
                r = jobs[idx].run();
            } catch (const std::exception& e) {
                r.name = jobs[idx].name;
                r.status = CheckStatus::error;
                r.detail = e.what();
            }
            r.name = jobs[idx].name;
            r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
            results[idx] = std::move(r);
        }
    };
    int n = std::max(1, parallelism);
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return results;
}

// ---------------------------------------------------------------------------
// Scenario runtime: presentation, named elements, matrices, coactions.

struct ScenarioRuntime {
    PresentationPtr pres;
    std::map<std::string, NcElement> elems;
    std::map<std::string, NcMatrix> matrices;
    std::map<std::string, GrouplikeCoaction> coactions;
    CocycleData cocycle;
};

ScenarioRuntime build_runtime(const Scenario& s, const EngineOptions& opt) {
    ScenarioRuntime rt{nullptr, {}, {}, {}, opt.cocycle()};
    if (s.theta) {
        if (opt.classical) {
            std::vector<std::vector<Rational>> zero(
                s.theta->size(), std::vector<Rational>(s.theta->size(), Rational(0)));
            rt.cocycle = CocycleData(zero, opt.convention);
        } else {
            rt.cocycle = CocycleData(*s.theta, opt.convention);
        }
    }
    AlgebraPresentationBuilder b(rt.cocycle);
    int slot = b.add_factor("scenario");
    std::map<std::string, GenId> ids;
    for (const auto& g : s.gens) {
        if (ids.count(g.name)) throw ScenarioError(g.line, "duplicate generator " + g.name);
        if (g.degree.rank() != rt.cocycle.rank())
            throw ScenarioError(g.line, "degree rank mismatch for " + g.name);
        ids[g.name] = b.add_generator(g.name, g.degree, slot, 0, g.central);
    }
    for (const auto& g : s.gens) {
        if (g.star.empty()) continue;
        auto it = ids.find(g.star);
        if (it == ids.end()) throw ScenarioError(g.line, "undeclared star partner " + g.star);
        b.set_star(ids[g.name], it->second, PhaseScalar::one());
    }
    auto* st = b.staging();
    for (const auto& r : s.rules) {
        Word lhs;
        for (const auto& name : r.lhs) {
            auto it = ids.find(name);
            if (it == ids.end()) throw ScenarioError(r.line, "undeclared generator " + name);
            (st->gen(it->second).central ? lhs.centrals : lhs.letters).push_back(it->second);
        }
        try {
            b.add_rule(lhs, st->parse(r.rhs), "scenario rule");
        } catch (const std::exception& e) {
            throw ScenarioError(r.line, e.what());
        }
    }
    for (const auto& rel : s.relations) {
        try {
            b.add_relation(st->parse(rel));
        } catch (const std::exception& e) {
            throw ScenarioError(0, std::string("relation: ") + e.what());
        }
    }
    rt.pres = b.build();
    for (const auto& e : s.elems) {
        try {
            rt.elems.emplace(e.name, rt.pres->parse(e.expr));
        } catch (const std::exception& ex) {
            throw ScenarioError(e.line, ex.what());
        }
    }
    for (const auto& m : s.matrices) {
        NcMatrix mat(rt.pres.get(), m.rows, m.cols);
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j) {
                try {
                    mat.set(i, j, rt.pres->parse(m.entries[i * m.cols + j]));
                } catch (const std::exception& ex) {
                    throw ScenarioError(m.line, ex.what());
                }
            }
        rt.matrices.emplace(m.name, std::move(mat));
    }
    for (const auto& c : s.coactions) {
        std::vector<TorusDegree> weights(rt.pres->generators().size(),
                                         TorusDegree(rt.cocycle.rank()));
        for (const auto& [gname, w] : c.weights) {
            auto it = ids.find(gname);
            if (it == ids.end()) throw ScenarioError(c.line, "undeclared generator " + gname);
            if (w.rank() != rt.cocycle.rank())
                throw ScenarioError(c.line, "weight rank mismatch for " + gname);
            weights[it->second] = w;
        }
        try {
            rt.coactions.emplace(
                c.name, make_grouplike_coaction(
                            rt.pres, [weights](GenId g) { return weights[g]; }, PairKind::braided));
        } catch (const std::exception& ex) {
            throw ScenarioError(c.line, ex.what());
        }
    }
    return rt;
}

// ---------------------------------------------------------------------------
// Built-in suites.

void add_cocycle_jobs(std::vector<CheckJob>& jobs, const CocycleData& F) {
    jobs.push_back({"cocycle/condition-exhaustive", [F]() {
                        CocycleReport rep = verify_cocycle_condition_exhaustive(F);
                        CheckResult r;
                        r.status = rep.ok() ? CheckStatus::pass : CheckStatus::fail;
                        r.detail = std::to_string(rep.checks_run) + " checks";
                        if (!rep.ok()) r.detail = rep.failures.front().what;
                        return r;
                    }});
    jobs.push_back({"cocycle/bicharacter-and-reality", [F]() {
                        std::vector<std::array<TorusDegree, 3>> triples;
                        std::mt19937_64 rng(24601);
                        std::uniform_int_distribution<int> d(-4, 4);
                        for (int i = 0; i < 200; ++i) {
                            std::array<TorusDegree, 3> t;
                            for (auto& x : t) x = TorusDegree{d(rng), d(rng)};
                            triples.push_back(t);
                        }
                        CocycleReport rep = verify_bicharacter(F, triples);
                        CocycleReport rep2 = verify_real_cocycle(F, triples);
                        CheckResult r;
                        r.status = (rep.ok() && rep2.ok()) ? CheckStatus::pass : CheckStatus::fail;
                        r.detail = std::to_string(rep.checks_run + rep2.checks_run) + " checks";
                        return r;
                    }});
    jobs.push_back({"cocycle/eta-matrix", [F]() {
                        auto eta = eta_matrix(F, tau_degrees());
                        PhaseScalar mu = F.params().mu();
                        PhaseScalar mb = F.params().mu(-1);
                        PhaseScalar one = PhaseScalar::one();
                        PhaseScalar expected[4][4] = {{one, one, mu, mb},
                                                      {one, one, mb, mu},
                                                      {mb, mu, one, one},
                                                      {mu, mb, one, one}};
                        bool ok = true;
                        for (int i = 0; i < 4; ++i)
                            for (int j = 0; j < 4; ++j) {
                                PhaseScalar want = expected[i][j];
                                if (F.convention() == Convention::verbatim) want = want.star();
                                if (!(eta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                                      want))
                                    ok = false;
                            }
                        CheckResult r;
                        r.status = ok ? CheckStatus::pass : CheckStatus::fail;
                        r.detail = "16 entries";
                        return r;
                    }});
    jobs.push_back({"cocycle/grouplike-twist-data", [F]() {
                        bool ok = true;
                        std::mt19937_64 rng(7);
                        std::uniform_int_distribution<int> d(-5, 5);
                        for (int i = 0; i < 50; ++i) {
                            TorusDegree h{d(rng), d(rng)};
                            GrouplikeTwistData data = grouplike_twist_data(F, h);
                            if (!data.U.is_one() || !data.V.is_one() ||
                                !(data.antipode_degree == -h))
                                ok = false;
                        }
                        CheckResult r;
                        r.status = ok ? CheckStatus::pass : CheckStatus::fail;
                        return r;
                    }});
}

void add_sphere_jobs(std::vector<CheckJob>& jobs, const CocycleData& F) {
    jobs.push_back({"spheres/relations", [F]() {
                        return from_report("", verify_sphere_relations(F));
                    }});
    jobs.push_back({"spheres/basic-projector", [F]() {
                        return from_report("", verify_basic_projector(
                                                   make_sphere(SphereVariant::S7Family, F)));
                    }});
}

void add_gauge_jobs(std::vector<CheckJob>& jobs, const CocycleData& F) {
    jobs.push_back({"gauge/torus", [F]() {
                        return from_report("", verify_torus_gauge(
                                                   make_sphere(SphereVariant::S7Family, F)));
                    }});
    jobs.push_back({"gauge/sp-cobosonised", [F]() {
                        return from_report(
                            "", verify_sp_gauge(make_cobos_sphere(MatrixGroupKind::Sp2, F)));
                    }});
    jobs.push_back({"gauge/sl-coacted-projector", [F]() {
                        return from_report("", verify_coacted_projector(
                                                   make_cobos_sphere(MatrixGroupKind::SL2H, F)));
                    }});
    jobs.push_back({"gauge/sl-mvn", [F]() {
                        return from_report(
                            "", verify_sl_mvn(make_cobos_sphere(MatrixGroupKind::SL2H, F)));
                    }});
    jobs.push_back({"gauge/delta-u", [F]() {
                        auto tau = tau_degrees();
                        CheckReport rep = verify_delta_u_gauge(
                            make_cobos_sphere(MatrixGroupKind::SL2H, F),
                            {tau[0], tau[1], tau[2], tau[3]});
                        return from_report("", rep);
                    }});
}

void add_hopf_jobs(std::vector<CheckJob>& jobs, const CocycleData& F) {
    jobs.push_back({"hopf/braided-bialgebra", [F]() {
                        return from_report("", verify_braided_bialgebra(make_braided_matrix_group(
                                                   F, MatrixGroupKind::M2H)));
                    }});
    jobs.push_back({"hopf/cobosonisation", [F]() {
                        return from_report("", verify_cobosonisation(cobosonise(
                                                   make_braided_matrix_group(F, MatrixGroupKind::M2H))));
                    }});
    jobs.push_back({"hopf/sp-antipode-axiom", [F]() {
                        return from_report("", verify_cobos_antipode_axiom(cobosonise(
                                                   make_braided_matrix_group(F, MatrixGroupKind::Sp2))));
                    }});
    jobs.push_back({"hopf/antipode-adjugate-oracle", [F]() {
                        return from_report("", verify_antipode_adjugate_oracle(
                                                   make_braided_matrix_group(F, MatrixGroupKind::SL2H),
                                                   10, 424243));
                    }});
    jobs.push_back({"hopf/coinvariance-spL", [F]() {
                        auto C = cobosonise(make_braided_matrix_group(F, MatrixGroupKind::SL2H));
                        DeltaL dl = make_delta_L(C);
                        std::vector<TorusDegree> samples = {TorusDegree{0, 0}, TorusDegree{1, 0}};
                        return from_report("", verify_coinvariance_spL(dl, samples));
                    }});
    jobs.push_back({"hopf/galois-witnesses", [F]() {
                        auto C = cobosonise(make_braided_matrix_group(F, MatrixGroupKind::M2H));
                        auto du = make_delta_u(C, exponent_unitaries(0, 1));
                        auto ws = galois_witnesses(du, C);
                        CheckResult r;
                        bool ok = ws.size() == 4;
                        for (const auto& w : ws) ok = ok && w.verified;
                        r.status = ok ? CheckStatus::pass : CheckStatus::fail;
                        r.detail = "4 witnesses";
                        return r;
                    }});
    jobs.push_back({"hopf/delta-u-axioms", [F]() {
                        auto C = cobosonise(make_braided_matrix_group(F, MatrixGroupKind::M2H));
                        auto du = make_delta_u(C, exponent_unitaries(1, 0));
                        return from_report("", verify_coaction_axioms(du));
                    }});
}

void add_charge_one_jobs(std::vector<CheckJob>& jobs, const CocycleData& F, int r1, int r2) {
    std::string tag = "charge-one/(" + std::to_string(r1) + "," + std::to_string(r2) + ")";
    jobs.push_back({tag, [F, r1, r2]() {
                        ChargeOneSpace space = charge_one_parameter_space(r1, r2, F);
                        CheckResult r;
                        bool printed_ok = space.printed.ok();
                        bool structural_ok = space.structural.ok();
                        r.status = (printed_ok && structural_ok) ? CheckStatus::pass
                                                                 : CheckStatus::fail;
                        std::ostringstream os;
                        os << "printed: " << (printed_ok ? "ok" : space.printed.summary())
                           << "; structural: "
                           << (structural_ok ? "ok" : space.structural.summary())
                           << "; derived: " << space.derived_relations;
                        r.detail = os.str();
                        return r;
                    }});
}

void add_calculus_jobs(std::vector<CheckJob>& jobs, const CocycleData& F) {
    jobs.push_back({"calculus/full", [F]() { return from_report("", verify_calculus(F)); }});
}

void add_adhm_jobs(std::vector<CheckJob>& jobs, const CocycleData& F, int charge,
                   AdhmReading reading, int r1, int r2) {
    std::string tag = "adhm/k" + std::to_string(charge);
    jobs.push_back({tag + "/classical-limit", [charge, reading]() {
                        return from_report("", verify_classical_adhm_limit(charge, reading));
                    }});
    jobs.push_back({tag + "/monad-conditions", [F, charge, reading]() {
                        MonadAlgebra ma = build_monad_algebra(charge, F, reading);
                        return from_report("", verify_monad_conditions(make_sigma(ma, F)));
                    }});
    jobs.push_back({tag + "/projector", [F, charge, reading]() {
                        MonadAlgebra ma = build_monad_algebra(charge, F, reading);
                        AdhmProjector proj = adhm_projector(make_sigma(ma, F));
                        return from_report("", proj.report);
                    }});
    jobs.push_back({tag + "/beta", [F, charge, reading]() {
                        MonadAlgebra ma = build_monad_algebra(charge, F, reading);
                        return from_report("", verify_beta_map(make_sigma(ma, F), 1337));
                    }});
    jobs.push_back({tag + "/coinvariants", [F, charge, reading, r1, r2]() {
                        MonadAlgebra ma = build_monad_algebra(charge, F, reading);
                        AdhmCoinvariants coin = adhm_coinvariants(ma, r1, r2);
                        return from_report("", coin.report);
                    }});
}

// ---------------------------------------------------------------------------
// Scenario checks.

void add_scenario_check(std::vector<CheckJob>& jobs, const ScenarioRuntime& rt,
                        const CheckDecl& c, const EngineOptions& opt,
                        std::shared_ptr<const ScenarioRuntime> keepalive) {
    std::string name = "check/" + c.kind;
    for (const auto& a : c.args) name += "/" + a;
    auto need_args = [&](std::size_t n) {
        if (c.args.size() < n)
            throw ScenarioError(c.line, "check " + c.kind + " expects " + std::to_string(n) +
                                            " arguments");
    };
    if (c.kind == "normalizes-to") {
        need_args(2);
        std::string ename = c.args[0];
        std::string expr;
        for (std::size_t i = 1; i < c.args.size(); ++i) {
            if (i > 1) expr += ' ';
            expr += c.args[i];
        }
        jobs.push_back({name, [keepalive, ename, expr, line = c.line]() {
                            auto it = keepalive->elems.find(ename);
                            if (it == keepalive->elems.end())
                                throw ScenarioError(line, "unknown element " + ename);
                            NcElement want = keepalive->pres->parse(expr);
                            CheckResult r;
                            bool ok = (it->second == want);
                            r.status = ok ? CheckStatus::pass : CheckStatus::fail;
                            if (!ok)
                                r.detail = "normalized to " + it->second.str() + ", expected " +
                                           want.str();
                            return r;
                        }});
    } else if (c.kind == "projection" || c.kind == "unitary") {
        need_args(1);
        std::string mname = c.args[0];
        bool proj = (c.kind == "projection");
        jobs.push_back({name, [keepalive, mname, proj, line = c.line]() {
                            auto it = keepalive->matrices.find(mname);
                            if (it == keepalive->matrices.end())
                                throw ScenarioError(line, "unknown matrix " + mname);
                            ModuloRelations mod{&keepalive->pres->relations(), {0}};
                            const ModuloRelations* m =
                                keepalive->pres->relations().empty() ? nullptr : &mod;
                            PredicateResult res = proj ? is_projection(it->second, m)
                                                       : is_unitary(it->second, m);
                            CheckResult r;
                            r.status = res.ok ? CheckStatus::pass : CheckStatus::fail;
                            if (!res.ok) r.detail = res.message + "; residual " + res.residual.str();
                            return r;
                        }});
    } else if (c.kind == "mvn") {
        need_args(3);
        auto names = c.args;
        jobs.push_back({name, [keepalive, names, line = c.line]() {
                            auto get = [&](const std::string& n) -> const NcMatrix& {
                                auto it = keepalive->matrices.find(n);
                                if (it == keepalive->matrices.end())
                                    throw ScenarioError(line, "unknown matrix " + n);
                                return it->second;
                            };
                            ModuloRelations mod{&keepalive->pres->relations(), {0}};
                            const ModuloRelations* m =
                                keepalive->pres->relations().empty() ? nullptr : &mod;
                            PredicateResult res =
                                check_mvn_equivalence(get(names[0]), get(names[1]), get(names[2]), m);
                            CheckResult r;
                            r.status = res.ok ? CheckStatus::pass : CheckStatus::fail;
                            if (!res.ok) r.detail = res.message;
                            return r;
                        }});
    } else if (c.kind == "cocycle") {
        add_cocycle_jobs(jobs, rt.cocycle);
    } else if (c.kind == "bialgebra") {
        add_hopf_jobs(jobs, rt.cocycle);
    } else if (c.kind == "coaction") {
        need_args(1);
        std::string cname = c.args[0];
        jobs.push_back({name, [keepalive, cname, line = c.line]() {
                            auto it = keepalive->coactions.find(cname);
                            if (it == keepalive->coactions.end())
                                throw ScenarioError(line, "unknown coaction " + cname);
                            return from_report("", verify_coaction_axioms(it->second));
                        }});
    } else if (c.kind == "coinvariants") {
        need_args(1);
        std::string cname = c.args[0];
        int bound = c.args.size() > 1 ? std::stoi(c.args[1]) : 2;
        jobs.push_back({name, [keepalive, cname, bound, line = c.line]() {
                            auto it = keepalive->coactions.find(cname);
                            if (it == keepalive->coactions.end())
                                throw ScenarioError(line, "unknown coaction " + cname);
                            const auto& c2 = it->second;
                            // Balanced (weight-zero) monomials up to the bound
                            // must be coinvariant.
                            CheckReport rep;
                            std::vector<std::vector<GenId>> words = {{}};
                            std::size_t start = 0;
                            std::size_t letters = keepalive->pres->generators().size();
                            for (int len = 1; len <= bound; ++len) {
                                std::vector<std::vector<GenId>> next;
                                for (std::size_t w = start; w < words.size(); ++w)
                                    for (std::size_t g = 0; g < letters; ++g) {
                                        auto nw = words[w];
                                        nw.push_back(static_cast<GenId>(g));
                                        next.push_back(std::move(nw));
                                    }
                                start = words.size();
                                for (const auto& w : next) {
                                    TorusDegree total(keepalive->cocycle.rank());
                                    for (GenId g : w) total = total + c2.weights[g];
                                    if (!total.is_zero()) continue;
                                    NcElement mono = keepalive->pres->word(w);
                                    rep.add(c2.apply(mono) == c2.embed(mono),
                                            "balanced monomial fails coinvariance");
                                }
                                words.insert(words.end(), next.begin(), next.end());
                            }
                            (void)line;
                            return from_report("", rep);
                        }});
    } else if (c.kind == "quadric") {
        need_args(2);
        add_charge_one_jobs(jobs, rt.cocycle, std::stoi(c.args[0]), std::stoi(c.args[1]));
    } else if (c.kind == "adhm") {
        need_args(1);
        int k = std::stoi(c.args[0]);
        if (k > opt.max_charge)
            throw ScenarioError(c.line, "charge exceeds --max-charge");
        int r1 = c.args.size() > 1 ? std::stoi(c.args[1]) : 0;
        int r2 = c.args.size() > 2 ? std::stoi(c.args[2]) : 1;
        add_adhm_jobs(jobs, rt.cocycle, k, opt.adhm_reading, r1, r2);
    } else {
        throw ScenarioError(c.line, "unknown check kind '" + c.kind + "'");
    }
}

void add_suite_jobs(std::vector<CheckJob>& jobs, const std::string& name,
                    const std::vector<std::string>& args, const EngineOptions& opt) {
    CocycleData F = opt.cocycle();
    if (name == "paper-core") {
        add_cocycle_jobs(jobs, F);
        add_sphere_jobs(jobs, F);
        add_hopf_jobs(jobs, F);
        add_gauge_jobs(jobs, F);
        add_calculus_jobs(jobs, F);
        for (auto [r1, r2] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 0}, std::pair{2, -1}})
            add_charge_one_jobs(jobs, F, r1, r2);
    } else if (name == "cocycle") {
        add_cocycle_jobs(jobs, F);
    } else if (name == "sphere7" || name == "sphere4") {
        add_sphere_jobs(jobs, F);
    } else if (name == "basic-instanton") {
        add_sphere_jobs(jobs, F);
        add_gauge_jobs(jobs, F);
    } else if (name == "hopf") {
        add_hopf_jobs(jobs, F);
    } else if (name == "calculus") {
        add_calculus_jobs(jobs, F);
    } else if (name == "charge-one") {
        int r1 = args.size() > 0 ? std::stoi(args[0]) : 0;
        int r2 = args.size() > 1 ? std::stoi(args[1]) : 0;
        add_charge_one_jobs(jobs, F, r1, r2);
    } else if (name == "adhm") {
        int k = args.size() > 0 ? std::stoi(args[0]) : 1;
        if (k > opt.max_charge) throw std::invalid_argument("charge exceeds --max-charge");
        int r1 = args.size() > 1 ? std::stoi(args[1]) : 0;
        int r2 = args.size() > 2 ? std::stoi(args[2]) : 1;
        add_adhm_jobs(jobs, F, k, opt.adhm_reading, r1, r2);
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
}

}  // namespace

std::vector<std::string> builtin_suites() {
    return {"paper-core", "cocycle", "sphere7",  "sphere4", "basic-instanton",
            "hopf",       "calculus", "charge-one", "adhm"};
}

RunReport run_scenario(const Scenario& s, const EngineOptions& opt) {
    auto rt = std::make_shared<const ScenarioRuntime>(build_runtime(s, opt));
    std::vector<CheckJob> jobs;
    for (const auto& c : s.checks) add_scenario_check(jobs, *rt, c, opt, rt);
    for (const auto& c : s.suites) add_suite_jobs(jobs, c.kind, c.args, opt);
    RunReport report;
    report.results = run_jobs(std::move(jobs), opt.jobs);
    return report;
}

RunReport run_scenario_file(const std::string& path, const EngineOptions& opt) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return run_scenario(parse_scenario(buf.str()), opt);
}

RunReport run_suite(const std::string& name, const std::vector<std::string>& args,
                    const EngineOptions& opt) {
    std::vector<CheckJob> jobs;
    add_suite_jobs(jobs, name, args, opt);
    RunReport report;
    report.results = run_jobs(std::move(jobs), opt.jobs);
    return report;
}

std::string RunReport::text(bool timing) const {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& r : results) {
        os << (r.status == CheckStatus::pass ? "PASS" : "FAIL") << ' ' << r.name;
        if (r.status == CheckStatus::pass) ++passed;
        if (timing) os << " (" << r.millis << " ms)";
        if (r.status != CheckStatus::pass && !r.detail.empty()) {
            std::string d = r.detail;
            std::replace(d.begin(), d.end(), '\n', ' ');
            os << " [" << status_str(r.status) << "] " << d;
        }
        os << '\n';
    }
    os << passed << "/" << results.size() << " checks passed\n";
    return os.str();
}

std::string RunReport::json(bool timing) const {
    Json arr = Json::array();
    for (const auto& r : results) {
        Json item;
        item["name"] = r.name;
        item["status"] = status_str(r.status);
        if (!r.detail.empty()) item["detail"] = r.detail;
        if (timing) item["millis"] = r.millis;
        arr.push_back(std::move(item));
    }
    Json root;
    root["checks"] = std::move(arr);
    root["all_passed"] = all_passed();
    return root.dump(2) + "\n";
}

}  // namespace cotwist

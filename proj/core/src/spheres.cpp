#include "cotwist/spheres.hpp"

#include <sstream>
#include <stdexcept>

namespace cotwist {

namespace {

PhaseScalar two() { return PhaseScalar(GaussianRational(Rational(2))); }

// Invert a monomial phase c * z^k.
PhaseScalar invert_monomial(const PhaseScalar& p) {
    if (!p.is_monomial()) throw std::invalid_argument("invert_monomial: not a unit");
    const auto& [k, c] = *p.terms().begin();
    return PhaseScalar::zeta_pow(-k, GaussianRational(1) / c);
}

}  // namespace

NcElement SpherePresentation::alpha_elem() const {
    // alpha = 2 (z1 z3* + z2* z4)
    return pres->word({z[0], zs[2]}, two()) + pres->word({zs[1], z[3]}, two());
}

NcElement SpherePresentation::beta_elem() const {
    // beta = 2 (z2 z3* - z1* z4)
    return pres->word({z[1], zs[2]}, two()) - pres->word({zs[0], z[3]}, two());
}

NcElement SpherePresentation::x_elem() const {
    // x = z1 z1* + z2 z2* - z3 z3* - z4 z4*
    NcElement e = pres->word({z[0], zs[0]}) + pres->word({z[1], zs[1]});
    e -= pres->word({z[2], zs[2]});
    e -= pres->word({z[3], zs[3]});
    return e;
}

SpherePresentation make_sphere(SphereVariant variant, const CocycleData& F) {
    SpherePresentation s;
    s.variant = variant;
    AlgebraPresentationBuilder b(F);
    auto tau = tau_degrees();
    if (variant == SphereVariant::S4Family) {
        int slot = b.add_factor("S4");
        s.als = b.add_generator("als", -(tau[0] + tau[3]), slot);
        s.al = b.add_generator("al", tau[0] + tau[3], slot);
        s.bes = b.add_generator("bes", -(tau[1] + tau[3]), slot);
        s.be = b.add_generator("be", tau[1] + tau[3], slot);
        s.x = b.add_generator("x", TorusDegree{0, 0}, slot);
        s.r2 = b.add_generator("r2", TorusDegree{0, 0}, slot, 0, true);
        s.r2i = b.add_generator("r2i", TorusDegree{0, 0}, slot, 0, true);
        b.set_star_pair(s.al, s.als);
        b.set_star_pair(s.be, s.bes);
        b.set_self_adjoint(s.x);
        b.set_self_adjoint(s.r2);
        b.set_self_adjoint(s.r2i);
        b.add_rule(Word{{}, {s.r2, s.r2i}}, b.staging()->one(), "r2 r2i = 1");
        // Quadric alpha* alpha + beta* beta + x^2 = r^4, kept as a relation
        // (the test suite confirms the identity in the seven-sphere letters).
        auto* st = b.staging();
        NcElement quad = st->word({s.als, s.al}) + st->word({s.bes, s.be}) +
                         st->word({s.x, s.x}) - st->word({s.r2, s.r2});
        b.add_relation(quad);
        s.pres = b.build();
        return s;
    }
    int slot = b.add_factor(variant == SphereVariant::C4 ? "C4" : "S7");
    for (int j = 0; j < 4; ++j) {
        s.zs[static_cast<std::size_t>(j)] = b.add_generator(
            "z" + std::to_string(j + 1) + "s", -tau[static_cast<std::size_t>(j)], slot);
        s.z[static_cast<std::size_t>(j)] = b.add_generator(
            "z" + std::to_string(j + 1), tau[static_cast<std::size_t>(j)], slot);
        b.set_star_pair(s.z[static_cast<std::size_t>(j)], s.zs[static_cast<std::size_t>(j)]);
    }
    if (variant == SphereVariant::S7Family) {
        s.r2 = b.add_generator("r2", TorusDegree{0, 0}, slot, 0, true);
        s.r2i = b.add_generator("r2i", TorusDegree{0, 0}, slot, 0, true);
        b.set_self_adjoint(s.r2);
        b.set_self_adjoint(s.r2i);
        auto* st = b.staging();
        NcElement rhs = st->letter(s.r2);
        for (int j = 0; j < 3; ++j)
            rhs -= st->word({s.zs[static_cast<std::size_t>(j)], s.z[static_cast<std::size_t>(j)]});
        b.add_rule(Word{{s.zs[3], s.z[3]}, {}}, rhs, "sphere relation");
        b.add_rule(Word{{}, {s.r2, s.r2i}}, st->one(), "r2 r2i = 1");
    }
    s.pres = b.build();
    return s;
}

CheckReport verify_sphere_relations(const CocycleData& F) {
    CheckReport report;
    SpherePresentation s7 = make_sphere(SphereVariant::S7Family, F);
    const auto& P = *s7.pres;
    auto tau = tau_degrees();
    for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l) {
            NcElement a = P.multiply(P.letter(s7.z[static_cast<std::size_t>(j)]),
                                     P.letter(s7.z[static_cast<std::size_t>(l)]));
            NcElement b = P.multiply(P.letter(s7.z[static_cast<std::size_t>(l)]),
                                     P.letter(s7.z[static_cast<std::size_t>(j)]))
                              .scaled(F.braiding(tau[static_cast<std::size_t>(l)],
                                                 tau[static_cast<std::size_t>(j)]));
            report.add(a == b, "z_j z_l relation fails at (" + std::to_string(j + 1) + "," +
                                   std::to_string(l + 1) + ")");
            NcElement c = P.multiply(P.letter(s7.z[static_cast<std::size_t>(j)]),
                                     P.letter(s7.zs[static_cast<std::size_t>(l)]));
            NcElement d = P.multiply(P.letter(s7.zs[static_cast<std::size_t>(l)]),
                                     P.letter(s7.z[static_cast<std::size_t>(j)]))
                              .scaled(F.braiding(tau[static_cast<std::size_t>(j)],
                                                 tau[static_cast<std::size_t>(l)]));
            report.add(c == d, "z_j z_l* relation fails at (" + std::to_string(j + 1) + "," +
                                   std::to_string(l + 1) + ")");
        }

    // S4 relations through the alpha, beta, x elements of the seven-sphere.
    NcElement alpha = s7.alpha_elem(), beta = s7.beta_elem(), x = s7.x_elem();
    PhaseScalar lambda = F.params().lambda();
    auto rel = [&](const NcElement& u, const NcElement& v, PhaseScalar phase, const char* what) {
        report.add(P.multiply(u, v) == P.multiply(v, u).scaled(phase), what);
    };
    rel(alpha, beta, lambda, "alpha beta = lambda beta alpha");
    rel(P.star(alpha), P.star(beta), lambda, "alpha* beta* = lambda beta* alpha*");
    rel(P.star(beta), alpha, lambda, "beta* alpha = lambda alpha beta*");
    rel(beta, P.star(alpha), lambda, "beta alpha* = lambda alpha* beta");
    report.add(P.commutator(x, alpha).is_zero() && P.commutator(x, beta).is_zero() &&
                   P.commutator(x, P.star(alpha)).is_zero(),
               "x is central");
    report.add(P.star(x) == x, "x is self-adjoint");

    // Quadric alpha* alpha + beta* beta + x^2 = r^4 in the family presentation.
    NcElement quad = P.multiply(P.star(alpha), alpha) + P.multiply(P.star(beta), beta) +
                     P.multiply(x, x);
    NcElement r4 = P.word({s7.r2, s7.r2});
    report.add(quad == r4, "alpha* alpha + beta* beta + x^2 = r^4");

    // Standalone S4 presentation reproduces the relations abstractly.
    SpherePresentation s4 = make_sphere(SphereVariant::S4Family, F);
    const auto& Q = *s4.pres;
    report.add(Q.multiply(Q.letter(s4.al), Q.letter(s4.be)) ==
                   Q.multiply(Q.letter(s4.be), Q.letter(s4.al)).scaled(lambda),
               "standalone S4: alpha beta = lambda beta alpha");
    report.add(Q.is_central_element(Q.letter(s4.x)), "standalone S4: x central");

    // Classical limit: everything commutes at theta = 0.
    SpherePresentation cls = make_sphere(SphereVariant::S7Family, CocycleData::classical(2));
    for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l)
            report.add(cls.pres->commutator(cls.pres->letter(cls.z[static_cast<std::size_t>(j)]),
                                            cls.pres->letter(cls.z[static_cast<std::size_t>(l)]))
                           .is_zero(),
                       "classical limit not commutative");
    return report;
}

BasicProjector basic_projector(const SpherePresentation& s7) {
    if (s7.variant != SphereVariant::S7Family)
        throw std::invalid_argument("basic_projector requires the radius family presentation");
    const auto& P = *s7.pres;
    BasicProjector bp{NcMatrix(&P, 4, 2), NcMatrix(&P, 4, 4), NcMatrix(&P, 4, 4)};
    for (std::size_t j = 0; j < 4; ++j) bp.u.set(j, 0, P.letter(s7.z[j]));
    bp.u.set(0, 1, P.letter(s7.zs[1], -PhaseScalar::one()));
    bp.u.set(1, 1, P.letter(s7.zs[0]));
    bp.u.set(2, 1, P.letter(s7.zs[3], -PhaseScalar::one()));
    bp.u.set(3, 1, P.letter(s7.zs[2]));
    NcMatrix ustar = bp.u.adjoint();
    bp.q = bp.u * ustar.scaled_left(P.letter(s7.r2i));
    bp.p = NcMatrix::identity(&P, 4) - bp.q;
    return bp;
}

CheckReport verify_basic_projector(const SpherePresentation& s7) {
    CheckReport report;
    const auto& P = *s7.pres;
    BasicProjector bp = basic_projector(s7);

    NcMatrix uu = bp.u.adjoint() * bp.u;
    NcMatrix r2id = NcMatrix::identity(&P, 2).scaled_left(P.letter(s7.r2));
    report.add((uu - r2id).is_zero(), "u* u = r^2 I");

    PredicateResult proj = is_projection(bp.q);
    report.add(proj.ok, "q^2 = q = q*: " + proj.message);
    PredicateResult projp = is_projection(bp.p);
    report.add(projp.ok, "p^2 = p = p*: " + projp.message);

    // 2 r^2 q equals the printed matrix entrywise.
    NcElement alpha = s7.alpha_elem(), beta = s7.beta_elem(), x = s7.x_elem();
    NcElement r2 = P.letter(s7.r2);
    PhaseScalar mu = P.params().mu();
    PhaseScalar mubar = P.params().mu(-1);
    NcMatrix printed(&P, 4, 4);
    printed.set(0, 0, r2 + x);
    printed.set(0, 2, alpha);
    printed.set(0, 3, P.star(beta).scaled(-mubar));
    printed.set(1, 1, r2 + x);
    printed.set(1, 2, beta);
    printed.set(1, 3, P.star(alpha).scaled(mu));
    printed.set(2, 0, P.star(alpha));
    printed.set(2, 1, P.star(beta));
    printed.set(2, 2, r2 - x);
    printed.set(3, 0, beta.scaled(-mu));
    printed.set(3, 1, alpha.scaled(mubar));
    printed.set(3, 3, r2 - x);
    NcMatrix twice = bp.q.scaled(two()).scaled_left(r2);
    report.add((twice - printed).is_zero(), "2 r^2 q matches the printed matrix");

    bool classical_ok = true;
    NcMatrix diff = twice - printed;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (!diff.at(i, j).at_zeta_one().is_zero()) classical_ok = false;
    report.add(classical_ok, "classical limit of the projector matrix");

    report.add(bp.q.at(0, 1).is_zero(), "q entry (1,2) vanishes");
    report.add(P.multiply(P.letter(s7.r2), bp.q.at(0, 3)).scaled(two()) ==
                   P.star(beta).scaled(-mubar),
               "2 r^2 q entry (1,4) = -mubar beta*");
    return report;
}

TorusCoactedFamily coact_torus(const SpherePresentation& s7) {
    TorusCoactedFamily out{
        make_grouplike_coaction(
            s7.pres, [&](GenId g) { return s7.pres->gen(g).degree; }, PairKind::plain),
        NcMatrix(), NcMatrix(), NcMatrix()};
    BasicProjector bp = basic_projector(s7);
    const auto& T = *out.coaction.target;
    out.qprime = NcMatrix(&T, 4, 4);
    out.pprime = NcMatrix(&T, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            out.qprime.set(i, j, out.coaction.apply(bp.q.at(i, j)));
            out.pprime.set(i, j, out.coaction.apply(bp.p.at(i, j)));
        }
    out.gauge = NcMatrix(&T, 4, 4);
    auto tau = tau_degrees();
    for (std::size_t k = 0; k < 4; ++k)
        out.gauge.set(k, k, torus_word(T, out.coaction.tau, tau[k]));
    return out;
}

CheckReport verify_torus_gauge(const SpherePresentation& s7) {
    CheckReport report;
    TorusCoactedFamily fam = coact_torus(s7);
    BasicProjector bp = basic_projector(s7);
    report.add(is_projection(fam.qprime).ok, "q' is a projection");
    report.add(is_projection(fam.pprime).ok, "p' is a projection");
    PredicateResult unit = is_unitary(fam.gauge);
    report.add(unit.ok, "diag(tau_k (x) 1) is unitary: " + unit.message);
    NcMatrix embedded_p = bp.p.map([&](const NcElement& e) { return fam.coaction.embed(e); },
                                   fam.coaction.target.get());
    NcMatrix embedded_q = bp.q.map([&](const NcElement& e) { return fam.coaction.embed(e); },
                                   fam.coaction.target.get());
    NcMatrix conj_p = conjugate_by_unitary(fam.gauge, embedded_p);
    NcMatrix conj_q = conjugate_by_unitary(fam.gauge, embedded_q);
    report.add((conj_p - fam.pprime).is_zero(), "p' = U (1 (x) p) U*");
    report.add((conj_q - fam.qprime).is_zero(), "q' = U (1 (x) q) U*");
    return report;
}

NcMatrix CobosSphere::coact_matrix(const NcMatrix& m) const {
    NcMatrix out(pres.get(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, coaction->apply(m.at(i, j)));
    return out;
}

NcMatrix CobosSphere::embed_matrix(const NcMatrix& m) const {
    NcMatrix out(pres.get(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, embed_sphere(m.at(i, j)));
    return out;
}

CobosSphere make_cobos_sphere(MatrixGroupKind kind, const CocycleData& F) {
    CobosSphere cs;
    cs.cobos = cobosonise(make_braided_matrix_group(F, kind));
    cs.s7 = make_sphere(SphereVariant::S7Family, F);

    auto asmced = tensor_assembly({cs.cobos.pres.get(), cs.s7.pres.get()}, PairKind::plain);
    auto& b = asmced.builder;
    // The SL coaction inflates the radius, so the image algebra adjoins the
    // central letters rho2, rho2i, rho1i; the Sp coaction preserves it.
    const bool inflates = (kind != MatrixGroupKind::Sp2);
    if (inflates) {
        int rho_slot = b.add_factor("rho");
        cs.rho2 = b.add_generator("rho2", TorusDegree{0, 0}, rho_slot, 0, true);
        cs.rho2i = b.add_generator("rho2i", TorusDegree{0, 0}, rho_slot, 0, true);
        cs.rho1i = b.add_generator("rho1i", TorusDegree{0, 0}, rho_slot, 0, true);
        b.set_self_adjoint(cs.rho2);
        b.set_self_adjoint(cs.rho2i);
        b.set_self_adjoint(cs.rho1i);
    }
    cs.cobos_map = asmced.parts[0].gen_map;
    cs.sphere_map = asmced.parts[1].gen_map;

    auto* st = b.staging();
    std::array<GenId, 4> ctau;
    for (int k = 0; k < 4; ++k)
        ctau[static_cast<std::size_t>(k)] = cs.cobos_map[cs.cobos.tau[static_cast<std::size_t>(k)]];
    auto tau = tau_degrees();
    auto img_z = [&](int i) {
        NcElement total = st->zero();
        for (int be = 0; be < 4; ++be) {
            NcElement term =
                st->letter(cs.cobos_map[cs.cobos.from_base[cs.cobos.base.a[i][be]]]);
            term = st->multiply(term, torus_word(*st, ctau, tau[static_cast<std::size_t>(be)]));
            term = st->multiply(term,
                                st->letter(cs.sphere_map[cs.s7.z[static_cast<std::size_t>(be)]]));
            total += term;
        }
        return total;
    };
    std::array<NcElement, 4> imgz;
    for (int i = 0; i < 4; ++i) imgz[static_cast<std::size_t>(i)] = img_z(i);

    if (inflates) {
        // rho^2 := image of r^2; orient its leading word onto the rho2 letter
        // so the coaction respects the sphere relation by normalization.
        NcElement rho2_elem = st->zero();
        for (int i = 0; i < 4; ++i)
            rho2_elem += st->multiply(st->star(imgz[static_cast<std::size_t>(i)]),
                                      imgz[static_cast<std::size_t>(i)]);
        auto lead = rho2_elem.terms().rbegin();
        Word lead_word = lead->first;
        PhaseScalar lead_coeff = lead->second;
        NcElement rest =
            st->letter(cs.rho2) - (rho2_elem - st->normalize_terms({{lead_word, lead_coeff}}));
        // The reduction mixes torus degrees across the legs (its covariance
        // lives over the cobosonisation coproduct): the naive degree guard is
        // off.
        b.add_rule(lead_word, rest.scaled(invert_monomial(lead_coeff)), "rho2 reduction",
                   /*require_degree_homogeneous=*/false);
        b.add_rule(Word{{}, {cs.rho2, cs.rho2i}}, st->one(), "rho2 rho2i = 1");
        b.add_rule(Word{{}, {cs.rho1i, cs.rho1i}},
                   st->normalize_terms(
                       {{Word{{}, {cs.sphere_map[cs.s7.r2], cs.rho2i}}, PhaseScalar::one()}}),
                   "rho1i^2 = r2 rho2i");
    }
    cs.pres = b.build();

    for (const auto& rel : cs.cobos.relations)
        cs.relations.push_back(lift_element(rel, *cs.pres, cs.cobos_map));

    cs.coaction = std::make_shared<Substitution>(cs.s7.pres.get(), cs.pres.get());
    for (int i = 0; i < 4; ++i) {
        cs.coaction->set_image(cs.s7.z[static_cast<std::size_t>(i)],
                               imgz[static_cast<std::size_t>(i)]);
        cs.coaction->set_image(cs.s7.zs[static_cast<std::size_t>(i)],
                               cs.pres->star(imgz[static_cast<std::size_t>(i)]));
    }
    if (inflates) {
        cs.coaction->set_image(cs.s7.r2, cs.pres->letter(cs.rho2));
        cs.coaction->set_image(cs.s7.r2i, cs.pres->letter(cs.rho2i));
    } else {
        cs.coaction->set_image(cs.s7.r2, cs.pres->letter(cs.sphere_map[cs.s7.r2]));
        cs.coaction->set_image(cs.s7.r2i, cs.pres->letter(cs.sphere_map[cs.s7.r2i]));
    }
    // No naive degree covariance here: the H-leg of each image shifts the
    // total degree.  Star-compatibility is by construction and the sphere-
    // relation compatibility is re-verified in verify_coacted_projector.
    return cs;
}

CheckReport verify_coacted_projector(const CobosSphere& cs) {
    CheckReport report;
    const auto& P = *cs.pres;

    NcElement lhs = cs.coaction->apply(cs.s7.pres->word({cs.s7.zs[3], cs.s7.z[3]}));
    NcElement rhs = P.letter(cs.rho2);
    for (int j = 0; j < 3; ++j)
        rhs -= cs.coaction->apply(cs.s7.pres->word(
            {cs.s7.zs[static_cast<std::size_t>(j)], cs.s7.z[static_cast<std::size_t>(j)]}));
    report.add(lhs == rhs, "coaction respects the sphere relation");
    report.add(P.word({cs.rho2, cs.rho2i}) == P.one(), "rho2 rho2i = 1");

    BasicProjector bp = basic_projector(cs.s7);
    NcMatrix Q = cs.coact_matrix(bp.q);
    NcMatrix Pm = cs.coact_matrix(bp.p);
    report.add((Pm + Q - NcMatrix::identity(&P, 4)).is_zero(), "P~ + Q~ = 1");

    // Q~ = utilde rho2i utilde* with utilde*utilde = rho2: the projector
    // property is verified along this contraction (the association the
    // underlying algebra-map argument uses); a fully expanded Q~^2 would ask
    // the rewrite system for confluence it does not promise.
    NcMatrix ut(&P, 4, 2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t a = 0; a < 2; ++a) ut.set(i, a, cs.coaction->apply(bp.u.at(i, a)));
    NcElement rho2i = P.letter(cs.rho2i);
    report.add((Q - ut * ut.adjoint().scaled_left(rho2i)).is_zero(),
               "Q~ = utilde rho2i utilde*");
    NcMatrix G = ut.adjoint() * ut;
    report.add((G - NcMatrix::identity(&P, 2).scaled_left(P.letter(cs.rho2))).is_zero(),
               "utilde* utilde = rho2 I");
    NcMatrix mid = G.scaled_left(P.multiply(rho2i, rho2i));  // rho2i G rho2i = rho2i I
    report.add((ut * mid * ut.adjoint() - Q).is_zero(),
               "Q~^2 = Q~ (contracted through utilde* utilde)");
    report.add((Q.adjoint() - Q).is_zero(), "Q~* = Q~");

    // Closed form with the F^-2 factor, entrywise:
    // Q~_kl = sum_{a,b} rho2i Ahat_ka (Ahat*)_bl (x) tau_a tau_b* (x) (u u*)_ab
    //         F^-2(tau_b tau_l*, tau_a tau_b*).
    const auto& F = P.cocycle();
    auto tau = tau_degrees();
    NcMatrix uu = bp.u * bp.u.adjoint();
    std::array<GenId, 4> ctau;
    for (int k = 0; k < 4; ++k)
        ctau[static_cast<std::size_t>(k)] = cs.cobos_map[cs.cobos.tau[static_cast<std::size_t>(k)]];
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
            NcElement closed = P.zero();
            for (int a = 0; a < 4; ++a)
                for (int bb = 0; bb < 4; ++bb) {
                    NcElement term = P.letter(cs.rho2i);
                    term = P.multiply(term, cs.embed_cobos(cs.cobos.ahat(k, a)));
                    term = P.multiply(term,
                                      cs.embed_cobos(cs.cobos.pres->star(cs.cobos.ahat(l, bb))));
                    term = P.multiply(term, torus_word(P, ctau,
                                                       tau[static_cast<std::size_t>(a)] -
                                                           tau[static_cast<std::size_t>(bb)]));
                    term = P.multiply(term, cs.embed_sphere(uu.at(static_cast<std::size_t>(a),
                                                                  static_cast<std::size_t>(bb))));
                    term = term.scaled(
                        F.braiding(tau[static_cast<std::size_t>(bb)] - tau[static_cast<std::size_t>(l)],
                                   tau[static_cast<std::size_t>(a)] - tau[static_cast<std::size_t>(bb)]));
                    closed += term;
                }
            report.add(Q.at(static_cast<std::size_t>(k), static_cast<std::size_t>(l)) == closed,
                       "closed form of Q~ entry (" + std::to_string(k + 1) + "," +
                           std::to_string(l + 1) + ")");
        }
    return report;
}

CheckReport verify_sp_gauge(const CobosSphere& cs) {
    CheckReport report;
    if (cs.cobos.base.kind != MatrixGroupKind::Sp2)
        throw std::invalid_argument("verify_sp_gauge expects the Sp cobosonisation");
    const auto& P = *cs.pres;
    ModuloRelations mod{&cs.relations, {0}};
    BasicProjector bp = basic_projector(cs.s7);

    // utilde := entrywise coaction image of u.  The Sp coaction preserves the
    // radius, so the Sp-coacted projector is Q~0 := utilde (1 (x) r^-2) utilde*.
    NcMatrix ut(&P, 4, 2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t a = 0; a < 2; ++a) ut.set(i, a, cs.coaction->apply(bp.u.at(i, a)));
    NcElement r2i = P.letter(cs.sphere_map[cs.s7.r2i]);
    NcElement r2 = P.letter(cs.sphere_map[cs.s7.r2]);
    NcMatrix Q0 = ut * ut.adjoint().scaled_left(r2i);
    NcMatrix P0 = NcMatrix::identity(&P, 4) - Q0;

    std::array<GenId, 4> ctau;
    for (int k = 0; k < 4; ++k)
        ctau[static_cast<std::size_t>(k)] = cs.cobos_map[cs.cobos.tau[static_cast<std::size_t>(k)]];
    auto tau = tau_degrees();
    NcMatrix U(&P, 4, 4);
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
            U.set(static_cast<std::size_t>(k), static_cast<std::size_t>(l),
                  P.multiply(cs.embed_cobos(cs.cobos.ahat(k, l)),
                             torus_word(P, ctau, tau[static_cast<std::size_t>(l)])));
    PredicateResult unit = is_unitary(U, &mod);
    report.add(unit.ok, "U_kl = Ahat_kl (x) tau_l unitary modulo Sp: " + unit.message);

    // The gauge identity at the u-matrix level: utilde = U (1 (x) u), exact.
    NcMatrix W = U * cs.embed_matrix(bp.u);
    report.add((ut - W).is_zero(), "utilde = U (1 (x) u)");

    // Projector level, with both sides computed independently.  The
    // complement picks up U U* - 1, so it certifies against the Sp span.
    NcMatrix conjq = U * cs.embed_matrix(bp.q) * U.adjoint();
    NcMatrix conjp = U * cs.embed_matrix(bp.p) * U.adjoint();
    report.add((conjq - Q0).is_zero(), "Q~0 = U (1 (x) q) U*");
    PredicateResult pcert = matrix_vanishes(conjp - P0, &mod, "P~0 = U (1 (x) p) U* modulo Sp");
    report.add(pcert.ok, pcert.ok ? "P~0 = U (1 (x) p) U* modulo Sp" : pcert.message);

    // Projector property: R := utilde* utilde - r^2 certifies against the Sp
    // span, and Q~0^2 - Q~0 factors through R exactly.
    NcMatrix R = ut.adjoint() * ut - NcMatrix::identity(&P, 2).scaled_left(r2);
    PredicateResult rcert = matrix_vanishes(R, &mod, "utilde* utilde = r^2 modulo Sp");
    report.add(rcert.ok, rcert.ok ? "utilde* utilde = r^2 modulo Sp" : rcert.message);
    NcMatrix lhs = Q0 * Q0 - Q0;
    NcMatrix rhs = ut * R.scaled_left(P.multiply(r2i, r2i)) * ut.adjoint();
    report.add((lhs - rhs).is_zero(),
               "Q~0^2 - Q~0 = utilde r^-2 (utilde* utilde - r^2) r^-2 utilde*");
    return report;
}

CheckReport verify_sl_mvn(const CobosSphere& cs) {
    CheckReport report;
    const auto& P = *cs.pres;
    BasicProjector bp = basic_projector(cs.s7);
    NcMatrix Q = cs.coact_matrix(bp.q);

    std::array<GenId, 4> ctau;
    for (int k = 0; k < 4; ++k)
        ctau[static_cast<std::size_t>(k)] = cs.cobos_map[cs.cobos.tau[static_cast<std::size_t>(k)]];
    auto tau = tau_degrees();
    NcMatrix U(&P, 4, 4);
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
            U.set(static_cast<std::size_t>(k), static_cast<std::size_t>(l),
                  P.multiply(cs.embed_cobos(cs.cobos.ahat(k, l)),
                             torus_word(P, ctau, tau[static_cast<std::size_t>(l)])));
    NcElement rho1i = P.letter(cs.rho1i);
    NcElement rho2i = P.letter(cs.rho2i);
    NcElement r2i = P.letter(cs.sphere_map[cs.s7.r2i]);
    NcElement r2 = P.letter(cs.sphere_map[cs.s7.r2]);
    NcMatrix embu = cs.embed_matrix(bp.u);
    NcMatrix embq = cs.embed_matrix(bp.q);

    // V_kl = sum_a rho1i (Ahat_ka (x) tau_a) (x) q_al, i.e. rho1i U (1 (x) q).
    NcMatrix V = (U * embq).scaled_left(rho1i);

    // The partial-isometry identities contract through utilde* utilde = rho2
    // the way the underlying computation does; the fully expanded V*V asks the
    // rewrite system for confluence it does not promise.
    NcMatrix ut(&P, 4, 2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t a = 0; a < 2; ++a) ut.set(i, a, cs.coaction->apply(bp.u.at(i, a)));
    report.add((U * embu - ut).is_zero(), "U (1 (x) u) = utilde");
    report.add((V - (ut * embu.adjoint().scaled_left(r2i)).scaled_left(rho1i)).is_zero(),
               "V = rho1i utilde (1 (x) r^-2 u*)");
    report.add((ut.adjoint() * ut -
                NcMatrix::identity(&P, 2).scaled_left(P.letter(cs.rho2))).is_zero(),
               "utilde* utilde = rho2 I");
    report.add((embu.adjoint() * embu - NcMatrix::identity(&P, 2).scaled_left(r2)).is_zero(),
               "(1 (x) u*)(1 (x) u) = r^2 I");
    report.add((embu * embu.adjoint().scaled_left(r2i) - embq).is_zero(),
               "(1 (x) u) r^-2 (1 (x) u*) = 1 (x) q");
    // Scalar contractions that finish the two identities:
    //   V*V = (1 (x) u) [r^-2 rho1i^2 rho2 r^-2] (1 (x) u*) = 1 (x) q,
    //   VV* = utilde [rho1i^2 r^-2 r^2 r^-2] utilde* = utilde rho2i utilde* = Q~.
    NcElement rho1sq = P.word({cs.rho1i, cs.rho1i});
    NcElement s1 = P.multiply(P.multiply(r2i, rho1sq), P.multiply(P.letter(cs.rho2), r2i));
    report.add(s1 == r2i, "r^-2 rho1i^2 rho2 r^-2 = r^-2");
    NcElement s2 = P.multiply(rho1sq, P.multiply(r2i, P.multiply(r2, r2i)));
    report.add(s2 == rho2i, "rho1i^2 r^-2 r^2 r^-2 = rho2i");
    report.add((ut * ut.adjoint().scaled_left(rho2i) - Q).is_zero(),
               "utilde rho2i utilde* = Q~");
    return report;
}

CheckReport verify_delta_u_gauge(const CobosSphere& cs, const std::array<TorusDegree, 4>& u) {
    CheckReport report;
    if (!(u[1] == -u[0]) || !(u[3] == -u[2]))
        throw std::invalid_argument("delta_u gauge check requires u1* = u2 and u3* = u4");
    const auto& P = *cs.pres;
    const auto& B = cs.cobos.base;
    auto tau = tau_degrees();

    std::vector<TorusDegree> weights(P.generators().size(), TorusDegree(2));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            weights[cs.cobos_map[cs.cobos.from_base[B.a[i][j]]]] =
                u[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(j)];
    for (int k = 0; k < 4; ++k)
        weights[cs.cobos_map[cs.cobos.tau[static_cast<std::size_t>(k)]]] =
            tau[static_cast<std::size_t>(k)];

    // The new torus leg braids with the cobosonisation slots and is plainly
    // tensored against the sphere and radius slots.
    std::set<int> cobos_factors;
    for (GenId g : cs.cobos_map) cobos_factors.insert(P.gen(g).factor);
    GrouplikeCoaction du = make_grouplike_coaction(
        cs.pres, [&](GenId g) { return weights[g]; }, PairKind::braided,
        [&](int source_factor) {
            return cobos_factors.count(source_factor) ? PairKind::braided : PairKind::plain;
        },
        /*strict=*/false);  // canonical-form check; the rho2 rule mixes weights

    BasicProjector bp = basic_projector(cs.s7);
    NcMatrix Q = cs.coact_matrix(bp.q);
    const auto& T = *du.target;
    const auto& F = T.cocycle();
    NcMatrix dQ(&T, 4, 4), embQ(&T, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            dQ.set(i, j, du.apply(Q.at(i, j)));
            embQ.set(i, j, du.embed(Q.at(i, j)));
        }

    // Gauge identity at the u-matrix level: (delta_u (x) id)(utilde) is left
    // multiplication by diag(u_k), exactly.
    NcMatrix ut(&T, 4, 2), dut(&T, 4, 2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t a = 0; a < 2; ++a) {
            NcElement e = cs.coaction->apply(bp.u.at(i, a));
            ut.set(i, a, du.embed(e));
            dut.set(i, a, du.apply(e));
        }
    NcMatrix Uu(&T, 4, 4);
    for (int k = 0; k < 4; ++k)
        Uu.set(static_cast<std::size_t>(k), static_cast<std::size_t>(k),
               torus_word(T, du.tau, u[static_cast<std::size_t>(k)]));
    report.add(is_unitary(Uu).ok, "diag(u_k) unitary");
    report.add((Uu * ut - dut).is_zero(),
               "(delta_u (x) id)(utilde) = diag(u_k)(1 (x) utilde)");

    // Projector level.  The engine identity carries the cotriangular
    // correction entrywise:
    //   (delta_u (x) id)(Q~)_kl = eta_lk [diag(u_k)(1 (x) Q~) diag(u_k)*]_kl.
    NcMatrix conj = Uu * embQ * Uu.adjoint();
    bool corrected = true;
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) {
            PhaseScalar eta_lk = F.braiding(tau[l], tau[k]);
            if (!(dQ.at(k, l) == conj.at(k, l).scaled(eta_lk))) corrected = false;
        }
    report.add(corrected, "(delta_u (x) id)(Q~) = eta-corrected conjugation by diag(u_k)");

    // The printed form conjugates by diag(u_k tau_k) with no correction.
    NcMatrix Uprinted(&T, 4, 4);
    for (int k = 0; k < 4; ++k)
        Uprinted.set(static_cast<std::size_t>(k), static_cast<std::size_t>(k),
                     torus_word(T, du.tau,
                                u[static_cast<std::size_t>(k)] + tau[static_cast<std::size_t>(k)]));
    NcMatrix conj_printed = Uprinted * embQ * Uprinted.adjoint();
    report.add((conj_printed - dQ).is_zero(),
               "(delta_u (x) id)(Q~) = U (1 (x) Q~) U* with U = diag(u_k tau_k), as printed");
    return report;
}

ChargeOneSpace charge_one_parameter_space(int r1, int r2, const CocycleData& F) {
    ChargeOneSpace out;
    out.r1 = r1;
    out.r2 = r2;
    auto C = cobosonise(make_braided_matrix_group(F, MatrixGroupKind::SL2H));
    const auto& P = *C.pres;
    auto u = exponent_unitaries(r1, r2);

    auto coin = [&](int i, int j) {
        // M^u_ij = m_ij (x) u_i^* u_j.
        return P.multiply(C.m_element(i, j), C.h_word(-u[static_cast<std::size_t>(i)] +
                                                      u[static_cast<std::size_t>(j)]));
    };
    out.m = coin(0, 0);
    out.n = coin(2, 2);
    out.g1 = coin(0, 2);
    out.g2 = coin(3, 0);
    out.det_expr = P.multiply(C.m_element(0, 0), C.m_element(2, 2)) -
                   P.multiply(C.m_element(2, 0), C.m_element(0, 2)) +
                   P.multiply(C.m_element(3, 0), C.m_element(0, 3));

    const PhaseScalar mu = F.params().mu();
    const PhaseScalar mubar = F.params().mu(-1);
    const PhaseScalar nu = F.params().mu(r1 - r2 + 1);
    const PhaseScalar nubar = F.params().mu(-(r1 - r2 + 1));

    auto relation_holds = [&](const NcElement& a, const NcElement& b, const PhaseScalar& phase) {
        return P.multiply(a, b) == P.multiply(b, a).scaled(phase);
    };
    out.printed.add(relation_holds(out.g1, out.g2, nu * nu), "g1 g2 = nu^2 g2 g1");
    out.printed.add(relation_holds(out.g1, P.star(out.g2), nubar * nubar),
                    "g1 g2* = nubar^2 g2* g1");
    out.printed.add(relation_holds(out.g1, P.star(out.g1), PhaseScalar::one()),
                    "g1 g1* = g1* g1");
    out.printed.add(relation_holds(out.g2, P.star(out.g2), PhaseScalar::one()),
                    "g2 g2* = g2* g2");
    NcElement quadric = P.multiply(out.m, out.n) -
                        P.multiply(P.star(out.g1), out.g1).scaled(nubar * mu) +
                        P.multiply(P.star(out.g2), out.g2).scaled(nu * mubar);
    out.printed.add(quadric == out.det_expr,
                    "quadric m n - nubar mu g1* g1 + nu mubar g2* g2 = det (x) 1");

    std::vector<NcElement> gens = {out.m, out.n, out.g1, out.g2, P.star(out.g1), P.star(out.g2)};
    bool mn_central = true;
    for (const auto& g : gens) {
        if (!P.commutator(out.m, g).is_zero()) mn_central = false;
        if (!P.commutator(out.n, g).is_zero()) mn_central = false;
    }
    out.structural.add(mn_central, "m and n are central in the parameter algebra");
    out.structural.add(P.star(out.m) == out.m && P.star(out.n) == out.n,
                       "m and n are self-adjoint");
    // Engine-derived quadric with unit coefficients; holds for every (r1, r2)
    // because the coefficient phases on g* g cancel r-independently.
    NcElement plain_quadric = P.multiply(out.m, out.n) - P.multiply(P.star(out.g1), out.g1) +
                              P.multiply(P.star(out.g2), out.g2);
    out.structural.add(plain_quadric == out.det_expr,
                       "derived quadric m n - g1* g1 + g2* g2 = det (x) 1");

    bool commutative = true;
    std::ostringstream notes;
    auto derived_phase = [&](const NcElement& a, const NcElement& b, const char* label) {
        NcElement ab = P.multiply(a, b);
        NcElement ba = P.multiply(b, a);
        for (std::int64_t k = -16; k <= 16; ++k) {
            if (ab == ba.scaled(F.params().mu(k))) {
                notes << label << " = mu^" << k << " (swap); ";
                if (k != 0) commutative = false;
                return;
            }
        }
        notes << label << " not phase-proportional; ";
        commutative = false;
    };
    derived_phase(out.g1, out.g2, "g1 g2");
    derived_phase(out.g1, P.star(out.g2), "g1 g2*");
    out.commutative = commutative;
    notes << (commutative ? "parameter algebra commutative" : "parameter algebra noncommutative");
    out.derived_relations = notes.str();
    return out;
}

}  // namespace cotwist

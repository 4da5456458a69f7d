#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conecalc/cells.hpp"
#include "conecalc/corpus.hpp"
#include "conecalc/identities.hpp"

using namespace conecalc;

TEST_CASE("gamma closed form on the half-line") {
    Space s(1);
    Cone c = Cone::from_inequalities(s, {qvec({1})});
    GammaFunction g(c);
    // Gamma([0,inf), H, 1) = 1 on (0,1], 0 elsewhere; 33-point grid
    QVec T = {Rat(1)};
    for (int i = -16; i <= 16; ++i) {
        Rat h(i, 8);
        h.canonicalize();
        long v = g.eval({h}, T);
        long expected = (h > 0 && h <= 1) ? 1 : 0;
        CHECK(v == expected);
    }
}

TEST_CASE("gamma of a half-plane is the interval of Fig. 4") {
    Space s(2);
    Cone c = Cone::from_inequalities(s, {qvec({1, 0})});
    GammaFunction g(c);
    QVec T = {Rat(1), parse_rat("4/5")};
    auto expected = [&](const QVec& h) {
        return (h[1] == parse_rat("4/5") && h[0] > 0 && h[0] <= 1) ? 1 : 0;
    };
    PointSampler ps(5);
    for (int i = 0; i < 200; ++i) {
        QVec h = ps.sample(2);
        if (i % 3 == 0) h[1] = parse_rat("4/5");  // hit the support line often
        CHECK(g.eval(h, T) == expected(h));
    }
    CHECK(g.eval({parse_rat("1/2"), parse_rat("4/5")}, T) == 1);
    CHECK(g.eval({Rat(1), parse_rat("4/5")}, T) == 1);
    CHECK(g.eval({Rat(0), parse_rat("4/5")}, T) == 0);
}

TEST_CASE("gamma of the full plane at T=0 is the delta at 0") {
    Space s(2);
    Cone c = Cone::full(s);
    GammaFunction g(c);
    QVec zero = {Rat(0), Rat(0)};
    CHECK(g.eval(zero, zero) == 1);
    PointSampler ps(6);
    for (int i = 0; i < 100; ++i) {
        QVec h = ps.sample(2);
        if (!is_zero(h)) CHECK(g.eval(h, zero) == 0);
    }
}

TEST_CASE("single-cell gamma agrees with the two-factor definition") {
    RandomCones rng(31);
    PointSampler ps(32);
    for (int t = 0; t < 18; ++t) {
        Cone c = rng.next(1 + t % 4);
        GammaFunction g(c);
        for (int i = 0; i < 40; ++i) {
            QVec h = ps.sample(c.space().dim());
            QVec T = ps.sample(c.space().dim());
            CHECK(g.eval(h, T) == gamma_eval_direct(c, h, T));
        }
    }
}

TEST_CASE("gamma vanishing conditions (gamma0)") {
    RandomCones rng(41);
    PointSampler ps(42);
    for (int t = 0; t < 12; ++t) {
        Cone c = rng.next(1 + t % 4);
        GammaFunction g(c);
        const Subspace& f0 = c.lineality_space();
        for (int i = 0; i < 50; ++i) {
            QVec h = ps.sample(c.space().dim());
            QVec T = ps.sample(c.space().dim());
            if (g.eval(h, T) == 0) continue;
            CHECK(f0.project(h) == f0.project(T));  // H_{F0} = T_{F0}
            CHECK(c.span().contains(h));            // H in V_C
        }
    }
}

TEST_CASE("gamma support certificate") {
    Space s1(1);
    // T = 0: the ball degenerates to {0}
    Ball b0 = gamma_support_certificate(s1, {Rat(0)});
    CHECK(b0.radius_sq == 0);
    CHECK(b0.contains(s1, {Rat(0)}));
    CHECK_FALSE(b0.contains(s1, {parse_rat("1/100")}));

    // half-line, T = 1: ball is [0,1], support is (0,1]
    Ball b1 = gamma_support_certificate(s1, {Rat(1)});
    CHECK(b1.center == QVec{parse_rat("1/2")});
    CHECK(b1.radius_sq == parse_rat("1/4"));

    // random cones: every support sample lies in the ball
    RandomCones rng(51);
    PointSampler ps(52);
    for (int t = 0; t < 12; ++t) {
        Cone c = rng.next(1 + t % 4);
        GammaFunction g(c);
        QVec T = ps.sample(c.space().dim());
        Ball ball = gamma_support_certificate(c.space(), T);
        for (int i = 0; i < 100; ++i) {
            QVec h = ps.sample(c.space().dim());
            if (g.eval(h, T) != 0) {
                CHECK(ball.contains(c.space(), h));
                CHECK(c.space().dot(h, sub(h, T)) <= 0);
            }
        }
    }
}

TEST_CASE("sigma on a subspace (sigZero)") {
    Space s(1);
    Cone line = Cone::full(s);
    SignedCellSum sig = sigma_sum(line, line.faces().cone_index());
    CHECK(sig.eval({Rat(0)}) == 1);
    CHECK(sig.eval({Rat(1)}) == 0);
    CHECK(sig.eval({parse_rat("-3/7")}) == 0);
}

TEST_CASE("sigma(C,C) over random cones (sigZero general)") {
    RandomCones rng(61);
    PointSampler ps(62);
    for (int t = 0; t < 15; ++t) {
        Cone c = rng.next(1 + t % 4);
        SignedCellSum sig = sigma_sum(c, c.faces().cone_index());
        for (int i = 0; i < 40; ++i) {
            QVec h = i == 0 ? QVec(c.space().dim(), Rat(0)) : ps.sample(c.space().dim());
            long expected = (c.is_subspace() && is_zero(h)) ? 1 : 0;
            CHECK(sig.eval(h) == expected);
        }
    }
}

TEST_CASE("sigma agrees with the brute-force expansion") {
    // quadrant, F = x-axis ray, plus random cones
    Space s(2);
    Cone q = Cone::from_inequalities(s, {qvec({1, 0}), qvec({0, 1})});
    const FaceLattice& fl = q.faces();
    for (size_t f = 0; f < fl.size(); ++f) {
        SignedCellSum sig = sigma_sum(q, f);
        PointSampler ps(63);
        for (int i = 0; i < 60; ++i) {
            QVec h = ps.sample(2);
            CHECK(sig.eval(h) == sigma_eval_direct(q, f, h));
        }
        CHECK(sig.eval(qvec({1, -1})) == sigma_eval_direct(q, f, qvec({1, -1})));
    }

    RandomCones rng(64);
    PointSampler ps(65);
    for (int t = 0; t < 10; ++t) {
        Cone c = rng.next(1 + t % 3);
        for (size_t f = 0; f < c.faces().size(); ++f) {
            SignedCellSum sig = sigma_sum(c, f);
            for (int i = 0; i < 25; ++i) {
                QVec h = ps.sample(c.space().dim());
                CHECK(sig.eval(h) == sigma_eval_direct(c, f, h));
            }
        }
    }
}

TEST_CASE("sigma decomposition of the dual cone (Fig. 8)") {
    // acute 2-D cone: [rint C^v] = [rint C] + sigma(F1,C) + sigma(F2,C)
    Space s(2);
    Cone c = Cone::from_inequalities(s, {qvec({1, 0}), qvec({-1, 2})});
    const FaceLattice& fl = c.faces();
    std::vector<size_t> maximal = fl.min_faces();
    REQUIRE(maximal.size() == 2);
    SignedCellSum s1 = sigma_sum(c, maximal[0]);
    SignedCellSum s2 = sigma_sum(c, maximal[1]);
    Cone cd = c.dual();
    PointSampler ps(66);
    for (int i = 0; i < 150; ++i) {
        QVec h = ps.sample(2);
        long lhs = cd.rint_contains(h) ? 1 : 0;
        long rhs = (c.rint_contains(h) ? 1 : 0) + s1.eval(h) + s2.eval(h);
        CHECK(lhs == rhs);
        // support control: sigma != 0 forces the angle cone rint
        if (s1.eval(h) != 0) CHECK(angle_cone(c, fl[maximal[0]]).rint_contains(h));
    }
}

TEST_CASE("product of cells") {
    Space s(2);
    Cone half_x = Cone::from_inequalities(s, {qvec({1, 0})});
    Cone half_y = Cone::from_inequalities(s, {qvec({0, 1})});
    Cone neg_x = Cone::from_inequalities(s, {qvec({-1, 0})});

    SignedCellSum p = product_of_cells(make_cell(half_x), make_cell(half_y));
    REQUIRE(p.terms().size() == 1);
    CHECK_FALSE(p.terms()[0].cell.empty);
    CHECK(p.eval(qvec({1, 1})) == 1);
    CHECK(p.eval(qvec({1, 0})) == 0);

    SignedCellSum q = product_of_cells(make_cell(half_x), make_cell(neg_x));
    REQUIRE(q.terms().size() == 1);
    CHECK(q.terms()[0].cell.empty);
    PointSampler ps(67);
    for (int i = 0; i < 50; ++i) CHECK(q.eval(ps.sample(2)) == 0);

    // rint(half-plane x>=0) . rint(y-axis): disjoint interiors
    Cone yaxis = Cone::from_generators(s, {}, {qvec({0, 1})});
    SignedCellSum r = product_of_cells(make_cell(half_x), make_cell(yaxis));
    for (int i = 0; i < 50; ++i) {
        QVec h = ps.sample(2);
        CHECK(r.eval(h) == (half_x.rint_contains(h) && yaxis.rint_contains(h) ? 1 : 0));
        CHECK(r.eval(h) == 0);
    }

    // generic agreement with the pointwise product
    RandomCones rng(68);
    for (int t = 0; t < 10; ++t) {
        Cone a = rng.next(2), b = rng.next(2);
        SignedCellSum pr = product_of_cells(make_cell(a), make_cell(b));
        for (int i = 0; i < 30; ++i) {
            QVec h = ps.sample(2);
            CHECK(pr.eval(h) == ((a.rint_contains(h) && b.rint_contains(h)) ? 1 : 0));
        }
    }
}

TEST_CASE("identity suite on a small corpus") {
    RandomCones rng(71);
    std::vector<Cone> corpus = rng.batch(12, 1, 4);
    VerifyOptions opts;
    opts.samples = 60;
    opts.seed = 72;
    for (IdentityId id : cone_identities()) {
        IdentityReport rep = verify_corpus(id, corpus, opts);
        INFO(rep.id << " failures: " << (rep.failures.empty() ? std::string() : rep.failures[0]));
        CHECK(rep.pass());
    }
}

TEST_CASE("fan refinement identity on the Fig. 7 decomposition") {
    Space s(2);
    // half-plane {x >= y} decomposed by the three GL(3) chambers meeting it
    Cone c = Cone::from_inequalities(s, {qvec({1, -1})});
    std::vector<Cone> pieces = {
        Cone::from_inequalities(s, {qvec({1, -1}), qvec({0, 1})}),   // x>=y>=0
        Cone::from_inequalities(s, {qvec({1, 0}), qvec({0, -1})}),   // x>=0>=y
        Cone::from_inequalities(s, {qvec({-1, 0}), qvec({1, -1})}),  // 0>=x>=y
    };
    VerifyOptions opts;
    opts.samples = 250;
    opts.seed = 73;
    IdentityReport rep = verify_fan_refinement(c, pieces, opts);
    INFO((rep.failures.empty() ? std::string() : rep.failures[0]));
    CHECK(rep.pass());
}

TEST_CASE("fan validation rejects non-fans") {
    Space s(2);
    Cone c = Cone::from_inequalities(s, {qvec({1, -1})});
    // overlapping pieces whose intersection is not a common face
    std::vector<Cone> bad = {
        Cone::from_inequalities(s, {qvec({1, -1}), qvec({0, 1})}),  // x>=y>=0
        Cone::from_inequalities(s, {qvec({1, 0}), qvec({0, 1})}),   // quadrant
    };
    CHECK_THROWS_AS(validate_fan(c, bad), std::invalid_argument);
}

TEST_CASE("euler identity ids") {
    Space s(2);
    Cone q = Cone::from_inequalities(s, {qvec({1, 0}), qvec({0, 1})});
    VerifyOptions opts;
    CHECK(verify_cone_identity(IdentityId::euler, q, opts).pass());
    CHECK(identity_from_name("bgs_dual") == IdentityId::bgs_dual);
    CHECK_THROWS(identity_from_name("nope"));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conecalc/cone.hpp"
#include "conecalc/corpus.hpp"

using namespace conecalc;

namespace {

Cone quadrant2() {
    Space s(2);
    return Cone::from_inequalities(s, {qvec({1, 0}), qvec({0, 1})});
}

Cone half_plane_x() {
    Space s(2);
    return Cone::from_inequalities(s, {qvec({1, 0})});
}

}  // namespace

TEST_CASE("dual cone basics") {
    Space s(2);
    Cone q = quadrant2();
    CHECK(q.dual().set_equals(q));  // self-dual

    // half-plane {x >= 0} dualizes to the ray {(x,0) : x >= 0}
    Cone hp = half_plane_x();
    Cone ray = Cone::from_generators(s, {qvec({1, 0})});
    CHECK(hp.dual().set_equals(ray));
    CHECK(ray.dual().set_equals(hp));

    // {0} dualizes to the full plane
    CHECK(Cone::zero(s).dual().set_equals(Cone::full(s)));

    // proper subspace W dualizes to its orthogonal complement
    Cone w = Cone::from_generators(s, {}, {qvec({1, 1})});
    Cone wperp = Cone::from_generators(s, {}, {qvec({1, -1})});
    CHECK(w.dual().set_equals(wperp));
}

TEST_CASE("representation invariants") {
    Space s3(3);
    Cone c = Cone::from_inequalities(
        s3, {qvec({1, 0, 0}), qvec({0, 1, 0}), qvec({1, 1, 0}), qvec({0, 0, 1})});
    // redundant inequality dropped
    CHECK(c.inequalities().size() == 3);
    CHECK(c.rays().size() == 3);
    CHECK(c.dual().dual().set_equals(c));

    // round trip through generators
    Cone c2 = Cone::from_generators(s3, c.rays(), c.lineality());
    CHECK(c2.inequalities() == c.inequalities());
    CHECK(c2.equalities() == c.equalities());
}

TEST_CASE("irredundant half-spaces are unique for full-dimensional cones") {
    // same cone given by two scrambled, redundant descriptions
    Space s(3);
    QMat a = {qvec({2, 0, 0}), qvec({0, 3, 0}), qvec({0, 0, 1}), qvec({1, 1, 1})};
    QMat b = {qvec({0, 0, 5}), qvec({1, 0, 0}), qvec({0, 1, 0}), qvec({2, 3, 1})};
    Cone ca = Cone::from_inequalities(s, a);
    Cone cb = Cone::from_inequalities(s, b);
    REQUIRE(ca.dim() == 3);
    CHECK(ca.inequalities() == cb.inequalities());
}

TEST_CASE("face lattice of the quadrant") {
    Cone q = quadrant2();
    const FaceLattice& fl = q.faces();
    REQUIRE(fl.size() == 4);  // {0}, two rays, C
    CHECK(fl[fl.minimal_index()].dim == 0);
    CHECK(fl[fl.cone_index()].dim == 2);

    int euler = 0;
    for (const Face& f : fl.all()) euler += eps_rel(q.dim(), f.dim);
    CHECK(euler == 0);
}

TEST_CASE("face lattice of subspaces and half-planes") {
    Space s(2);
    Cone line = Cone::from_generators(s, {}, {qvec({1, 0})});
    CHECK(line.faces().size() == 1);
    int euler = 0;
    for (const Face& f : line.faces().all()) euler += eps_rel(line.dim(), f.dim);
    CHECK(euler == 1);  // subspace case

    Cone hp = half_plane_x();
    REQUIRE(hp.faces().size() == 2);  // y-axis (= F_0) and C
    CHECK(hp.faces()[hp.faces().minimal_index()].dim == 1);
    CHECK(hp.lineality_dim() == 1);
}

TEST_CASE("angle cones") {
    Cone q = quadrant2();
    const FaceLattice& fl = q.faces();

    // A(F_0, C) = C and A(C, C) = V_C
    CHECK(angle_cone(q, fl[fl.minimal_index()]).set_equals(q));
    Cone vc = Cone::from_generators(q.space(), {}, identity_mat(2));
    CHECK(angle_cone(q, fl[fl.cone_index()]).set_equals(vc));

    // maximal face of a pointed 2-D cone gives the half-plane through it
    for (size_t i : fl.min_faces()) {
        Cone a = angle_cone(q, fl[i]);
        CHECK(a.dim() == 2);
        CHECK(a.lineality_dim() == 1);
        CHECK(a.inequalities().size() == 1);
    }
}

TEST_CASE("angle cone from the definition, independent of interior point") {
    // The positive hull of C - Z for Z in rint F is cone(rays(C), -Z) plus
    // the lineality of C; it must match the active-inequality construction
    // for any choice of Z.
    RandomCones rng(23);
    for (int t = 0; t < 10; ++t) {
        Cone c = rng.next(2 + t % 3);
        for (const Face& f : c.faces().all()) {
            for (int variant = 0; variant < 2; ++variant) {
                // two different relative-interior points of F
                QVec z = f.cone.rint_point();
                if (variant == 1 && !f.cone.rays().empty()) z = add(z, f.cone.rays()[0]);
                QMat gens = c.rays();
                if (!is_zero(z)) gens.push_back(neg(z));
                QMat lin = c.lineality();
                const QMat& flin = f.cone.lineality();
                lin.insert(lin.end(), flin.begin(), flin.end());
                Cone built = Cone::from_generators(c.space(), gens, lin);
                CHECK(built.set_equals(angle_cone(c, f)));
            }
        }
    }
}

TEST_CASE("rint membership") {
    Cone q = quadrant2();
    CHECK(q.rint_contains(qvec({1, 1})));
    CHECK_FALSE(q.rint_contains(qvec({1, 0})));

    Space s(2);
    Cone line = Cone::from_generators(s, {}, {qvec({1, 0})});
    CHECK(line.rint_contains(qvec({5, 0})));
    CHECK_FALSE(line.rint_contains(qvec({5, 1})));

    Cone hp = half_plane_x();
    CHECK_FALSE(hp.rint_contains(qvec({0, 3})));
    QVec h = {parse_rat("1/7"), parse_rat("-4")};
    CHECK(hp.rint_contains(h));

    // rint point certificate
    for (const Cone& c : {q, line, hp}) CHECK(c.rint_contains(c.rint_point()));
}

TEST_CASE("projection") {
    Space s2(2);
    Subspace xaxis = Subspace::span_of(s2, {qvec({1, 0})});
    CHECK(project(qvec({3, 4}), xaxis) == qvec({3, 0}));
    CHECK(project(qvec({3, 4}), Subspace::full(s2)) == qvec({3, 4}));

    Space s3(3);
    Subspace plane = Subspace::span_of(s3, {qvec({1, 0, 0}), qvec({0, 1, 0})});
    QVec v = {parse_rat("1/2"), parse_rat("-1/2"), Rat(0)};
    CHECK(project(v, plane) == v);

    // H = H_S + H^S with <H_S, H^S> = 0
    QVec h = qvec({2, 3, 5});
    Subspace diag = Subspace::span_of(s3, {qvec({1, 1, 1}), qvec({1, 2, 0})});
    QVec hs = project(h, diag);
    QVec hperp = sub(h, hs);
    CHECK(s3.dot(hs, hperp) == 0);
    CHECK(diag.orthogonal_complement().contains(hperp));
}

TEST_CASE("projection with a non-identity Gram matrix") {
    Space s = Space::scaled(2, Rat(2));
    Subspace diag = Subspace::span_of(s, {qvec({1, 1})});
    QVec h = qvec({3, 1});
    QVec hs = project(h, diag);
    CHECK(hs == qvec({2, 2}));
    CHECK(s.dot(hs, sub(h, hs)) == 0);
}

namespace {

// A(F,G) for faces F ⊆ G of c: locate F inside G's own lattice.
Cone angle_in_face(const Cone& g, const Cone& f) {
    for (const Face& gf : g.faces().all())
        if (gf.cone.set_equals(f)) return angle_cone(g, gf);
    throw std::runtime_error("not a face");
}

}  // namespace

TEST_CASE("face lattice bijections with angle cones (conProps 2-3)") {
    RandomCones rng(7);
    for (int t = 0; t < 12; ++t) {
        Cone c = rng.next(1 + t % 4);
        const FaceLattice& fl = c.faces();
        for (size_t fi = 0; fi < fl.size(); ++fi) {
            Cone a = angle_cone(c, fl[fi]);
            const FaceLattice& afl = a.faces();
            Cone ad = a.dual();
            std::vector<size_t> above;
            for (size_t gi = 0; gi < fl.size(); ++gi)
                if (fl.included(fi, gi)) above.push_back(gi);
            REQUIRE(above.size() == afl.size());
            REQUIRE(above.size() == ad.faces().size());
            for (size_t gi : above) {
                // G ⊇ F maps to A(F,G) ∈ F(A(F,C)) (order-preserving)
                Cone afg = angle_in_face(fl[gi].cone, fl[fi].cone);
                bool found = false;
                for (const Face& af : afl.all())
                    if (af.cone.set_equals(afg)) { found = true; break; }
                CHECK(found);
                // A(A(F,G), A(F,C)) = A(G,C)
                CHECK(angle_in_face(a, afg).set_equals(angle_cone(c, fl[gi])));
                // G ⊇ F maps to A(G,C)^dual ∈ F(A(F,C)^dual) (order-reversing)
                Cone agc_dual = angle_cone(c, fl[gi]).dual();
                bool found_dual = false;
                for (const Face& df : ad.faces().all())
                    if (df.cone.set_equals(agc_dual)) { found_dual = true; break; }
                CHECK(found_dual);
            }
            // V_{A(F,C)^dual} = V^F
            CHECK(ad.span() == fl[fi].cone.span().orthogonal_complement());
        }
    }
}

TEST_CASE("euler relation over random corpus") {
    RandomCones rng(11);
    for (int t = 0; t < 30; ++t) {
        Cone c = rng.next(1 + t % 4);
        int euler = 0;
        for (const Face& f : c.faces().all()) euler += eps_rel(c.dim(), f.dim);
        CHECK(euler == (c.is_subspace() ? 1 : 0));
    }
}

TEST_CASE("disjoint cover by relative interiors of faces") {
    RandomCones rng(13);
    PointSampler pts(17, 6);
    for (int t = 0; t < 10; ++t) {
        Cone c = rng.next(1 + t % 3);
        for (int k = 0; k < 60; ++k) {
            QVec h = pts.sample(c.space().dim());
            int n_rints = 0;
            for (const Face& f : c.faces().all())
                if (f.cone.rint_contains(h)) ++n_rints;
            if (c.contains(h)) CHECK(n_rints == 1);
            else CHECK(n_rints == 0);
        }
        // every face's rint point lands in exactly its own rint
        for (const Face& f : c.faces().all()) {
            QVec p = f.cone.rint_point();
            int n = 0;
            for (const Face& g : c.faces().all())
                if (g.cone.rint_contains(p)) ++n;
            CHECK(n == 1);
        }
    }
}

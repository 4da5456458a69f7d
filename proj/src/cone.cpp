#include "conecalc/cone.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace conecalc {

namespace {

// Double description state: the cone processed so far is
// cone(rays) + span(lineality). Rays are kept primitive; they are the
// extreme rays modulo the lineality.
struct DDState {
    QMat lin;
    QMat rays;
    // per ray, the zero set over the inequality constraints processed so far
    std::vector<std::vector<uint32_t>> zero_sets;
};

bool subset_of(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    // a ⊆ b (both sorted)
    size_t j = 0;
    for (uint32_t x : a) {
        while (j < b.size() && b[j] < x) ++j;
        if (j == b.size() || b[j] != x) return false;
    }
    return true;
}

std::vector<uint32_t> intersect_sorted(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else { r.push_back(a[i]); ++i; ++j; }
    }
    return r;
}

// Combinatorial adjacency test: r_i, r_j are adjacent extreme rays iff no
// third ray's zero set contains the intersection of theirs.
bool adjacent(const DDState& s, size_t i, size_t j) {
    std::vector<uint32_t> z = intersect_sorted(s.zero_sets[i], s.zero_sets[j]);
    for (size_t k = 0; k < s.rays.size(); ++k) {
        if (k == i || k == j) continue;
        if (subset_of(z, s.zero_sets[k])) return false;
    }
    return true;
}

// Cuts the state with <a,.> >= 0 (strict_equality=false) or <a,.> = 0
// (strict_equality=true); `val` below is the pairing against a.
void dd_cut(const Space& space, DDState& s, const QVec& normal, bool equality, uint32_t cid) {
    QVec cov = space.gram_times(normal);
    auto val = [&cov](const QVec& x) { return dot_std(cov, x); };

    // If the constraint is nonzero on the lineality, split the lineality.
    size_t split = s.lin.size();
    for (size_t i = 0; i < s.lin.size(); ++i)
        if (val(s.lin[i]) != 0) { split = i; break; }

    if (split != s.lin.size()) {
        QVec v = s.lin[split];
        Rat vv = val(v);
        QMat new_lin;
        for (size_t i = 0; i < s.lin.size(); ++i) {
            if (i == split) continue;
            Rat c = val(s.lin[i]) / vv;
            QVec w = sub(s.lin[i], scale(c, v));
            if (!is_zero(w)) new_lin.push_back(primitive(w));
        }
        for (size_t i = 0; i < s.rays.size(); ++i) {
            Rat c = val(s.rays[i]) / vv;
            s.rays[i] = primitive(sub(s.rays[i], scale(c, v)));
            s.zero_sets[i].push_back(cid);  // now tight on this constraint
        }
        s.lin = std::move(new_lin);
        if (!equality) {
            // the positive half of the split line survives as a new ray
            QVec r = vv > 0 ? v : neg(v);
            s.rays.push_back(primitive(r));
            s.zero_sets.push_back({});
            // the new ray is tight on no previously processed inequality in
            // general; recompute its zero set against nothing (previous
            // constraints are all zero on the old lineality, hence on v).
            // Every earlier inequality had val == 0 on the lineality
            // (otherwise it would have split it), so v is tight on all of them.
            std::vector<uint32_t> z;
            for (uint32_t c = 0; c < cid; ++c) z.push_back(c);
            s.zero_sets.back() = std::move(z);
        }
        return;
    }

    // Constraint vanishes on the lineality: partition the rays.
    std::vector<size_t> pos, zero, negs;
    std::vector<Rat> vals(s.rays.size());
    for (size_t i = 0; i < s.rays.size(); ++i) {
        vals[i] = val(s.rays[i]);
        int sg = sign(vals[i]);
        if (sg > 0) pos.push_back(i);
        else if (sg < 0) negs.push_back(i);
        else zero.push_back(i);
    }
    if (negs.empty() && (!equality || pos.empty())) {
        // nothing cut away; but record tightness
        for (size_t i : zero) s.zero_sets[i].push_back(cid);
        return;
    }

    DDState out;
    out.lin = s.lin;
    auto keep = [&](size_t i, bool tight) {
        out.rays.push_back(s.rays[i]);
        out.zero_sets.push_back(s.zero_sets[i]);
        if (tight) out.zero_sets.back().push_back(cid);
    };
    if (!equality)
        for (size_t i : pos) keep(i, false);
    for (size_t i : zero) keep(i, true);
    for (size_t i : pos) {
        for (size_t j : negs) {
            if (!adjacent(s, i, j)) continue;
            // w = val(r_i) r_j - val(r_j) r_i  (positive combination, val(w)=0)
            QVec w = primitive(sub(scale(vals[i], s.rays[j]), scale(vals[j], s.rays[i])));
            if (is_zero(w)) continue;
            out.rays.push_back(w);
            std::vector<uint32_t> z = intersect_sorted(s.zero_sets[i], s.zero_sets[j]);
            z.push_back(cid);
            out.zero_sets.push_back(std::move(z));
        }
    }
    s = std::move(out);
}

// Runs the double description method: V-rep of
// { x : <n,x> >= 0 (n in ineqs), <e,x> = 0 (e in eqs) }.
std::pair<QMat, QMat> double_description(const Space& space, const QMat& ineqs, const QMat& eqs) {
    DDState s;
    s.lin = identity_mat(space.dim());
    uint32_t cid = 0;
    for (const QVec& e : eqs) dd_cut(space, s, e, true, cid++);
    for (const QVec& n : ineqs) dd_cut(space, s, n, false, cid++);
    return {std::move(s.rays), std::move(s.lin)};
}

}  // namespace

struct Cone::Impl {
    Space space;
    QMat ineqs, eqs;
    QMat rays, lin;
    Subspace span;
    Subspace lin_space;
    mutable std::shared_ptr<const FaceLattice> lattice;

    Impl(Space sp, QMat r, QMat l)
        : space(sp),
          rays(std::move(r)),
          lin(std::move(l)),
          span(Subspace::zero(sp)),
          lin_space(Subspace::zero(sp)) {}
};

static void canonicalize_vrep(const Space& space, QMat& rays, QMat& lin) {
    lin = row_space_basis(std::move(lin));
    for (QVec& b : lin) b = primitive_signed(b);
    Subspace l = Subspace::span_of(space, lin);
    QMat out;
    for (const QVec& r : rays) {
        QVec w = primitive(sub(r, l.project(r)));
        if (!is_zero(w)) out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end(), QVecLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    rays = std::move(out);
}

Cone Cone::from_inequalities(const Space& space, QMat inequalities, QMat equalities) {
    for (QVec& n : inequalities) n = primitive(n);
    for (QVec& e : equalities) e = primitive_signed(e);

    // Primal run: the double description output carries the true lineality
    // and the extreme rays modulo it.
    auto [rays, lin] = double_description(space, inequalities, equalities);
    canonicalize_vrep(space, rays, lin);
    auto impl = std::make_shared<Impl>(space, std::move(rays), std::move(lin));

    // Dual run: the facet normals of C are the extreme rays of C^dual, the
    // equality normals its lineality. This also drops redundant input
    // inequalities and moves implicit ones into the equalities.
    auto [drays, dlin] = double_description(space, impl->rays, impl->lin);
    canonicalize_vrep(space, drays, dlin);
    impl->ineqs = std::move(drays);
    impl->eqs = std::move(dlin);

    QMat span_gens = impl->rays;
    span_gens.insert(span_gens.end(), impl->lin.begin(), impl->lin.end());
    impl->span = Subspace::span_of(space, span_gens);
    impl->lin_space = Subspace::span_of(space, impl->lin);
    return Cone(std::move(impl));
}

Cone Cone::from_generators(const Space& space, QMat rays, QMat lineality) {
    for (QVec& r : rays) r = primitive(r);
    // H-rep of the requested cone = V-rep of its dual, which DD computes
    // soundly even when the ray list hides lines or redundancy.
    auto [drays, dlin] = double_description(space, rays, lineality);
    canonicalize_vrep(space, drays, dlin);
    return from_inequalities(space, std::move(drays), std::move(dlin));
}

const Space& Cone::space() const { return p_->space; }
const QMat& Cone::inequalities() const { return p_->ineqs; }
const QMat& Cone::equalities() const { return p_->eqs; }
const QMat& Cone::rays() const { return p_->rays; }
const QMat& Cone::lineality() const { return p_->lin; }
const Subspace& Cone::span() const { return p_->span; }
const Subspace& Cone::lineality_space() const { return p_->lin_space; }

bool Cone::contains(const QVec& h) const {
    for (const QVec& e : p_->eqs)
        if (p_->space.dot(e, h) != 0) return false;
    for (const QVec& n : p_->ineqs)
        if (p_->space.dot(n, h) < 0) return false;
    return true;
}

bool Cone::rint_contains(const QVec& h) const {
    for (const QVec& e : p_->eqs)
        if (p_->space.dot(e, h) != 0) return false;
    for (const QVec& n : p_->ineqs)
        if (p_->space.dot(n, h) <= 0) return false;
    return true;
}

QVec Cone::rint_point() const {
    QVec p(p_->space.dim(), Rat(0));
    for (const QVec& r : p_->rays) p = add(p, r);
    return p;
}

Cone Cone::dual() const {
    // V-rep of the dual = H-rep data of the primal and vice versa.
    QMat rays = p_->ineqs, lin = p_->eqs;
    return from_generators(p_->space, std::move(rays), std::move(lin));
}

Cone Cone::negate() const {
    QMat rays;
    for (const QVec& r : p_->rays) rays.push_back(neg(r));
    return from_generators(p_->space, std::move(rays), p_->lin);
}

bool Cone::set_equals(const Cone& o) const {
    return p_->space == o.p_->space && p_->rays == o.p_->rays && p_->lin == o.p_->lin;
}

const FaceLattice& Cone::faces() const {
    if (!p_->lattice) p_->lattice = std::make_shared<const FaceLattice>(*this);
    return *p_->lattice;
}

Cone intersect_with_subspace(const Cone& c, const Subspace& s) {
    QMat eqs = c.equalities();
    const QMat& comp = s.orthogonal_complement().basis();
    eqs.insert(eqs.end(), comp.begin(), comp.end());
    return Cone::from_inequalities(c.space(), c.inequalities(), std::move(eqs));
}

Cone angle_cone_by_mask(const Cone& c, uint64_t active_mask) {
    QMat ineqs;
    const QMat& all = c.inequalities();
    for (size_t i = 0; i < all.size(); ++i)
        if (active_mask & (uint64_t(1) << i)) ineqs.push_back(all[i]);
    return Cone::from_inequalities(c.space(), std::move(ineqs), c.equalities());
}

Cone angle_cone(const Cone& c, const Face& f) { return angle_cone_by_mask(c, f.mask); }

FaceLattice::FaceLattice(const Cone& c) {
    const QMat& ineqs = c.inequalities();
    size_t m = ineqs.size();
    if (m > 63) throw std::runtime_error("too many facets for face enumeration");
    const Space& sp = c.space();

    // closure(mask): all inequalities vanishing on the face cut by mask
    auto make_face = [&](uint64_t mask) {
        QMat eqs = c.equalities();
        QMat rest;
        for (size_t i = 0; i < m; ++i)
            (mask & (uint64_t(1) << i) ? eqs : rest).push_back(ineqs[i]);
        Cone f = Cone::from_inequalities(sp, std::move(rest), std::move(eqs));
        uint64_t closed = 0;
        for (size_t i = 0; i < m; ++i) {
            bool tight = true;
            for (const QVec& r : f.rays())
                if (sp.dot(ineqs[i], r) != 0) { tight = false; break; }
            if (tight)
                for (const QVec& l : f.lineality())
                    if (sp.dot(ineqs[i], l) != 0) { tight = false; break; }
            if (tight) closed |= uint64_t(1) << i;
        }
        return std::pair<uint64_t, Cone>(closed, std::move(f));
    };

    std::map<uint64_t, Cone> found;
    std::vector<uint64_t> queue;
    auto visit = [&](uint64_t mask) {
        auto [closed, cone] = make_face(mask);
        if (found.emplace(closed, std::move(cone)).second) queue.push_back(closed);
    };
    visit(0);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        uint64_t base = queue[qi];
        for (size_t i = 0; i < m; ++i) {
            uint64_t bit = uint64_t(1) << i;
            if (base & bit) continue;
            visit(base | bit);
        }
    }

    for (auto& [mask, cone] : found) {
        size_t d = cone.dim();
        faces_.push_back(Face{mask, std::move(cone), d});
    }
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.mask < b.mask;
    });
    for (size_t i = 0; i < faces_.size(); ++i) {
        if (faces_[i].mask == (m == 0 ? 0 : ((uint64_t(1) << m) - 1))) minimal_ = i;
        if (faces_[i].mask == 0) whole_ = i;
    }
}

std::vector<size_t> FaceLattice::min_faces() const {
    size_t d0 = faces_[minimal_].dim;
    std::vector<size_t> out;
    for (size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].dim == d0 + 1) out.push_back(i);
    return out;
}

}  // namespace conecalc

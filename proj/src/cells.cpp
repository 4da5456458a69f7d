#include "conecalc/cells.hpp"

#include <stdexcept>

namespace conecalc {

SignedCellSum product_of_cells(const Cell& a, const Cell& b) {
    if (a.cone.space() != b.cone.space())
        throw std::invalid_argument("product_of_cells: ambient space mismatch");
    QVec sa = a.shift.empty() ? QVec(a.cone.space().dim(), Rat(0)) : a.shift;
    QVec sb = b.shift.empty() ? QVec(b.cone.space().dim(), Rat(0)) : b.shift;
    if (sa != sb) throw std::invalid_argument("product_of_cells: shifts differ");

    SignedCellSum out(a.cone.space());
    if (a.empty || b.empty) return out;
    Cone inter = intersect(a.cone, b.cone);
    QVec p = inter.rint_point();
    bool meets = a.cone.rint_contains(p) && b.cone.rint_contains(p);
    out.add_term(1, Cell{std::move(inter), sa, !meets});
    return out;
}

IndicatorKit::IndicatorKit(const Cone& c) : cone_(c) {
    const FaceLattice& fl = c.faces();
    for (size_t f = 0; f < fl.size(); ++f) {
        angle_.push_back(angle_cone(c, fl[f]));
        angle_dual_.push_back(angle_.back().dual());
        face_dual_.push_back(fl[f].cone.dual());
        k_.push_back(intersect(angle_.back(), face_dual_.back()));
    }
}

const Subspace& IndicatorKit::face_span(size_t f) const { return cone_.faces()[f].cone.span(); }

std::vector<GammaFunction::Term> GammaFunction::terms() const {
    const FaceLattice& fl = cone().faces();
    size_t d0 = fl[fl.minimal_index()].dim;
    std::vector<Term> out;
    for (size_t f = 0; f < fl.size(); ++f) out.push_back({eps_rel(fl[f].dim, d0), f});
    return out;
}

long GammaFunction::eval(const QVec& h, const QVec& T) const {
    const FaceLattice& fl = cone().faces();
    size_t d0 = fl[fl.minimal_index()].dim;
    long s = 0;
    for (size_t f = 0; f < fl.size(); ++f) {
        QVec arg = sub(h, kit_->proj_face(f, T));
        if (kit_->k_cell(f).rint_contains(arg)) s += eps_rel(fl[f].dim, d0);
    }
    return s;
}

SignedCellSum GammaFunction::at(const QVec& T) const {
    const FaceLattice& fl = cone().faces();
    size_t d0 = fl[fl.minimal_index()].dim;
    SignedCellSum out(cone().space());
    for (size_t f = 0; f < fl.size(); ++f)
        out.add_term(eps_rel(fl[f].dim, d0), Cell{kit_->k_cell(f), kit_->proj_face(f, T), false});
    return out;
}

long gamma_eval_direct(const Cone& c, const QVec& h, const QVec& T) {
    const FaceLattice& fl = c.faces();
    size_t d0 = fl[fl.minimal_index()].dim;
    long s = 0;
    for (size_t f = 0; f < fl.size(); ++f) {
        Cone a = angle_cone(c, fl[f]);
        if (!a.rint_contains(h)) continue;
        if (fl[f].cone.dual().rint_contains(sub(h, T))) s += eps_rel(fl[f].dim, d0);
    }
    return s;
}

SignedCellSum sigma_sum(const IndicatorKit& kit, size_t face_index) {
    const FaceLattice& fl = kit.cone().faces();
    if (face_index >= fl.size()) throw std::invalid_argument("sigma_sum: no such face");
    SignedCellSum out(kit.cone().space());
    for (size_t e = 0; e < fl.size(); ++e) {
        if (!fl.included(e, face_index)) continue;  // E ⊆ F
        out.add_term(eps_rel(fl[face_index].dim, fl[e].dim), make_cell(kit.k_cell(e)));
    }
    return out;
}

SignedCellSum sigma_sum(const Cone& c, size_t face_index) {
    IndicatorKit kit(c);
    return sigma_sum(kit, face_index);
}

long sigma_eval_direct(const Cone& c, size_t face_index, const QVec& h) {
    const FaceLattice& fl = c.faces();
    long s = 0;
    for (size_t e = 0; e < fl.size(); ++e) {
        if (!fl.included(e, face_index)) continue;
        Cone a = angle_cone(c, fl[e]);
        if (!a.rint_contains(h)) continue;
        if (fl[e].cone.dual().rint_contains(h)) s += eps_rel(fl[face_index].dim, fl[e].dim);
    }
    return s;
}

Ball gamma_support_certificate(const Space& sp, const QVec& T) {
    return Ball{scale(Rat(1, 2), T), sp.norm_sq(T) / 4};
}

}  // namespace conecalc

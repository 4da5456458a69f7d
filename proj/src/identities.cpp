#include "conecalc/identities.hpp"

#include <chrono>
#include <map>
#include <stdexcept>

#include "conecalc/corpus.hpp"

namespace conecalc {

namespace {

const std::map<std::string, IdentityId>& name_table() {
    static const std::map<std::string, IdentityId> t = {
        {"euler", IdentityId::euler},
        {"bgs_angle", IdentityId::bgs_angle},
        {"bgs_dual", IdentityId::bgs_dual},
        {"langlands_1", IdentityId::langlands_1},
        {"langlands_2", IdentityId::langlands_2},
        {"gamma_decomposition", IdentityId::gamma_decomposition},
        {"gamma_dual_decomposition", IdentityId::gamma_dual_decomposition},
        {"gamma_duality", IdentityId::gamma_duality},
        {"gamma_fan_refinement", IdentityId::gamma_fan_refinement},
        {"htau_tau_sigma", IdentityId::htau_tau_sigma},
        {"sigma_support", IdentityId::sigma_support},
        {"sigma_norm_bound", IdentityId::sigma_norm_bound},
        {"relative_tau_hat_expansion", IdentityId::relative_tau_hat_expansion},
    };
    return t;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void record_failure(IdentityReport& rep, const VerifyOptions& opts, const std::string& what) {
    if (rep.failures.size() < opts.max_failures) rep.failures.push_back(what);
    else if (rep.failures.size() == opts.max_failures) rep.failures.push_back("...");
}

QVec proj_complement(const Subspace& s, const QVec& v) { return sub(v, s.project(v)); }

}  // namespace

const char* identity_name(IdentityId id) {
    for (const auto& [name, i] : name_table())
        if (i == id) return name.c_str();
    return "?";
}

IdentityId identity_from_name(const std::string& name) {
    auto it = name_table().find(name);
    if (it == name_table().end()) throw std::invalid_argument("unknown identity: " + name);
    return it->second;
}

std::vector<IdentityId> cone_identities() {
    return {IdentityId::euler,
            IdentityId::bgs_angle,
            IdentityId::bgs_dual,
            IdentityId::langlands_1,
            IdentityId::langlands_2,
            IdentityId::gamma_decomposition,
            IdentityId::gamma_dual_decomposition,
            IdentityId::gamma_duality,
            IdentityId::htau_tau_sigma,
            IdentityId::sigma_support,
            IdentityId::sigma_norm_bound};
}

IdentityReport verify_cone_identity(IdentityId id, const Cone& c, const VerifyOptions& opts) {
    Timer timer;
    IdentityReport rep;
    rep.id = identity_name(id);
    rep.seed = opts.seed;
    rep.cones_checked = 1;

    const Space& sp = c.space();
    const FaceLattice& fl = c.faces();
    size_t dC = c.dim(), d0 = fl[fl.minimal_index()].dim;
    bool is_subspace = c.is_subspace();

    if (id == IdentityId::euler) {
        int sum = 0;
        for (const Face& f : fl.all()) sum += eps_rel(dC, f.dim);
        if (sum != (is_subspace ? 1 : 0))
            record_failure(rep, opts, "euler sum = " + std::to_string(sum));
        rep.elapsed_ms = timer.ms();
        return rep;
    }

    std::vector<QVec> points = identity_sample_points(c, opts.samples, opts.seed, opts.max_coord);
    // identities with a truncation parameter pair successive points as (H, T)
    PointSampler tsampler(opts.seed ^ 0x9e3779b97f4a7c15ULL, opts.max_coord);
    std::vector<QVec> tpoints;
    for (size_t i = 0; i < points.size(); ++i)
        tpoints.push_back(i % 3 == 0 ? points[(i + 1) % points.size()] : tsampler.sample(sp.dim()));

    switch (id) {
        case IdentityId::bgs_angle: {
            std::vector<Cone> angles;
            for (size_t f = 0; f < fl.size(); ++f) angles.push_back(angle_cone(c, fl[f]));
            for (const QVec& h : points) {
                ++rep.samples_evaluated;
                std::vector<int> in_rint(fl.size());
                for (size_t e = 0; e < fl.size(); ++e) in_rint[e] = angles[e].rint_contains(h);
                for (size_t f = 0; f < fl.size(); ++f) {
                    long lhs = 0;
                    for (size_t e = 0; e < fl.size(); ++e)
                        if (fl.included(f, e) && in_rint[e]) lhs += eps_rel(dC, fl[e].dim);
                    long rhs = angles[f].contains(neg(h)) ? 1 : 0;
                    if (lhs != rhs)
                        record_failure(rep, opts, "H=" + vec_str(h) + " F#" + std::to_string(f) +
                                                      " lhs=" + std::to_string(lhs) +
                                                      " rhs=" + std::to_string(rhs));
                }
            }
            break;
        }
        case IdentityId::bgs_dual: {
            std::vector<Cone> fduals;
            for (size_t f = 0; f < fl.size(); ++f) fduals.push_back(fl[f].cone.dual());
            Cone cdual = c.dual();
            for (const QVec& h : points) {
                ++rep.samples_evaluated;
                long lhs = 0;
                for (size_t f = 0; f < fl.size(); ++f)
                    if (fduals[f].rint_contains(h)) lhs += eps_rel(fl[f].dim, d0);
                long rhs = cdual.contains(neg(h)) ? 1 : 0;
                if (lhs != rhs)
                    record_failure(rep, opts, "H=" + vec_str(h) + " lhs=" + std::to_string(lhs) +
                                                  " rhs=" + std::to_string(rhs));
            }
            break;
        }
        case IdentityId::langlands_1: {
            IndicatorKit kit(c);
            for (const QVec& h : points) {
                ++rep.samples_evaluated;
                long lhs = 0;
                for (size_t f = 0; f < fl.size(); ++f) {
                    QVec hf = kit.proj_face(f, h);
                    QVec hperp = sub(h, hf);
                    if (fl[f].cone.rint_contains(hf) && kit.angle_dual(f).rint_contains(hperp))
                        lhs += eps_rel(dC, fl[f].dim);
                }
                long rhs = is_subspace ? 1 : 0;
                if (lhs != rhs) record_failure(rep, opts, "H=" + vec_str(h));
            }
            break;
        }
        case IdentityId::langlands_2: {
            IndicatorKit kit(c);
            for (const QVec& h : points) {
                ++rep.samples_evaluated;
                long lhs = 0;
                for (size_t f = 0; f < fl.size(); ++f)
                    if (kit.k_cell(f).rint_contains(h)) lhs += eps_rel(dC, fl[f].dim);
                long rhs = (is_subspace && is_zero(h)) ? 1 : 0;
                if (lhs != rhs) record_failure(rep, opts, "H=" + vec_str(h));
            }
            break;
        }
        case IdentityId::gamma_decomposition: {
            // [rint C](H) = sum_F Gamma(A(F,C), H^F, T^F) [rint F](H_F - T_F)
            std::vector<GammaFunction> gammas;
            for (size_t f = 0; f < fl.size(); ++f)
                gammas.emplace_back(angle_cone(c, fl[f]));
            for (size_t i = 0; i < points.size(); ++i) {
                const QVec &h = points[i], &T = tpoints[i];
                ++rep.samples_evaluated;
                long rhs = 0;
                for (size_t f = 0; f < fl.size(); ++f) {
                    const Subspace& vf = fl[f].cone.span();
                    QVec hf = vf.project(h), tf = vf.project(T);
                    if (!fl[f].cone.rint_contains(sub(hf, tf))) continue;
                    rhs += gammas[f].eval(sub(h, hf), sub(T, tf));
                }
                long lhs = c.rint_contains(h) ? 1 : 0;
                if (lhs != rhs)
                    record_failure(rep, opts, "H=" + vec_str(h) + " T=" + vec_str(T) +
                                                  " lhs=" + std::to_string(lhs) +
                                                  " rhs=" + std::to_string(rhs));
            }
            break;
        }
        case IdentityId::gamma_dual_decomposition: {
            // [rint C^v](H-T) = sum_F eps_F^{F0} [rint A(F,C)^v](H^F) Gamma(F, H_F, T_F)
            IndicatorKit kit(c);
            std::vector<GammaFunction> gammas;
            for (size_t f = 0; f < fl.size(); ++f) gammas.emplace_back(fl[f].cone);
            Cone cdual = c.dual();
            for (size_t i = 0; i < points.size(); ++i) {
                const QVec &h = points[i], &T = tpoints[i];
                ++rep.samples_evaluated;
                long rhs = 0;
                for (size_t f = 0; f < fl.size(); ++f) {
                    QVec hf = kit.proj_face(f, h);
                    QVec hperp = sub(h, hf);
                    if (!kit.angle_dual(f).rint_contains(hperp)) continue;
                    rhs += eps_rel(fl[f].dim, d0) * gammas[f].eval(hf, kit.proj_face(f, T));
                }
                long lhs = cdual.rint_contains(sub(h, T)) ? 1 : 0;
                if (lhs != rhs)
                    record_failure(rep, opts, "H=" + vec_str(h) + " T=" + vec_str(T) +
                                                  " lhs=" + std::to_string(lhs) +
                                                  " rhs=" + std::to_string(rhs));
            }
            break;
        }
        case IdentityId::gamma_duality: {
            GammaFunction g(c);
            GammaFunction gdual(c.dual());
            int e = eps_rel(dC, d0);
            for (size_t i = 0; i < points.size(); ++i) {
                const QVec &h = points[i], &T = tpoints[i];
                ++rep.samples_evaluated;
                long lhs = g.eval(h, T);
                long rhs = e * gdual.eval(sub(h, T), neg(T));
                if (lhs != rhs)
                    record_failure(rep, opts, "H=" + vec_str(h) + " T=" + vec_str(T) +
                                                  " lhs=" + std::to_string(lhs) +
                                                  " rhs=" + std::to_string(rhs));
            }
            break;
        }
        case IdentityId::htau_tau_sigma: {
            IndicatorKit kit(c);
            for (const QVec& h : points) {
                ++rep.samples_evaluated;
                std::vector<int> kvals(fl.size());
                for (size_t e = 0; e < fl.size(); ++e) kvals[e] = kit.k_cell(e).rint_contains(h);
                for (size_t f = 0; f < fl.size(); ++f) {
                    long lhs = kvals[f];
                    long rhs = 0;  // sum over E ⊆ F of sigma(E, C)(h)
                    for (size_t e = 0; e < fl.size(); ++e) {
                        if (!fl.included(e, f)) continue;
                        for (size_t g = 0; g < fl.size(); ++g)
                            if (fl.included(g, e) && kvals[g])
                                rhs += eps_rel(fl[e].dim, fl[g].dim);
                    }
                    if (lhs != rhs)
                        record_failure(rep, opts, "H=" + vec_str(h) + " F#" + std::to_string(f));
                }
            }
            break;
        }
        case IdentityId::sigma_support: {
            IndicatorKit kit(c);
            for (size_t f = 0; f < fl.size(); ++f) {
                SignedCellSum sig = sigma_sum(kit, f);
                for (const QVec& h : points) {
                    ++rep.samples_evaluated;
                    if (sig.eval(h) != 0 && !kit.angle(f).rint_contains(h))
                        record_failure(rep, opts,
                                       "H=" + vec_str(h) + " F#" + std::to_string(f));
                }
            }
            break;
        }
        case IdentityId::sigma_norm_bound: {
            IndicatorKit kit(c);
            // Certify k = 2 * max |H_F|/|H^F| over support samples (squared
            // arithmetic stays rational); the doubled sample set extends the
            // first one, and its max must stay within the certified bound.
            // sigma is supported on the union of the K-cells, so points are
            // drawn as random positive combinations of each K-cell's rays.
            std::vector<QVec> all;
            {
                PointSampler ps(opts.seed, opts.max_coord);
                size_t n = sp.dim();
                for (size_t i = 0; i < 2 * opts.samples; ++i) {
                    const Cone& k = kit.k_cell(i % fl.size());
                    QVec h(n, Rat(0));
                    for (const QVec& r : k.rays()) {
                        Rat coef = ps.sample_rat();
                        if (coef < 0) coef = -coef;
                        h = add(h, scale(coef, r));
                    }
                    all.push_back(h);
                    if (i % 4 == 0) all.push_back(ps.sample(n));
                }
            }
            for (size_t f = 0; f < fl.size(); ++f) {
                SignedCellSum sig = sigma_sum(kit, f);
                std::optional<Rat> max_half, max_full;
                for (size_t i = 0; i < all.size(); ++i) {
                    const QVec& h = all[i];
                    ++rep.samples_evaluated;
                    if (sig.eval(h) == 0) continue;
                    QVec hf = kit.proj_face(f, h);
                    QVec hperp = sub(h, hf);
                    Rat num = sp.norm_sq(hf), den = sp.norm_sq(hperp);
                    if (den == 0) {
                        if (num != 0)
                            record_failure(rep, opts, "H=" + vec_str(h) + " H^F=0, H_F!=0");
                        continue;
                    }
                    Rat ratio = num / den;
                    if (!max_full || ratio > *max_full) max_full = ratio;
                    if (i < all.size() / 2 && (!max_half || ratio > *max_half)) max_half = ratio;
                }
                // k^2 = 4 * max_half; doubling must not escape it
                if (max_half && max_full && *max_full > 4 * *max_half)
                    record_failure(rep, opts, "ratio unstable under sample doubling F#" +
                                                  std::to_string(f));
                if (max_full)
                    rep.note += "F#" + std::to_string(f) + " k_sq=" + rat_str(4 * *max_full) + "; ";
            }
            break;
        }
        default:
            throw std::invalid_argument(std::string("identity needs a different context: ") +
                                        identity_name(id));
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

void validate_fan(const Cone& c, const std::vector<Cone>& pieces) {
    for (const Cone& p : pieces) {
        for (const QVec& r : p.rays())
            if (!c.contains(r)) throw std::invalid_argument("fan piece leaves the cone");
        for (const QVec& l : p.lineality())
            if (!c.contains(l) || !c.contains(neg(l)))
                throw std::invalid_argument("fan piece leaves the cone");
    }
    for (size_t i = 0; i < pieces.size(); ++i) {
        for (size_t j = i + 1; j < pieces.size(); ++j) {
            Cone inter = intersect(pieces[i], pieces[j]);
            bool face_i = false, face_j = false;
            for (const Face& f : pieces[i].faces().all())
                if (f.cone.set_equals(inter)) { face_i = true; break; }
            for (const Face& f : pieces[j].faces().all())
                if (f.cone.set_equals(inter)) { face_j = true; break; }
            if (!face_i || !face_j)
                throw std::invalid_argument("piece intersection is not a common face");
        }
    }
}

IdentityReport verify_fan_refinement(const Cone& c, const std::vector<Cone>& pieces,
                                     const VerifyOptions& opts) {
    Timer timer;
    validate_fan(c, pieces);

    IdentityReport rep;
    rep.id = identity_name(IdentityId::gamma_fan_refinement);
    rep.seed = opts.seed;
    rep.cones_checked = 1 + pieces.size();

    const FaceLattice& fl = c.faces();

    // all faces G of all pieces, deduplicated, each matched to the unique
    // face F of C with rint G inside rint F
    std::vector<Cone> gs;
    std::vector<size_t> g_to_f;
    for (const Cone& p : pieces) {
        for (const Face& gf : p.faces().all()) {
            bool seen = false;
            for (const Cone& g : gs)
                if (g.set_equals(gf.cone)) { seen = true; break; }
            if (seen) continue;
            QVec rp = gf.cone.rint_point();
            size_t host = fl.size();
            for (size_t f = 0; f < fl.size(); ++f)
                if (fl[f].cone.rint_contains(rp)) { host = f; break; }
            if (host == fl.size())
                throw std::invalid_argument("fan face has no host face in the cone");
            gs.push_back(gf.cone);
            g_to_f.push_back(host);
        }
    }

    std::vector<GammaFunction> gammas;
    for (size_t f = 0; f < fl.size(); ++f) gammas.emplace_back(angle_cone(c, fl[f]));

    std::vector<QVec> points = identity_sample_points(c, opts.samples, opts.seed, opts.max_coord);
    PointSampler tsampler(opts.seed ^ 0x9e3779b97f4a7c15ULL, opts.max_coord);
    for (const QVec& h : points) {
        QVec T = tsampler.sample(c.space().dim());
        ++rep.samples_evaluated;
        long rhs = 0;
        for (size_t gi = 0; gi < gs.size(); ++gi) {
            const Subspace& vg = gs[gi].span();
            QVec hg = vg.project(h), tg = vg.project(T);
            if (!gs[gi].rint_contains(sub(hg, tg))) continue;
            rhs += gammas[g_to_f[gi]].eval(sub(h, hg), sub(T, tg));
        }
        long lhs = c.rint_contains(h) ? 1 : 0;
        if (lhs != rhs)
            record_failure(rep, opts, "H=" + vec_str(h) + " T=" + vec_str(T) + " lhs=" +
                                          std::to_string(lhs) + " rhs=" + std::to_string(rhs));
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

IdentityReport verify_corpus(IdentityId id, const std::vector<Cone>& corpus,
                             const VerifyOptions& opts) {
    IdentityReport total;
    total.id = identity_name(id);
    total.seed = opts.seed;
    for (const Cone& c : corpus) {
        IdentityReport r = verify_cone_identity(id, c, opts);
        total.cones_checked += r.cones_checked;
        total.samples_evaluated += r.samples_evaluated;
        total.elapsed_ms += r.elapsed_ms;
        for (const std::string& f : r.failures)
            if (total.failures.size() <= opts.max_failures) total.failures.push_back(f);
    }
    return total;
}

}  // namespace conecalc

#include "conecalc/corpus.hpp"

namespace conecalc {

std::vector<QVec> identity_sample_points(const Cone& c, size_t random_count, uint64_t seed,
                                         long max_num) {
    PointSampler ps(seed, max_num);
    std::vector<QVec> pts;
    size_t n = c.space().dim();

    std::vector<QVec> anchors;
    anchors.push_back(QVec(n, Rat(0)));
    for (const Face& f : c.faces().all()) {
        anchors.push_back(f.cone.rint_point());
        anchors.push_back(f.cone.dual().rint_point());
    }
    for (const QVec& a : anchors) {
        pts.push_back(a);
        pts.push_back(neg(a));
    }

    while (pts.size() < random_count + 2 * anchors.size()) {
        QVec r = ps.sample(n);
        pts.push_back(r);
        // half of the random budget gets pulled onto walls
        if (pts.size() < random_count + 2 * anchors.size()) {
            const QVec& a = anchors[pts.size() % anchors.size()];
            pts.push_back(scale(Rat(1, 2), add(r, a)));
        }
    }
    return pts;
}

}  // namespace conecalc

#pragma once

#include <random>
#include <vector>

#include "conecalc/cone.hpp"

namespace conecalc {

/// Deterministic sampler of exact rational points: numerators uniform in
/// [-max_num, max_num], denominators drawn from {1,2,3,5,8}. Identities
/// involving strict inequalities need points on and off every wall, so wall
/// points (face rint points) are mixed in by the callers.
class PointSampler {
  public:
    explicit PointSampler(uint64_t seed, long max_num = 20) : rng_(seed), max_num_(max_num) {}

    Rat sample_rat() {
        static const long dens[] = {1, 2, 3, 5, 8};
        std::uniform_int_distribution<long> num(-max_num_, max_num_);
        std::uniform_int_distribution<size_t> den(0, 4);
        Rat r(num(rng_), dens[den(rng_)]);
        r.canonicalize();
        return r;
    }

    QVec sample(size_t dim) {
        QVec v(dim);
        for (auto& x : v) x = sample_rat();
        return v;
    }

    uint64_t raw() { return rng_(); }

  private:
    std::mt19937_64 rng_;
    long max_num_;
};

/// Deterministic stream of random cones covering the degenerate classes:
/// pointed and unpointed H-rep cones, cones with explicit equalities,
/// V-rep cones, subspaces (including {0} and the full space), half-spaces.
class RandomCones {
  public:
    explicit RandomCones(uint64_t seed) : rng_(seed) {}

    Cone next(size_t dim) {
        Space sp(dim);
        switch (counter_++ % 6) {
            case 0:  // generic H-rep
                return Cone::from_inequalities(sp, random_rows(dim, dim + 2));
            case 1:  // fewer inequalities: typically unpointed
                return Cone::from_inequalities(sp, random_rows(dim, dim > 1 ? dim - 1 : 1));
            case 2:  // lower-dimensional: one random equality
                return Cone::from_inequalities(sp, random_rows(dim, dim + 1), random_rows(dim, 1));
            case 3:  // V-rep
                return Cone::from_generators(sp, random_rows(dim, dim + 1));
            case 4: {  // subspace of random dimension (may be {0} or full)
                std::uniform_int_distribution<size_t> d(0, dim);
                return Cone::from_generators(sp, {}, random_rows(dim, d(rng_)));
            }
            default:  // half-space
                return Cone::from_inequalities(sp, random_rows(dim, 1));
        }
    }

    /// A batch covering dims lo..hi uniformly in stream order.
    std::vector<Cone> batch(size_t count, size_t lo_dim, size_t hi_dim) {
        std::vector<Cone> out;
        for (size_t i = 0; i < count; ++i) out.push_back(next(lo_dim + i % (hi_dim - lo_dim + 1)));
        return out;
    }

  private:
    QMat random_rows(size_t dim, size_t count) {
        std::uniform_int_distribution<long> entry(-3, 3);
        QMat rows;
        while (rows.size() < count) {
            QVec v(dim);
            for (auto& x : v) x = Rat(entry(rng_));
            if (!is_zero(v)) rows.push_back(std::move(v));
        }
        return rows;
    }

    std::mt19937_64 rng_;
    size_t counter_ = 0;
};

/// Wall-aware sample set for a cone: random points plus the rint point of
/// every face and of every dual face, and pairwise midpoints with random
/// points. Deterministic given the seed.
std::vector<QVec> identity_sample_points(const Cone& c, size_t random_count, uint64_t seed,
                                         long max_num = 20);

}  // namespace conecalc

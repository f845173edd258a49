#include "doctest.h"

#include <random>

#include "evensets/rational_form.hpp"

using namespace evensets;

namespace {

RatMatrix gram_of(const SurfaceLattice& lat, const std::vector<DivClass>& v) {
    RatMatrix g(v.size(), std::vector<Rat>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) g[i][j] = Rat(lat.pair(v[i], v[j]));
    return g;
}

} // namespace

TEST_CASE("inertia of diagonal matrices") {
    RatMatrix g = {{1, 0, 0}, {0, -1, 0}, {0, 0, 0}};
    Inertia in = symmetric_inertia(g);
    CHECK(in.positive == 1);
    CHECK(in.negative == 1);
    CHECK(in.zero == 1);
}

TEST_CASE("hyperbolic plane has signature (1,1)") {
    RatMatrix g = {{0, 1}, {1, 0}};
    Inertia in = symmetric_inertia(g);
    CHECK(in.positive == 1);
    CHECK(in.negative == 1);
    CHECK(in.zero == 0);
    CHECK(!negative_semidefinite(g));
}

TEST_CASE("chain of (-2)s is negative definite") {
    // tridiagonal: -2 on the diagonal, 1 off it
    std::size_t n = 6;
    RatMatrix g(n, std::vector<Rat>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        g[i][i] = -2;
        if (i + 1 < n) g[i][i + 1] = g[i + 1][i] = 1;
    }
    Inertia in = symmetric_inertia(g);
    CHECK(in.positive == 0);
    CHECK(in.negative == n);
    CHECK(in.zero == 0);
    CHECK(negative_semidefinite(g));
    CHECK(kernel_dimension(g) == 0);
}

TEST_CASE("cycle of (-2)s is negative semidefinite with kernel 1") {
    std::size_t n = 5;
    RatMatrix g(n, std::vector<Rat>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        g[i][i] = -2;
        g[i][(i + 1) % n] += 1;
        g[(i + 1) % n][i] += 1;
    }
    CHECK(negative_semidefinite(g));
    CHECK(kernel_dimension(g) == 1);
}

TEST_CASE("picard lattices have hyperbolic signature (1, rank - 1)") {
    SurfaceLattice p(Ambient::Plane, 4);
    std::vector<DivClass> pb;
    for (std::size_t i = 0; i < p.rank(); ++i) pb.push_back(p.basis(i));
    Inertia ip = symmetric_inertia(gram_of(p, pb));
    CHECK(ip.positive == 1);
    CHECK(ip.negative == 4);
    CHECK(ip.zero == 0);

    SurfaceLattice q(Ambient::Quadric, 3);
    std::vector<DivClass> qb;
    for (std::size_t i = 0; i < q.rank(); ++i) qb.push_back(q.basis(i));
    // L1, L2 span a hyperbolic plane, so the quadric base contributes (1, 1)
    Inertia iq = symmetric_inertia(gram_of(q, qb));
    CHECK(iq.positive == 1);
    CHECK(iq.negative == 4);
    CHECK(iq.zero == 0);
}

TEST_CASE("inertia is a congruence invariant") {
    // G -> P^T G P for random small unimodular P preserves the signature
    std::mt19937_64 rng(0xc049f0e2ULL);
    RatMatrix g = {{-2, 1, 0, 0}, {1, -2, 1, 1}, {0, 1, -2, 0}, {0, 1, 0, 0}};
    Inertia base = symmetric_inertia(g);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> scale(-2, 2);
    for (int t = 0; t < 25; ++t) {
        // one random elementary row+column operation, exact
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Rat s = scale(rng);
        for (std::size_t c = 0; c < g.size(); ++c) g[i][c] += s * g[j][c];
        for (std::size_t r = 0; r < g.size(); ++r) g[r][i] += s * g[r][j];
        Inertia now = symmetric_inertia(g);
        CHECK(now.positive == base.positive);
        CHECK(now.negative == base.negative);
        CHECK(now.zero == base.zero);
    }
}

TEST_CASE("rational entries are handled exactly") {
    RatMatrix g = {{Rat(-1, 4), Rat(1, 2)}, {Rat(1, 2), Rat(-1)}};
    // determinant 1/4 - 1/4 = 0: rank 1, negative
    Inertia in = symmetric_inertia(g);
    CHECK(in.positive == 0);
    CHECK(in.negative == 1);
    CHECK(in.zero == 1);
    CHECK(negative_semidefinite(g));
    CHECK(kernel_dimension(g) == 1);
}

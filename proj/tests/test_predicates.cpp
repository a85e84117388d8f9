#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "stronggeo/predicates.hpp"
#include "stronggeo/rng.hpp"

using namespace stronggeo;

namespace {

Vec unit(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v[i] = 1;
    return v;
}

std::vector<Vec> random_rows(SplitMix64& rng, std::size_t n) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(rng.vec(n, 9, 4));
    return rows;
}

}  // namespace

TEST_CASE("det_sign on canonical cases") {
    std::vector<Vec> id{unit(3, 0), unit(3, 1), unit(3, 2)};
    CHECK(det_sign(id) == Sign::positive);

    std::vector<Vec> swapped{unit(3, 1), unit(3, 0), unit(3, 2)};
    CHECK(det_sign(swapped) == Sign::negative);

    std::vector<Vec> proportional{Vec{1, 2}, Vec{2, 4}};
    CHECK(det_sign(proportional) == Sign::zero);
}

TEST_CASE("det_sign rejects non-square input") {
    std::vector<Vec> rows{Vec{1, 2, 3}, Vec{4, 5, 6}};
    CHECK_THROWS_AS(det_sign(rows), DimensionMismatch);
}

TEST_CASE("det_exact agrees with cofactor-expansion oracle") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng.below(5);
        auto rows = random_rows(rng, n);
        CHECK(det_exact(rows) == oracles::naive_det(rows));
    }
}

TEST_CASE("det_sign is multilinear-consistent under row scaling") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto rows = random_rows(rng, 4);
        Sign base = det_sign(rows);
        auto scaled = rows;
        scaled[2] = Rational(5, 3) * scaled[2];
        CHECK(det_sign(scaled) == base);
        scaled[2] = Rational(-1, 7) * rows[2];
        CHECK(det_sign(scaled) == -base);
    }
}

TEST_CASE("hyperplane_vector canonical cross product") {
    std::vector<Vec> xy{Vec{1, 0, 0}, Vec{0, 1, 0}};
    CHECK(hyperplane_vector(xy) == Vec{0, 0, 1});

    std::vector<Vec> dependent{Vec{1, 0, 0}, Vec{2, 0, 0}};
    CHECK(hyperplane_vector(dependent).is_zero());
}

TEST_CASE("hyperplane_vector orthogonality and orientation") {
    SplitMix64 rng(99);
    int nondegenerate = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Vec> xs;
        for (int i = 0; i < 3; ++i) xs.push_back(rng.vec(4, 9, 4));
        Vec a = hyperplane_vector(xs);
        for (const Vec& x : xs) CHECK(dot(a, x) == 0);
        if (!a.is_zero()) {
            ++nondegenerate;
            auto rows = xs;
            rows.push_back(a);
            CHECK(det_sign(rows) == Sign::positive);
        }
    }
    CHECK(nondegenerate > 30);  // random tuples are almost surely independent
}

TEST_CASE("hyperplane_vector alternates under argument swap") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Vec> xs;
        for (int i = 0; i < 3; ++i) xs.push_back(rng.vec(4, 9, 4));
        Vec a = hyperplane_vector(xs);
        std::swap(xs[0], xs[2]);
        CHECK(hyperplane_vector(xs) == -a);
    }
}

TEST_CASE("oriented projection basis, axis witness") {
    OrientedProjection p(Vec{1, 0, 0});
    CHECK(p.basis().size() == 2);
    std::vector<Vec> frame{Vec{1, 0, 0}, p.basis()[0], p.basis()[1]};
    CHECK(det_sign(frame) == Sign::positive);
    CHECK(p.project(Vec{5, 3, 2}) == Vec{0, 3, 2});
}

TEST_CASE("oriented projection basis, flipped witness forces reorientation") {
    OrientedProjection p(Vec{-1, 0, 0});
    std::vector<Vec> frame{Vec{-1, 0, 0}, p.basis()[0], p.basis()[1]};
    CHECK(det_sign(frame) == Sign::positive);
}

TEST_CASE("oriented projection properties on random witnesses") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t d = 3 + rng.below(2);
        Vec omega = rng.nonzero_vec(d, 9, 4);
        OrientedProjection p(omega);
        CHECK(p.basis().size() == d - 1);
        for (const Vec& b : p.basis()) CHECK(dot(b, omega) == 0);
        std::vector<Vec> frame{omega};
        for (const Vec& b : p.basis()) frame.push_back(b);
        CHECK(det_sign(frame) == Sign::positive);

        Vec x = rng.vec(d, 9, 4);
        Vec px = p.project(x);
        CHECK(dot(px, omega) == 0);
        CHECK(p.project(px) == px);   // idempotent
        CHECK(p.project(omega).is_zero());

        // coords() reproduces the projection in the chosen basis
        Vec c = p.coords(x);
        Vec rebuilt(d);
        for (std::size_t i = 0; i < p.basis().size(); ++i) rebuilt = rebuilt + c[i] * p.basis()[i];
        CHECK(rebuilt == px);
    }
}

TEST_CASE("zero witness is rejected") {
    CHECK_THROWS_AS(OrientedProjection(Vec{0, 0, 0}), ZeroWitness);
}

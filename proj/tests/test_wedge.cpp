#include <catch2/catch_amalgamated.hpp>

#include <array>

#include "oracles.hpp"
#include "stronggeo/rng.hpp"
#include "stronggeo/wedge.hpp"

using namespace stronggeo;

namespace {

PointConfig random_affine(SplitMix64& rng, int n, int d) {
    std::vector<Vec> pts;
    for (int i = 0; i < n; ++i) pts.push_back(rng.vec(static_cast<std::size_t>(d), 40, 8));
    return make_config(ConfigMode::affine, d, std::move(pts));
}

}  // namespace

TEST_CASE("wedge family of the canonical basis in R^3") {
    PointConfig x = make_config(ConfigMode::linear, 3, {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}});
    WedgeFamily fam = wedge_family(x);
    REQUIRE(fam.size() == 3);
    std::array<int, 2> t01{0, 1}, t02{0, 2}, t12{1, 2};
    CHECK(fam.alpha_of(t01) == Vec{0, 0, 1});
    CHECK(fam.alpha_of(t02) == Vec{0, -1, 0});
    CHECK(fam.alpha_of(t12) == Vec{1, 0, 0});
}

TEST_CASE("wedge family keeps degenerate tuples as loops") {
    PointConfig x = make_config(ConfigMode::linear, 3,
                                {Vec{1, 0, 0}, Vec{1, 0, 0}, Vec{0, 1, 0}});
    WedgeFamily fam = wedge_family(x);
    std::array<int, 2> t01{0, 1};
    CHECK(fam.alpha_of(t01).is_zero());
    CHECK(fam.is_loop(0));
    WedgeChirotope w(std::make_shared<WedgeFamily>(fam));
    CHECK(w.lookup({0, 1, 2}) == Sign::zero);
}

TEST_CASE("wedge family self-check on random configurations") {
    SplitMix64 rng(61);
    PointConfig x = random_affine(rng, 6, 2);
    WedgeFamily fam = wedge_family(x);
    const PointConfig& h = fam.config();
    std::vector<int> t = first_combination(2);
    do {
        const Vec& a = fam.alpha_of(t);
        if (a.is_zero()) continue;
        std::vector<Vec> rows;
        for (int i : t) rows.push_back(h.points[static_cast<std::size_t>(i)]);
        for (const Vec& r : rows) CHECK(dot(a, r) == 0);
        rows.push_back(a);
        CHECK(det_sign(rows) == Sign::positive);
    } while (next_combination(t, h.size()));
}

TEST_CASE("half-sphere classification matches determinant signs") {
    SplitMix64 rng(67);
    PointConfig x = random_affine(rng, 6, 2);
    WedgeFamily fam = wedge_family(x);
    const PointConfig& h = fam.config();
    std::vector<int> t = first_combination(2);
    do {
        const Vec& a = fam.alpha_of(t);
        for (int k = 0; k < h.size(); ++k) {
            std::vector<Vec> rows{h.points[static_cast<std::size_t>(t[0])],
                                  h.points[static_cast<std::size_t>(t[1])],
                                  h.points[static_cast<std::size_t>(k)]};
            CHECK(sign_of(dot(a, h.points[static_cast<std::size_t>(k)])) == det_sign(rows));
        }
    } while (next_combination(t, h.size()));
}

TEST_CASE("rank-3 wedge identity, exhaustive over label choices") {
    SplitMix64 rng(71);
    for (int trial = 0; trial < 4; ++trial) {
        PointConfig x = random_affine(rng, 5 + static_cast<int>(rng.below(3)), 2);
        VerifyReport rep = verify_rank3_identity(x);
        INFO((rep.details.empty() ? std::string() : rep.details.front()));
        CHECK(rep.violations == 0);
        CHECK(rep.checks > 0);
    }
}

TEST_CASE("rank-3 identity: collinear triples vanish on both sides") {
    PointConfig x = make_config(ConfigMode::affine, 2,
                                {Vec{0, 0}, Vec{1, 0}, Vec{2, 0}, Vec{0, 1}, Vec{1, 2}});
    VerifyReport rep = verify_rank3_identity(x);
    CHECK(rep.violations == 0);
}

TEST_CASE("planar wedge chirotope: colinear equators give zero") {
    // two pairs spanning the same line through the origin after
    // homogenization produce parallel hyperplane-vectors
    PointConfig x = make_config(ConfigMode::affine, 2,
                                {Vec{1, 1}, Vec{2, 2}, Vec{3, 3}, Vec{0, 1}});
    // pairs (0,1) and (0,2): both planes contain the origin ray through
    // (1,1,1)? No: both contain hat(p0) and hat(p1) resp hat(p2), and p0,
    // p1, p2 are collinear in the plane, so the three homogenized vectors
    // are coplanar and the two alphas are parallel.
    PointConfig h = homogenize(x);
    Vec a01 = cross3(h.points[0], h.points[1]);
    Vec a02 = cross3(h.points[0], h.points[2]);
    CHECK(cross3(a01, a02).is_zero());
    StrongGeometry sg = strong_geometry(x);
    const int n = 4;
    std::array<int, 2> p01{0, 1}, p02{0, 2}, p23{2, 3};
    int e1 = static_cast<int>(rank_of_sorted(p01, n));
    int e2 = static_cast<int>(rank_of_sorted(p02, n));
    int e3 = static_cast<int>(rank_of_sorted(p23, n));
    CHECK(sg.wedge.lookup({e1, e2, e3}) == Sign::zero);
}

TEST_CASE("rank-3 wedge: equal-pair triples square to plus one") {
    SplitMix64 rng(73);
    PointConfig x = random_affine(rng, 5, 2);
    StrongGeometry sg = strong_geometry(x);
    Chirotope chi = linear_chirotope(sg.homogenized);
    // chi_wedge((a,b),(a,c),(b,c)) = chi(a,b,c)^2
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) {
                std::array<int, 2> ab{a, b}, ac{a, c}, bc{b, c};
                int e1 = static_cast<int>(rank_of_sorted(ab, 5));
                int e2 = static_cast<int>(rank_of_sorted(ac, 5));
                int e3 = static_cast<int>(rank_of_sorted(bc, 5));
                Sign lhs = sg.wedge.lookup({e1, e2, e3});
                Sign rhs = chi.lookup({a, b, c}) * chi.lookup({a, b, c});
                CHECK(lhs == rhs);
            }
}

TEST_CASE("eq-3 route: wedge sign via double cross product") {
    SplitMix64 rng(79);
    PointConfig x = random_affine(rng, 6, 2);
    PointConfig h = homogenize(x);
    StrongGeometry sg = strong_geometry(x);
    const int n = x.size();
    for (int trial = 0; trial < 60; ++trial) {
        int xi = static_cast<int>(rng.below(n)), yi = static_cast<int>(rng.below(n));
        int xj = static_cast<int>(rng.below(n)), yj = static_cast<int>(rng.below(n));
        int xk = static_cast<int>(rng.below(n)), yk = static_cast<int>(rng.below(n));
        if (xi == yi || xj == yj || xk == yk) continue;
        Vec ai = cross3(h.points[static_cast<std::size_t>(xi)], h.points[static_cast<std::size_t>(yi)]);
        Vec aj = cross3(h.points[static_cast<std::size_t>(xj)], h.points[static_cast<std::size_t>(yj)]);
        std::vector<Vec> rows{cross3(ai, aj), h.points[static_cast<std::size_t>(xk)],
                              h.points[static_cast<std::size_t>(yk)]};
        Sign via_cross = det_sign(rows);
        Vec ak = cross3(h.points[static_cast<std::size_t>(xk)], h.points[static_cast<std::size_t>(yk)]);
        std::vector<Vec> direct{ai, aj, ak};
        CHECK(det_sign(direct) == via_cross);
    }
}

TEST_CASE("hyperplane-vector composition routes agree") {
    // det(a(X_1),...,a(X_d),a(Y)) = sign<a(a(X_1),...,a(X_d)), a(Y)>
    //                             = det(y_1,...,y_d, a(a(X_1),...,a(X_d)))
    // and putting the composed vector first costs (-1)^d.
    SplitMix64 rng(83);
    for (int d : {2, 3}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<std::vector<Vec>> xs(static_cast<std::size_t>(d));
            for (auto& tup : xs) {
                tup.resize(static_cast<std::size_t>(d));
                for (auto& v : tup) v = rng.vec(static_cast<std::size_t>(d) + 1, 9, 4);
            }
            std::vector<Vec> y(static_cast<std::size_t>(d));
            for (auto& v : y) v = rng.vec(static_cast<std::size_t>(d) + 1, 9, 4);

            std::vector<Vec> alphas;
            for (const auto& tup : xs) alphas.push_back(hyperplane_vector(tup));
            Vec ay = hyperplane_vector(y);
            std::vector<Vec> r1 = alphas;
            r1.push_back(ay);
            Sign route1 = det_sign(r1);

            Vec composed = hyperplane_vector(alphas);
            Sign route2 = sign_of(dot(composed, ay));

            std::vector<Vec> r3 = y;
            r3.push_back(composed);
            Sign route3 = det_sign(r3);

            std::vector<Vec> r3_first{composed};
            for (const Vec& v : y) r3_first.push_back(v);
            Sign route3_first = det_sign(r3_first);

            CHECK(route1 == route2);
            CHECK(route1 == route3);
            Sign expected_first = (d % 2 == 0) ? route1 : -route1;
            CHECK(route3_first == expected_first);
        }
    }
}

TEST_CASE("dimension-reduction identity in d = 3 and 4") {
    VerifyReport r3 = verify_linwit_theorem(3, 300, 42);
    CHECK(r3.violations == 0);
    CHECK(r3.checks == 300);
    VerifyReport r4 = verify_linwit_theorem(4, 150, 43);
    CHECK(r4.violations == 0);
}

TEST_CASE("dimension-reduction identity on dependent y-tuples") {
    // dependent y's force both sides to zero; run a crafted instance
    Vec omega{1, 2, 3};
    std::vector<Vec> x1{Vec{1, 0, 0}};
    std::vector<Vec> x2{Vec{0, 1, 0}};
    std::vector<Vec> ys{Vec{1, 1, 0}, Vec{2, 2, 0}};  // dependent
    std::vector<Vec> lhs_rows;
    {
        std::vector<Vec> a1{omega, x1[0]}, a2{omega, x2[0]};
        lhs_rows.push_back(hyperplane_vector(a1));
        lhs_rows.push_back(hyperplane_vector(a2));
        lhs_rows.push_back(hyperplane_vector(ys));
    }
    CHECK(det_sign(lhs_rows) == Sign::zero);
    std::vector<Vec> wy{omega, ys[0], ys[1]};
    CHECK(det_sign(wy) == Sign::zero);
}

TEST_CASE("witnessed wedge: translation and projection routes coincide") {
    SplitMix64 rng(89);
    for (int trial = 0; trial < 3; ++trial) {
        PointConfig x = random_affine(rng, 6, 3);
        for (int omega : {0, 2}) {
            WitnessedWedge a = witnessed_wedge_chirotope(x, omega);
            WitnessedWedge b = witnessed_wedge_by_projection(x, omega);
            REQUIRE(a.labels == b.labels);
            CHECK(a.chi.raw_signs() == b.chi.raw_signs());
        }
    }
}

TEST_CASE("witnessed wedge extraction from the big wedge chirotope") {
    SplitMix64 rng(97);
    PointConfig x = random_affine(rng, 6, 3);
    StrongGeometry sg = strong_geometry(x);
    WitnessedWedge direct = witnessed_wedge_chirotope(x, 0);
    const int n = x.size();
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    for (int e = 1; e < n; ++e)
                        for (int f = e + 1; f < n; ++f) {
                            auto p1 = std::make_pair(a, b);
                            auto p2 = std::make_pair(c, d);
                            auto p3 = std::make_pair(e, f);
                            if (p1 == p2 || p1 == p3 || p2 == p3) continue;
                            Sign via_wedge = witnessed_wedge_sign_from_wedge(sg, p1, p2, p3);
                            Sign via_translation = direct.lookup_pairs(p1, p2, p3);
                            CHECK(via_wedge == via_translation);
                        }
}

TEST_CASE("witnessed wedge: degenerate projected pairs vanish on both routes") {
    // p1, p2, p3 on a common line through omega: translated pairs have
    // parallel alphas
    PointConfig x = make_config(ConfigMode::affine, 3,
                                {Vec{0, 0, 0}, Vec{1, 1, 1}, Vec{2, 2, 2},
                                 Vec{1, 0, 0}, Vec{0, 1, 0}});
    WitnessedWedge w = witnessed_wedge_chirotope(x, 0);
    CHECK(w.lookup_pairs({1, 2}, {1, 3}, {1, 4}) == Sign::zero);
    StrongGeometry sg = strong_geometry(x);
    CHECK(witnessed_wedge_sign_from_wedge(sg, {1, 2}, {1, 3}, {1, 4}) == Sign::zero);
}

TEST_CASE("rank-4 base recovery from wedge data") {
    PointConfig basis4 = make_config(ConfigMode::linear, 4,
                                     {Vec{1, 0, 0, 0}, Vec{0, 1, 0, 0}, Vec{0, 0, 1, 0},
                                      Vec{0, 0, 0, 1}});
    StrongGeometry sg0 = strong_geometry(basis4);
    Chirotope rec0 = recover_base_from_wedge(sg0);
    CHECK(rec0.lookup({0, 1, 2, 3}) == Sign::positive);
    CHECK(count_recovery_mismatches(sg0) == 0);

    // dependent 4-tuple recovers zero
    PointConfig dep = make_config(ConfigMode::linear, 4,
                                  {Vec{1, 0, 0, 0}, Vec{0, 1, 0, 0}, Vec{1, 1, 0, 0},
                                   Vec{0, 0, 1, 0}, Vec{0, 0, 0, 1}});
    StrongGeometry sgd = strong_geometry(dep);
    Chirotope recd = recover_base_from_wedge(sgd);
    CHECK(recd.lookup({0, 1, 2, 3}) == Sign::zero);
    CHECK(count_recovery_mismatches(sgd) == 0);

    SplitMix64 rng(101);
    for (int trial = 0; trial < 3; ++trial) {
        PointConfig x = random_affine(rng, 6, 3);
        CHECK(count_recovery_mismatches(strong_geometry(x)) == 0);
    }
}

TEST_CASE("parity behavior under negation and scaling") {
    VerifyReport r3 = verify_parity_corollary(3, 5, 7);
    CHECK(r3.violations == 0);
    VerifyReport r4 = verify_parity_corollary(4, 3, 7);
    CHECK(r4.violations == 0);
}

TEST_CASE("strong geometry compares equal to itself and relabelings") {
    SplitMix64 rng(103);
    PointConfig x = random_affine(rng, 5, 2);
    StrongGeometry sa = strong_geometry(x);
    std::vector<int> identity{0, 1, 2, 3, 4};
    CompareVerdict self = compare_strong_geometries(sa, sa, identity);
    CHECK(self.isomorphic);

    // relabel by a permutation
    std::vector<int> pi{2, 0, 4, 1, 3};
    std::vector<Vec> relabeled(5);
    for (int i = 0; i < 5; ++i)
        relabeled[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] =
            x.points[static_cast<std::size_t>(i)];
    StrongGeometry sb = strong_geometry(make_config(ConfigMode::affine, 2, relabeled));
    CompareVerdict mapped = compare_strong_geometries(sa, sb, pi);
    CHECK(mapped.isomorphic);

    // search should find some bijection as well
    CompareVerdict searched = compare_strong_geometries(sa, sb, std::nullopt);
    CHECK(searched.isomorphic);
}

TEST_CASE("one flipped base sign breaks the comparison") {
    SplitMix64 rng(107);
    PointConfig x = random_affine(rng, 5, 2);
    // move one point across a spanned line: reflect point 4 across the
    // line through points 0,1 by exact construction is overkill; instead,
    // find a perturbation that flips at least one sign and keeps n equal
    PointConfig y = x;
    y.points[4] = y.points[4] + Vec{Rational(1000), Rational(0)};
    StrongGeometry sa = strong_geometry(x);
    StrongGeometry sb = strong_geometry(y);
    bool some_flip = false;
    for (std::size_t i = 0; i < sa.base.raw_signs().size(); ++i)
        if (sa.base.raw_signs()[i] != sb.base.raw_signs()[i]) some_flip = true;
    REQUIRE(some_flip);
    std::vector<int> identity{0, 1, 2, 3, 4};
    CompareVerdict v = compare_strong_geometries(sa, sb, identity);
    CHECK_FALSE(v.isomorphic);
    CHECK_FALSE(v.witness.empty());
}

TEST_CASE("linear X and -X: equal wedge, opposite base in R^3") {
    SplitMix64 rng(109);
    std::vector<Vec> pts, neg;
    for (int i = 0; i < 5; ++i) {
        Vec v = rng.vec(3, 9, 4);
        neg.push_back(-v);
        pts.push_back(std::move(v));
    }
    StrongGeometry sx = strong_geometry(make_config(ConfigMode::linear, 3, pts));
    StrongGeometry sn = strong_geometry(make_config(ConfigMode::linear, 3, neg));
    for (std::size_t i = 0; i < sx.base.raw_signs().size(); ++i)
        CHECK(sx.base.raw_signs()[i] == -sn.base.raw_signs()[i]);
    std::vector<int> t = first_combination(3);
    do {
        CHECK(sx.wedge.at_sorted(t) == sn.wedge.at_sorted(t));
    } while (next_combination(t, static_cast<int>(sx.wedge.ground_size())));
}

TEST_CASE("search refuses oversized ground sets") {
    SplitMix64 rng(113);
    PointConfig x = random_affine(rng, 10, 2);
    StrongGeometry sa = strong_geometry(x);
    CHECK_THROWS_AS(compare_strong_geometries(sa, sa, std::nullopt), SearchTooLarge);
}

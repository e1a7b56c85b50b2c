#include "doctest.h"

#include <random>

#include "toricstab/bary.hpp"

using namespace toric;

namespace {

HalfSpace hs(std::initializer_list<long> normal, long offset) {
    HalfSpace h;
    for (long x : normal) h.normal.emplace_back(x);
    h.offset = Rat(offset);
    return h;
}

Polytope unit_square() {
    return vertices_from_halfspaces(
        2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, 0}, -1), hs({0, -1}, -1)});
}

Polytope standard_triangle() {
    return vertices_from_halfspaces(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, -1)});
}

// conv{(0,0),(2,0),(2,1),(1,2),(0,2)}: g = 2 on [0,1], 3 - x on [1,2]
Polytope pentagon() {
    return vertices_from_halfspaces(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, 0}, -2),
                                        hs({0, -1}, -2), hs({-1, -1}, -3)});
}

} // namespace

TEST_CASE("lower bound via s0") {
    SUBCASE("unit square, v = 0: the bound is exact") {
        BaryProfile p = profile_from_polytope(unit_square(), 0, Rat(1, 2), true);
        CHECK(p.v == 0);
        EnvelopeBound r = lower_bound_s0(p);
        REQUIRE(r.threshold.exact());
        CHECK(r.threshold.rat() == 1);
        REQUIRE(r.bound.exact());
        CHECK(r.bound.rat() == Rat(1, 2));
    }
    SUBCASE("triangle, v = -1: the envelope coincides with g") {
        BaryProfile p = profile_from_polytope(standard_triangle(), 0, Rat(1, 2), true);
        CHECK(p.v == -1);
        EnvelopeBound r = lower_bound_s0(p);
        REQUIRE(r.threshold.exact());
        CHECK(r.threshold.rat() == 1);
        REQUIRE(r.bound.exact());
        CHECK(r.bound.rat() == Rat(1, 3));
    }
    SUBCASE("pentagon with the flat left derivative: strict gap") {
        // e = 1, left derivative 0; exact b1 = 19/21, bound = 7/8
        BaryProfile p = profile_from_polytope(pentagon(), 0, Rat(1), false);
        CHECK(p.v == 0);
        EnvelopeBound r = lower_bound_s0(p);
        REQUIRE(r.bound.exact());
        CHECK(r.bound.rat() == Rat(7, 8));
        Rat exact = (*volume_and_barycenter(pentagon()).barycenter)[0];
        CHECK(exact == Rat(19, 21));
        CHECK(r.bound.rat() < exact);
    }
    SUBCASE("degenerate slice is rejected") {
        BaryProfile p = profile_from_polytope(standard_triangle(), 0, Rat(1, 2), true);
        // force a zero slice by moving e to the right endpoint region
        p.e = Rat(9999, 10000);
        p.g.pieces[0] = Poly{{Rat(0)}};
        CHECK_THROWS_WITH_AS(lower_bound_s0(p), doctest::Contains("DegenerateSlice"), Error);
    }
}

TEST_CASE("lower bound via h1") {
    SUBCASE("unit square at the boundary case W = V") {
        BaryProfile p = profile_from_polytope(unit_square(), 0, Rat(1, 2), true);
        EnvelopeBound r = lower_bound_h1(p, Rat(1));
        REQUIRE(r.threshold.exact());
        CHECK(r.threshold.rat() == 1); // s1 = t - n(W-V)/((n-1)g(e)) = 1
        REQUIRE(r.bound.exact());
        CHECK(r.bound.rat() == Rat(1, 2));
    }
    SUBCASE("triangle") {
        BaryProfile p = profile_from_polytope(standard_triangle(), 0, Rat(1, 2), true);
        EnvelopeBound r = lower_bound_h1(p, Rat(1));
        REQUIRE(r.bound.exact());
        CHECK(r.bound.rat() == Rat(1, 3));
    }
    SUBCASE("pentagon: h1 dominates s0 and both stay below the truth") {
        BaryProfile p = profile_from_polytope(pentagon(), 0, Rat(1), false);
        EnvelopeBound s0 = lower_bound_s0(p);
        EnvelopeBound h1 = lower_bound_h1(p, p.t1);
        Rat exact = (*volume_and_barycenter(pentagon()).barycenter)[0];
        REQUIRE(s0.bound.exact());
        REQUIRE(h1.bound.exact());
        CHECK(s0.bound.rat() <= h1.bound.rat());
        CHECK(h1.bound.rat() <= exact);
    }
    SUBCASE("W below V is rejected") {
        // pentagon, e = 1/2 with the flat derivative: a tiny t keeps W < V
        BaryProfile p = profile_from_polytope(pentagon(), 0, Rat(1, 2), true);
        CHECK_THROWS_WITH_AS(lower_bound_h1(p, Rat(3, 4)), doctest::Contains("WBelowV"),
                             Error);
    }
}

TEST_CASE("upper bound via h2") {
    SUBCASE("unit square with w = g(e): h2 is constant") {
        BaryProfile p = profile_from_polytope(unit_square(), 0, Rat(1, 2), true);
        Scalar up = upper_bound_h2(p, Rat(1), Rat(1));
        REQUIRE(up.exact());
        CHECK(up.rat() == Rat(1, 2));
    }
    SUBCASE("triangle with w = 0: h2 recovers the cone") {
        BaryProfile p = profile_from_polytope(standard_triangle(), 0, Rat(1, 2), true);
        Scalar up = upper_bound_h2(p, Rat(1), Rat(0));
        REQUIRE(up.exact());
        CHECK(up.rat() == Rat(1, 3));
    }
    SUBCASE("pentagon: the sandwich closes") {
        BaryProfile p = profile_from_polytope(pentagon(), 0, Rat(1), false);
        Rat w = admissible_h2_weight(p, p.t1);
        Scalar up = upper_bound_h2(p, p.t1, w);
        Rat exact = (*volume_and_barycenter(pentagon()).barycenter)[0];
        EnvelopeBound lo = lower_bound_h1(p, p.t1);
        CHECK(lo.bound.lower() <= exact);
        CHECK(up.upper() >= exact);
    }
    SUBCASE("violated area constraint is rejected") {
        BaryProfile p = profile_from_polytope(unit_square(), 0, Rat(1, 2), true);
        // u so large that int g + (u-e) g(e)/n > V
        CHECK_THROWS_WITH_AS(upper_bound_h2(p, Rat(10), Rat(1)),
                             doctest::Contains("ConstraintViolated"), Error);
    }
    SUBCASE("violated w-constraint is rejected") {
        BaryProfile p = profile_from_polytope(pentagon(), 0, Rat(1), false);
        CHECK_THROWS_WITH_AS(upper_bound_h2(p, Rat(2), Rat(0)),
                             doctest::Contains("ConstraintViolated"), Error);
    }
}

TEST_CASE("s0 is defined by the normalization identity int h0 = V") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> coord(-3, 3);
    int done = 0;
    while (done < 12) {
        int dim = 2 + (int)(rng() % 2);
        std::vector<QVec> pts;
        for (int i = 0; i < dim + 4; ++i) {
            QVec v(dim);
            for (int j = 0; j < dim; ++j) v[j] = make_rat(coord(rng), 1);
            pts.push_back(v);
        }
        if (affine_rank(pts) < dim) continue;
        Polytope poly = vertices_from_halfspaces(dim, hull_halfspaces(dim, pts));
        SliceProfile g = slice_profile(poly, 0);
        Rat e = g.t0 + (g.t1 - g.t0) * Rat(1 + (int)(rng() % 3), 5);
        if (g.eval(e) <= 0) continue;
        BaryProfile prof = profile_from_polytope(poly, 0, e, rng() % 2);
        EnvelopeBound r = lower_bound_s0(prof);
        Poly mass = h0_tail(prof).antiderivative();
        Rat ie = g.integrate(g.t0, e);
        if (r.threshold.exact()) {
            Rat total = ie + mass.eval(r.threshold.rat()) - mass.eval(e);
            CHECK(total == prof.volume);
        } else {
            // the identity holds inside the enclosure
            Rat lo = ie + mass.eval(r.threshold.lower()) - mass.eval(e);
            Rat hi = ie + mass.eval(r.threshold.upper()) - mass.eval(e);
            CHECK(std::min(lo, hi) <= prof.volume);
            CHECK(prof.volume <= std::max(lo, hi));
        }
        ++done;
    }
}

TEST_CASE("h0 dominates genuine slice profiles") {
    std::mt19937 rng(3141);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int dim : {2, 3}) {
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<QVec> pts;
            for (int i = 0; i < dim + 4; ++i) {
                QVec v(dim);
                for (int j = 0; j < dim; ++j) v[j] = make_rat(coord(rng), 1);
                pts.push_back(v);
            }
            if (affine_rank(pts) < dim) continue;
            Polytope poly = vertices_from_halfspaces(dim, hull_halfspaces(dim, pts));
            SliceProfile g = slice_profile(poly, 0);
            if (g.t1 == g.t0) continue;
            Rat e = g.t0 + (g.t1 - g.t0) * Rat(1 + (int)(rng() % 3), 5);
            if (g.eval(e) <= 0) continue;
            for (bool side : {false, true}) {
                BaryProfile prof = profile_from_polytope(poly, 0, e, side);
                Poly tail = h0_tail(prof);
                for (int s = 0; s <= 4; ++s) {
                    Rat x = e + (g.t1 - e) * Rat(s, 4);
                    CHECK(tail.eval(x) >= g.eval(x));
                }
            }
        }
    }
}

TEST_CASE("sandwich property on random bodies") {
    std::mt19937 rng(161803);
    std::uniform_int_distribution<int> coord(-3, 4);
    int done = 0;
    while (done < 20) {
        int dim = 2 + (int)(rng() % 2);
        std::vector<QVec> pts;
        for (int i = 0; i < dim + 4; ++i) {
            QVec v(dim);
            for (int j = 0; j < dim; ++j) v[j] = make_rat(coord(rng), 1 + (int)(rng() % 2));
            pts.push_back(v);
        }
        if (affine_rank(pts) < dim) continue;
        Polytope poly = vertices_from_halfspaces(dim, hull_halfspaces(dim, pts));
        SliceProfile g = slice_profile(poly, 0);
        Rat e = g.t0 + (g.t1 - g.t0) * Rat(1 + (int)(rng() % 4), 6);
        if (g.eval(e) <= 0) continue;
        bool side = rng() % 2;
        BaryProfile prof = profile_from_polytope(poly, 0, e, side);
        Rat exact = (*volume_and_barycenter(poly).barycenter)[0];

        EnvelopeBound s0 = lower_bound_s0(prof);
        EnvelopeBound h1 = lower_bound_h1(prof, prof.t1);
        Rat w = admissible_h2_weight(prof, prof.t1);
        Scalar h2 = upper_bound_h2(prof, prof.t1, w);

        CHECK(s0.bound.lower() <= h1.bound.upper());
        CHECK(s0.bound.lower() <= exact);
        CHECK(h1.bound.lower() <= exact);
        CHECK(h2.upper() >= exact);
        ++done;
    }
}

TEST_CASE("line bound closed forms") {
    SUBCASE("d = n = 2 sample point") {
        Scalar v = line_s_lower_bound(2, 2, Rat(4), Rat(2), Rat(2));
        REQUIRE(v.exact());
        CHECK(v.rat() == 1);
    }
    SUBCASE("branch boundary: t chosen so W = V") {
        // d = n = 3: W >= V iff 2 + 3(t-1) >= V0; V0 = 5, t = 2 is the boundary
        Scalar v = line_s_lower_bound(3, 3, Rat(5), Rat(2), Rat(3));
        REQUIRE(v.exact());
        // ((3/2) 16 + 16 - 2 + 8) / 40; the pipeline assertion inside
        // cross-checks the same value
        CHECK(v.rat() == Rat(23, 20));
    }
    SUBCASE("d < n: the root branch stays consistent with the pipeline") {
        // consistency with lower_bound_h1 is asserted inside
        Scalar v = line_s_lower_bound(3, 2, Rat(6), Rat(2), Rat(5, 2));
        CHECK(v.lower() > 0);
        Scalar w = line_s_lower_bound(4, 1, Rat(7), Rat(3, 2), Rat(2));
        CHECK(w.lower() > 0);
    }
    SUBCASE("precondition violations carry their own names") {
        CHECK_THROWS_WITH_AS(line_s_lower_bound(2, 3, Rat(4), Rat(2), Rat(2)),
                             doctest::Contains("BadParameter"), Error);
        CHECK_THROWS_WITH_AS(line_s_lower_bound(3, 3, Rat(1), Rat(2), Rat(2)),
                             doctest::Contains("VolumeTooSmall"), Error);
        CHECK_THROWS_WITH_AS(line_s_lower_bound(3, 3, Rat(9), Rat(2), Rat(3)),
                             doctest::Contains("WBelowV"), Error);
        CHECK_THROWS_WITH_AS(line_s_lower_bound(3, 3, Rat(5), Rat(1), Rat(3)),
                             doctest::Contains("BadParameter"), Error);
    }
}

TEST_CASE("interval scalars round outward") {
    Scalar root2 = nth_root(Scalar(Rat(2)), 2, 64);
    REQUIRE_FALSE(root2.exact());
    CHECK(root2.lower() < root2.upper());
    CHECK(root2.lower() > Rat(14142, 10001));
    CHECK(root2.upper() < Rat(14143, 10000));
    Scalar four = nth_root(Scalar(Rat(4)), 2, 64);
    REQUIRE(four.exact());
    CHECK(four.rat() == 2);
    Scalar cube = nth_root(Scalar(Rat(27, 8)), 3, 64);
    REQUIRE(cube.exact());
    CHECK(cube.rat() == Rat(3, 2));
    CHECK_THROWS_WITH_AS(nth_root(Scalar(Rat(-1)), 2, 64),
                         doctest::Contains("NegativeRadicand"), Error);
    // interval arithmetic keeps the true value inside
    Scalar expr = (root2 + Scalar(Rat(1))) * (root2 - Scalar(Rat(1)));
    CHECK(expr.lower() <= 1);
    CHECK(expr.upper() >= 1);
}

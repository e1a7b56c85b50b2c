#include "doctest.h"

#include <random>

#include "corpus_helpers.hpp"
#include "toricstab/corpus.hpp"
#include "toricstab/divisor.hpp"

using namespace toric;

TEST_CASE("divisor normalization") {
    auto fan = corpus::p1_times_f1();
    // D = V(v_{1,4}) + 2 V(v_{1,5}) + V(v_{1,6}), zero on the rays of tau_0
    ToricDivisor d = make_divisor(fan, qv({0, 0, 0, 1, 2, 1}));
    SUBCASE("already normalized on tau_0 = [0,1,2]") {
        ToricDivisor nd = normalize_divisor(d, {0, 1, 2});
        CHECK(nd.coeffs == d.coeffs);
    }
    SUBCASE("idempotent") {
        ToricDivisor nd = normalize_divisor(d, {1, 3, 4});
        ToricDivisor nd2 = normalize_divisor(nd, {1, 3, 4});
        CHECK(nd.coeffs == nd2.coeffs);
        for (int r : {1, 3, 4}) CHECK(nd.coeffs[r] == 0);
    }
    SUBCASE("degree-1 divisor on P1 shifts to the other point") {
        auto p1 = corpus::projective_line();
        ToricDivisor e = make_divisor(p1, qv({1, 0}));
        ToricDivisor ne = normalize_divisor(e, {0});
        CHECK(ne.coeffs == qv({0, 1}));
    }
}

TEST_CASE("moment polytopes") {
    SUBCASE("P1 degree 1 gives an interval of length 1") {
        auto p1 = corpus::projective_line();
        ToricDivisor d = make_divisor(p1, qv({0, 1}));
        Polytope p = moment_polytope(d);
        CHECK(volume_and_barycenter(p).volume == 1);
        CHECK(is_big(d));
    }
    SUBCASE("the threefold divisor maps to the listed body under phi") {
        auto fan = corpus::p1_times_f1();
        ToricDivisor d = make_divisor(fan, qv({0, 0, 0, 1, 2, 1}));
        Polytope pd = moment_polytope(d);
        CHECK(pd.full_dim);
        CHECK(volume_and_barycenter(pd).volume == Rat(3, 2));
        // phi rows are v_{1,1}, v_{1,2}, v_{1,3}
        QMat phi = {{Rat(0), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(-1)}};
        Polytope img = affine_image(pd, phi, QVec(3, Rat(0)));
        MassData md = volume_and_barycenter(img);
        CHECK(*md.barycenter == QVec{Rat(7, 9), Rat(1, 2), Rat(4, 9)});
    }
    SUBCASE("the anticanonical class 2E+3F on F_1 has volume 4") {
        auto f1 = corpus::hirzebruch(1);
        // zero on Cone((1,0),(0,1)): coefficients 1 on (-1,1) and 2 on (0,-1)
        ToricDivisor d = make_divisor(f1, qv({0, 0, 1, 2}));
        Polytope pd = moment_polytope(d);
        CHECK(pd.vertices.size() == 4);
        CHECK(volume_and_barycenter(pd).volume == 4); // = (L^2)/2! = 8/2
    }
    SUBCASE("non-big divisor") {
        auto f1 = corpus::hirzebruch(1);
        ToricDivisor d = make_divisor(f1, qv({0, 0, 0, 0}));
        CHECK_FALSE(is_big(d));
    }
}

TEST_CASE("Okounkov bodies") {
    SUBCASE("the threefold example reproduces the listed vertices") {
        auto fan = corpus::p1_times_f1();
        ToricDivisor d = make_divisor(fan, qv({0, 0, 0, 1, 2, 1}));
        FlagChain fl = build_flag_chain(*fan, {iv({1, 3, -1}), iv({1, 0, 0}), iv({0, 0, -1})});
        OkounkovBody body = okounkov_body(d, fl);
        std::vector<QVec> expect = {
            qv({0, 0, 0}), qv({6, 0, 0}), QVec{Rat(4), Rat(0), Rat(1, 3)},
            QVec{Rat(1), Rat(0), Rat(1, 3)}, qv({1, 1, 0}), qv({7, 1, 0}),
            QVec{Rat(5), Rat(1), Rat(1, 3)}, QVec{Rat(2), Rat(1), Rat(1, 3)}};
        std::sort(expect.begin(), expect.end(), [](const QVec& a, const QVec& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
        CHECK(body.body.vertices == expect);
    }
    SUBCASE("O(1) on P2 with the coordinate flag is the standard simplex") {
        auto p2 = corpus::projective_plane();
        ToricDivisor d = make_divisor(p2, qv({0, 0, 1}));
        FlagChain fl = build_flag_chain(*p2, {iv({1, 0}), iv({0, 1})});
        OkounkovBody body = okounkov_body(d, fl);
        CHECK(body.body.vertices == std::vector<QVec>{qv({0, 0}), qv({0, 1}), qv({1, 0})});
    }
    SUBCASE("index-2 admissible flag rescales the body") {
        Fan f;
        f.rank = 2;
        f.rays = {iv({1, 0}), iv({1, 2}), iv({0, 1}), iv({-1, 0}), iv({0, -1})};
        f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
        auto fan = std::make_shared<const Fan>(validate_fan(f));
        ToricDivisor d = make_divisor(fan, qv({0, 0, 1, 2, 2}));
        REQUIRE(is_big(d));
        FlagChain fl = build_flag_chain(*fan, {iv({1, 0}), iv({1, 2})});
        REQUIRE(fl.admissible);
        REQUIRE(fl.l[2] == 2);
        OkounkovBody body = okounkov_body(d, fl);
        // the body is diag(l0/l1, l1/l2) . pairing applied to P_D
        QMat pairing = {{Rat(1), Rat(0)}, {Rat(1), Rat(2)}};
        QMat scale = {{Rat(1), Rat(0)}, {Rat(0), Rat(1, 2)}};
        Polytope direct = affine_image(moment_polytope(normalize_divisor(d, {0, 1})),
                                       qmat_mul(scale, pairing), QVec(2, Rat(0)));
        CHECK(body.body.vertices == direct.vertices);
    }
    SUBCASE("non-big classes are rejected") {
        auto p2 = corpus::projective_plane();
        ToricDivisor d = make_divisor(p2, qv({0, 0, 0}));
        FlagChain fl = build_flag_chain(*p2, {iv({1, 0}), iv({0, 1})});
        CHECK_THROWS_WITH_AS(okounkov_body(d, fl), doctest::Contains("NotBig"), Error);
    }
}

TEST_CASE("S and T invariants") {
    SUBCASE("threefold ray values") {
        auto fan = corpus::p1_times_f1();
        ToricDivisor d = make_divisor(fan, qv({0, 0, 0, 1, 2, 1}));
        CHECK(s_t_invariants(d, iv({0, 1, 0})).s == Rat(7, 9));
        CHECK(s_t_invariants(d, iv({1, 0, 0})).s == Rat(1, 2));
        CHECK(s_t_invariants(d, iv({0, 0, -1})).s == Rat(4, 9));
    }
    SUBCASE("O(1) on P1 at a point") {
        auto p1 = corpus::projective_line();
        ToricDivisor d = make_divisor(p1, qv({0, 1}));
        STPair st = s_t_invariants(d, iv({1}));
        CHECK(st.s == Rat(1, 2));
        CHECK(st.t == 1);
    }
    SUBCASE("2E+3F on F_1 along E") {
        auto f1 = corpus::hirzebruch(1);
        ToricDivisor d = make_divisor(f1, qv({0, 0, 1, 2}));
        STPair st = s_t_invariants(d, iv({0, 1}));
        CHECK(st.s == Rat(7, 6));
        CHECK(st.t == 2);
    }
}

TEST_CASE("flag S-invariants") {
    auto fan = corpus::p1_times_f1();
    ToricDivisor d = make_divisor(fan, qv({0, 0, 0, 1, 2, 1}));
    FlagChain fl = build_flag_chain(*fan, {iv({1, 3, -1}), iv({1, 0, 0}), iv({0, 0, -1})});
    SUBCASE("the three levels") {
        CHECK(flag_s_invariant(d, fl, 1) == Rat(59, 18));
        CHECK(flag_s_invariant(d, fl, 2) == Rat(1, 2));
        CHECK(flag_s_invariant(d, fl, 3) == Rat(4, 27));
    }
    SUBCASE("the weighted-sum identity") {
        CHECK(Rat(3) * Rat(7, 9) + Rat(1, 2) + Rat(4, 9) == Rat(59, 18));
    }
    SUBCASE("admissible level 1 equals the plain S") {
        auto p2 = corpus::projective_plane();
        ToricDivisor o1 = make_divisor(p2, qv({0, 0, 1}));
        FlagChain cf = build_flag_chain(*p2, {iv({1, 0}), iv({0, 1})});
        CHECK(flag_s_invariant(o1, cf, 1) == s_t_invariants(o1, iv({1, 0})).s);
    }
}

TEST_CASE("log discrepancies") {
    auto fan = corpus::p1_times_f1();
    SUBCASE("B = 0 sums the cone coordinates") {
        BoundaryData b0 = make_boundary(fan, QVec(6, Rat(0)));
        CHECK(log_discrepancy(b0, iv({1, 3, -1})) == 5);
        CHECK(log_discrepancy(b0, iv({0, 1, 0})) == 1);
    }
    SUBCASE("a ray evaluates to 1 - b") {
        QVec bc(6, Rat(0));
        bc[0] = Rat(1, 3);
        BoundaryData b = make_boundary(fan, bc);
        CHECK(log_discrepancy(b, iv({0, 1, 0})) == Rat(2, 3));
    }
    SUBCASE("linear extension with B = (1/2) V(v_{1,1})") {
        QVec bc(6, Rat(0));
        bc[0] = Rat(1, 2);
        BoundaryData b = make_boundary(fan, bc);
        // 3 (1 - 1/2) + 1 + 1
        CHECK(log_discrepancy(b, iv({1, 3, -1})) == Rat(7, 2));
    }
    SUBCASE("outside the support of an affine fan") {
        Fan f;
        f.rank = 2;
        f.rays = {iv({1, 0}), iv({0, 1})};
        f.max_cones = {{0, 1}};
        auto fan2 = std::make_shared<const Fan>(validate_fan(f));
        BoundaryData b = make_boundary(fan2, QVec(2, Rat(0)));
        CHECK_THROWS_WITH_AS(log_discrepancy(b, iv({-1, 0})),
                             doctest::Contains("OutsideSupport"), Error);
    }
}

TEST_CASE("flag log discrepancies") {
    SUBCASE("the threefold chain gives 5, 1, 1/3") {
        auto fan = corpus::p1_times_f1();
        BoundaryData b0 = make_boundary(fan, QVec(6, Rat(0)));
        FlagChain fl = build_flag_chain(*fan, {iv({1, 3, -1}), iv({1, 0, 0}), iv({0, 0, -1})});
        CHECK(flag_log_discrepancy(b0, fl, 1) == 5);
        CHECK(flag_log_discrepancy(b0, fl, 2) == 1);
        CHECK(flag_log_discrepancy(b0, fl, 3) == Rat(1, 3));
    }
    SUBCASE("admissible flags on a smooth fan give 1 at every level") {
        auto p2 = corpus::projective_plane();
        BoundaryData b0 = make_boundary(p2, QVec(3, Rat(0)));
        FlagChain fl = build_flag_chain(*p2, {iv({1, 0}), iv({0, 1})});
        CHECK(flag_log_discrepancy(b0, fl, 1) == 1);
        CHECK(flag_log_discrepancy(b0, fl, 2) == 1);
    }
    SUBCASE("index-2 admissible flag halves the level-2 value") {
        Fan f;
        f.rank = 2;
        f.rays = {iv({1, 0}), iv({1, 2}), iv({0, 1}), iv({-1, 0}), iv({0, -1})};
        f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
        auto fan = std::make_shared<const Fan>(validate_fan(f));
        BoundaryData b0 = make_boundary(fan, QVec(5, Rat(0)));
        FlagChain fl = build_flag_chain(*fan, {iv({1, 0}), iv({1, 2})});
        CHECK(flag_log_discrepancy(b0, fl, 2) == Rat(1, 2));
    }
}

TEST_CASE("volume identity and S properties over random data") {
    std::mt19937 rng(424242);
    auto fans = corpus_fans();
    for (const auto& fan : fans) {
        for (int trial = 0; trial < 3; ++trial) {
            ToricDivisor d = random_big_divisor(fan, rng);
            FlagChain fl = random_complete_flag(*fan, rng);
            // vol(Delta) = vol(P_D)
            OkounkovBody body = okounkov_body(d, fl);
            CHECK(volume_and_barycenter(body.body).volume ==
                  volume_and_barycenter(moment_polytope(d)).volume);
            // barycenter coordinates are the flag S-values
            MassData md = volume_and_barycenter(body.body);
            for (int j = 1; j <= fan->rank; ++j)
                CHECK(flag_s_invariant(d, fl, j) == (*md.barycenter)[j - 1]);
        }
    }
}

TEST_CASE("S/T scaling, bounds, linearity and monotonicity") {
    std::mt19937 rng(31337);
    auto fans = corpus_fans();
    for (const auto& fan : fans) {
        for (int trial = 0; trial < 3; ++trial) {
            ToricDivisor d = random_big_divisor(fan, rng);
            const IVec& v = fan->rays[rng() % fan->rays.size()];
            STPair st = s_t_invariants(d, v);
            // T/(1+n) <= S <= T
            CHECK(st.t / Rat(1 + fan->rank) <= st.s);
            CHECK(st.s <= st.t);
            // S(cD) = c S(D), T(cD) = c T(D)
            Rat c = make_rat(1 + (long)(rng() % 5), 1 + (long)(rng() % 3));
            ToricDivisor cd = d;
            for (auto& x : cd.coeffs) x *= c;
            STPair cst = s_t_invariants(cd, v);
            CHECK(cst.s == c * st.s);
            CHECK(cst.t == c * st.t);
            // monotonicity: vol(D) S(D; v) <= vol(D') S(D'; v) for D' - D big
            ToricDivisor extra = random_big_divisor(fan, rng);
            ToricDivisor dp = d;
            for (size_t r = 0; r < dp.coeffs.size(); ++r) dp.coeffs[r] += extra.coeffs[r];
            CHECK(volume_x(d) * s_t_invariants(d, v).s <=
                  volume_x(dp) * s_t_invariants(dp, v).s);
        }
    }
    SUBCASE("linearity on a fixed max cone") {
        auto fan = corpus::p1_times_f1();
        std::mt19937 rng2(8);
        for (int trial = 0; trial < 5; ++trial) {
            ToricDivisor d = random_big_divisor(fan, rng2);
            const auto& cone = fan->max_cones[rng2() % fan->max_cones.size()];
            const IVec& v = fan->rays[cone[0]];
            const IVec& w = fan->rays[cone[1]];
            long a = 1 + (long)(rng2() % 3), b = 1 + (long)(rng2() % 3);
            IVec mix(fan->rank);
            for (int i = 0; i < fan->rank; ++i) mix[i] = a * v[i] + b * w[i];
            Int cont = content(mix);
            Rat s_mix = Rat(cont) * s_t_invariants(d, primitive_part(mix)).s;
            CHECK(s_mix == Rat(a) * s_t_invariants(d, v).s + Rat(b) * s_t_invariants(d, w).s);
        }
    }
}

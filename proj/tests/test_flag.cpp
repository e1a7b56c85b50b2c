#include "doctest.h"

#include <random>

#include "toricstab/corpus.hpp"
#include "toricstab/flag.hpp"

using namespace toric;

namespace {

IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// random complete flag on a fan, retrying past walls; seeds are ambient
FlagChain random_flag(const Fan& fan, std::mt19937& rng) {
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<IVec> seeds;
        for (int k = 0; k < fan.rank; ++k) {
            IVec v(fan.rank);
            bool zero = true;
            for (int j = 0; j < fan.rank; ++j) {
                v[j] = coord(rng);
                if (v[j] != 0) zero = false;
            }
            if (zero) v[0] = 1;
            seeds.push_back(v);
        }
        try {
            return build_flag_chain(fan, seeds);
        } catch (const Error&) {
            continue;
        }
    }
    FAIL("could not sample a flag");
    throw std::logic_error("unreachable");
}

void check_chain_invariants(const FlagChain& ch) {
    int n = ch.ambient_rank;
    REQUIRE(ch.complete);
    // c_{j,j} > 0 and c_{n,n} = 1
    for (int j = 1; j <= n; ++j) CHECK(ch.c[j][j] > 0);
    CHECK(ch.c[n][n] == 1);
    // mult(tau_{j-1}) * prod_{k=j}^n c_{k,k} = prod_{j+1<=i<=k<=n} m_{i,k}
    for (int j = 1; j <= n; ++j) {
        std::vector<IVec> gens;
        for (int r : ch.tau[j - 1]) gens.push_back(ch.level_fans[j - 1].rays[r]);
        Rat lhs = Rat(lattice_index(gens));
        for (int k = j; k <= n; ++k) lhs *= ch.c[k][k];
        Rat rhs(1);
        for (int i = j + 1; i <= n; ++i)
            for (int k = i; k <= n; ++k) rhs *= Rat(ch.m[i][k]);
        CHECK(lhs == rhs);
    }
    // mult(tau_0)^{-1} = prod c'_{i,i}
    Rat prod(1);
    for (int i = 1; i <= n; ++i) prod *= ch.cprime[i][i];
    CHECK(prod * Rat(ch.tau0_multiplicity()) == 1);
    // c' definition and m_{1,k} = 1
    for (int k = 1; k <= n; ++k) CHECK(ch.m[1][k] == 1);
    for (int j = 1; j <= n; ++j)
        for (int k = j; k <= n; ++k) {
            Rat denom(1);
            for (int i = 1; i <= j; ++i) denom *= Rat(ch.m[i][k]);
            CHECK(ch.cprime[j][k] * denom == ch.c[j][k]);
        }
    // pi_j(v_{j,k}) = m_{j+1,k} v_{j+1,k}
    for (int j = 1; j <= n - 1; ++j)
        for (int k = j + 1; k <= n; ++k) {
            IVec img = ch.quotients[j - 1].lattice.project(ch.v[j][k]);
            IVec expect = ch.v[j + 1][k];
            for (auto& x : expect) x *= ch.m[j + 1][k];
            CHECK(img == expect);
        }
    // admissible case: c is the identity and prod_i m_{i,j} = l_j / l_{j-1}
    if (ch.admissible) {
        for (int j = 1; j <= n; ++j)
            for (int k = j; k <= n; ++k)
                CHECK(ch.c[j][k] == (j == k ? Rat(1) : Rat(0)));
        for (int j = 1; j <= n; ++j) {
            Rat prod_m(1);
            for (int i = 1; i <= j; ++i) prod_m *= Rat(ch.m[i][j]);
            CHECK(prod_m == Rat(ch.l[j]) / Rat(ch.l[j - 1]));
        }
    }
}

} // namespace

TEST_CASE("the worked threefold flag chain") {
    auto fan = corpus::p1_times_f1();
    // seeds: v1 ambient, then v_{2,2} and v_{3,3} as projected seeds
    FlagChain ch = build_flag_chain(*fan, {iv({1, 3, -1}), iv({1, 0, 0}), iv({0, 0, -1})});
    REQUIRE(ch.complete);

    CHECK(ch.m[2][2] == 1);
    CHECK(ch.m[2][3] == 1);
    CHECK(ch.m[3][3] == 3);

    CHECK(ch.c[1][1] == 3);
    CHECK(ch.c[1][2] == 1);
    CHECK(ch.c[1][3] == 1);
    CHECK(ch.c[2][2] == 1);
    CHECK(ch.c[2][3] == 0);
    CHECK(ch.c[3][3] == 1);

    CHECK(ch.cprime[1][1] == 3);
    CHECK(ch.cprime[1][2] == 1);
    CHECK(ch.cprime[1][3] == 1);
    CHECK(ch.cprime[2][2] == 1);
    CHECK(ch.cprime[2][3] == 0);
    CHECK(ch.cprime[3][3] == Rat(1, 3));

    // tau_0 is the cone on v_{1,1}, v_{1,2}, v_{1,3}
    CHECK(ch.v[1][1] == iv({0, 1, 0}));
    CHECK(ch.v[1][2] == iv({1, 0, 0}));
    CHECK(ch.v[1][3] == iv({0, 0, -1}));
    CHECK_FALSE(ch.admissible);

    check_chain_invariants(ch);
}

TEST_CASE("admissible flags") {
    SUBCASE("coordinate flag on P2") {
        auto fan = corpus::projective_plane();
        FlagChain ch = build_flag_chain(*fan, {iv({1, 0}), iv({0, 1})});
        REQUIRE(ch.complete);
        CHECK(ch.admissible);
        CHECK(ch.l[0] == 1);
        CHECK(ch.l[1] == 1);
        CHECK(ch.l[2] == 1);
        CHECK(ch.c[1][1] == 1);
        CHECK(ch.c[1][2] == 0);
        check_chain_invariants(ch);
    }
    SUBCASE("index-2 admissible flag has l_2 = 2") {
        // fan with the cone ((1,0),(1,2)) among its max cones
        Fan f;
        f.rank = 2;
        f.rays = {iv({1, 0}), iv({1, 2}), iv({0, 1}), iv({-1, 0}), iv({0, -1})};
        f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
        Fan fan = validate_fan(f);
        FlagChain ch = build_flag_chain(fan, {iv({1, 0}), iv({1, 2})});
        REQUIRE(ch.complete);
        CHECK(ch.admissible);
        CHECK(ch.l[1] == 1);
        CHECK(ch.l[2] == 2);
        CHECK(ch.v[1][2] == iv({1, 2}));
        check_chain_invariants(ch);
    }
}

TEST_CASE("flag chain rejects wall vectors with AmbiguousCone") {
    auto fan = corpus::p1_times_f1();
    // (0,1,1) = v_{1,1} + v_{1,4} lies on the wall between [0,1,3] and [0,3,5]
    CHECK_THROWS_WITH_AS(build_flag_chain(*fan, {iv({0, 1, 1}), iv({1, 0, 0}), iv({0, 1, 0})}),
                         doctest::Contains("AmbiguousCone"), Error);
}

TEST_CASE("flag chain invariants on random flags over the corpus") {
    std::mt19937 rng(123456);
    std::vector<std::shared_ptr<const Fan>> fans = {
        corpus::projective_plane(), corpus::p1xp1(),       corpus::hirzebruch(1),
        corpus::hirzebruch(2),      corpus::weighted_p112(), corpus::p1_times_f1()};
    for (const auto& fan : fans)
        for (int trial = 0; trial < 6; ++trial) {
            FlagChain ch = random_flag(*fan, rng);
            check_chain_invariants(ch);
        }
}

TEST_CASE("chain data is independent of the quotient basis choice") {
    std::mt19937 rng(777);
    std::vector<std::shared_ptr<const Fan>> fans = {corpus::p1_times_f1(),
                                                    corpus::hirzebruch(2)};
    for (const auto& fan : fans)
        for (int trial = 0; trial < 4; ++trial) {
            // sample seeds once, build with three different quotient bases
            std::uniform_int_distribution<int> coord(-3, 3);
            std::vector<IVec> seeds;
            FlagChain base;
            bool ok = false;
            for (int attempt = 0; attempt < 200 && !ok; ++attempt) {
                seeds.clear();
                for (int k = 0; k < fan->rank; ++k) {
                    IVec v(fan->rank);
                    bool zero = true;
                    for (int j = 0; j < fan->rank; ++j) {
                        v[j] = coord(rng);
                        if (v[j] != 0) zero = false;
                    }
                    if (zero) v[0] = 1;
                    seeds.push_back(v);
                }
                try {
                    base = build_flag_chain(*fan, seeds);
                    ok = true;
                } catch (const Error&) {
                }
            }
            REQUIRE(ok);
            for (unsigned seed : {3u, 11u}) {
                FlagOptions opts;
                opts.quotient_basis_seed = seed;
                FlagChain alt = build_flag_chain(*fan, seeds, opts);
                CHECK(alt.m == base.m);
                CHECK(alt.c == base.c);
                CHECK(alt.cprime == base.cprime);
                CHECK(alt.admissible == base.admissible);
                if (base.admissible) CHECK(alt.l == base.l);
            }
        }
}

TEST_CASE("flag input validation") {
    auto fan = corpus::projective_plane();
    CHECK_THROWS_WITH_AS(build_flag_chain(*fan, {}), doctest::Contains("EmptyFlag"), Error);
    CHECK_THROWS_WITH_AS(build_flag_chain(*fan, {iv({1, 0}), iv({0, 1}), iv({1, 1})}),
                         doctest::Contains("FlagTooDeep"), Error);
    CHECK_THROWS_WITH_AS(build_flag_chain(*fan, {iv({1, 0, 0}), iv({0, 1})}),
                         doctest::Contains("RankMismatch"), Error);
    // partial flags carry fans but no cone sequence
    FlagChain partial = build_flag_chain(*fan, {iv({1, 1})});
    CHECK_FALSE(partial.complete);
    CHECK(partial.level_fans.size() == 2);
    CHECK(partial.level_fans[1].rank == 1);
}

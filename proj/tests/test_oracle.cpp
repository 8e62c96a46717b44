#include <doctest.h>

#include <symdet/combinat.hpp>
#include <symdet/errors.hpp>
#include <symdet/krawtchouk.hpp>
#include <symdet/oracle.hpp>
#include <symdet/qnumbers.hpp>

using namespace symdet;

TEST_SUITE("oracle") {

TEST_CASE("census matches the stratum size formulas") {
    for (auto [q, m] : {std::pair<uint64_t, int>{3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        Field f = Field::from_order(q);
        auto c = census(f, m, GuardPolicy{});
        CHECK(c.size() == strata(m).size());
        for (const RankType& rt : strata(m)) CHECK(c.at(rt) == mu_rt(f, m, rt));
    }
}

TEST_CASE("trace distribution against the zero matrix is concentrated") {
    Field f(3, 1);
    SymMatrix z = sym_zero(2);
    TraceDistribution d = trace_distribution(f, 2, {1, 0}, z, GuardPolicy{});
    REQUIRE(d.counts.size() == 3);
    CHECK(d.counts[0] == 8);
    CHECK(d.counts[1] == 0);
    CHECK(d.counts[2] == 0);
    CHECK(d.total() == 8);
    CHECK(d.char_sum() == 8);
}

TEST_CASE("trace distribution of rank-1 against rank-1") {
    Field f(3, 1);
    SymMatrix a = representative(f, 2, 1, 0);  // diag(1, 0)
    TraceDistribution d = trace_distribution(f, 2, {1, 0}, a, GuardPolicy{});
    CHECK(d.counts[0] == 2);
    CHECK(d.counts[1] == 3);
    CHECK(d.counts[2] == 3);
    CHECK(d.char_sum() == -1);
    CHECK(d.char_sum() == q_number(f, 2, {1, 0}, {1, 0}));
}

TEST_CASE("batched scan equals the per-stratum scans") {
    Field f(3, 1);
    SymMatrix a = representative(f, 3, 2, -1);
    auto all = trace_distributions_all(f, 3, a, GuardPolicy{});
    auto st = strata(3);
    REQUIRE(all.size() == st.size());
    for (size_t i = 0; i < st.size(); ++i) {
        TraceDistribution single =
            trace_distribution(f, 3, st[i], a, GuardPolicy{});
        CHECK(all[i].counts == single.counts);
        CHECK(all[i].total() == mu_rt(f, 3, st[i]));
    }
}

TEST_CASE("char sums reproduce the Q-numbers exhaustively at (3,2)") {
    Field f(3, 1);
    auto st = strata(2);
    for_each_sym(f, 2, GuardPolicy{}, [&](const SymMatrix& a) {
        RankType col = rank_type(f, a);
        auto dists = trace_distributions_all(f, 2, a, GuardPolicy{});
        for (size_t i = 0; i < st.size(); ++i)
            CHECK(dists[i].char_sum() == q_number(f, 2, st[i], col));
    });
}

TEST_CASE("brute weight table in full mode at (3,2,1)") {
    Field f(3, 1);
    WeightTable bt = brute_weight_table(f, 2, 1, BruteMode::full, GuardPolicy{});
    WeightTable ft = weight_distribution(f, 2, 1);
    CHECK(bt.length == 9);
    CHECK(bt.min_distance == 4);
    REQUIRE(bt.rows.size() == ft.rows.size());
    for (size_t i = 0; i < bt.rows.size(); ++i) {
        CHECK(bt.rows[i].k == ft.rows[i].k);
        CHECK(bt.rows[i].tau == ft.rows[i].tau);
        CHECK(bt.rows[i].weight == ft.rows[i].weight);
        CHECK(bt.rows[i].multiplicity == ft.rows[i].multiplicity);
    }
    CHECK(bt.aggregated == ft.aggregated);
    CHECK(bt.projective_length == ft.projective_length);
    CHECK(bt.projective_min_distance == ft.projective_min_distance);
}

TEST_CASE("representative mode agrees with full mode") {
    Field f(3, 1);
    for (auto [m, t] : {std::pair<int, int>{2, 1}, {2, 2}, {3, 2}}) {
        WeightTable full =
            brute_weight_table(f, m, t, BruteMode::full, GuardPolicy{});
        WeightTable rep =
            brute_weight_table(f, m, t, BruteMode::representative, GuardPolicy{});
        REQUIRE(full.rows.size() == rep.rows.size());
        for (size_t i = 0; i < full.rows.size(); ++i) {
            CHECK(full.rows[i].weight == rep.rows[i].weight);
            CHECK(full.rows[i].multiplicity == rep.rows[i].multiplicity);
        }
        CHECK(full.aggregated == rep.aggregated);
        CHECK(full.min_distance == rep.min_distance);
    }
}

TEST_CASE("skew pairing distributions reproduce kraw_F") {
    Field f(3, 1);
    SkewMatrix z = skew_zero(4);
    auto dz = skew_pair_distribution(f, 4, 1, z, GuardPolicy{});
    CHECK(dz.char_sum() == 260);

    SkewMatrix a = skew_representative(f, 4, 1);  // rank 2
    auto all = skew_pair_distributions_all(f, 4, a, GuardPolicy{});
    REQUIRE(all.size() == 3);
    CHECK(all[0].char_sum() == 1);
    CHECK(all[1].char_sum() == 17);   // F_1(1)
    CHECK(all[2].char_sum() == -18);  // F_2(1)

    SkewMatrix b = skew_representative(f, 4, 2);  // rank 4
    CHECK(skew_pair_distribution(f, 4, 1, b, GuardPolicy{}).char_sum() == -10);
    CHECK(skew_pair_distribution(f, 4, 2, b, GuardPolicy{}).char_sum() == 9);
}

TEST_CASE("guards trip on oversized scans") {
    Field f(3, 1);
    GuardPolicy tight;
    tight.enum_limit = 10;
    try {
        census(f, 3, tight);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::guard_exceeded);
    }
    CHECK_THROWS_AS(
        brute_weight_table(f, 3, 1, BruteMode::full, tight), Error);
    tight.force = true;
    CHECK(census(f, 3, tight).at(RankType{3, 0}) == 468);
}

}  // TEST_SUITE

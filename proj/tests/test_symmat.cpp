#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include <symdet/combinat.hpp>
#include <symdet/errors.hpp>
#include <symdet/guard.hpp>
#include <symdet/linalg.hpp>
#include <symdet/symmat.hpp>

using namespace symdet;

namespace {

// trace of the dense product A*B, computed without the closed form
Felem naive_trace_product(const Field& f, const SymMatrix& A, const SymMatrix& B) {
    int m = A.m;
    Felem acc = f.zero();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            acc = f.add(acc, f.mul(A.get(i, j), B.get(j, i)));
    return acc;
}

SymMatrix congruent(const Field& f, const SymMatrix& A, const std::vector<Felem>& P) {
    int m = A.m;
    SymMatrix R = sym_zero(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            Felem acc = f.zero();
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    acc = f.add(acc, f.mul(P[a * m + i], f.mul(A.get(a, b), P[b * m + j])));
            R.set(i, j, acc);
        }
    return R;
}

}  // namespace

TEST_SUITE("symmat") {

TEST_CASE("strata enumeration") {
    auto s2 = strata(2);
    REQUIRE(s2.size() == 4);
    CHECK(s2[0] == RankType{0, 1});
    CHECK(s2[1] == RankType{1, 0});
    CHECK(s2[2] == RankType{2, 1});
    CHECK(s2[3] == RankType{2, -1});
    CHECK(strata(3).size() == 5);
    CHECK(strata(4).size() == 7);
    CHECK(strata(3)[4] == RankType{3, 0});
    CHECK(stratum_name({2, -1}) == "2:-1");
    CHECK(stratum_name({1, 0}) == "1:0");
    CHECK(valid_stratum(3, {2, 1}));
    CHECK(!valid_stratum(3, {2, 0}));
    CHECK(!valid_stratum(3, {1, 1}));
    CHECK(!valid_stratum(3, {4, 1}));
    CHECK(!valid_stratum(3, {0, -1}));
}

TEST_CASE("upper triangle indexing") {
    Field f(3, 1);
    SymMatrix A = sym_zero(3);
    REQUIRE(A.upper.size() == 6);
    A.set(0, 1, f.element(2));
    CHECK(A.get(0, 1) == f.element(2));
    CHECK(A.get(1, 0) == f.element(2));
    A.set(2, 2, f.one());
    CHECK(A.upper[5] == f.one());
    CHECK(SymMatrix::upper_index(3, 0, 0) == 0);
    CHECK(SymMatrix::upper_index(3, 0, 2) == 2);
    CHECK(SymMatrix::upper_index(3, 1, 1) == 3);
    CHECK(SymMatrix::upper_index(3, 2, 2) == 5);
    CHECK_THROWS_AS(sym_from_upper(2, {f.zero()}), Error);
}

TEST_CASE("serialization") {
    Field f(3, 1);
    SymMatrix A = sym_from_upper(2, {f.element(2), f.element(1), f.element(0)});
    CHECK(serialize(A) == "2 2 1 0");
    CHECK(serialize(sym_zero(1)) == "1 0");
}

TEST_CASE("trace pairing matches the dense product") {
    Field f(5, 1);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<uint64_t> pick(0, f.q() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        SymMatrix A = sym_zero(4), B = sym_zero(4);
        for (auto& v : A.upper) v = f.element(pick(rng));
        for (auto& v : B.upper) v = f.element(pick(rng));
        CHECK(trace_pair(f, A, B) == naive_trace_product(f, A, B));
    }
    SymMatrix Z = sym_zero(4), A = sym_zero(4);
    A.set(0, 1, f.one());
    CHECK(trace_pair(f, A, Z) == f.zero());
    CHECK(trace_pair(f, A, A) == f.element(2));
    CHECK_THROWS_AS(trace_pair(f, A, sym_zero(3)), Error);
}

TEST_CASE("rank and type of small diagonal matrices") {
    Field f(3, 1);
    CHECK(rank_type(f, sym_zero(2)) == RankType{0, 1});

    SymMatrix d11 = sym_from_upper(2, {f.one(), f.zero(), f.one()});
    CHECK(rank_type(f, d11) == RankType{2, -1});  // disc 1, (-1)^1 non-square

    SymMatrix d12 = sym_from_upper(2, {f.one(), f.zero(), f.element(2)});
    CHECK(rank_type(f, d12) == RankType{2, 1});  // disc 2, -2 = 1 square

    SymMatrix e11 = sym_from_upper(2, {f.one(), f.zero(), f.zero()});
    CHECK(rank_type(f, e11) == RankType{1, 0});

    // hollow matrix: zero diagonal, off-diagonal 1
    SymMatrix h = sym_from_upper(2, {f.zero(), f.one(), f.zero()});
    CHECK(rank_type(f, h).rank == 2);
}

TEST_CASE("rank type census matches the orbit counts") {
    for (auto [q, m] : {std::pair<uint64_t, int>{3, 2}, {3, 3}, {5, 2}}) {
        Field f = Field::from_order(q);
        std::map<RankType, Count> seen;
        for_each_sym(f, m, GuardPolicy{},
                     [&](const SymMatrix& A) { seen[rank_type(f, A)] += 1; });
        for (const RankType& rt : strata(m)) {
            CHECK(seen[rt] == mu_rt(f, m, rt));
        }
        Count total = 0;
        for (auto& [rt, c] : seen) total += c;
        CHECK(total == pow_u(q, (uint64_t)m * (m + 1) / 2));
    }
}

TEST_CASE("rank type is a congruence invariant") {
    Field f(3, 1);
    int m = 3;
    std::mt19937 rng(777);
    std::uniform_int_distribution<uint64_t> pick(0, f.q() - 1);
    int done = 0;
    while (done < 50) {
        std::vector<Felem> P(m * m);
        for (auto& v : P) v = f.element(pick(rng));
        std::vector<Felem> scratch = P;
        if (matrix_rank(f, scratch, m, m) != m) continue;
        SymMatrix A = sym_zero(m);
        for (auto& v : A.upper) v = f.element(pick(rng));
        CHECK(rank_type(f, congruent(f, A, P)) == rank_type(f, A));
        ++done;
    }
}

TEST_CASE("representatives land in their stratum") {
    for (auto [q, m] : {std::pair<uint64_t, int>{3, 2}, {3, 4}, {5, 3}, {9, 2}}) {
        Field f = Field::from_order(q);
        for (const RankType& rt : strata(m)) {
            SymMatrix R = representative(f, m, rt.rank, rt.type);
            CHECK(rank_type(f, R) == rt);
        }
    }
    Field f(3, 1);
    CHECK(representative(f, 2, 0, 1).upper == sym_zero(2).upper);
    SymMatrix r1 = representative(f, 3, 1, 0);
    CHECK(serialize(r1) == "3 1 0 0 0 0 0");
    CHECK_THROWS_AS(representative(f, 2, 1, 1), Error);
    CHECK_THROWS_AS(representative(f, 2, 2, 0), Error);
    CHECK_THROWS_AS(representative(f, 2, 3, 0), Error);
}

TEST_CASE("enumeration is lexicographic and complete") {
    Field f(3, 1);
    auto all = enumerate_sym(f, 2, GuardPolicy{});
    REQUIRE(all.size() == 27);
    CHECK(all.front().upper == sym_zero(2).upper);
    CHECK(serialize(all[1]) == "2 0 0 1");
    CHECK(serialize(all[3]) == "2 0 1 0");
    CHECK(serialize(all[26]) == "2 2 2 2");
    for (size_t i = 0; i + 1 < all.size(); ++i) {
        auto enc = [](const SymMatrix& A) {
            uint64_t v = 0;
            for (Felem x : A.upper) v = v * 3 + x.v;
            return v;
        };
        CHECK(enc(all[i]) < enc(all[i + 1]));
    }
}

TEST_CASE("bounded rank enumeration filters the full list") {
    Field f(3, 1);
    auto all = enumerate_sym(f, 2, GuardPolicy{});
    auto lo = enumerate_rank_at_most(f, 2, 1, GuardPolicy{});
    CHECK(lo.size() == 9);  // nu_2(1) over GF(3)
    std::vector<SymMatrix> expect;
    for (const auto& A : all)
        if (rank_type(f, A).rank <= 1) expect.push_back(A);
    REQUIRE(lo.size() == expect.size());
    for (size_t i = 0; i < lo.size(); ++i) CHECK(lo[i].upper == expect[i].upper);

    CHECK(enumerate_rank_at_most(f, 2, 0, GuardPolicy{}).size() == 1);
    CHECK(enumerate_rank_at_most(f, 2, 2, GuardPolicy{}).size() == 27);
    CHECK_THROWS_AS(enumerate_rank_at_most(f, 2, 3, GuardPolicy{}), Error);
    CHECK_THROWS_AS(enumerate_rank_at_most(f, 2, -1, GuardPolicy{}), Error);
}

TEST_CASE("enumeration guard trips") {
    Field f(3, 1);
    GuardPolicy tight;
    tight.enum_limit = 10;
    try {
        enumerate_sym(f, 3, tight);  // 729 > 10
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::guard_exceeded);
    }
    tight.force = true;
    CHECK(enumerate_sym(f, 3, tight).size() == 729);
}

}  // TEST_SUITE

#include <doctest.h>

#include <set>

#include "symdisc/errors.hpp"
#include "symdisc/simplex.hpp"

using namespace symdisc;

namespace {

SimplexId make_id(int d, std::vector<std::vector<int>> blocks, std::vector<int> sigma) {
    return SimplexId{OrderedPartition{d, std::move(blocks)}, std::move(sigma)};
}

} // namespace

TEST_CASE("stirling numbers, both routes") {
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(5, 3) == BigInt(enumerate_partitions(5, 3).size()));
    for (int d = 1; d <= 10; ++d) CHECK(stirling2(d, d) == 1);
    for (int d = 1; d <= 12; ++d)
        for (int l = 0; l <= d; ++l) CHECK(stirling2(d, l) == stirling2_formula(d, l));
    for (int d = 1; d <= 12; ++d) CHECK(stirling2(d, 2) == int_pow(BigInt(2), d - 1) - 1);
    CHECK(stirling2(3, 7) == 0);
    CHECK(stirling2(4, 0) == 0);
    CHECK_THROWS_AS(stirling2(0, 1), argument_error);
    CHECK_THROWS_AS(stirling2(3, -1), argument_error);
}

TEST_CASE("partition enumeration order and contents") {
    const auto p22 = enumerate_partitions(2, 2);
    REQUIRE(p22.size() == 1);
    CHECK(p22[0].blocks == std::vector<std::vector<int>>{{1}, {2}});

    // restricted-growth order: 001, 010, 011
    const auto p32 = enumerate_partitions(3, 2);
    REQUIRE(p32.size() == 3);
    CHECK(p32[0].blocks == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(p32[1].blocks == std::vector<std::vector<int>>{{1, 3}, {2}});
    CHECK(p32[2].blocks == std::vector<std::vector<int>>{{1}, {2, 3}});

    CHECK(BigInt(enumerate_partitions(6, 3).size()) == stirling2(6, 3));
    CHECK_THROWS_AS(enumerate_partitions(3, 0), argument_error);
    CHECK_THROWS_AS(enumerate_partitions(3, 4), argument_error);
}

TEST_CASE("simplex enumeration counts per dimension") {
    CHECK(enumerate_simplices(3, {3}).size() == 6);
    CHECK(enumerate_simplices(3, {2}).size() == 6);
    CHECK(enumerate_simplices(3, {1}).size() == 1);
    CHECK(enumerate_simplices(3, {1, 2, 3}).size() == 13);

    // first dimension-2 simplex: partition {1,2}|{3} with identity sigma
    const auto ids = enumerate_simplices(3, {2});
    CHECK(ids[0] == make_id(3, {{1, 2}, {3}}, {1, 2}));
    CHECK(ids[1] == make_id(3, {{1, 2}, {3}}, {2, 1}));

    CHECK_THROWS_AS(enumerate_simplices(3, {4}), argument_error);
}

TEST_CASE("simplex_points on the defining examples") {
    CHECK(simplex_points(make_id(2, {{1}, {2}}, {1, 2}), {1, 2}) ==
          std::vector<std::vector<int>>{{1, 2}});
    CHECK(simplex_points(make_id(2, {{1}, {2}}, {2, 1}), {1, 2}) ==
          std::vector<std::vector<int>>{{2, 1}});
    CHECK(simplex_points(make_id(3, {{1, 2}, {3}}, {1, 2}), {1, 2, 3}) ==
          std::vector<std::vector<int>>{{1, 1, 2}, {1, 1, 3}, {2, 2, 3}});

    // |T| below the dimension: empty simplex
    CHECK(simplex_points(make_id(3, {{1, 2}, {3}}, {1, 2}), {5}).empty());

    CHECK_THROWS_AS(simplex_points(make_id(2, {{1}, {2}}, {1, 2}), {2, 1}), argument_error);
    CHECK_THROWS_AS(simplex_points(make_id(2, {{1}, {2}}, {1, 2}), {0, 1}), argument_error);
}

TEST_CASE("classify_point on the defining examples") {
    const auto diag = classify_point({5, 5, 5});
    CHECK(diag.id == make_id(3, {{1, 2, 3}}, {1}));
    CHECK(diag.alpha == std::vector<int>{5});

    const auto ascending = classify_point({2, 2, 5});
    CHECK(ascending.id == make_id(3, {{1, 2}, {3}}, {1, 2}));
    CHECK(ascending.alpha == std::vector<int>{2, 5});

    const auto descending = classify_point({5, 2, 2});
    CHECK(descending.id == make_id(3, {{1}, {2, 3}}, {2, 1}));
    CHECK(descending.alpha == std::vector<int>{2, 5});

    CHECK_THROWS_AS(classify_point({}), argument_error);
    CHECK_THROWS_AS(classify_point({0, 1}), argument_error);
}

TEST_CASE("simplices partition T^d") {
    for (int d = 1; d <= 5; ++d)
        for (int t = 1; t <= 5; ++t) {
            std::vector<int> T, dims;
            for (int i = 1; i <= t; ++i) T.push_back(i + 2); // offset values
            for (int l = 1; l <= d; ++l) dims.push_back(l);
            std::set<std::vector<int>> seen;
            for (const auto& id : enumerate_simplices(d, dims))
                for (const auto& p : simplex_points(id, T)) CHECK(seen.insert(p).second);
            BigInt expected = int_pow(BigInt(t), d);
            CHECK(BigInt(seen.size()) == expected);
        }
}

TEST_CASE("classify_point inverts simplex_points") {
    for (int d = 1; d <= 4; ++d) {
        std::vector<int> T, dims;
        for (int i = 1; i <= 4; ++i) T.push_back(2 * i);
        for (int l = 1; l <= d; ++l) dims.push_back(l);
        for (const auto& id : enumerate_simplices(d, dims))
            for (const auto& p : simplex_points(id, T)) {
                const auto pc = classify_point(p);
                CHECK(pc.id == id);
                CHECK(static_cast<int>(pc.alpha.size()) == id.dimension());
            }
    }
}

TEST_CASE("counting identity over the simplex decomposition") {
    for (int d = 1; d <= 6; ++d)
        for (int t = 1; t <= 6; ++t) {
            BigInt sum = 0;
            for (int l = 1; l <= d; ++l) sum += factorial(l) * stirling2(d, l) * binomial(t, l);
            CHECK(sum == int_pow(BigInt(t), d));
        }
}

TEST_CASE("distinct ids give distinct simplices once T is large enough") {
    const std::vector<int> T = {1, 2, 3, 4};
    for (int l = 1; l <= 3; ++l) {
        const auto ids = enumerate_simplices(3, {l});
        std::set<std::vector<std::vector<int>>> point_sets;
        for (const auto& id : ids) point_sets.insert(simplex_points(id, T));
        CHECK(point_sets.size() == ids.size());
    }
}

TEST_CASE("canonical simplex-id strings") {
    const auto id = make_id(3, {{1, 2}, {3}}, {2, 1});
    CHECK(to_string(id) == "k=2;J=1,2|3;sigma=2,1");
    CHECK(parse_simplex_id("k=2;J=1,2|3;sigma=2,1") == id);
    CHECK(parse_simplex_id(to_string(make_id(1, {{1}}, {1}))) == make_id(1, {{1}}, {1}));

    CHECK_THROWS_AS(parse_simplex_id("J=1|2;sigma=1,2"), parse_error);
    CHECK_THROWS_AS(parse_simplex_id("k=1;J=1|2;sigma=1,2"), parse_error); // tag mismatch
    CHECK_THROWS_AS(parse_simplex_id("k=2;J=2|1;sigma=1,2"), parse_error); // bad block order
    CHECK_THROWS_AS(parse_simplex_id("k=2;J=1|2;sigma=1,1"), parse_error); // not a bijection
    CHECK_THROWS_AS(parse_simplex_id("k=2;J=1|3;sigma=1,2"), parse_error); // gap in [d]
}

TEST_CASE("ranks agree with the enumeration order") {
    for (int d = 1; d <= 5; ++d)
        for (int l = 1; l <= d; ++l) {
            const auto ids = enumerate_simplices(d, {l});
            CHECK(static_cast<long long>(ids.size()) == simplex_count(d, l));
            for (long long r = 0; r < static_cast<long long>(ids.size()); ++r) {
                CHECK(simplex_rank(ids[static_cast<std::size_t>(r)]) == r);
                CHECK(simplex_unrank(d, l, r) == ids[static_cast<std::size_t>(r)]);
            }
        }
    CHECK_THROWS_AS(simplex_unrank(3, 2, 6), argument_error);
    CHECK_THROWS_AS(simplex_unrank(3, 2, -1), argument_error);
}

TEST_CASE("rank arithmetic overflow is reported, not wrapped") {
    CHECK_THROWS_AS(simplex_count(40, 20), size_cap_error);
    // S(12,6) = 6 S(11,6) + S(11,5) = 6*179487 + 246730
    CHECK(partition_count(12, 6) == 1323652);
}

TEST_CASE("rank round trips near the 64-bit dimension limit") {
    for (const long long rank : {0LL, 1LL, 123456789LL, simplex_count(17, 17) - 1}) {
        const auto id = simplex_unrank(17, 17, rank);
        CHECK(simplex_rank(id) == rank);
    }
    for (const long long rank : {0LL, partition_count(17, 8) / 2, partition_count(17, 8) - 1}) {
        const auto p = partition_unrank(17, 8, rank);
        CHECK(partition_rank(p) == rank);
    }
}

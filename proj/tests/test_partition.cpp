#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "stammerlab/partition.hpp"
#include "stammerlab/tableau.hpp"

using namespace stammerlab;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

IncompleteStandardTableau T(std::vector<std::vector<int>> rows = {}) {
    return IncompleteStandardTableau(std::move(rows));
}

// Independent oracle: materialize every corner-removal sequence down to the
// empty partition and count the leaves.
long removal_sequences(const Partition& p) {
    if (p.empty()) return 1;
    long total = 0;
    for (const Partition& q : covers_below(p)) total += removal_sequences(q);
    return total;
}

}  // namespace

TEST_CASE("partition construction rejects bad part lists") {
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(P({-1}), std::invalid_argument);
    CHECK(P({}).empty());
}

TEST_CASE("covers above") {
    CHECK(covers_above(P({})) == std::vector<Partition>{P({1})});
    CHECK(covers_above(P({2, 1})) == std::vector<Partition>{P({3, 1}), P({2, 2}), P({2, 1, 1})});
    CHECK(covers_above(P({1})) == std::vector<Partition>{P({2}), P({1, 1})});
}

TEST_CASE("covers below") {
    CHECK(covers_below(P({})).empty());
    CHECK(covers_below(P({2, 1})) == std::vector<Partition>{P({1, 1}), P({2})});
    CHECK(covers_below(P({2, 2})) == std::vector<Partition>{P({2, 1})});
}

TEST_CASE("differential poset identity on cover counts") {
    for (const Partition& p : partitions_up_to(8))
        CHECK(covers_above(p).size() == covers_below(p).size() + 1);
}

TEST_CASE("standard tableau counts") {
    CHECK(count_standard_tableaux(P({})) == 1);
    CHECK(count_standard_tableaux(P({2, 1})) == 2);
    CHECK(count_standard_tableaux(P({3, 2})) == 5);
    for (const Partition& p : partitions_up_to(8))
        CHECK(count_standard_tableaux(p) == removal_sequences(p));
}

TEST_CASE("union and intersection") {
    CHECK(union_max(P({2}), P({1, 1})) == P({2, 1}));
    CHECK(intersect_min(P({2}), P({1, 1})) == P({1}));
    CHECK(union_max(P({}), P({3})) == P({3}));
    CHECK(intersect_min(P({}), P({3})) == P({}));
}

TEST_CASE("row insertion follows Schensted bumping") {
    IncompleteStandardTableau t = T({{2, 4}});
    CHECK(row_insert(t, 3) == T({{2, 3}, {4}}));
    CHECK(row_insert(T(), 5) == T({{5}}));
    CHECK(row_insert(T({{2, 5}}), 4) ==
          T({{2, 4}, {5}}));
    CHECK_THROWS_AS(row_insert(t, 2), std::invalid_argument);
}

TEST_CASE("corner removal deletes without bumping") {
    CHECK(corner_remove(T({{2, 3}, {4}}), 4) ==
          T({{2, 3}}));
    CHECK(corner_remove(T({{1}}), 1) == T());
    CHECK(corner_remove(T({{1, 3}, {2}}), 3) ==
          T({{1}, {2}}));
    CHECK_THROWS_AS(corner_remove(T({{1, 3}, {2}}), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(corner_remove(T({{1}}), 7), std::invalid_argument);
}

TEST_CASE("insert then remove restores the tableau when the entry lands at a corner") {
    std::mt19937 rng(20240517u);
    for (int trial = 0; trial < 300; ++trial) {
        // random incomplete standard tableau over a subset of 1..12
        std::vector<int> pool(12);
        for (int i = 0; i < 12; ++i) pool[i] = i + 1;
        std::shuffle(pool.begin(), pool.end(), rng);
        int used = std::uniform_int_distribution<int>(0, 11)(rng);
        IncompleteStandardTableau t;
        for (int i = 0; i < used; ++i) t = row_insert(t, pool[i]);
        int k = pool[used];
        IncompleteStandardTableau grown = row_insert(t, k);
        CHECK(grown.cell_count() == t.cell_count() + 1);
        // when k lands at the new corner of the bottom row (no bumping),
        // removing it undoes the insertion
        std::size_t old_len = t.rows().empty() ? 0 : t.rows()[0].size();
        bool appended = grown.rows()[0].size() == old_len + 1 && grown.rows()[0].back() == k;
        if (appended) CHECK(corner_remove(grown, k) == t);
    }
}

TEST_CASE("tableau validation") {
    CHECK_FALSE(IncompleteStandardTableau::check({{1, 1}}));
    CHECK_FALSE(IncompleteStandardTableau::check({{3, 4}, {2}}));   // column must increase upward
    CHECK_FALSE(IncompleteStandardTableau::check({{1}, {2, 3}}));   // row lengths must decrease
    CHECK(IncompleteStandardTableau::check({{1, 3}, {2}}));
    CHECK(T({{1, 2}, {3}}).is_standard());
    CHECK_FALSE(T({{1, 2}, {4}}).is_standard());
}

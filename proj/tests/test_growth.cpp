#include <doctest.h>

#include <stdexcept>

#include <map>
#include <random>
#include <set>

#include "stammerlab/counting.hpp"
#include "stammerlab/growth.hpp"

using namespace stammerlab;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

StammeringTableau walk(std::vector<std::vector<int>> parts) {
    std::vector<Partition> out;
    for (auto& p : parts) out.push_back(P(std::move(p)));
    return make_stammering(std::move(out));
}

const RookPlacement kRook1{5, {6, 1, 4, 3, 2}};
const RookPlacement kRook2{6, {6, 10, 7, 1, 3, 2}};

StammeringTableau lambda1() {
    return walk({{},
                 {1}, {2}, {1},
                 {2}, {2, 1}, {2},
                 {2}, {2, 1}, {1, 1},
                 {1, 1}, {1, 1}, {1},
                 {1}, {1}, {}});
}

StammeringTableau lambda2() {
    return walk({{},
                 {1}, {2}, {1},
                 {2}, {2}, {1},
                 {1}, {1, 1}, {1},
                 {2}, {2}, {1},
                 {1}, {2}, {1},
                 {1}, {1}, {}});
}

RookPlacement random_rook(int n, std::mt19937& rng) {
    RookPlacement r;
    for (int i = 0; i < n; ++i) {
        auto exts = extensions(r);
        r = exts[std::uniform_int_distribution<std::size_t>(0, exts.size() - 1)(rng)];
    }
    return r;
}

}  // namespace

TEST_CASE("forward local rules") {
    CHECK(forward_cell(P({}), P({}), P({}), true) == P({1}));
    CHECK(forward_cell(P({}), P({1}), P({1}), false) == P({1, 1}));
    CHECK(forward_cell(P({1}), P({1}), P({2}), false) == P({2}));
    CHECK(forward_cell(P({}), P({}), P({}), false) == P({}));
    CHECK(forward_cell(P({1}), P({2}), P({1, 1}), false) == P({2, 1}));
    // a dot is only legal when all three corners agree
    CHECK_THROWS_AS(forward_cell(P({}), P({1}), P({}), true), std::invalid_argument);
    CHECK_THROWS_AS(forward_cell(P({2}), P({1}), P({1}), false), std::invalid_argument);
}

TEST_CASE("reverse local rules") {
    CHECK(reverse_cell(P({}), P({}), P({1})) == std::pair{P({}), true});
    CHECK(reverse_cell(P({1}), P({1}), P({1, 1})) == std::pair{P({}), false});
    CHECK(reverse_cell(P({2}), P({1, 1}), P({2, 1})) == std::pair{P({1}), false});
    CHECK(reverse_cell(P({1}), P({1}), P({1})) == std::pair{P({1}), false});
    CHECK_THROWS_AS(reverse_cell(P({2}), P({1, 1}), P({2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(reverse_cell(P({1, 1}), P({1, 1}), P({1, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("reverse inverts forward on every reachable cell") {
    for (int n = 0; n <= 3; ++n)
        for_each_rook(n, [&](const RookPlacement& r) {
            GrowthDiagram g = GrowthDiagram::from_rook(r);
            for (int x = 0; x < 2 * n; ++x)
                for (int y = 0; y < GrowthDiagram::cell_top(n, x); ++y) {
                    auto [lam, dotted] = reverse_cell(g.labels[x][y + 1], g.labels[x + 1][y],
                                                      g.labels[x + 1][y + 1]);
                    CHECK(lam == g.labels[x][y]);
                    CHECK(dotted == (g.dot[x][y] != 0));
                }
        });
}

TEST_CASE("running examples map to their walks") {
    CHECK(rook_to_stammering(kRook1) == lambda1());
    CHECK(rook_to_stammering(kRook2) == lambda2());
    CHECK(rook_to_stammering(RookPlacement{}) == walk({{}}));
}

TEST_CASE("reverse rules recover the placements") {
    CHECK(stammering_to_rook(lambda1()) == kRook1);
    CHECK(stammering_to_rook(lambda2()) == kRook2);
    CHECK(stammering_to_rook(walk({{}, {}, {1}, {}})) == RookPlacement{1, {2}});
    CHECK(stammering_to_rook(walk({{}, {1}, {1}, {}})) == RookPlacement{1, {1}});
    CHECK_THROWS_AS(stammering_to_rook(walk({{}, {1}, {2}, {1}})), std::invalid_argument);
}

namespace {

IncompleteStandardTableau T(std::vector<std::vector<int>> rows = {}) {
    return IncompleteStandardTableau(std::move(rows));
}

}  // namespace

TEST_CASE("Schensted walk reproduces the printed tableau sequences") {
    auto result = rook_to_stammering_via_schensted(kRook1);
    CHECK(result.shapes == lambda1());
    std::vector<IncompleteStandardTableau> expected = {
        T(),
        T({{2}}), T({{2, 5}}), T({{2}}),
        T({{2, 4}}), T({{2, 3}, {4}}), T({{2, 3}}),
        T({{2, 3}}), T({{1, 3}, {2}}), T({{1}, {2}}),
        T({{1}, {2}}), T({{1}, {2}}), T({{1}}),
        T({{1}}), T({{1}}), T(),
    };
    CHECK(result.tableaux == expected);

    auto result2 = rook_to_stammering_via_schensted(kRook2);
    CHECK(result2.shapes == lambda2());
    std::vector<IncompleteStandardTableau> expected2 = {
        T(),
        T({{4}}), T({{4, 6}}), T({{4}}),
        T({{4, 5}}), T({{4, 5}}), T({{4}}),
        T({{4}}), T({{1}, {4}}), T({{1}}),
        T({{1, 3}}), T({{1, 3}}), T({{1}}),
        T({{1}}), T({{1, 2}}), T({{1}}),
        T({{1}}), T({{1}}), T(),
    };
    CHECK(result2.tableaux == expected2);

    CHECK(rook_to_stammering_via_schensted(RookPlacement{1, {2}}).shapes ==
          walk({{}, {}, {1}, {}}));
    CHECK(rook_to_stammering_via_schensted(RookPlacement{1, {1}}).shapes ==
          walk({{}, {1}, {1}, {}}));
}

TEST_CASE("shadow lines reproduce the worked size-7 example") {
    RookPlacement r{7, {7, 9, 6, 2, 4, 3, 1}};
    StammeringTableau expected = walk({{},
                                       {1}, {1, 1}, {1},
                                       {2}, {2, 1}, {2},
                                       {2}, {2, 1}, {1, 1},
                                       {1, 1, 1}, {1, 1, 1}, {1, 1},
                                       {2, 1}, {2, 1}, {2},
                                       {2}, {2}, {1},
                                       {1}, {1}, {}});
    CHECK(rook_to_stammering_via_shadows(r) == expected);
    CHECK(rook_to_stammering(r) == expected);
    CHECK(rook_to_stammering_via_shadows(RookPlacement{1, {1}}) == walk({{}, {1}, {1}, {}}));
}

TEST_CASE("the three constructions agree exhaustively up to size 3") {
    for (int n = 0; n <= 3; ++n)
        for_each_rook(n, [](const RookPlacement& r) {
            StammeringTableau growth = rook_to_stammering(r);
            CHECK(rook_to_stammering_via_schensted(r).shapes == growth);
            CHECK(rook_to_stammering_via_shadows(r) == growth);
        });
}

TEST_CASE("the three constructions agree on random placements of size 5 and 6") {
    std::mt19937 rng(911u);
    for (int trial = 0; trial < 60; ++trial) {
        RookPlacement r = random_rook(trial % 2 ? 5 : 6, rng);
        StammeringTableau growth = rook_to_stammering(r);
        CHECK(rook_to_stammering_via_schensted(r).shapes == growth);
        CHECK(rook_to_stammering_via_shadows(r) == growth);
    }
}

TEST_CASE("roundtrips are the identity up to size 3") {
    for (int n = 0; n <= 3; ++n) {
        for_each_rook(n, [](const RookPlacement& r) {
            CHECK(stammering_to_rook(rook_to_stammering(r)) == r);
        });
        for_each_stammering(n, P({}), P({}), [](const StammeringTableau& t) {
            CHECK(rook_to_stammering(stammering_to_rook(t)) == t);
        });
    }
}

TEST_CASE("generalized decoding of the worked examples") {
    // empty -> (2,1), n=4: full placement, tableau of the bottom border, and
    // the dotless growth columns.
    auto ex1 = walk({{}, {1}, {1, 1},
                     {1}, {2}, {2},
                     {1}, {1, 1}, {2, 1},
                     {2}, {2, 1}, {2, 2},
                     {2, 1}});
    auto dec1 = decode_generalized(ex1, EndpointCase::EmptyToLambda);
    CHECK(dec1.placement == PartialRookPlacement{4, {6, 2, 3, 1}});
    CHECK(dec1.tableau == T({{1, 3}, {2}}));
    CHECK(dec1.growth_columns == std::vector<int>{5, 7, 8});
    CHECK(encode_generalized(dec1) == ex1);

    // (2,1) -> empty, n=5: two dots survive, the west border encodes lambda.
    auto ex2 = walk({{2, 1}, {2, 1}, {2, 1},
                     {2}, {3}, {3},
                     {2}, {2}, {2, 1},
                     {1, 1}, {1, 1}, {1, 1},
                     {1}, {1}, {1},
                     {}});
    auto dec2 = decode_generalized(ex2, EndpointCase::LambdaToEmpty);
    CHECK(dec2.placement == PartialRookPlacement{5, {6, 0, 0, 3, 0}});
    CHECK(dec2.tableau == T({{1, 2}, {3}}));
    CHECK(dec2.growth_columns.empty());
    CHECK(encode_generalized(dec2) == ex2);
}

TEST_CASE("generalized decoding of the two size-1 walks to (1)") {
    auto dec = decode_generalized(walk({{}, {1}, {2}, {1}}), EndpointCase::EmptyToLambda);
    CHECK(dec.placement == PartialRookPlacement{1, {2}});
    CHECK(dec.tableau == T({{1}}));
    CHECK(dec.growth_columns == std::vector<int>{1});

    dec = decode_generalized(walk({{}, {1}, {1, 1}, {1}}), EndpointCase::EmptyToLambda);
    CHECK(dec.placement == PartialRookPlacement{1, {1}});
    CHECK(dec.tableau == T({{1}}));
    CHECK(dec.growth_columns == std::vector<int>{2});

    auto down = decode_generalized(walk({{1}, {1}, {1}, {}}), EndpointCase::LambdaToEmpty);
    CHECK(down.placement == PartialRookPlacement{1, {0}});
    CHECK(down.tableau == T({{1}}));
}

TEST_CASE("generalized decoding is injective with image sizes matching the closed forms") {
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= n; ++k)
            for (const Partition& lam : partitions_of(k)) {
                std::set<std::tuple<PartialRookPlacement, IncompleteStandardTableau,
                                    std::vector<int>>> up_images;
                for_each_stammering(n, P({}), lam, [&](const StammeringTableau& t) {
                    auto d = decode_generalized(t, EndpointCase::EmptyToLambda);
                    CHECK(encode_generalized(d) == t);
                    up_images.insert({d.placement, d.tableau, d.growth_columns});
                });
                CHECK(mpz_class(up_images.size()) == t_empty_to(n, lam));

                std::set<std::pair<PartialRookPlacement, IncompleteStandardTableau>> down_images;
                for_each_stammering(n, lam, P({}), [&](const StammeringTableau& t) {
                    auto d = decode_generalized(t, EndpointCase::LambdaToEmpty);
                    CHECK(encode_generalized(d) == t);
                    down_images.insert({d.placement, d.tableau});
                });
                CHECK(mpz_class(down_images.size()) == t_to_empty(n, lam));
            }
}

TEST_CASE("a tampered size field is rejected") {
    StammeringTableau t = lambda1();
    t.size = 4;
    CHECK_THROWS_AS(stammering_to_rook(t), std::invalid_argument);
}

TEST_CASE("decode rejects walks with the wrong endpoint") {
    CHECK_THROWS_AS(decode_generalized(walk({{1}, {1}, {1}, {}}), EndpointCase::EmptyToLambda),
                    std::invalid_argument);
    CHECK_THROWS_AS(decode_generalized(walk({{}, {1}, {2}, {1}}), EndpointCase::LambdaToEmpty),
                    std::invalid_argument);
}

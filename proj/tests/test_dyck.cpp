#include <doctest.h>

#include <stdexcept>

#include <map>
#include <set>

#include "stammerlab/dyck.hpp"
#include "stammerlab/poset.hpp"

using namespace stammerlab;

namespace {

DyckPath W(const char* word) { return DyckPath::from_word(word); }

// Rank-5 shape used across the shape tests; also the profile of 42135.
const char* kShapeWord = "UUDUUDDDUD";

}  // namespace

TEST_CASE("dyck path validation") {
    CHECK_THROWS_AS(W("DU"), std::invalid_argument);
    CHECK_THROWS_AS(W("UUD"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath::from_word("UX"), std::invalid_argument);
    CHECK(W("").rank() == 0);
    CHECK(W("UUDD").rank() == 2);
    CHECK(W("UUDD").word() == "UUDD");
}

TEST_CASE("column heights of the rank-5 shape") {
    DyckPath p = W(kShapeWord);
    // 8 nonempty columns, one holding 2 cells, 9 cells in total.
    std::vector<int> expected = {1, 1, 1, 1, 2, 1, 1, 0, 1, 0};
    for (int c = 1; c <= 10; ++c) CHECK(column_height(p, c) == expected[c - 1]);
    CHECK(cells_of(p).size() == 9);
    CHECK(column_cells(p, 5) == std::vector<Cell>{{4, 0}, {4, 2}});
}

TEST_CASE("ribbon recognition") {
    CHECK(is_ribbon({{0, 0}}));
    CHECK(is_ribbon({{1, 1}, {2, 0}}));
    CHECK_FALSE(is_ribbon({{0, 0}, {2, 0}}));                          // disconnected
    CHECK_FALSE(is_ribbon({{1, 1}, {0, 0}, {2, 0}, {1, -1}}));         // 2x2 square
    CHECK(ne_diagonal_count(Ribbon{{{1, 1}, {2, 0}}}) == 2);
    CHECK(leftmost_column(Ribbon{{{3, 1}, {4, 0}}}) == 4);
}

TEST_CASE("ribbon successors come in diagonal sizes 1..m+1") {
    auto successors = ribbon_successors(W("UD"));
    REQUIRE(successors.size() == 2);
    CHECK(successors[0].first == W("UDUD"));
    CHECK(successors[1].first == W("UUDD"));

    auto six = ribbon_successors(W(kShapeWord));
    REQUIRE(six.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(ne_diagonal_count(six[i].second) == i + 1);
    // one-cell ribbon appended at the end
    CHECK(six[0].first == W("UUDUUDDDUDUD"));
    CHECK(six[0].second.cells == std::vector<Cell>{{10, 0}});
    CHECK(six[5].first == W("UUUUUDDDUDDD"));

    CHECK(add_ribbon(W("UD"), 1) == W("UDUD"));
    CHECK(add_ribbon(W(kShapeWord), 1) == W("UUDUUDDDUDUD"));
    CHECK(add_ribbon(W(kShapeWord), 6) == W("UUUUUDDDUDDD"));
    CHECK_THROWS_AS(add_ribbon(W("UD"), 3), std::invalid_argument);
}

TEST_CASE("paths from rook placements") {
    CHECK(path_from_rook(RookPlacement{}) == W("UD"));
    // the DyckPath constructor enforces the prefix invariant, so surviving
    // construction is the check
    for (int n = 0; n <= 5; ++n)
        for_each_rook(n, [](const RookPlacement& r) {
            CHECK(path_from_rook(r).length() == 2 * r.n + 2);
        });
    CHECK(path_from_rook(RookPlacement{5, {6, 1, 4, 3, 2}}) == W("UUUUUDUDDDDD"));
    CHECK(path_from_rook(RookPlacement{6, {6, 10, 7, 1, 3, 2}}) == W("UUUUDDUUDDUDDD"));
}

TEST_CASE("chains of the running example placements") {
    auto left = chain_from_rook(RookPlacement{5, {6, 1, 4, 3, 2}});
    std::vector<std::string> words;
    for (const auto& p : left.paths()) words.push_back(p.word());
    CHECK(words == std::vector<std::string>{"UD", "UDUD", "UDUUDD", "UDUUUDDD", "UUUUUDDDDD",
                                            "UUUUUDUDDDDD"});

    auto right = chain_from_rook(RookPlacement{6, {6, 10, 7, 1, 3, 2}});
    words.clear();
    for (const auto& p : right.paths()) words.push_back(p.word());
    CHECK(words == std::vector<std::string>{"UD", "UDUD", "UDUUDD", "UUUUDDDD", "UUUUDDDUDD",
                                            "UUUUDDDUDDUD", "UUUUDDUUDDUDDD"});

    CHECK(chain_from_rook(RookPlacement{}).paths() == std::vector<DyckPath>{W("UD")});
}

TEST_CASE("ribbon leftmost columns of the first running example") {
    auto chain = chain_from_rook(RookPlacement{5, {6, 1, 4, 3, 2}});
    std::vector<int> cols;
    for (const Ribbon& r : chain.ribbons()) cols.push_back(leftmost_column(r));
    CHECK(cols == std::vector<int>{1, 3, 4, 5, 2, 7});
}

TEST_CASE("chains validate their ribbon structure") {
    CHECK_THROWS_AS(ChainOfDyckShapes({W("UUDD")}), std::invalid_argument);  // wrong length
    CHECK_THROWS_AS(ChainOfDyckShapes(std::vector<DyckPath>{}), std::invalid_argument);
    // UDUDUD does not contain the cell (1,1) of UUDD
    CHECK_THROWS_AS(ChainOfDyckShapes({W("UD"), W("UUDD"), W("UDUDUD")}),
                    std::invalid_argument);
}

TEST_CASE("in every chain the ribbons tile the shape with bottom-row right extremities") {
    for_each_chain(5, [](const ChainOfDyckShapes& c) {
        auto ribbons = c.ribbons();
        std::set<Cell> all;
        for (std::size_t i = 0; i < ribbons.size(); ++i) {
            Cell rightmost = ribbons[i].cells.front();
            for (const Cell& cell : ribbons[i].cells) {
                CHECK(all.insert(cell).second);  // disjoint
                if (cell.x > rightmost.x) rightmost = cell;
            }
            CHECK(rightmost == Cell{2 * static_cast<int>(i), 0});
        }
        auto shape_cells = cells_of(c.shape());
        CHECK(all == std::set<Cell>(shape_cells.begin(), shape_cells.end()));
    });
}

TEST_CASE("chain counts are n! and the rook correspondence is bijective") {
    long expected = 1;
    for (int n = 1; n <= 5; ++n) {
        expected *= n;
        long count = 0;
        for_each_chain(n, [&](const ChainOfDyckShapes& c) {
            ++count;
            RookPlacement r = rook_from_chain(c);
            CHECK(r.n == n - 1);
            CHECK(chain_from_rook(r) == c);
        });
        CHECK(count == expected);
    }
    for_each_rook(4, [](const RookPlacement& r) {
        CHECK(rook_from_chain(chain_from_rook(r)) == r);
    });
}

TEST_CASE("reflexive-transitive closure of ribbon addition matches the word order") {
    // spot check: every successor is strictly above in the poset order
    for (int rank = 0; rank <= 4; ++rank)
        for (const DyckPath& d : all_dyck_paths(rank))
            for (auto& [succ, ribbon] : ribbon_successors(d)) {
                CHECK(leq(d, succ));
                CHECK_FALSE(leq(succ, d));
            }
}

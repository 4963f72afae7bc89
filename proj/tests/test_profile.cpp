#include <doctest.h>

#include <stdexcept>

#include <map>

#include "stammerlab/laguerre.hpp"
#include "stammerlab/poset.hpp"
#include "stammerlab/profile.hpp"

using namespace stammerlab;

namespace {

DyckPath W(const char* word) { return DyckPath::from_word(word); }
Permutation S(std::vector<int> values) { return Permutation(std::move(values)); }

}  // namespace

TEST_CASE("value classification with boundary 0 and n+1") {
    auto classes = classify(S({4, 2, 1, 3, 5}));
    CHECK(classes[0] == ValueClass::Valley);         // 1
    CHECK(classes[1] == ValueClass::DoubleDescent);  // 2
    CHECK(classes[2] == ValueClass::DoubleAscent);   // 3
    CHECK(classes[3] == ValueClass::Peak);           // 4
    CHECK(classes[4] == ValueClass::DoubleAscent);   // 5

    CHECK(classify(S({1}))[0] == ValueClass::DoubleAscent);
    auto two = classify(S({2, 1}));
    CHECK(two[0] == ValueClass::Valley);
    CHECK(two[1] == ValueClass::Peak);
}

TEST_CASE("profiles of the worked permutations") {
    CHECK(profile(S({4, 2, 1, 3, 5})) == W("UUDUUDDDUD"));
    CHECK(profile(S({5, 1, 3, 4, 6, 2})) == W("UUUUUDUDDDDD"));
    CHECK(profile(S({1})) == W("UD"));
    CHECK(profile(S({5, 1, 3, 4, 2})) == W("UUUUUDDDDD"));
    CHECK(profile(S({1, 3, 4, 2})) == W("UDUUUDDD"));
    CHECK(profile(S({1, 3, 2})) == W("UDUUDD"));
    CHECK(profile(S({1, 2})) == W("UDUD"));
}

TEST_CASE("deleting the maximum keeps the order of the rest") {
    CHECK(delete_max(S({1, 4, 5, 7, 2, 3, 6})) == S({1, 4, 5, 2, 3, 6}));
    CHECK(delete_max(S({1})) == Permutation());
    CHECK(delete_max(S({5, 1, 3, 4, 6, 2})) == S({5, 1, 3, 4, 2}));
}

TEST_CASE("profile chains of the running examples") {
    auto chain = chain_of(S({5, 1, 3, 4, 6, 2}));
    std::vector<std::string> words;
    for (const auto& p : chain.paths()) words.push_back(p.word());
    CHECK(words == std::vector<std::string>{"UD", "UDUD", "UDUUDD", "UDUUUDDD", "UUUUUDDDDD",
                                            "UUUUUDUDDDDD"});
    CHECK(chain_of(S({1})).paths() == std::vector<DyckPath>{W("UD")});

    auto second = chain_of(S({5, 4, 7, 1, 3, 2, 6}));
    CHECK(second.shape() == W("UUUUDDUUDDUDDD"));
    CHECK(second == chain_from_rook(RookPlacement{6, {6, 10, 7, 1, 3, 2}}));
}

TEST_CASE("insertion rebuilds the permutation with the worked trace") {
    auto chain = chain_of(S({5, 1, 3, 4, 6, 2}));
    auto trace = permutation_insertion_trace(chain);
    std::vector<Permutation> expected = {S({1}),          S({1, 2}),       S({1, 3, 2}),
                                         S({1, 3, 4, 2}), S({5, 1, 3, 4, 2}),
                                         S({5, 1, 3, 4, 6, 2})};
    CHECK(trace == expected);
    CHECK(permutation_of(chain) == S({5, 1, 3, 4, 6, 2}));
}

TEST_CASE("chain_of and permutation_of invert each other on all of S_5") {
    for (int n = 1; n <= 5; ++n) {
        long count = 0;
        for_each_permutation(n, [&](const Permutation& s) {
            ++count;
            CHECK(permutation_of(chain_of(s)) == s);
        });
        long chains = 0;
        for_each_chain(n, [&](const ChainOfDyckShapes& c) {
            ++chains;
            CHECK(chain_of(permutation_of(c)) == c);
        });
        CHECK(count == chains);
    }
}

TEST_CASE("the profile drops one ribbon under delete_max") {
    for (int n = 2; n <= 7; ++n)
        for_each_permutation(n, [](const Permutation& s) {
            DyckPath big = profile(s);
            DyckPath small = profile(delete_max(s));
            // small < big in one ribbon step: some successor of small is big
            bool found = false;
            for (auto& [succ, ribbon] : ribbon_successors(small))
                if (succ == big) found = true;
            CHECK(found);
        });
}

TEST_CASE("permutations with a given profile follow the height product") {
    for (int n = 1; n <= 5; ++n) {
        std::map<DyckPath, long> histogram;
        for_each_permutation(n, [&](const Permutation& s) { ++histogram[profile(s)]; });
        for (const DyckPath& d : all_dyck_paths(n)) {
            mpz_class product = 1;
            for (int i = 0; i < 2 * n; ++i)
                if (d.steps()[i] == Step::Up) product *= d.height_after(i) / 2 + 1;
            long seen = histogram.count(d) ? histogram[d] : 0;
            CHECK(mpz_class(seen) == product);
            CHECK(count_histories(d) == product);
        }
    }
}

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(S({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(S({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(chain_of(Permutation()), std::invalid_argument);
}

#include <doctest.h>

#include <stdexcept>

#include <random>
#include <vector>

#include "stammerlab/ansatz.hpp"
#include "stammerlab/counting.hpp"

using namespace stammerlab;

namespace {

QPoly qc(long c) { return QPoly::constant(c); }

NormalForm nf(std::vector<std::tuple<int, int, QPoly>> terms) {
    NormalForm out;
    for (auto& [e, f, c] : terms) out.add_term({e, f}, c);
    return out;
}

// Test-only oracle: exact rational matrices with D e_i = [i]_q e_{i-1},
// U e_i = e_{i+1}, truncated to dimension m. Entries of a product touching
// only coordinates below the cut are exact.
using Mat = std::vector<std::vector<mpq_class>>;

Mat mat(int m) { return Mat(m, std::vector<mpq_class>(m, 0)); }

Mat mul(const Mat& a, const Mat& b) {
    int m = static_cast<int>(a.size());
    Mat out = mat(m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

struct Realization {
    Mat E, F;
};

Realization realization(int m, const mpq_class& q) {
    Mat U = mat(m), D = mat(m), I = mat(m);
    for (int i = 0; i < m; ++i) I[i][i] = 1;
    for (int i = 0; i + 1 < m; ++i) U[i + 1][i] = 1;
    mpq_class qint = 0, qpow = 1;
    for (int i = 1; i < m; ++i) {
        qint += qpow;
        qpow *= q;
        D[i - 1][i] = qint;
    }
    Mat UI = mat(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) UI[i][j] = U[i][j] + I[i][j];
    Mat F = mul(D, UI);
    return {mul(F, U), F};
}

Mat eval_word(const std::string& word, const Realization& r, int m) {
    Mat out = mat(m);
    for (int i = 0; i < m; ++i) out[i][i] = 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = mul(*it == 'E' ? r.E : r.F, out);
    return out;
}

Mat eval_normal_form(const NormalForm& nf, const Realization& r, const mpq_class& q, int m) {
    Mat out = mat(m);
    for (const auto& [key, poly] : nf.terms()) {
        Mat term = mat(m);
        for (int i = 0; i < m; ++i) term[i][i] = 1;
        for (int j = 0; j < key.f; ++j) term = mul(r.F, term);
        for (int j = 0; j < key.e; ++j) term = mul(r.E, term);
        mpq_class c = poly.eval(q);
        for (int i = 0; i < m; ++i)
            for (int jj = 0; jj < m; ++jj) out[i][jj] += c * term[i][jj];
    }
    return out;
}

}  // namespace

TEST_CASE("single rewrite of FE") {
    NormalForm expected = nf({{1, 1, QPoly::q()}, {1, 0, qc(1)}, {0, 1, qc(1)}});
    CHECK(normal_order("FE") == expected);
    CHECK(normal_order("EF") == nf({{1, 1, qc(1)}}));
    CHECK(normal_order("") == NormalForm::one());
    CHECK_THROWS_AS(normal_order("FX"), std::invalid_argument);
}

TEST_CASE("normal forms agree with the truncated matrix realization") {
    const int m = 8;
    const mpq_class q(2, 5);
    Realization r = realization(m, q);
    for (const char* word : {"FFE", "FEE", "FEFE", "EFE", "FFEE"}) {
        NormalForm direct = normal_order(word);
        CHECK(direct.nonnegative());
        Mat lhs = eval_word(word, r, m);
        Mat rhs = eval_normal_form(direct, r, q, m);
        int e_count = 0;
        for (const char* p = word; *p; ++p) e_count += (*p == 'E');
        // columns whose evaluation never touches the truncated coordinates
        for (int c = 0; c + e_count <= m - 3; ++c)
            for (int row = 0; row < m; ++row) CHECK(lhs[row][c] == rhs[row][c]);
    }
}

TEST_CASE("unnormalized weights of short states") {
    TrivariatePoly b;
    b.add_term({0, 0, 1}, 1);
    CHECK(unnormalized_prob("x") == b);

    TrivariatePoly a;
    a.add_term({0, 1, 0}, 1);
    CHECK(unnormalized_prob("o") == a);

    TrivariatePoly xo;
    xo.add_term({1, 1, 1}, 1);
    xo.add_term({0, 1, 0}, 1);
    xo.add_term({0, 0, 1}, 1);
    CHECK(unnormalized_prob("xo") == xo);

    CHECK_THROWS_AS(unnormalized_prob("ab"), std::invalid_argument);
}

TEST_CASE("partition function") {
    TrivariatePoly z1;
    z1.add_term({0, 1, 0}, 1);
    z1.add_term({0, 0, 1}, 1);
    CHECK(partition_function(1) == z1);

    TrivariatePoly z2;
    z2.add_term({0, 2, 0}, 1);
    z2.add_term({0, 0, 2}, 1);
    z2.add_term({0, 1, 1}, 1);
    z2.add_term({1, 1, 1}, 1);
    z2.add_term({0, 1, 0}, 1);
    z2.add_term({0, 0, 1}, 1);
    CHECK(partition_function(2) == z2);

    for (int n = 0; n <= 6; ++n) {
        TrivariatePoly z = partition_function(n);
        CHECK(z.nonnegative());
        CHECK(evaluate(z, 1, 1, 1) == factorial(n + 1));
    }
}

TEST_CASE("partition function sums the state weights") {
    for (int n = 0; n <= 4; ++n) {
        TrivariatePoly total;
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::string state;
            for (int i = 0; i < n; ++i) state += (mask >> i) & 1 ? 'x' : 'o';
            TrivariatePoly weight = unnormalized_prob(state);
            for (const auto& [key, c] : weight.terms()) total.add_term(key, c);
        }
        CHECK(total == partition_function(n));
    }
}

TEST_CASE("exact rational evaluation") {
    CHECK(evaluate(partition_function(2), 1, 1, 1) == 6);
    CHECK(evaluate(partition_function(3), 1, 1, 1) == 24);
    CHECK(evaluate(TrivariatePoly(), mpq_class(7, 3), 5, 9) == 0);
    CHECK(evaluate(partition_function(1), 1, mpq_class(1, 2), mpq_class(1, 3)) ==
          mpq_class(5, 6));
}

TEST_CASE("random redex order reaches the same normal form") {
    std::mt19937 rng(415u);
    for (int trial = 0; trial < 50; ++trial) {
        int len = std::uniform_int_distribution<int>(0, 8)(rng);
        std::string word;
        for (int i = 0; i < len; ++i)
            word += std::uniform_int_distribution<int>(0, 1)(rng) ? 'F' : 'E';
        NormalForm direct = normal_order(word);
        // one-step rewrite at a random redex, then recurse through normal_order
        std::vector<std::size_t> redexes;
        for (std::size_t i = 0; i + 1 < word.size(); ++i)
            if (word[i] == 'F' && word[i + 1] == 'E') redexes.push_back(i);
        if (redexes.empty()) continue;
        std::size_t at = redexes[std::uniform_int_distribution<std::size_t>(
            0, redexes.size() - 1)(rng)];
        std::string prefix = word.substr(0, at), suffix = word.substr(at + 2);
        NormalForm stepped;
        NormalForm swapped = normal_order(prefix + "EF" + suffix);
        NormalForm dropE = normal_order(prefix + "F" + suffix);
        NormalForm dropF = normal_order(prefix + "E" + suffix);
        for (const auto& [key, c] : swapped.terms()) stepped.add_term(key, c.times_q());
        for (const auto& [key, c] : dropE.terms()) stepped.add_term(key, c);
        for (const auto& [key, c] : dropF.terms()) stepped.add_term(key, c);
        CHECK(stepped == direct);
    }
}

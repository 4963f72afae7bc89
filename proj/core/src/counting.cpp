#include "stammerlab/counting.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "stammerlab/staircase.hpp"
#include "stammerlab/stammering.hpp"

namespace stammerlab {

mpz_class factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

mpz_class binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

mpz_class a_count(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    // (n+1)!/(n-k+1)! * C(n,k)
    mpz_class falling = 1;
    for (int i = n - k + 2; i <= n + 1; ++i) falling *= i;
    return falling * binomial(n, k);
}

namespace {

mpz_class a_rec(int n, int k, std::map<std::pair<int, int>, mpz_class>& memo) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n == 0) return 1;  // k == 0 here
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
    mpz_class value = a_rec(n - 1, k, memo) + (2 * n - k + 1) * a_rec(n - 1, k - 1, memo);
    return memo.emplace(std::pair{n, k}, std::move(value)).first->second;
}

void a_brute_walk(int n, int row, int remaining, std::set<int>& used, mpz_class& count) {
    if (remaining == 0) {
        ++count;
        return;
    }
    if (row > n || n - row + 1 < remaining) return;
    a_brute_walk(n, row + 1, remaining, used, count);  // dotless row
    for (int c = 1; c <= staircase_row_length(n, row); ++c) {
        if (used.count(c)) continue;
        used.insert(c);
        a_brute_walk(n, row + 1, remaining - 1, used, count);
        used.erase(c);
    }
}

}  // namespace

mpz_class a_count_recursive(int n, int k) {
    std::map<std::pair<int, int>, mpz_class> memo;
    return a_rec(n, k, memo);
}

mpz_class a_count_bruteforce(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class count = 0;
    std::set<int> used;
    a_brute_walk(n, 1, k, used, count);
    return count;
}

mpz_class t_empty_to(int n, const Partition& lambda) {
    int k = lambda.cells();
    if (k > n) return 0;
    return factorial(n + 1) * binomial(n, k) * count_standard_tableaux(lambda);
}

mpz_class t_to_empty(int n, const Partition& lambda) {
    int k = lambda.cells();
    if (k > n) return 0;
    mpz_class ratio;  // (n+1)!/(k+1)!, exact
    mpz_divexact(ratio.get_mpz_t(), factorial(n + 1).get_mpz_t(), factorial(k + 1).get_mpz_t());
    return ratio * binomial(n, k) * count_standard_tableaux(lambda);
}

mpz_class t_bruteforce(int n, const Partition& mu, const Partition& nu) {
    return count_stammering(n, mu, nu);
}

}  // namespace stammerlab

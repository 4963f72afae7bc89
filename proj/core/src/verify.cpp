#include "stammerlab/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stammerlab/ansatz.hpp"
#include "stammerlab/counting.hpp"
#include "stammerlab/growth.hpp"
#include "stammerlab/json_io.hpp"
#include "stammerlab/laguerre.hpp"
#include "stammerlab/poset.hpp"
#include "stammerlab/profile.hpp"

namespace stammerlab {

namespace {

constexpr unsigned kSeed = 0x5eedu;

void add_check(VerifyReport& rep, const std::string& name, bool passed, std::string details) {
    rep.checks.push_back({name, passed, std::move(details)});
}

RookPlacement random_rook(int n, std::mt19937& rng) {
    RookPlacement r;
    for (int i = 0; i < n; ++i) {
        auto exts = extensions(r);
        r = exts[std::uniform_int_distribution<std::size_t>(0, exts.size() - 1)(rng)];
    }
    return r;
}

std::string payload(const RookPlacement& r) { return to_json(r).dump(); }

// ---- counts ---------------------------------------------------------------

void counts_suite(VerifyReport& rep, int max_n) {
    {
        std::ostringstream seen;
        bool ok = true;
        for (int n = 0; n <= max_n && ok; ++n) {
            mpz_class got = count_stammering(n, Partition(), Partition());
            if (n) seen << ", ";
            seen << got.get_str();
            ok = got == factorial(n + 1);
        }
        add_check(rep, "stammering tableaux of size n number (n+1)!", ok, seen.str());
    }
    {
        std::ostringstream seen;
        bool ok = true;
        for (int n = 0; n <= max_n && ok; ++n) {
            long count = 0;
            for_each_rook(n, [&](const RookPlacement&) { ++count; });
            if (n) seen << ", ";
            seen << count;
            ok = mpz_class(count) == factorial(n + 1);
        }
        add_check(rep, "rook placements of size n number (n+1)!", ok, seen.str());
    }
    {
        std::ostringstream seen;
        bool ok = true;
        for (int n = 1; n <= max_n && ok; ++n) {
            long count = 0;
            for_each_chain(n, [&](const ChainOfDyckShapes&) { ++count; });
            if (n > 1) seen << ", ";
            seen << count;
            ok = mpz_class(count) == factorial(n);
        }
        add_check(rep, "n-chains of Dyck shapes number n!", ok, seen.str());
    }
    {
        std::ostringstream seen;
        bool ok = true;
        for (int n = 1; n <= max_n && ok; ++n) {
            long hist = 0, tabl = 0;
            for_each_history_of_rank(n, [&](const LaguerreHistory&) { ++hist; });
            for (const DyckPath& d : all_dyck_paths(n))
                for_each_dyck_tableau(d, [&](const DyckTableau&) { ++tabl; });
            if (n > 1) seen << ", ";
            seen << hist;
            ok = hist == tabl && mpz_class(hist) == factorial(n);
        }
        add_check(rep, "Laguerre histories and Dyck tableaux of length 2n number n!", ok,
                  seen.str());
    }
    {
        bool ok = true;
        std::string bad;
        int cap = std::min(max_n, 4);
        for (int n = 0; n <= cap && ok; ++n)
            for (int k = 0; k <= n && ok; ++k) {
                mpz_class closed = a_count(n, k);
                if (closed != a_count_recursive(n, k) || closed != a_count_bruteforce(n, k)) {
                    ok = false;
                    bad = "a(" + std::to_string(n) + "," + std::to_string(k) + ")";
                }
            }
        add_check(rep, "a(n,k) closed form = recursion = brute force (n <= " +
                           std::to_string(cap) + ")",
                  ok, bad);
    }
    {
        bool ok = true;
        std::string bad;
        int cap = std::min(max_n, 4);
        for (int n = 0; n <= cap && ok; ++n)
            for (int k = 0; k <= n && ok; ++k)
                for (const Partition& lam : partitions_of(k)) {
                    if (t_empty_to(n, lam) != t_bruteforce(n, Partition(), lam) ||
                        t_to_empty(n, lam) != t_bruteforce(n, lam, Partition())) {
                        ok = false;
                        bad = "n=" + std::to_string(n) + " lambda=" + lam.str();
                        break;
                    }
                }
        add_check(rep, "generalized walk counts match the closed forms (n <= " +
                           std::to_string(cap) + ")",
                  ok, bad);
    }
    {
        bool ok = true;
        std::string bad;
        int cap = std::min(max_n, 6);
        for (int n = 1; n <= cap && ok; ++n) {
            std::map<DyckPath, long> by_profile;
            for_each_permutation(n, [&](const Permutation& s) { ++by_profile[profile(s)]; });
            for (const DyckPath& d : all_dyck_paths(n)) {
                mpz_class product = 1;
                for (int i = 0; i < 2 * n; ++i)
                    if (d.steps()[i] == Step::Up) product *= d.height_after(i) / 2 + 1;
                long perms = by_profile.count(d) ? by_profile[d] : 0;
                if (mpz_class(perms) != product || product != count_histories(d)) {
                    ok = false;
                    bad = d.word();
                    break;
                }
            }
        }
        add_check(rep, "permutations with profile D match the height product and the history "
                       "count (rank <= " + std::to_string(cap) + ")",
                  ok, bad);
    }
}

// ---- roundtrips -----------------------------------------------------------

bool roundtrip_rook(const RookPlacement& r, std::string& bad) {
    if (stammering_to_rook(rook_to_stammering(r)) != r) {
        bad = "stammering roundtrip: " + payload(r);
        return false;
    }
    ChainOfDyckShapes chain = chain_from_rook(r);
    if (rook_from_chain(chain) != r) {
        bad = "chain roundtrip: " + payload(r);
        return false;
    }
    Permutation perm = permutation_of(chain);
    if (chain_of(perm) != chain) {
        bad = "permutation roundtrip: " + payload(r);
        return false;
    }
    LaguerreHistory hist = history_from_chain(chain);
    if (chain_from_history(hist) != chain) {
        bad = "history roundtrip: " + payload(r);
        return false;
    }
    if (from_dyck_tableau(to_dyck_tableau(hist)) != hist) {
        bad = "dyck tableau roundtrip: " + payload(r);
        return false;
    }
    return true;
}

void roundtrips_suite(VerifyReport& rep, int max_n) {
    {
        bool ok = true;
        std::string bad;
        long total = 0;
        for (int n = 0; n <= max_n && ok; ++n)
            for_each_rook(n, [&](const RookPlacement& r) {
                if (ok && !roundtrip_rook(r, bad)) ok = false;
                ++total;
            });
        add_check(rep, "all five bijections are mutually inverse (exhaustive, size <= " +
                           std::to_string(max_n) + ")",
                  ok, ok ? std::to_string(total) + " placements checked" : bad);
    }
    {
        bool ok = true;
        std::string bad;
        for (int n = 0; n <= max_n && ok; ++n)
            for_each_stammering(n, Partition(), Partition(), [&](const StammeringTableau& t) {
                if (ok && rook_to_stammering(stammering_to_rook(t)) != t) {
                    ok = false;
                    bad = to_json(t).dump();
                }
            });
        add_check(rep, "walk-side roundtrip is the identity (exhaustive, size <= " +
                           std::to_string(max_n) + ")",
                  ok, bad);
    }
    {
        bool ok = true;
        std::string bad;
        std::mt19937 rng(kSeed);
        for (int i = 0; i < 1000 && ok; ++i)
            if (!roundtrip_rook(random_rook(6, rng), bad)) ok = false;
        add_check(rep, "all five bijections are mutually inverse (1000 random, size 6)", ok, bad);
    }
}

// ---- constructions --------------------------------------------------------

bool constructions_agree(const RookPlacement& r, std::string& bad) {
    StammeringTableau growth = rook_to_stammering(r);
    if (rook_to_stammering_via_schensted(r).shapes != growth) {
        bad = "schensted disagrees: " + payload(r);
        return false;
    }
    if (rook_to_stammering_via_shadows(r) != growth) {
        bad = "shadow lines disagree: " + payload(r);
        return false;
    }
    return true;
}

void constructions_suite(VerifyReport& rep, int max_n) {
    {
        bool ok = true;
        std::string bad;
        long total = 0;
        for (int n = 0; n <= max_n && ok; ++n)
            for_each_rook(n, [&](const RookPlacement& r) {
                if (ok && !constructions_agree(r, bad)) ok = false;
                ++total;
            });
        add_check(rep, "growth, Schensted and shadow constructions agree (exhaustive, size <= " +
                           std::to_string(max_n) + ")",
                  ok, ok ? std::to_string(total) + " placements checked" : bad);
    }
    {
        bool ok = true;
        std::string bad;
        std::mt19937 rng(kSeed);
        for (int i = 0; i < 1000 && ok; ++i)
            if (!constructions_agree(random_rook(6, rng), bad)) ok = false;
        add_check(rep, "growth, Schensted and shadow constructions agree (1000 random, size 6)",
                  ok, bad);
    }
}

// ---- lattice --------------------------------------------------------------

void lattice_suite(VerifyReport& rep, int max_n) {
    std::vector<DyckPath> small;
    for (int n = 0; n <= max_n; ++n)
        for (const DyckPath& d : all_dyck_paths(n)) small.push_back(d);
    std::vector<DyckPath> universe;
    for (int n = 0; n <= 2 * max_n; ++n)
        for (const DyckPath& d : all_dyck_paths(n)) universe.push_back(d);

    // reflexive-transitive closure of ribbon addition on the small universe
    std::map<DyckPath, std::set<DyckPath>> above;  // strictly greater elements
    for (const DyckPath& d : small)
        for (auto& [succ, ribbon] : ribbon_successors(d)) above[d].insert(succ);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const DyckPath& d : small) {
            auto& ups = above[d];
            std::set<DyckPath> next = ups;
            for (const DyckPath& u : ups)
                if (above.count(u))
                    for (const DyckPath& uu : above[u]) next.insert(uu);
            if (next.size() != ups.size()) {
                ups = std::move(next);
                changed = true;
            }
        }
    }

    {
        bool ok = true;
        std::string bad;
        for (const DyckPath& a : small) {
            for (const DyckPath& b : small) {
                bool closure = (a == b) || (above.count(a) && above[a].count(b));
                if (closure != leq(a, b)) {
                    ok = false;
                    bad = a.word() + " vs " + b.word();
                    break;
                }
            }
            if (!ok) break;
        }
        add_check(rep, "leq equals the closure of ribbon addition (rank <= " +
                           std::to_string(max_n) + ")",
                  ok, bad);
    }
    {
        bool ok = true;
        std::string bad;
        for (const DyckPath& a : small) {
            for (const DyckPath& b : small) {
                DyckPath v = join(a, b), m = meet(a, b);
                // v must be an upper bound below every upper bound in the
                // universe (which contains all candidates up to rank(join));
                // dually for m.
                bool lub_unique = leq(a, v) && leq(b, v);
                bool glb_unique = leq(m, a) && leq(m, b);
                for (const DyckPath& f : universe) {
                    if (leq(a, f) && leq(b, f) && !leq(v, f)) lub_unique = false;
                    if (leq(f, a) && leq(f, b) && !leq(f, m)) glb_unique = false;
                }
                bool axioms = join(a, b) == join(b, a) && meet(a, b) == meet(b, a) &&
                              join(a, a) == a && meet(a, a) == a &&
                              join(a, meet(a, b)) == a && meet(a, join(a, b)) == a;
                if (!lub_unique || !glb_unique || !axioms) {
                    ok = false;
                    bad = a.word() + " vs " + b.word();
                    break;
                }
            }
            if (!ok) break;
        }
        add_check(rep, "join/meet are the brute-force lub/glb and satisfy the lattice axioms "
                       "(rank <= " + std::to_string(max_n) + ")",
                  ok, bad);
    }
    {
        bool ok = true;
        std::string bad;
        for (const DyckPath& a : small)
            for (const DyckPath& b : small)
                for (const DyckPath& c : small) {
                    if (join(join(a, b), c) != join(a, join(b, c)) ||
                        meet(meet(a, b), c) != meet(a, meet(b, c))) {
                        ok = false;
                        bad = a.word() + ", " + b.word() + ", " + c.word();
                    }
                }
        add_check(rep, "join/meet are associative (rank <= " + std::to_string(max_n) + ")", ok,
                  bad);
    }
}

// ---- ansatz ---------------------------------------------------------------

using Mat = std::vector<std::vector<mpq_class>>;

Mat zero_mat(int m) { return Mat(m, std::vector<mpq_class>(m, 0)); }

Mat mat_mul(const Mat& a, const Mat& b) {
    int m = static_cast<int>(a.size());
    Mat out = zero_mat(m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

NormalForm random_redex_normal_form(const std::string& word, std::mt19937& rng) {
    std::map<std::string, QPoly> expr;
    expr[word] = QPoly::constant(1);
    while (true) {
        std::vector<std::pair<std::string, std::size_t>> redexes;
        for (const auto& [w, c] : expr)
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] == 'F' && w[i + 1] == 'E') redexes.emplace_back(w, i);
        if (redexes.empty()) break;
        auto [w, i] = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
        QPoly c = expr[w];
        expr.erase(w);
        auto bump = [&](const std::string& target, const QPoly& coeff) {
            auto it = expr.find(target);
            if (it == expr.end())
                expr[target] = coeff;
            else {
                it->second += coeff;
                if (it->second.is_zero()) expr.erase(it);
            }
        };
        std::string prefix = w.substr(0, i), suffix = w.substr(i + 2);
        bump(prefix + "EF" + suffix, c.times_q());
        bump(prefix + "F" + suffix, c);
        bump(prefix + "E" + suffix, c);
    }
    NormalForm nf;
    for (const auto& [w, c] : expr) {
        auto split = w.find('F');
        int e = static_cast<int>(split == std::string::npos ? w.size() : split);
        int f = static_cast<int>(w.size()) - e;
        nf.add_term({e, f}, c);
    }
    return nf;
}

void ansatz_suite(VerifyReport& rep, int /*max_n*/) {
    {
        std::ostringstream seen;
        bool ok = true;
        for (int n = 0; n <= 7 && ok; ++n) {
            TrivariatePoly z = partition_function(n);
            mpq_class value = evaluate(z, 1, 1, 1);
            if (n) seen << ", ";
            seen << value;
            ok = value == factorial(n + 1) && z.nonnegative();
        }
        add_check(rep, "Z_N at q=a=b=1 equals (N+1)! with nonnegative coefficients (N <= 7)", ok,
                  seen.str());
    }
    {
        TrivariatePoly expected;
        expected.add_term({0, 2, 0}, 1);  // a^2
        expected.add_term({0, 0, 2}, 1);  // b^2
        expected.add_term({0, 1, 1}, 1);  // ab
        expected.add_term({1, 1, 1}, 1);  // q ab
        expected.add_term({0, 1, 0}, 1);  // a
        expected.add_term({0, 0, 1}, 1);  // b
        add_check(rep, "Z_2 = a^2 + b^2 + (1+q)ab + a + b", partition_function(2) == expected,
                  to_json(partition_function(2)).dump());
    }
    {
        bool ok = true;
        std::string bad;
        std::mt19937 rng(kSeed);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            int len = std::uniform_int_distribution<int>(0, 8)(rng);
            std::string word;
            for (int i = 0; i < len; ++i)
                word += std::uniform_int_distribution<int>(0, 1)(rng) ? 'F' : 'E';
            NormalForm direct = normal_order(word);
            if (!direct.nonnegative() || random_redex_normal_form(word, rng) != direct) {
                ok = false;
                bad = word;
            }
        }
        add_check(rep, "normal ordering is independent of redex order (200 random words)", ok,
                  bad);
    }
    {
        // Shift realization of DU - qUD = I, truncated to m coordinates;
        // F = D(U+I), E = D(U+I)U satisfy FE - qEF = F + E away from the cut.
        const int m = 8;
        const mpq_class q(3, 7);
        Mat U = zero_mat(m), D = zero_mat(m), I = zero_mat(m);
        for (int i = 0; i < m; ++i) I[i][i] = 1;
        for (int i = 0; i + 1 < m; ++i) U[i + 1][i] = 1;
        mpq_class qpow = 1, qint = 0;
        for (int i = 1; i < m; ++i) {
            qint += qpow;  // [i]_q
            qpow *= q;
            D[i - 1][i] = qint;
        }
        Mat UI = zero_mat(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) UI[i][j] = U[i][j] + I[i][j];
        Mat F = mat_mul(D, UI);
        Mat E = mat_mul(F, U);
        Mat FE = mat_mul(F, E), EF = mat_mul(E, F);
        bool ok = true;
        for (int c = 0; c <= m - 3 && ok; ++c)
            for (int r = 0; r < m && ok; ++r)
                if (FE[r][c] - q * EF[r][c] != F[r][c] + E[r][c]) ok = false;
        add_check(rep, "D(U+I), D(U+I)U realize FE - qEF = F + E on the first m-2 coordinates",
                  ok, "m=8, q=3/7");
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"roundtrips", "counts", "constructions", "lattice", "ansatz", "all"};
}

VerifyReport run_suite(const std::string& suite, int max_n) {
    if (max_n < 0) throw std::invalid_argument("run_suite: max_n must be nonnegative");
    VerifyReport rep;
    rep.suite = suite;
    rep.max_n = max_n;
    if (suite == "counts" || suite == "all") counts_suite(rep, max_n);
    if (suite == "roundtrips" || suite == "all") roundtrips_suite(rep, max_n);
    if (suite == "constructions" || suite == "all") constructions_suite(rep, max_n);
    if (suite == "lattice" || suite == "all") lattice_suite(rep, max_n);
    if (suite == "ansatz" || suite == "all") ansatz_suite(rep, max_n);
    if (rep.checks.empty()) throw std::invalid_argument("run_suite: unknown suite: " + suite);
    return rep;
}

}  // namespace stammerlab

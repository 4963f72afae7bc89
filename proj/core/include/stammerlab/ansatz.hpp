#pragma once

#include <array>
#include <compare>
#include <map>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace stammerlab {

// Integer polynomial in q, sparse by exponent; no zero coefficients stored.
class QPoly {
public:
    QPoly() = default;
    static QPoly constant(const mpz_class& c);
    static QPoly q();

    void add_term(int exp, const mpz_class& c);
    QPoly& operator+=(const QPoly& other);
    QPoly operator*(const QPoly& other) const;
    QPoly times_q() const;

    bool is_zero() const { return coeffs_.empty(); }
    bool nonnegative() const;
    const std::map<int, mpz_class>& coeffs() const { return coeffs_; }
    mpq_class eval(const mpq_class& q) const;

    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    std::map<int, mpz_class> coeffs_;
};

struct EFKey {
    int e = 0;
    int f = 0;
    friend bool operator==(const EFKey&, const EFKey&) = default;
    friend auto operator<=>(const EFKey&, const EFKey&) = default;
};

// Sum of c_{i,j}(q) E^i F^j, the normal form of a word in E and F under the
// rewrite FE -> q EF + F + E.
class NormalForm {
public:
    static NormalForm one();

    void add_term(const EFKey& key, const QPoly& c);
    const std::map<EFKey, QPoly>& terms() const { return terms_; }
    bool nonnegative() const;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;

private:
    std::map<EFKey, QPoly> terms_;
};

// Exhaustive rewriting of a word over {'E','F'}; the result is independent
// of redex order. Computed letter by letter with the normal forms of F^j E
// memoized per call, so (F+E)^N stays polynomial.
NormalForm normal_order(std::string_view word);

// Polynomial in q, a = 1/alpha, b = 1/beta; key = (q_exp, a_exp, b_exp).
class TrivariatePoly {
public:
    using Key = std::array<int, 3>;

    void add_term(const Key& key, const mpz_class& c);
    const std::map<Key, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool nonnegative() const;

    friend bool operator==(const TrivariatePoly&, const TrivariatePoly&) = default;

private:
    std::map<Key, mpz_class> terms_;
};

TrivariatePoly to_trivariate(const NormalForm& nf);

// State words over 'o' (hole, -> E) and 'x' (particle, -> F).
// Unnormalized stationary weight: normal-order the word image, then map
// E^i F^j to a^i b^j.
TrivariatePoly unnormalized_prob(std::string_view state);

// Normal form of (F+E)^N, the sum over all 2^N states.
TrivariatePoly partition_function(int n);

mpq_class evaluate(const TrivariatePoly& p, const mpq_class& q,
                   const mpq_class& a, const mpq_class& b);

}  // namespace stammerlab

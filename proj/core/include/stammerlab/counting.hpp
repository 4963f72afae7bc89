#pragma once

#include <gmpxx.h>

#include "stammerlab/partition.hpp"

namespace stammerlab {

mpz_class factorial(int n);
mpz_class binomial(int n, int k);

// Fillings of 2delta_n with k dots, at most one per row and per column:
// (n+1)!/(n-k+1)! * C(n,k). Out-of-range (n,k) count 0.
mpz_class a_count(int n, int k);
mpz_class a_count_recursive(int n, int k);   // a_{n,k} = a_{n-1,k} + (2n-k+1) a_{n-1,k-1}
mpz_class a_count_bruteforce(int n, int k);  // direct enumeration

// Generalized stammering tableaux with one empty endpoint, |lambda| = k:
//   empty -> lambda:   (n+1)! C(n,k) f_lambda
//   lambda -> empty:   (n+1)!/(k+1)! C(n,k) f_lambda
mpz_class t_empty_to(int n, const Partition& lambda);
mpz_class t_to_empty(int n, const Partition& lambda);

// Brute-force oracle over the walk enumeration; shipped so the CLI can
// cross-check the closed forms.
mpz_class t_bruteforce(int n, const Partition& mu, const Partition& nu);

}  // namespace stammerlab

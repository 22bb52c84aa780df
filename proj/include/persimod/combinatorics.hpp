#pragma once

#include <gmpxx.h>

#include <vector>

namespace persimod {

// binomial(a, b) with the conventions the power formulas rely on:
// b < 0 -> 0;  b == 0 -> 1 (even for negative a);  a < 0 -> 0;  a < b -> 0.
mpz_class binomial(const mpz_class& a, long b);
inline mpz_class binomial(long a, long b) { return binomial(mpz_class(a), b); }

// base^exp for exp >= 0, with 0^0 = 1
mpz_class power(const mpz_class& base, long exp);

// k-multisets from r kinds: binomial(r + k - 1, k)
mpz_class multiset_count(const mpz_class& r, long k);

long euler_phi(long n);
std::vector<long> divisors_of(long n);

// necklaces: c(r, n) = (1/n) sum over d | n of phi(d) r^(n/d)
mpz_class necklace_count(const mpz_class& r, long n);
// bracelets: necklaces modulo reversal
mpz_class bracelet_count(const mpz_class& r, long n);

}  // namespace persimod

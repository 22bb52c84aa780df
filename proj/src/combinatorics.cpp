#include "persimod/combinatorics.hpp"

#include "persimod/error.hpp"

namespace persimod {

mpz_class binomial(const mpz_class& a, long b) {
    if (b < 0) return 0;
    if (b == 0) return 1;
    if (a < 0 || a < b) return 0;
    mpz_class out;
    mpz_bin_ui(out.get_mpz_t(), a.get_mpz_t(), (unsigned long)b);
    return out;
}

mpz_class power(const mpz_class& base, long exp) {
    if (exp < 0) throw Error(Errc::bad_argument, "negative exponent");
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), (unsigned long)exp);
    return out;
}

mpz_class multiset_count(const mpz_class& r, long k) { return binomial(r + k - 1, k); }

long euler_phi(long n) {
    if (n < 1) throw Error(Errc::bad_argument, "phi needs n >= 1");
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long> divisors_of(long n) {
    if (n < 1) throw Error(Errc::bad_argument, "divisors need n >= 1");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

mpz_class necklace_count(const mpz_class& r, long n) {
    if (n < 1) throw Error(Errc::bad_argument, "necklaces need n >= 1");
    mpz_class sum = 0;
    for (long d : divisors_of(n)) sum += euler_phi(d) * power(r, n / d);
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), sum.get_mpz_t(), mpz_class(n).get_mpz_t());
    if (rem != 0) throw Error(Errc::internal, "necklace sum not divisible by n");
    return q;
}

mpz_class bracelet_count(const mpz_class& r, long n) {
    if (n < 1) throw Error(Errc::bad_argument, "bracelets need n >= 1");
    mpz_class c = necklace_count(r, n);
    mpz_class sum = n % 2 == 0 ? mpz_class(2 * c + (r + 1) * power(r, n / 2))
                               : mpz_class(c + power(r, (n + 1) / 2));
    long div = n % 2 == 0 ? 4 : 2;
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), sum.get_mpz_t(), mpz_class(div).get_mpz_t());
    if (rem != 0) throw Error(Errc::internal, "bracelet sum not divisible");
    return q;
}

}  // namespace persimod

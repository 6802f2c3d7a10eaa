#include "count.hpp"

namespace riordan {

Count binomial(long n, long k) {
    if (k < 0 || n < 0 || n < k) return 0;
    Count r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Count to_count(long long v) {
    internal_check(v >= 0, "to_count: counts are nonnegative");
    unsigned long long u = static_cast<unsigned long long>(v);
    Count r = static_cast<unsigned long>(u >> 32);
    r <<= 32;
    r += static_cast<unsigned long>(u & 0xffffffffULL);
    return r;
}

Count factorial(unsigned long n) {
    Count r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Count exact_div(const Count& num, const Count& den, const char* what) {
    internal_check(den != 0 && mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()), what);
    Count q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace riordan

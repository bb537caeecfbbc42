#include "symdisc/bigint.hpp"

#include "symdisc/errors.hpp"

namespace symdisc {

BigInt factorial(int k) {
    if (k < 0) throw argument_error("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

BigInt binomial(long long n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = static_cast<int>(n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is C(n-k+i, i) here
    }
    return r;
}

BigInt int_pow(const BigInt& base, int exp) {
    if (exp < 0) throw argument_error("int_pow: negative exponent");
    BigInt r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

} // namespace symdisc

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace symdisc {

// All counting is done in exact integer / rational arithmetic. Floating point
// is banned throughout the library.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(int k);
BigInt binomial(long long n, int k); // 0 when k > n or k < 0
BigInt int_pow(const BigInt& base, int exp);

} // namespace symdisc

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace thrackle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n,k) as an exact big integer; 0 when k < 0 or k > n.
BigInt binomial(int n, int k);

BigInt factorial(int n);

}  // namespace thrackle

#include "thrackle/numeric.hpp"

#include <stdexcept>

namespace thrackle {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: C(n-k+i, i) is an integer
    }
    return result;
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

}  // namespace thrackle

#include "jkres/todd.hpp"

#include <cstdlib>

namespace jkres {

RatVec todd_coefficients(int max_degree) {
    if (max_degree < 0) throw Error(ErrorCode::BadInput, "negative degree");
    // (1 - e^{-t})/t = sum_{k>=0} (-1)^k t^k / (k+1)!, then invert the series.
    int n = max_degree;
    RatVec c(n + 1);
    Int fact = 1;
    for (int k = 0; k <= n; ++k) {
        fact *= (k + 1);
        c[k] = Rational((k % 2 == 0) ? Int(1) : Int(-1), fact);
    }
    RatVec b(n + 1, Rational(0));
    b[0] = Rational(1);
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += c[j] * b[k - j];
        b[k] = -acc;
    }
    if (std::getenv("JKRES_FAULT_TODD") != nullptr && n >= 2)
        b[2] += Rational(1, 7);
    return b;
}

} // namespace jkres

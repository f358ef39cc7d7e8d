#ifndef LRCDUAL_EXACT_HPP
#define LRCDUAL_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace lrcdual {

using Int = mpz_class;
using Rat = mpq_class;

/// Pascal's triangle up to row n, exact. triangle[i][j] = C(i, j).
std::vector<std::vector<Int>> binomial_triangle(int n);

/// C(n, k), exact; 0 outside the triangle.
Int binomial(int n, int k);

/// base^e for e >= 0.
Int int_pow(long base, unsigned long e);

/// Smallest e >= 0 with q^e >= x. Requires q >= 2 and x > 0.
int ceil_log(int q, const Rat& x);

/// Largest e >= 0 with q^e <= x. Requires q >= 2 and x >= 1.
int floor_log(int q, const Rat& x);

}  // namespace lrcdual

#endif

#include "lrcdual/exact.hpp"

#include <stdexcept>

namespace lrcdual {

std::vector<std::vector<Int>> binomial_triangle(int n) {
    std::vector<std::vector<Int>> t(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        t[i].resize(static_cast<size_t>(i) + 1);
        t[i][0] = 1;
        t[i][i] = 1;
        for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
}

Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int int_pow(long base, unsigned long e) {
    Int r;
    Int b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

int ceil_log(int q, const Rat& x) {
    if (q < 2) throw std::invalid_argument("ceil_log: base must be >= 2");
    if (sgn(x) <= 0) throw std::invalid_argument("ceil_log: argument must be positive");
    int e = 0;
    Rat p(1);
    while (p < x) {
        p *= q;
        ++e;
    }
    return e;
}

int floor_log(int q, const Rat& x) {
    if (q < 2) throw std::invalid_argument("floor_log: base must be >= 2");
    if (x < 1) throw std::invalid_argument("floor_log: argument must be >= 1");
    int e = 0;
    Rat p(q);
    while (p <= x) {
        p *= q;
        ++e;
    }
    return e;
}

}  // namespace lrcdual

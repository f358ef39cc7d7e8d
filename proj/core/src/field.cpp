#include "lrcdual/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lrcdual {

namespace {

// Polynomials over GF(p) encoded as integer digit strings base p,
// least-significant coefficient first.
using Poly = std::vector<int>;

Poly poly_from_index(int idx, int p, int len) {
    Poly c(len, 0);
    for (int i = 0; i < len; ++i) {
        c[i] = idx % p;
        idx /= p;
    }
    return c;
}

int poly_degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// a mod b over GF(p); b monic-ish (leading coefficient inverted via p-arith).
Poly poly_mod(Poly a, const Poly& b, int p) {
    int db = poly_degree(b);
    int lead = b[db];
    // inverse of lead mod p
    int lead_inv = 1;
    for (int x = 1; x < p; ++x)
        if (lead * x % p == 1) lead_inv = x;
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        int f = a[da] * lead_inv % p;
        int shift = da - db;
        for (int i = 0; i <= db; ++i) a[i + shift] = ((a[i + shift] - f * b[i]) % p + p) % p;
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& red, int p) {
    Poly prod(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(prod), red, p);
}

bool poly_is_zero(const Poly& a) { return poly_degree(a) < 0; }

// Irreducibility by trial division with every monic polynomial of degree
// 1..deg/2. Fine for the supported degrees (m <= 6, p <= 7).
bool poly_irreducible(const Poly& f, int p) {
    int d = poly_degree(f);
    if (d <= 0) return false;
    for (int dd = 1; dd * 2 <= d; ++dd) {
        int count = 1;
        for (int i = 0; i < dd; ++i) count *= p;  // p^dd monic candidates
        for (int idx = 0; idx < count; ++idx) {
            Poly g = poly_from_index(idx, p, dd + 1);
            g[dd] = 1;
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

int poly_to_value(const Poly& a, int p, int m) {
    int v = 0, mult = 1;
    for (int i = 0; i < m; ++i) {
        v += (i < static_cast<int>(a.size()) ? a[i] : 0) * mult;
        mult *= p;
    }
    return v;
}

Poly value_to_poly(int v, int p, int m) {
    Poly a(m, 0);
    for (int i = 0; i < m; ++i) {
        a[i] = v % p;
        v /= p;
    }
    return a;
}

}  // namespace

bool is_prime_power(int q, int* p_out, int* m_out) {
    if (q < 2) return false;
    int p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (p * p > q) p = q;  // q itself prime
    int m = 0, x = q;
    while (x % p == 0) {
        x /= p;
        ++m;
    }
    if (x != 1) return false;
    if (p_out) *p_out = p;
    if (m_out) *m_out = m;
    return true;
}

Field::Field(int q) : q_(q) {
    if (!is_prime_power(q, &p_, &m_) || q > 64)
        throw std::invalid_argument("GF(" + std::to_string(q) + "): q must be a prime power in [2, 64]");
    if (m_ > 1) {
        // Lexicographically smallest monic irreducible of degree m, scanning
        // candidates by their base-p encoding (constant term least
        // significant). Irreducible polynomials of every degree exist, so the
        // scan always terminates.
        int count = 1;
        for (int i = 0; i < m_; ++i) count *= p_;
        for (int idx = 0; idx < count; ++idx) {
            Poly f = poly_from_index(idx, p_, m_ + 1);
            f[m_] = 1;
            if (poly_irreducible(f, p_)) {
                poly_ = f;
                break;
            }
        }
    }
    build_tables();
}

Field::Field(int q, const std::vector<int>& reduction_poly) : q_(q), poly_(reduction_poly) {
    if (!is_prime_power(q, &p_, &m_) || q > 64)
        throw std::invalid_argument("GF(" + std::to_string(q) + "): q must be a prime power in [2, 64]");
    if (m_ == 1) {
        if (!poly_.empty()) throw std::invalid_argument("prime field takes an empty reduction polynomial");
    } else {
        if (static_cast<int>(poly_.size()) != m_ + 1 || poly_[m_] != 1)
            throw std::invalid_argument("reduction polynomial must be monic of degree m");
        for (int c : poly_)
            if (c < 0 || c >= p_) throw std::invalid_argument("reduction polynomial coefficients must lie in [0, p)");
        if (!poly_irreducible(poly_, p_)) throw std::invalid_argument("reduction polynomial is reducible over GF(p)");
    }
    build_tables();
}

void Field::build_tables() {
    add_tab_.resize(static_cast<size_t>(q_) * q_);
    mul_tab_.resize(static_cast<size_t>(q_) * q_);
    neg_tab_.resize(q_);
    inv_tab_.assign(q_, 0);
    log_.assign(q_, 0);
    exp_.resize(q_ - 1);

    const Poly red = (m_ == 1) ? Poly{0, 1} : poly_;  // unused for m == 1

    for (int a = 0; a < q_; ++a) {
        Poly pa = value_to_poly(a, p_, m_);
        // negation: coefficientwise
        Poly na(m_);
        for (int i = 0; i < m_; ++i) na[i] = (p_ - pa[i]) % p_;
        neg_tab_[a] = static_cast<uint8_t>(poly_to_value(na, p_, m_));
        for (int b = 0; b < q_; ++b) {
            Poly pb = value_to_poly(b, p_, m_);
            Poly s(m_);
            for (int i = 0; i < m_; ++i) s[i] = (pa[i] + pb[i]) % p_;
            add_tab_[static_cast<size_t>(a) * q_ + b] = static_cast<uint8_t>(poly_to_value(s, p_, m_));
            Poly prod = (m_ == 1) ? Poly{a * b % p_} : poly_mul_mod(pa, pb, red, p_);
            mul_tab_[static_cast<size_t>(a) * q_ + b] = static_cast<uint8_t>(poly_to_value(prod, p_, m_));
        }
    }

    // Primitive element by exhaustive order check, then log/antilog.
    for (int g = 1; g < q_; ++g) {
        int x = 1, order = 0;
        do {
            x = mul_tab_[static_cast<size_t>(x) * q_ + g];
            ++order;
        } while (x != 1);
        if (order == q_ - 1) {
            x = 1;
            for (int e = 0; e < q_ - 1; ++e) {
                exp_[e] = static_cast<uint8_t>(x);
                log_[x] = e;
                x = mul_tab_[static_cast<size_t>(x) * q_ + g];
            }
            break;
        }
    }
    for (int a = 1; a < q_; ++a) inv_tab_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldElement Field::element(int value) const {
    if (value < 0 || value >= q_)
        throw std::invalid_argument("GF(" + std::to_string(q_) + "): element value " + std::to_string(value) +
                                    " out of range");
    return FieldElement(value, this);
}

void Field::check_operand(FieldElement a) const {
    if (a.field() != this) throw std::invalid_argument("field element belongs to a different field");
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    check_operand(a);
    check_operand(b);
    return FieldElement(add_v(a.value(), b.value()), this);
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
    check_operand(a);
    check_operand(b);
    return FieldElement(sub_v(a.value(), b.value()), this);
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    check_operand(a);
    check_operand(b);
    return FieldElement(mul_v(a.value(), b.value()), this);
}

FieldElement Field::neg(FieldElement a) const {
    check_operand(a);
    return FieldElement(neg_tab_[a.value()], this);
}

FieldElement Field::inv(FieldElement a) const {
    check_operand(a);
    return FieldElement(inv_v(a.value()), this);
}

int Field::inv_v(int a) const {
    if (a == 0) throw std::domain_error("GF(" + std::to_string(q_) + "): inverse of zero");
    return inv_tab_[a];
}

FieldElement Field::pow(FieldElement a, long e) const {
    check_operand(a);
    if (a.is_zero()) {
        if (e < 0) throw std::domain_error("zero to a negative power");
        return e == 0 ? one() : zero();
    }
    long ord = q_ - 1;
    long le = ((e % ord) + ord) % ord;
    return FieldElement(exp_[static_cast<size_t>(log_[a.value()]) * le % ord], this);
}

FieldPtr make_field(int q) { return std::make_shared<const Field>(q); }

}  // namespace lrcdual

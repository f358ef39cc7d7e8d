#ifndef LRCDUAL_FIELD_HPP
#define LRCDUAL_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace lrcdual {

class Field;

/// An element of a specific GF(q). The value is the polynomial-basis index:
/// coefficient c_i of x^i contributes c_i * p^i, so 0 is the additive and 1
/// the multiplicative identity in every field.
class FieldElement {
  public:
    FieldElement() : v_(0), f_(nullptr) {}
    int value() const { return v_; }
    const Field* field() const { return f_; }
    bool is_zero() const { return v_ == 0; }

    friend bool operator==(FieldElement a, FieldElement b) { return a.v_ == b.v_ && a.f_ == b.f_; }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

  private:
    friend class Field;
    FieldElement(int v, const Field* f) : v_(static_cast<uint8_t>(v)), f_(f) {}
    uint8_t v_;
    const Field* f_;
};

/// GF(q) for a prime power q in [2, 64], with exhaustive arithmetic tables.
/// Immutable after construction and safe for unrestricted concurrent use.
/// Multiplication and inversion go through precomputed tables built from
/// log/antilog over a primitive element.
class Field {
  public:
    /// Canonical field: reduction polynomial is the lexicographically
    /// smallest monic irreducible of degree m over GF(p) (coefficients
    /// compared least-significant-first); for GF(4) this is x^2+x+1.
    /// Rejects q that is not a prime power in [2, 64].
    explicit Field(int q);

    /// Same, with a caller-chosen monic reduction polynomial given as the
    /// coefficient list (c_0, ..., c_m) with c_m = 1. Irreducibility over
    /// GF(p) is verified by trial factor search. Pass an empty list for
    /// prime fields.
    Field(int q, const std::vector<int>& reduction_poly);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return m_; }
    /// Empty for prime fields, otherwise the m+1 coefficients c_0..c_m.
    const std::vector<int>& reduction_poly() const { return poly_; }

    FieldElement element(int value) const;
    FieldElement zero() const { return FieldElement(0, this); }
    FieldElement one() const { return FieldElement(1, this); }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    /// a must be nonzero.
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, long e) const;

    // Raw-value paths used by the linear-algebra inner loops. Values must
    // already be in [0, q).
    int add_v(int a, int b) const { return add_tab_[static_cast<size_t>(a) * q_ + b]; }
    int sub_v(int a, int b) const { return add_tab_[static_cast<size_t>(a) * q_ + neg_tab_[b]]; }
    int mul_v(int a, int b) const { return mul_tab_[static_cast<size_t>(a) * q_ + b]; }
    int neg_v(int a) const { return neg_tab_[a]; }
    int inv_v(int a) const;

    /// Structural equality: same q and same reduction polynomial.
    bool same(const Field& other) const { return q_ == other.q_ && poly_ == other.poly_; }

  private:
    void build_tables();
    void check_operand(FieldElement a) const;

    int q_, p_, m_;
    std::vector<int> poly_;
    std::vector<uint8_t> add_tab_;   // q*q
    std::vector<uint8_t> mul_tab_;   // q*q
    std::vector<uint8_t> neg_tab_;   // q
    std::vector<uint8_t> inv_tab_;   // q (entry 0 unused)
    std::vector<int> log_;           // q (entry 0 unused)
    std::vector<uint8_t> exp_;       // q-1
};

using FieldPtr = std::shared_ptr<const Field>;

/// Shared canonical field, the usual way to obtain one.
FieldPtr make_field(int q);

/// True iff q = p^m for a prime p and m >= 1; reports p and m when asked.
bool is_prime_power(int q, int* p_out = nullptr, int* m_out = nullptr);

}  // namespace lrcdual

#endif

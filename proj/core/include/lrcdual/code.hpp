#ifndef LRCDUAL_CODE_HPP
#define LRCDUAL_CODE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lrcdual/linalg.hpp"

namespace lrcdual {

/// Codeword budget for exhaustive enumeration. Defaults to 2^26 words and can
/// be overridden with the LRCDUAL_ENUM_BUDGET environment variable.
uint64_t default_enumeration_budget();

/// Plain weight distribution: counts[i] = number of codewords of weight i.
struct WeightDistribution {
    std::vector<long long> counts;  // size n+1

    int n() const { return static_cast<int>(counts.size()) - 1; }
    long long total() const;

    friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) = default;
};

/// Refined weight distribution: entry (i, j) counts the weight-i codewords
/// whose support contains coordinate j, for 1 <= i <= n+1 and 1 <= j <= n.
/// Row n+1 is identically zero; it exists so the dual transform can consume
/// the matrix unchanged.
class RefinedWeightDistribution {
  public:
    explicit RefinedWeightDistribution(int n) : n_(n), w_(static_cast<size_t>(n + 1) * n, 0) {}

    int n() const { return n_; }
    long long at(int i, int j) const { return w_[index(i, j)]; }
    void set(int i, int j, long long v) { w_[index(i, j)] = v; }
    void add(int i, int j, long long v) { w_[index(i, j)] += v; }

    friend bool operator==(const RefinedWeightDistribution& a, const RefinedWeightDistribution& b) = default;

  private:
    size_t index(int i, int j) const;
    int n_;
    std::vector<long long> w_;  // (n+1) x n, row-major
};

/// Recovery data for one coordinate: c_i = sum over l in set of
/// coefficient_l * c_l holds for every codeword c.
struct RecoverySet {
    int coordinate = 0;             // 1-based
    std::vector<int> set;           // ascending, excludes coordinate
    std::vector<int> coefficients;  // field element values aligned with set
};

struct CodeProfile {
    int n = 0, k = 0;
    int d = 0;
    std::optional<int> d_dual;    // empty for the full space (dual is the zero code)
    std::optional<int> locality;  // empty when some coordinate lies in no dual support
    bool nondegenerate = false;
    bool dual_nondegenerate = false;
};

/// A linear [n, k] code over GF(q), held as the unique reduced row-echelon
/// generator matrix. The parity-check matrix (a canonical basis of the dual)
/// is computed once at construction. Immutable.
class LinearCode {
  public:
    /// Rows of `generator` may be any spanning set; they are row-reduced and
    /// zero rows dropped. Throws std::invalid_argument for the zero code.
    LinearCode(FieldPtr field, const Mat& generator);

    int n() const { return generator_.cols(); }
    int k() const { return generator_.rows(); }
    int q() const { return field_->q(); }
    const FieldPtr& field_ptr() const { return field_; }
    const Field& field() const { return *field_; }

    const Mat& generator() const { return generator_; }
    const Mat& parity_check() const { return parity_check_; }

    LinearCode dual() const;
    uint64_t size() const;  // q^k; throws BudgetError if it exceeds 2^62

    /// Calls fn once per codeword (q^k calls, message vectors in
    /// lexicographic order; the Vec buffer is reused between calls).
    void for_each_codeword(const std::function<void(const Vec&)>& fn,
                           uint64_t budget = default_enumeration_budget()) const;
    std::vector<Vec> codewords(uint64_t budget = default_enumeration_budget()) const;

    WeightDistribution weight_distribution(uint64_t budget = default_enumeration_budget()) const;
    RefinedWeightDistribution refined_weight_distribution(uint64_t budget = default_enumeration_budget()) const;

    int minimum_distance(uint64_t budget = default_enumeration_budget()) const;
    int dual_distance(uint64_t budget = default_enumeration_budget()) const;

    /// Largest over coordinates j of (minimal weight of a dual codeword
    /// covering j) - 1, i.e. the minimal locality. Empty when some coordinate
    /// lies in no dual support.
    std::optional<int> locality(uint64_t budget = default_enumeration_budget()) const;

    /// Recovery set for coordinate i from a minimum-weight dual codeword
    /// covering i. Throws std::domain_error when no dual codeword covers i.
    /// The recovery identity is replayed against all codewords whenever q^k
    /// fits the budget.
    RecoverySet recovery_set(int i, uint64_t budget = default_enumeration_budget()) const;

    bool is_nondegenerate() const;

    /// The subcode { x in C : x_j = 0 }, kept at full length n (coordinate j
    /// stays in place, always zero). Throws std::domain_error if that subcode
    /// is the zero code.
    LinearCode shorten(int j) const;

    CodeProfile profile(uint64_t budget = default_enumeration_budget()) const;

    /// Same row space (by generator identity; rref is canonical).
    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.generator_ == b.generator_; }

  private:
    FieldPtr field_;
    Mat generator_;
    Mat parity_check_;
};

}  // namespace lrcdual

#endif

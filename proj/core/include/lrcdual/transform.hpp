#ifndef LRCDUAL_TRANSFORM_HPP
#define LRCDUAL_TRANSFORM_HPP

#include <vector>

#include "lrcdual/code.hpp"
#include "lrcdual/exact.hpp"

namespace lrcdual {

/// Exact Krawtchouk coefficients K[i][j] for fixed (n, q),
///   K_{i,j} = sum_{t=0}^{i} C(n-t, i-t) C(n-j, t) (-1)^{i-t} q^t,
/// the kernel of the MacWilliams transform. Immutable after construction.
class KrawtchoukTable {
  public:
    KrawtchoukTable(int n, int q);

    int n() const { return n_; }
    int q() const { return q_; }
    const Int& at(int i, int j) const;  // 0 <= i, j <= n

  private:
    int n_, q_;
    std::vector<Int> k_;  // (n+1) x (n+1)
};

/// Weight distribution of the dual code:
///   W_i(dual) = (1/|C|) * sum_j K_{i,j} W_j(C).
/// Exact; throws std::domain_error if any output entry is negative or not an
/// integer (the input was not a valid distribution). code_size must equal the
/// sum of the input counts.
WeightDistribution macwilliams(const WeightDistribution& w, long long code_size, int q);

/// An (n+1) x n matrix of exact rationals, 1-based, the common shape of
/// refined weight distributions and LP iterates.
class RefinedMatrix {
  public:
    explicit RefinedMatrix(int n) : n_(n), a_(static_cast<size_t>(n + 1) * n) {}
    static RefinedMatrix from_counts(const RefinedWeightDistribution& w);

    int n() const { return n_; }
    const Rat& at(int i, int j) const { return a_[index(i, j)]; }
    Rat& at(int i, int j) { return a_[index(i, j)]; }

    friend bool operator==(const RefinedMatrix& a, const RefinedMatrix& b) = default;

  private:
    size_t index(int i, int j) const;
    int n_;
    std::vector<Rat> a_;
};

/// The duality transform a -> a^perp on (n+1) x n matrices. Entry (i, j) of
/// the image is affine in the input and splits as
///   a^perp_ij = constant(i) + sum_{u,v} [ base(i,u) + (v==j) point(i,u) ] a_uv,
/// i.e. one coefficient per input row u applied to every column, plus a
/// j-column correction. The same coefficients drive both the matrix
/// evaluation and the LP constraint rows, so the formula exists exactly once.
class RefinedDualTransform {
  public:
    RefinedDualTransform(int n, int q);

    int n() const { return n_; }
    int q() const { return q_; }
    const KrawtchoukTable& krawtchouk() const { return kraw_; }

    const Rat& constant(int i) const;      // 1 <= i <= n
    const Rat& base(int i, int u) const;   // 1 <= i <= n, 1 <= u <= n+1
    const Rat& point(int i, int u) const;  // 1 <= i <= n, 1 <= u <= n+1

    /// Full image: rows 1..n computed, row n+1 zero.
    RefinedMatrix apply(const RefinedMatrix& a) const;

  private:
    int n_, q_;
    KrawtchoukTable kraw_;
    std::vector<Rat> constant_;  // n
    std::vector<Rat> base_;      // n x (n+1)
    std::vector<Rat> point_;     // n x (n+1)
};

/// Convenience one-shot form of RefinedDualTransform::apply.
RefinedMatrix refined_dual_transform(const RefinedMatrix& a, int n, int q);

/// Refined weight distribution of the primal code from the refined
/// distribution of its dual: the dual transform scaled by 1/|dual|. Exact;
/// throws std::domain_error when an output entry is negative or not an
/// integer (which signals a degenerate input code).
RefinedWeightDistribution refined_from_dual(const RefinedWeightDistribution& wdual, int n, int q,
                                            long long dual_size);

}  // namespace lrcdual

#endif

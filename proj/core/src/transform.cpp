#include "lrcdual/transform.hpp"

#include <stdexcept>
#include <string>

namespace lrcdual {

KrawtchoukTable::KrawtchoukTable(int n, int q) : n_(n), q_(q) {
    if (n < 1) throw std::invalid_argument("KrawtchoukTable: n must be >= 1");
    if (!is_prime_power(q)) throw std::invalid_argument("KrawtchoukTable: q must be a prime power");
    k_.resize(static_cast<size_t>(n + 1) * (n + 1));
    auto bin = binomial_triangle(n);
    std::vector<Int> qpow(n + 1);
    qpow[0] = 1;
    for (int t = 1; t <= n; ++t) qpow[t] = qpow[t - 1] * q;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            Int acc(0);
            for (int t = 0; t <= i; ++t) {
                if (i - t > n - t || t > n - j) continue;
                Int term = bin[n - t][i - t] * bin[n - j][t] * qpow[t];
                if ((i - t) % 2) acc -= term;
                else acc += term;
            }
            k_[static_cast<size_t>(i) * (n + 1) + j] = std::move(acc);
        }
}

const Int& KrawtchoukTable::at(int i, int j) const {
    if (i < 0 || i > n_ || j < 0 || j > n_) throw std::out_of_range("KrawtchoukTable index");
    return k_[static_cast<size_t>(i) * (n_ + 1) + j];
}

WeightDistribution macwilliams(const WeightDistribution& w, long long code_size, int q) {
    const int n = w.n();
    if (code_size <= 0 || w.total() != code_size)
        throw std::invalid_argument("macwilliams: code_size must equal the sum of the counts");
    KrawtchoukTable k(n, q);
    WeightDistribution out;
    out.counts.assign(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        Int acc(0);
        for (int j = 0; j <= n; ++j) acc += k.at(i, j) * Int(static_cast<long>(w.counts[j]));
        Rat v(acc, Int(static_cast<long>(code_size)));
        v.canonicalize();
        if (sgn(v) < 0 || v.get_den() != 1)
            throw std::domain_error("macwilliams: entry " + std::to_string(i) +
                                    " of the image is not a nonnegative integer");
        out.counts[i] = static_cast<long long>(v.get_num().get_si());
    }
    return out;
}

size_t RefinedMatrix::index(int i, int j) const {
    if (i < 1 || i > n_ + 1 || j < 1 || j > n_) throw std::out_of_range("RefinedMatrix index");
    return static_cast<size_t>(i - 1) * n_ + (j - 1);
}

RefinedMatrix RefinedMatrix::from_counts(const RefinedWeightDistribution& w) {
    RefinedMatrix m(w.n());
    for (int i = 1; i <= w.n() + 1; ++i)
        for (int j = 1; j <= w.n(); ++j) m.at(i, j) = Rat(static_cast<long>(w.at(i, j)));
    return m;
}

RefinedDualTransform::RefinedDualTransform(int n, int q) : n_(n), q_(q), kraw_(n, q) {
    constant_.resize(n);
    base_.assign(static_cast<size_t>(n) * (n + 1), Rat(0));
    point_.assign(static_cast<size_t>(n) * (n + 1), Rat(0));

    const Rat inv_q(1, q);
    const Rat qm1_over_q(q - 1, q);

    for (int i = 1; i <= n; ++i) {
        Rat* base_row = base_.data() + static_cast<size_t>(i - 1) * (n + 1);
        Rat* point_row = point_.data() + static_cast<size_t>(i - 1) * (n + 1);

        constant_[i - 1] = Rat(kraw_.at(i, 0) - kraw_.at(i, 1)) * qm1_over_q;

        // row-wide coefficients (applied to every column of input row u)
        for (int u = 2; u <= n; ++u) base_row[u - 1] += Rat(kraw_.at(i, u)) * qm1_over_q / u;
        for (int u = 1; u <= n - 1; ++u) base_row[u - 1] -= Rat(kraw_.at(i, u + 1)) * qm1_over_q / u;

        // column-j corrections
        point_row[2 - 1] -= Rat(kraw_.at(i, 1)) * inv_q;
        for (int u = 1; u <= n - 1; ++u) point_row[u - 1] += Rat(kraw_.at(i, u + 1)) * qm1_over_q;
        for (int u = 3; u <= n + 1; ++u) point_row[u - 1] -= Rat(kraw_.at(i, u - 1)) * inv_q;
        for (int u = 2; u <= n; ++u) point_row[u - 1] -= Rat(kraw_.at(i, u)) * Rat(q - 2, q);

        for (int u = 0; u <= n; ++u) {
            base_row[u].canonicalize();
            point_row[u].canonicalize();
        }
    }
}

const Rat& RefinedDualTransform::constant(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("RefinedDualTransform::constant");
    return constant_[i - 1];
}

const Rat& RefinedDualTransform::base(int i, int u) const {
    if (i < 1 || i > n_ || u < 1 || u > n_ + 1) throw std::out_of_range("RefinedDualTransform::base");
    return base_[static_cast<size_t>(i - 1) * (n_ + 1) + (u - 1)];
}

const Rat& RefinedDualTransform::point(int i, int u) const {
    if (i < 1 || i > n_ || u < 1 || u > n_ + 1) throw std::out_of_range("RefinedDualTransform::point");
    return point_[static_cast<size_t>(i - 1) * (n_ + 1) + (u - 1)];
}

RefinedMatrix RefinedDualTransform::apply(const RefinedMatrix& a) const {
    if (a.n() != n_) throw std::invalid_argument("RefinedDualTransform::apply: shape mismatch");
    RefinedMatrix out(n_);
    // row sums of the input, reused across output rows
    std::vector<Rat> row_sum(n_ + 1, Rat(0));
    for (int u = 1; u <= n_ + 1; ++u)
        for (int t = 1; t <= n_; ++t) row_sum[u - 1] += a.at(u, t);

    for (int i = 1; i <= n_; ++i) {
        Rat shared = constant(i);
        for (int u = 1; u <= n_ + 1; ++u) shared += base(i, u) * row_sum[u - 1];
        for (int j = 1; j <= n_; ++j) {
            Rat v = shared;
            for (int u = 1; u <= n_ + 1; ++u) v += point(i, u) * a.at(u, j);
            v.canonicalize();
            out.at(i, j) = std::move(v);
        }
    }
    // row n+1 stays zero by convention
    return out;
}

RefinedMatrix refined_dual_transform(const RefinedMatrix& a, int n, int q) {
    return RefinedDualTransform(n, q).apply(a);
}

RefinedWeightDistribution refined_from_dual(const RefinedWeightDistribution& wdual, int n, int q,
                                            long long dual_size) {
    if (wdual.n() != n) throw std::invalid_argument("refined_from_dual: shape mismatch");
    if (dual_size <= 0) throw std::invalid_argument("refined_from_dual: dual_size must be positive");
    for (int j = 1; j <= n; ++j)
        if (wdual.at(n + 1, j) != 0)
            throw std::invalid_argument("refined_from_dual: row n+1 of the input must be zero");

    RefinedMatrix image = refined_dual_transform(RefinedMatrix::from_counts(wdual), n, q);
    RefinedWeightDistribution out(n);
    const Rat size(static_cast<long>(dual_size));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Rat v = image.at(i, j) / size;
            v.canonicalize();
            if (sgn(v) < 0 || v.get_den() != 1)
                throw std::domain_error("refined_from_dual: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") is not a nonnegative integer; input must come from a non-degenerate code");
            out.set(i, j, static_cast<long long>(v.get_num().get_si()));
        }
    return out;
}

}  // namespace lrcdual

#include "lrcdual/code.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "lrcdual/errors.hpp"

namespace lrcdual {

uint64_t default_enumeration_budget() {
    static const uint64_t budget = [] {
        if (const char* env = std::getenv("LRCDUAL_ENUM_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<uint64_t>(v);
        }
        return uint64_t{1} << 26;
    }();
    return budget;
}

long long WeightDistribution::total() const {
    long long t = 0;
    for (long long c : counts) t += c;
    return t;
}

size_t RefinedWeightDistribution::index(int i, int j) const {
    if (i < 1 || i > n_ + 1 || j < 1 || j > n_) throw std::out_of_range("refined distribution index");
    return static_cast<size_t>(i - 1) * n_ + (j - 1);
}

LinearCode::LinearCode(FieldPtr field, const Mat& generator)
    : field_(std::move(field)), generator_(rref(generator).matrix), parity_check_(generator_) {
    if (!field_->same(generator.field())) throw std::invalid_argument("generator matrix over a different field");
    if (generator_.rows() == 0) throw std::invalid_argument("zero code: generator has empty row space");
    parity_check_ = rref(kernel_basis(generator_)).matrix;
}

LinearCode LinearCode::dual() const {
    if (parity_check_.rows() == 0) throw std::invalid_argument("dual of the full space is the zero code");
    return LinearCode(field_, parity_check_);
}

uint64_t LinearCode::size() const {
    uint64_t s = 1;
    for (int i = 0; i < k(); ++i) {
        if (s > (uint64_t{1} << 62) / q()) throw BudgetError("code size q^k exceeds 2^62");
        s *= q();
    }
    return s;
}

namespace {

uint64_t checked_size(int q, int k, uint64_t budget, const char* what) {
    uint64_t s = 1;
    for (int i = 0; i < k; ++i) {
        s *= q;
        if (s > budget)
            throw BudgetError(std::string(what) + ": q^k = " + std::to_string(q) + "^" + std::to_string(k) +
                              " exceeds enumeration budget " + std::to_string(budget));
    }
    return s;
}

}  // namespace

void LinearCode::for_each_codeword(const std::function<void(const Vec&)>& fn, uint64_t budget) const {
    checked_size(q(), k(), budget, "for_each_codeword");
    const Field& f = *field_;
    const int nn = n(), kk = k(), qq = q();

    // scaled[r][v] = v * (row r), so each step of the message odometer adds a
    // precomputed row into the running word.
    std::vector<std::vector<std::vector<uint8_t>>> scaled(kk);
    for (int r = 0; r < kk; ++r) {
        scaled[r].assign(qq, std::vector<uint8_t>(nn, 0));
        const uint8_t* row = generator_.row_data(r + 1);
        for (int v = 0; v < qq; ++v)
            for (int c = 0; c < nn; ++c) scaled[r][v][c] = static_cast<uint8_t>(f.mul_v(v, row[c]));
    }

    Vec word(field_, nn);
    std::vector<uint8_t>& buf = const_cast<std::vector<uint8_t>&>(word.raw());

    // Depth-first over message digits: partial[t] = sum of the first t scaled rows.
    std::vector<std::vector<uint8_t>> partial(kk + 1, std::vector<uint8_t>(nn, 0));
    std::vector<int> digit(kk, 0);
    int t = 0;
    while (true) {
        if (t == kk) {
            buf = partial[kk];
            fn(word);
            // backtrack to the deepest digit that can still advance
            --t;
            while (t >= 0 && digit[t] == qq - 1) --t;
            if (t < 0) break;
            ++digit[t];
        }
        const std::vector<uint8_t>& add = scaled[t][digit[t]];
        for (int c = 0; c < nn; ++c) partial[t + 1][c] = static_cast<uint8_t>(f.add_v(partial[t][c], add[c]));
        ++t;
        for (int u = t; u < kk; ++u) digit[u] = 0;
    }
}

std::vector<Vec> LinearCode::codewords(uint64_t budget) const {
    std::vector<Vec> out;
    out.reserve(checked_size(q(), k(), budget, "codewords"));
    for_each_codeword([&](const Vec& w) { out.push_back(w); }, budget);
    return out;
}

WeightDistribution LinearCode::weight_distribution(uint64_t budget) const {
    WeightDistribution wd;
    wd.counts.assign(n() + 1, 0);
    for_each_codeword([&](const Vec& w) { ++wd.counts[w.weight()]; }, budget);
    return wd;
}

RefinedWeightDistribution LinearCode::refined_weight_distribution(uint64_t budget) const {
    RefinedWeightDistribution rd(n());
    const int nn = n();
    for_each_codeword(
        [&](const Vec& w) {
            int wt = w.weight();
            if (wt == 0) return;
            const std::vector<uint8_t>& raw = w.raw();
            for (int c = 0; c < nn; ++c)
                if (raw[c] != 0) rd.add(wt, c + 1, 1);
        },
        budget);
    return rd;
}

int LinearCode::minimum_distance(uint64_t budget) const {
    int best = n() + 1;
    for_each_codeword(
        [&](const Vec& w) {
            int wt = w.weight();
            if (wt > 0 && wt < best) best = wt;
        },
        budget);
    return best;  // k >= 1 guarantees a nonzero word
}

int LinearCode::dual_distance(uint64_t budget) const { return dual().minimum_distance(budget); }

std::optional<int> LinearCode::locality(uint64_t budget) const {
    if (parity_check_.rows() == 0) return std::nullopt;  // full space: dual = {0}
    LinearCode d = dual();
    const int nn = n();
    std::vector<int> min_cover(nn, nn + 1);
    d.for_each_codeword(
        [&](const Vec& w) {
            int wt = w.weight();
            if (wt == 0) return;
            const std::vector<uint8_t>& raw = w.raw();
            for (int c = 0; c < nn; ++c)
                if (raw[c] != 0 && wt < min_cover[c]) min_cover[c] = wt;
        },
        budget);
    int r = 0;
    for (int c = 0; c < nn; ++c) {
        if (min_cover[c] > nn) return std::nullopt;  // coordinate in no dual support
        if (min_cover[c] - 1 > r) r = min_cover[c] - 1;
    }
    return r;
}

RecoverySet LinearCode::recovery_set(int i, uint64_t budget) const {
    if (i < 1 || i > n()) throw std::out_of_range("recovery_set: coordinate out of range");
    if (parity_check_.rows() == 0)
        throw std::domain_error("recovery_set: no dual codeword covers coordinate " + std::to_string(i));
    LinearCode d = dual();
    std::optional<Vec> best;
    d.for_each_codeword(
        [&](const Vec& w) {
            if (w.raw()[i - 1] == 0) return;
            int wt = w.weight();
            if (wt > 0 && (!best || wt < best->weight())) best = w;
        },
        budget);
    if (!best) throw std::domain_error("recovery_set: no dual codeword covers coordinate " + std::to_string(i));

    const Field& f = *field_;
    RecoverySet rs;
    rs.coordinate = i;
    int xi_inv = f.inv_v(best->raw()[i - 1]);
    for (int c = 1; c <= n(); ++c) {
        int xl = best->raw()[c - 1];
        if (c == i || xl == 0) continue;
        rs.set.push_back(c);
        rs.coefficients.push_back(f.mul_v(f.neg_v(xl), xi_inv));
    }

    // Replay the recovery identity on every codeword when the budget allows.
    uint64_t words = 1;
    bool fits = true;
    for (int t = 0; t < k(); ++t) {
        words *= q();
        if (words > budget) {
            fits = false;
            break;
        }
    }
    if (fits) {
        for_each_codeword(
            [&](const Vec& w) {
                int acc = 0;
                for (size_t s = 0; s < rs.set.size(); ++s)
                    acc = f.add_v(acc, f.mul_v(rs.coefficients[s], w.raw()[rs.set[s] - 1]));
                if (acc != w.raw()[i - 1]) throw std::logic_error("recovery replay failed");
            },
            budget);
    }
    return rs;
}

bool LinearCode::is_nondegenerate() const {
    // Coordinate j is covered iff column j of the generator is nonzero.
    for (int c = 1; c <= n(); ++c) {
        bool nonzero = false;
        for (int r = 1; r <= k(); ++r)
            if (generator_.value_at(r, c) != 0) {
                nonzero = true;
                break;
            }
        if (!nonzero) return false;
    }
    return true;
}

LinearCode LinearCode::shorten(int j) const {
    if (j < 1 || j > n()) throw std::out_of_range("shorten: coordinate out of range");
    int pivot_row = 0;
    for (int r = 1; r <= k(); ++r)
        if (generator_.value_at(r, j) != 0) {
            pivot_row = r;
            break;
        }
    if (pivot_row == 0) return *this;  // coordinate already identically zero
    if (k() == 1) throw std::domain_error("shorten: shortened code is the zero code");

    const Field& f = *field_;
    Mat g(field_, k() - 1, n());
    int out = 0;
    int pj = generator_.value_at(pivot_row, j);
    for (int r = 1; r <= k(); ++r) {
        if (r == pivot_row) continue;
        ++out;
        // row r minus (row_r[j]/pivot) * pivot_row zeroes coordinate j
        int factor = f.mul_v(generator_.value_at(r, j), f.inv_v(pj));
        for (int c = 1; c <= n(); ++c) {
            int v = f.sub_v(generator_.value_at(r, c), f.mul_v(factor, generator_.value_at(pivot_row, c)));
            g.set_value(out, c, v);
        }
    }
    return LinearCode(field_, g);
}

CodeProfile LinearCode::profile(uint64_t budget) const {
    CodeProfile p;
    p.n = n();
    p.k = k();
    p.d = minimum_distance(budget);
    p.locality = locality(budget);
    p.nondegenerate = is_nondegenerate();
    if (parity_check_.rows() == 0) {
        p.dual_nondegenerate = false;
    } else {
        p.d_dual = dual_distance(budget);
        p.dual_nondegenerate = dual().is_nondegenerate();
    }
    return p;
}

}  // namespace lrcdual

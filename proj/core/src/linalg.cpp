#include "lrcdual/linalg.hpp"

#include <stdexcept>
#include <string>

namespace lrcdual {

Vec::Vec(FieldPtr field, int length) : f_(std::move(field)) {
    if (length < 1) throw std::invalid_argument("vector length must be >= 1");
    v_.assign(length, 0);
}

Vec::Vec(FieldPtr field, const std::vector<int>& values) : f_(std::move(field)) {
    if (values.empty()) throw std::invalid_argument("vector length must be >= 1");
    v_.reserve(values.size());
    for (int x : values) {
        if (x < 0 || x >= f_->q()) throw std::invalid_argument("vector entry out of field range");
        v_.push_back(static_cast<uint8_t>(x));
    }
}

int Vec::value_at(int i) const {
    if (i < 1 || i > length()) throw std::out_of_range("vector index " + std::to_string(i));
    return v_[i - 1];
}

FieldElement Vec::at(int i) const { return f_->element(value_at(i)); }

void Vec::set_value(int i, int value) {
    if (i < 1 || i > length()) throw std::out_of_range("vector index " + std::to_string(i));
    if (value < 0 || value >= f_->q()) throw std::invalid_argument("vector entry out of field range");
    v_[i - 1] = static_cast<uint8_t>(value);
}

int Vec::weight() const {
    int w = 0;
    for (uint8_t x : v_) w += (x != 0);
    return w;
}

std::vector<int> Vec::support() const {
    std::vector<int> s;
    for (int i = 0; i < length(); ++i)
        if (v_[i] != 0) s.push_back(i + 1);
    return s;
}

Mat::Mat(FieldPtr field, int rows, int cols) : f_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 1) throw std::invalid_argument("bad matrix shape");
    e_.assign(static_cast<size_t>(rows) * cols, 0);
}

Mat Mat::from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows: need at least one row");
    Mat m(field, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw std::invalid_argument("from_rows: ragged rows");
        for (size_t c = 0; c < rows[r].size(); ++c) m.set_value(static_cast<int>(r) + 1, static_cast<int>(c) + 1, rows[r][c]);
    }
    return m;
}

int Mat::value_at(int r, int c) const {
    if (r < 1 || r > rows_ || c < 1 || c > cols_) throw std::out_of_range("matrix index");
    return e_[static_cast<size_t>(r - 1) * cols_ + (c - 1)];
}

FieldElement Mat::at(int r, int c) const { return f_->element(value_at(r, c)); }

void Mat::set_value(int r, int c, int value) {
    if (r < 1 || r > rows_ || c < 1 || c > cols_) throw std::out_of_range("matrix index");
    if (value < 0 || value >= f_->q()) throw std::invalid_argument("matrix entry out of field range");
    e_[static_cast<size_t>(r - 1) * cols_ + (c - 1)] = static_cast<uint8_t>(value);
}

Vec Mat::row(int r) const {
    Vec v(f_, cols_);
    for (int c = 1; c <= cols_; ++c) v.set_value(c, value_at(r, c));
    return v;
}

Mat Mat::transpose() const {
    Mat t(f_, cols_, rows_);
    for (int r = 1; r <= rows_; ++r)
        for (int c = 1; c <= cols_; ++c) t.set_value(c, r, value_at(r, c));
    return t;
}

Mat Mat::mul(const Mat& other) const {
    if (!f_->same(*other.f_)) throw std::invalid_argument("matrix product across different fields");
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat out(f_, rows_, other.cols_);
    for (int r = 1; r <= rows_; ++r)
        for (int c = 1; c <= other.cols_; ++c) {
            int acc = 0;
            for (int t = 1; t <= cols_; ++t) acc = f_->add_v(acc, f_->mul_v(value_at(r, t), other.value_at(t, c)));
            out.set_value(r, c, acc);
        }
    return out;
}

bool Mat::is_zero() const {
    for (uint8_t x : e_)
        if (x != 0) return false;
    return true;
}

RrefResult rref(const Mat& m) {
    const Field& f = m.field();
    Mat w = m;
    int rows = w.rows(), cols = w.cols();
    std::vector<int> pivots;
    int r = 0;  // 0-based count of settled rows
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (w.row_data(i + 1)[c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int t = 0; t < cols; ++t) std::swap(w.row_data(r + 1)[t], w.row_data(pr + 1)[t]);
        uint8_t* prow = w.row_data(r + 1);
        int inv = f.inv_v(prow[c]);
        for (int t = 0; t < cols; ++t) prow[t] = static_cast<uint8_t>(f.mul_v(prow[t], inv));
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            uint8_t* irow = w.row_data(i + 1);
            int factor = irow[c];
            if (factor == 0) continue;
            for (int t = 0; t < cols; ++t)
                irow[t] = static_cast<uint8_t>(f.sub_v(irow[t], f.mul_v(factor, prow[t])));
        }
        pivots.push_back(c + 1);
        ++r;
    }
    Mat out(m.field_ptr(), r, cols);
    for (int i = 1; i <= r; ++i)
        for (int c = 1; c <= cols; ++c) out.set_value(i, c, w.value_at(i, c));
    return RrefResult{std::move(out), std::move(pivots)};
}

int rank(const Mat& m) { return rref(m).matrix.rows(); }

Mat kernel_basis(const Mat& m) {
    const Field& f = m.field();
    RrefResult rr = rref(m);
    const Mat& e = rr.matrix;
    int cols = m.cols();
    int rk = e.rows();
    std::vector<bool> is_pivot(cols + 1, false);
    for (int pc : rr.pivot_columns) is_pivot[pc] = true;
    Mat basis(m.field_ptr(), cols - rk, cols);
    int out_row = 0;
    for (int c = 1; c <= cols; ++c) {
        if (is_pivot[c]) continue;
        ++out_row;
        basis.set_value(out_row, c, 1);
        // pivot row i handles pivot column p_i: entry = -e[i][c]
        for (int i = 1; i <= rk; ++i) {
            int pc = rr.pivot_columns[i - 1];
            basis.set_value(out_row, pc, f.neg_v(e.value_at(i, c)));
        }
    }
    return basis;
}

bool in_row_space(const Mat& m, const Vec& v) {
    if (v.length() != m.cols()) throw std::invalid_argument("in_row_space: length mismatch");
    Mat stacked(m.field_ptr(), m.rows() + 1, m.cols());
    for (int r = 1; r <= m.rows(); ++r)
        for (int c = 1; c <= m.cols(); ++c) stacked.set_value(r, c, m.value_at(r, c));
    for (int c = 1; c <= m.cols(); ++c) stacked.set_value(m.rows() + 1, c, v.value_at(c));
    return rank(stacked) == rank(m);
}

}  // namespace lrcdual

#ifndef LRCDUAL_LINALG_HPP
#define LRCDUAL_LINALG_HPP

#include <vector>

#include "lrcdual/field.hpp"

namespace lrcdual {

// Dense vectors and matrices over GF(q). Coordinates are 1-based at every
// public interface, matching the usual {1,...,n} coding-theory indexing.

class Vec {
  public:
    Vec(FieldPtr field, int length);  // zero vector
    Vec(FieldPtr field, const std::vector<int>& values);

    int length() const { return static_cast<int>(v_.size()); }
    const Field& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }

    int value_at(int i) const;  // 1-based
    FieldElement at(int i) const;
    void set_value(int i, int value);

    int weight() const;
    std::vector<int> support() const;  // 1-based, ascending
    bool is_zero() const { return weight() == 0; }

    const std::vector<uint8_t>& raw() const { return v_; }

    friend bool operator==(const Vec& a, const Vec& b) { return a.f_->same(*b.f_) && a.v_ == b.v_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  private:
    FieldPtr f_;
    std::vector<uint8_t> v_;
};

class Mat {
  public:
    Mat(FieldPtr field, int rows, int cols);  // zero matrix; rows may be 0
    static Mat from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }

    int value_at(int r, int c) const;  // 1-based
    FieldElement at(int r, int c) const;
    void set_value(int r, int c, int value);

    Vec row(int r) const;
    Mat transpose() const;
    Mat mul(const Mat& other) const;
    bool is_zero() const;

    const uint8_t* row_data(int r) const { return e_.data() + static_cast<size_t>(r - 1) * cols_; }
    uint8_t* row_data(int r) { return e_.data() + static_cast<size_t>(r - 1) * cols_; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.f_->same(*b.f_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  private:
    FieldPtr f_;
    int rows_, cols_;
    std::vector<uint8_t> e_;
};

struct RrefResult {
    Mat matrix;                      // zero rows removed
    std::vector<int> pivot_columns;  // 1-based, ascending
};

/// Unique reduced row-echelon form.
RrefResult rref(const Mat& m);

int rank(const Mat& m);

/// Rows form a basis of { v : M v^T = 0 }; row count = cols - rank.
Mat kernel_basis(const Mat& m);

/// True iff v lies in the row space of m.
bool in_row_space(const Mat& m, const Vec& v);

}  // namespace lrcdual

#endif

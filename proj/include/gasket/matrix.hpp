#ifndef GASKET_MATRIX_HPP
#define GASKET_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gasket/errors.hpp"
#include "gasket/scalar.hpp"

namespace gasket {

/// Dense row-major matrix over an exact or floating scalar. Value type:
/// copying is deep and all operations are pure.
template <typename T>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const T& init = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, init) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_)
        throw malformed_input("Matrix: ragged initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric(double tol = 0.0) const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!ScalarTraits<T>::eq((*this)(i, j), (*this)(j, i), tol))
          return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
      throw malformed_input("Matrix multiply: dimension mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        for (std::size_t j = 0; j < rhs.cols_; ++j)
          out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  Matrix operator+(const Matrix& rhs) const {
    check_same_shape(rhs, "add");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
      out.data_[i] = data_[i] + rhs.data_[i];
    return out;
  }

  Matrix operator-(const Matrix& rhs) const {
    check_same_shape(rhs, "subtract");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
      out.data_[i] = data_[i] - rhs.data_[i];
    return out;
  }

  Matrix scaled(const T& c) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = c * data_[i];
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_)
      throw malformed_input("Matrix apply: dimension mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }

  /// Largest |entry| difference against another matrix of the same shape.
  T max_abs_diff(const Matrix& rhs) const {
    check_same_shape(rhs, "compare");
    T worst(0);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      T d = ScalarTraits<T>::abs(data_[i] - rhs.data_[i]);
      if (d > worst) worst = d;
    }
    return worst;
  }

  T max_abs() const {
    T worst(0);
    for (const T& x : data_) {
      T a = ScalarTraits<T>::abs(x);
      if (a > worst) worst = a;
    }
    return worst;
  }

private:
  void check_same_shape(const Matrix& rhs, const char* op) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw malformed_input(std::string("Matrix ") + op + ": shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<T> data_;
};

}  // namespace gasket

#endif  // GASKET_MATRIX_HPP

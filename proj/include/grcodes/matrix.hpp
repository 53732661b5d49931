#pragma once

#include "grcodes/field.hpp"

#include <cstddef>
#include <vector>

namespace grcodes {

using Vector = std::vector<Element>;

/// Dense row-major matrix over a finite field.
class Matrix {
public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t cols, const std::vector<Vector> &rows);

  static Matrix identity(FieldPtr field, std::size_t n);
  /// (O I; -I O) of size 2m x 2m.
  static Matrix omega(FieldPtr field, std::size_t m);

  const FieldPtr &field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const Element *row_data(std::size_t r) const { return data_.data() + r * cols_; }
  Vector row(std::size_t r) const;
  void append_row(const Vector &v);

  bool is_zero() const;
  Matrix transpose() const;
  /// Entrywise a -> a^p.
  Matrix frobenius() const;

  /// Reduced row echelon form with zero rows dropped; pivots receives the
  /// pivot column of each row.
  Matrix rref(std::vector<std::size_t> *pivots = nullptr) const;
  std::size_t rank() const;
  /// Rows form a basis of { v : M v^T = 0 }.
  Matrix kernel() const;

  friend bool operator==(const Matrix &a, const Matrix &b);

private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<Element> data_;
};

Matrix operator+(const Matrix &a, const Matrix &b);
Matrix operator-(const Matrix &a, const Matrix &b);
Matrix operator*(const Matrix &a, const Matrix &b);
Matrix hconcat(const Matrix &a, const Matrix &b);
Matrix vconcat(const Matrix &a, const Matrix &b);

/// Sum_i a_i b_i.
Element dot(const Field &f, const Vector &a, const Vector &b);
std::size_t hamming_weight(const Vector &v);
/// Number of i < n/2 with (v_i, v_{n/2+i}) != (0, 0). Requires even length.
std::size_t symplectic_weight(const Vector &v);

} // namespace grcodes

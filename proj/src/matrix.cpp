#include "grcodes/matrix.hpp"

#include "grcodes/error.hpp"

#include <algorithm>

namespace grcodes {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {
  if (!field_)
    throw Error("matrix needs a field");
}

Matrix::Matrix(FieldPtr field, std::size_t cols, const std::vector<Vector> &rows)
    : Matrix(std::move(field), 0, cols) {
  for (const auto &r : rows)
    append_row(r);
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = m.field_->one();
  return m;
}

Matrix Matrix::omega(FieldPtr field, std::size_t m) {
  Matrix o(std::move(field), 2 * m, 2 * m);
  const Element minus_one = o.field_->neg(o.field_->one());
  for (std::size_t i = 0; i < m; ++i) {
    o.at(i, m + i) = o.field_->one();
    o.at(m + i, i) = minus_one;
  }
  return o;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void Matrix::append_row(const Vector &v) {
  if (v.size() != cols_)
    throw Error("row length " + std::to_string(v.size()) + " does not match " +
                std::to_string(cols_) + " columns");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Element e) { return e.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::frobenius() const {
  Matrix t = *this;
  for (auto &e : t.data_)
    e = field_->frobenius(e);
  return t;
}

Matrix Matrix::rref(std::vector<std::size_t> *pivots) const {
  const Field &f = *field_;
  Matrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && m.at(p, c).is_zero())
      ++p;
    if (p == rows_)
      continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(m.at(p, j), m.at(r, j));
    const Element s = f.inv(m.at(r, c));
    for (std::size_t j = c; j < cols_; ++j)
      m.at(r, j) = f.mul(m.at(r, j), s);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c).is_zero())
        continue;
      const Element factor = m.at(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        if (!m.at(r, j).is_zero())
          m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  m.rows_ = r;
  m.data_.resize(r * cols_);
  if (pivots)
    *pivots = std::move(piv);
  return m;
}

std::size_t Matrix::rank() const { return rref().rows(); }

Matrix Matrix::kernel() const {
  std::vector<std::size_t> piv;
  Matrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv)
    is_pivot[c] = true;
  Matrix k(field_, 0, cols_);
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free])
      continue;
    Vector v(cols_);
    v[free] = field_->one();
    for (std::size_t i = 0; i < piv.size(); ++i)
      v[piv[i]] = field_->neg(r.at(i, free));
    k.append_row(v);
  }
  return k;
}

bool operator==(const Matrix &a, const Matrix &b) {
  return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

namespace {

void require_shape(const Matrix &a, const Matrix &b, bool ok, const char *op) {
  require_same_field(a.field(), b.field(), op);
  if (!ok)
    throw Error(std::string(op) + ": incompatible shapes " + std::to_string(a.rows()) + "x" +
                std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                std::to_string(b.cols()));
}

} // namespace

Matrix operator+(const Matrix &a, const Matrix &b) {
  require_shape(a, b, a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum");
  Matrix s = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      s.at(r, c) = a.field()->add(a.at(r, c), b.at(r, c));
  return s;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
  require_shape(a, b, a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference");
  Matrix s = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      s.at(r, c) = a.field()->sub(a.at(r, c), b.at(r, c));
  return s;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  require_shape(a, b, a.cols() == b.rows(), "matrix product");
  const Field &f = *a.field();
  Matrix p(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const Element x = a.at(i, t);
      if (x.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        p.at(i, j) = f.add(p.at(i, j), f.mul(x, b.at(t, j)));
    }
  return p;
}

Matrix hconcat(const Matrix &a, const Matrix &b) {
  require_shape(a, b, a.rows() == b.rows(), "horizontal join");
  Matrix h(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      h.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c)
      h.at(r, a.cols() + c) = b.at(r, c);
  }
  return h;
}

Matrix vconcat(const Matrix &a, const Matrix &b) {
  require_shape(a, b, a.cols() == b.cols(), "vertical join");
  Matrix v = a;
  for (std::size_t r = 0; r < b.rows(); ++r)
    v.append_row(b.row(r));
  return v;
}

Element dot(const Field &f, const Vector &a, const Vector &b) {
  if (a.size() != b.size())
    throw Error("inner product of vectors with different lengths");
  Element s = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

std::size_t hamming_weight(const Vector &v) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [](Element e) { return !e.is_zero(); }));
}

std::size_t symplectic_weight(const Vector &v) {
  if (v.size() % 2)
    throw Error("symplectic weight needs even length");
  const std::size_t m = v.size() / 2;
  std::size_t w = 0;
  for (std::size_t i = 0; i < m; ++i)
    w += !v[i].is_zero() || !v[m + i].is_zero();
  return w;
}

} // namespace grcodes

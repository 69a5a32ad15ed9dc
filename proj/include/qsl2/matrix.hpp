#pragma once

#include <cstddef>
#include <vector>

#include "qsl2/qscalar.hpp"

namespace qsl2 {

/// Dense matrix of exact scalars; just enough linear algebra for operator
/// identity checks.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  QScalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const QScalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  static QMatrix identity(std::size_t n);

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QScalar& c, const QMatrix& m);
  friend bool operator==(const QMatrix& a, const QMatrix& b);
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  QScalar trace() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<QScalar> data_;
};

}  // namespace qsl2

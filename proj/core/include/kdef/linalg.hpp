#ifndef KDEF_LINALG_HPP
#define KDEF_LINALG_HPP

#include <cstddef>
#include <vector>

#include "kdef/scalar.hpp"

namespace kdef {

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transposed() const;

  Vector operator*(const Vector& x) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Scalar dot(const Vector& a, const Vector& b);
bool is_zero_vector(const Vector& v);

// Solution set of A x = b. When the system is inconsistent, certificate is a
// vector v with v A = 0 and v b != 0.
struct LinearSolution {
  bool consistent = false;
  Vector particular;
  std::vector<Vector> nullspace;
  Vector certificate;
  std::size_t rank = 0;
};

// Exact Gauss-Jordan elimination over the scalar field with least-degree
// pivoting. Tall systems are first reduced to a row subset that is
// independent modulo a large prime at a random point; the full system is
// always re-checked exactly before returning.
LinearSolution solve_linear(const Matrix& a, const Vector& b);

std::size_t rank(const Matrix& a);
// Basis of {x : A x = 0}.
std::vector<Vector> nullspace(const Matrix& a);

}  // namespace kdef

#endif  // KDEF_LINALG_HPP

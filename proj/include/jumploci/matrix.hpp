#pragma once

#include <optional>
#include <vector>

#include "jumploci/scalar.hpp"

namespace jumploci {

/* Dense matrix over Q(i) with exact arithmetic.  Elimination always picks
   the first nonzero entry of the current column as pivot (no magnitude
   comparisons), so every derived object (rank, rref, kernel basis, solve)
   is deterministic for a given input. */
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Scalar> row(std::size_t i) const;
  std::vector<Scalar> col(std::size_t j) const;
  void set_col(std::size_t j, const std::vector<Scalar>& v);

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix pow(std::size_t n) const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  std::size_t rank() const;
  /* Reduced row echelon form; pivot column indices appended to *pivots. */
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  /* Basis of the right kernel, one vector per free column, ordered by
     free-column index. */
  std::vector<std::vector<Scalar>> kernel_basis() const;
  Scalar det() const;
  bool is_singular() const { return det().is_zero(); }
  bool is_nilpotent() const;
  Matrix inverse() const;
  /* Particular solution of A x = b with free variables set to zero, or
     nullopt if inconsistent. */
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
  /* True iff v lies in the column span. */
  bool in_column_span(const std::vector<Scalar>& v) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

}  // namespace jumploci

#include "jumploci/matrix.hpp"

#include <stdexcept>

namespace jumploci {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
  Matrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: col mismatch");
  Matrix m(a.rows_ + b.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m.at(a.rows_ + i, j) = b.at(i, j);
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  std::vector<Scalar> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_col(std::size_t j, const std::vector<Scalar>& v) {
  if (v.size() != rows_) throw std::invalid_argument("set_col: size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("add: shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("sub: shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("mul: shape mismatch");
  Matrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        m.at(i, j) += at(i, k) * o.at(k, j);
    }
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * c;
  return m;
}

Matrix Matrix::pow(std::size_t n) const {
  if (rows_ != cols_) throw std::invalid_argument("pow: not square");
  Matrix acc = identity(rows_);
  for (std::size_t k = 0; k < n; ++k) acc = acc * *this;
  return acc;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m = *this;
  std::size_t lead = 0;
  for (std::size_t j = 0; j < cols_ && lead < rows_; ++j) {
    std::size_t p = lead;
    while (p < rows_ && m.at(p, j).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != lead)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m.at(p, k), m.at(lead, k));
    Scalar inv = m.at(lead, j).inv();
    for (std::size_t k = j; k < cols_; ++k) m.at(lead, k) = m.at(lead, k) * inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == lead || m.at(i, j).is_zero()) continue;
      Scalar f = m.at(i, j);
      for (std::size_t k = j; k < cols_; ++k)
        m.at(i, k) = m.at(i, k) - f * m.at(lead, k);
    }
    if (pivots) pivots->push_back(j);
    ++lead;
  }
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

std::vector<std::vector<Scalar>> Matrix::kernel_basis() const {
  std::vector<std::size_t> piv;
  Matrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto j : piv) is_pivot[j] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Scalar> v(cols_);
    v[j] = Scalar(1);
    for (std::size_t i = 0; i < piv.size(); ++i)
      v[piv[i]] = -r.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar Matrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det: not square");
  Matrix m = *this;
  Scalar d(1);
  for (std::size_t j = 0; j < cols_; ++j) {
    std::size_t p = j;
    while (p < rows_ && m.at(p, j).is_zero()) ++p;
    if (p == rows_) return Scalar(0);
    if (p != j) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m.at(p, k), m.at(j, k));
      d = -d;
    }
    d = d * m.at(j, j);
    Scalar inv = m.at(j, j).inv();
    for (std::size_t i = j + 1; i < rows_; ++i) {
      if (m.at(i, j).is_zero()) continue;
      Scalar f = m.at(i, j) * inv;
      for (std::size_t k = j; k < cols_; ++k)
        m.at(i, k) = m.at(i, k) - f * m.at(j, k);
    }
  }
  return d;
}

bool Matrix::is_nilpotent() const {
  if (rows_ != cols_) throw std::invalid_argument("is_nilpotent: not square");
  return pow(rows_).is_zero();
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
  std::vector<std::size_t> piv;
  Matrix r = hstack(*this, identity(rows_)).rref(&piv);
  if (piv.size() != rows_ || piv.back() >= rows_ ||
      [&] { for (std::size_t i = 0; i < rows_; ++i) if (piv[i] != i) return true; return false; }())
    throw std::domain_error("inverse: singular matrix");
  Matrix out(rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j) out.at(i, j) = r.at(i, rows_ + j);
  return out;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("solve: size mismatch");
  Matrix rhs(rows_, 1);
  rhs.set_col(0, b);
  std::vector<std::size_t> piv;
  Matrix r = hstack(*this, rhs).rref(&piv);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  std::vector<Scalar> x(cols_);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, cols_);
  return x;
}

bool Matrix::in_column_span(const std::vector<Scalar>& v) const {
  return solve(v).has_value();
}

}  // namespace jumploci

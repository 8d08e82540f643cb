#pragma once

// Exact linear algebra over the rationals: dense matrices for matrix
// realizations, sparse row reduction for the invariant-theory solvers, and
// sparse matrices with Kronecker products for representation checks.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qpv/rational.hpp"

namespace qpv {

using Vector = std::vector<Rational>;
using SparseRow = std::map<int, Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n);
  /// Matrix unit E_{ij}.
  static Matrix unit(int n, int i, int j);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  Matrix& operator+=(const Matrix& o);
  bool operator==(const Matrix& o) const;

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

  /// Row-major flattening.
  const Vector& entries() const { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  Vector data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Incremental reduced row echelon form over sparse rows.
class RowEchelon {
 public:
  explicit RowEchelon(int cols) : cols_(cols) {}

  /// Reduces `row` against the stored basis; keeps it if independent.
  /// Returns true when the row increased the rank.
  bool insert(SparseRow row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  /// Basis of {v : row . v = 0 for all stored rows}. Each vector has a
  /// single free coordinate set to 1, then is scaled to coprime integers.
  std::vector<Vector> nullspace() const;

  /// Reduces `row` against the stored rows without storing it.
  SparseRow reduce(SparseRow row) const;

 private:
  int cols_;
  // pivot column -> row normalized to 1 at the pivot, reduced against every
  // other stored pivot.
  std::map<int, SparseRow> rows_;
};

int rank(const std::vector<Vector>& vectors);

/// Solves for c with a = c * b; nullopt when not proportional or b = 0 != a.
/// Both zero yields c = 0.
std::optional<Rational> proportionality(const Vector& a, const Vector& b);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}
  static SparseMatrix identity(int n);
  static SparseMatrix from_dense(const Matrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int i, int j, const Rational& v);
  Rational at(int i, int j) const;

  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator*(const Rational& s) const;
  SparseMatrix& operator+=(const SparseMatrix& o);
  bool operator==(const SparseMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_; }

  bool is_zero() const { return entries_.empty(); }
  const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, Rational> entries_;
};

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace qpv

#include "qpv/linalg.hpp"

#include <stdexcept>

namespace qpv {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational out(rn, rd);
  out.canonicalize();
  return out;
}

Rational primitive_scale(std::span<const Rational> values) {
  mpz_class den_lcm = 1;
  for (const auto& v : values) {
    if (!is_zero(v)) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  mpz_class num_gcd = 0;
  int first_sign = 0;
  for (const auto& v : values) {
    if (is_zero(v)) continue;
    if (first_sign == 0) first_sign = sgn(v);
    mpz_class scaled = v.get_num() * (den_lcm / v.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (first_sign == 0) return Rational(1);
  Rational out(den_lcm, num_gcd);
  out.canonicalize();
  return first_sign < 0 ? Rational(-out) : out;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::unit(int n, int i, int j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix out = *this;
  out += o;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (qpv::is_zero(a)) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (!qpv::is_zero(o(k, j))) out(i, j) += a * o(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!qpv::is_zero(v)) return false;
  return true;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

std::optional<Matrix> inverse(const Matrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!is_zero(a(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      const Rational f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

SparseRow RowEchelon::reduce(SparseRow row) const {
  auto it = row.begin();
  while (it != row.end()) {
    auto pit = rows_.find(it->first);
    if (pit == rows_.end()) {
      ++it;
      continue;
    }
    const int col = it->first;
    const Rational f = it->second;
    for (const auto& [c, v] : pit->second) {
      if (c == col) continue;
      auto [slot, inserted] = row.try_emplace(c, 0);
      slot->second -= f * v;
      if (is_zero(slot->second)) row.erase(slot);
    }
    it = row.erase(row.find(col));
  }
  return row;
}

bool RowEchelon::insert(SparseRow row) {
  for (auto it = row.begin(); it != row.end();) {
    if (is_zero(it->second)) it = row.erase(it);
    else ++it;
  }
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const int pivot = row.begin()->first;
  const Rational lead = row.begin()->second;
  for (auto& [c, v] : row) v /= lead;
  for (auto& [p, other] : rows_) {
    auto hit = other.find(pivot);
    if (hit == other.end()) continue;
    const Rational f = hit->second;
    for (const auto& [c, v] : row) {
      auto [slot, inserted] = other.try_emplace(c, 0);
      slot->second -= f * v;
      if (is_zero(slot->second)) other.erase(slot);
    }
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<Vector> RowEchelon::nullspace() const {
  std::vector<Vector> basis;
  for (int free = 0; free < cols_; ++free) {
    if (rows_.count(free)) continue;
    Vector v(cols_);
    v[free] = 1;
    for (const auto& [p, row] : rows_) {
      auto hit = row.find(free);
      if (hit != row.end()) v[p] = -hit->second;
    }
    const Rational s = primitive_scale(v);
    for (auto& x : v) x *= s;
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  RowEchelon ech(static_cast<int>(vectors.front().size()));
  for (const auto& v : vectors) {
    SparseRow row;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) row.emplace(static_cast<int>(i), v[i]);
    ech.insert(std::move(row));
  }
  return ech.rank();
}

std::optional<Rational> proportionality(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::optional<Rational> c;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!is_zero(b[i])) {
      c = a[i] / b[i];
      break;
    }
  }
  if (!c) {
    for (const auto& x : a)
      if (!is_zero(x)) return std::nullopt;
    return Rational(0);
  }
  for (std::size_t i = 0; i < b.size(); ++i)
    if (a[i] != *c * b[i]) return std::nullopt;
  return c;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.entries_.emplace(std::make_pair(i, i), 1);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& d) {
  SparseMatrix m(d.rows(), d.cols());
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j)
      if (!qpv::is_zero(d(i, j))) m.entries_.emplace(std::make_pair(i, j), d(i, j));
  return m;
}

void SparseMatrix::add(int i, int j, const Rational& v) {
  if (qpv::is_zero(v)) return;
  auto [it, inserted] = entries_.try_emplace({i, j}, 0);
  it->second += v;
  if (qpv::is_zero(it->second)) entries_.erase(it);
}

Rational SparseMatrix::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rational(0) : it->second;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (const auto& [ij, v] : o.entries_) add(ij.first, ij.second, v);
  return *this;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  SparseMatrix out = *this;
  out += o;
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  SparseMatrix out = *this;
  out += o * Rational(-1);
  return out;
}

SparseMatrix SparseMatrix::operator*(const Rational& s) const {
  SparseMatrix out(rows_, cols_);
  if (qpv::is_zero(s)) return out;
  for (const auto& [ij, v] : entries_) out.entries_.emplace(ij, v * s);
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  std::map<int, std::vector<std::pair<int, Rational>>> by_row;
  for (const auto& [ij, v] : o.entries_) by_row[ij.first].emplace_back(ij.second, v);
  SparseMatrix out(rows_, o.cols_);
  for (const auto& [ij, v] : entries_) {
    auto it = by_row.find(ij.second);
    if (it == by_row.end()) continue;
    for (const auto& [j, w] : it->second) out.add(ij.first, j, v * w);
  }
  return out;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (const auto& [ij, v] : a.entries())
    for (const auto& [kl, w] : b.entries())
      out.add(ij.first * b.rows() + kl.first, ij.second * b.cols() + kl.second, v * w);
  return out;
}

}  // namespace qpv

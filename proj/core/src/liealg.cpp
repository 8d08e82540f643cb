#include "qpv/liealg.hpp"

#include <algorithm>

namespace qpv {

Rational StructureConstants::coefficient(int i, int j, int k) const {
  for (const auto& [idx, v] : bracket(i, j))
    if (idx == k) return v;
  return 0;
}

void StructureConstants::set_bracket(int i, int j, SparseTerms terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  terms.erase(std::remove_if(terms.begin(), terms.end(), [](const auto& t) { return is_zero(t.second); }),
              terms.end());
  SparseTerms negated = terms;
  for (auto& [k, v] : negated) v = -v;
  table_[static_cast<std::size_t>(i) * dim_ + j] = std::move(terms);
  table_[static_cast<std::size_t>(j) * dim_ + i] = std::move(negated);
}

Vector StructureConstants::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      const Rational s = x[i] * y[j];
      for (const auto& [k, v] : bracket(i, j)) out[k] += s * v;
    }
  }
  return out;
}

Matrix StructureConstants::ad_matrix(int i) const {
  Matrix m(dim_, dim_);
  for (int k = 0; k < dim_; ++k)
    for (const auto& [l, v] : bracket(i, k)) m(l, k) = v;
  return m;
}

std::optional<std::array<int, 3>> StructureConstants::jacobi_violation() const {
  auto bracket_terms = [&](const SparseTerms& a, int k) {
    Vector out(dim_);
    for (const auto& [m, v] : a)
      for (const auto& [l, w] : bracket(m, k)) out[l] += v * w;
    return out;
  };
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        Vector sum = bracket_terms(bracket(i, j), k);
        const Vector b = bracket_terms(bracket(j, k), i);
        const Vector c = bracket_terms(bracket(k, i), j);
        for (int l = 0; l < dim_; ++l) {
          if (!is_zero(sum[l] + b[l] + c[l])) return std::array<int, 3>{i, j, k};
        }
      }
  return std::nullopt;
}

Matrix killing_form(const StructureConstants& sc) {
  const int n = sc.dim();
  std::vector<Matrix> ad;
  ad.reserve(n);
  for (int i = 0; i < n; ++i) ad.push_back(sc.ad_matrix(i));
  Matrix k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Rational v = (ad[i] * ad[j]).trace();
      k(i, j) = v;
      k(j, i) = v;
    }
  return k;
}

LieAlgebra::LieAlgebra(RootSystem rs, std::vector<BasisElement> basis, std::vector<Matrix> realization)
    : rs_(std::move(rs)), basis_(std::move(basis)), realization_(std::move(realization)), sc_(dim()) {
  const int n = dim();
  const int size = matrix_size();

  // Choose n matrix entries on which the basis is independent; coordinates
  // of a matrix are then read off through the inverse of that n x n block.
  RowEchelon ech(n);
  for (int a = 0; a < size && static_cast<int>(pivot_entries_.size()) < n; ++a)
    for (int b = 0; b < size && static_cast<int>(pivot_entries_.size()) < n; ++b) {
      SparseRow row;
      for (int k = 0; k < n; ++k)
        if (!is_zero(realization_[k](a, b))) row.emplace(k, realization_[k](a, b));
      if (ech.insert(std::move(row))) pivot_entries_.emplace_back(a, b);
    }
  if (static_cast<int>(pivot_entries_.size()) != n) throw std::logic_error("basis matrices are linearly dependent");
  Matrix block(n, n);
  for (int e = 0; e < n; ++e)
    for (int k = 0; k < n; ++k) block(e, k) = realization_[k](pivot_entries_[e].first, pivot_entries_[e].second);
  pivot_inverse_ = *inverse(block);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vector c = coordinates(commutator(realization_[i], realization_[j]));
      SparseTerms terms;
      for (int k = 0; k < n; ++k)
        if (!is_zero(c[k])) terms.emplace_back(k, c[k]);
      sc_.set_bracket(i, j, std::move(terms));
    }

  killing_ = killing_form(sc_);
  auto inv = inverse(killing_);
  if (!inv) throw std::logic_error("singular Killing form for " + name());
  killing_inverse_ = std::move(*inv);
}

int LieAlgebra::root_index(const Root& signed_root) const {
  for (int i = rank(); i < dim(); ++i)
    if (basis_[i].weight == signed_root) return i;
  return -1;
}

int LieAlgebra::simple_e(int i) const {
  Root r(rank(), 0);
  r[i] = 1;
  return positive_root_index(rs_.positive_index(r));
}

int LieAlgebra::simple_f(int i) const {
  Root r(rank(), 0);
  r[i] = 1;
  return negative_root_index(rs_.positive_index(r));
}

Rational LieAlgebra::root_pair_scale(int k) const {
  return Rational(1) / killing_(positive_root_index(k), negative_root_index(k));
}

Vector LieAlgebra::coordinates(const Matrix& m) const {
  const int n = dim();
  Vector rhs(n);
  for (int e = 0; e < n; ++e) rhs[e] = m(pivot_entries_[e].first, pivot_entries_[e].second);
  Vector c(n);
  for (int k = 0; k < n; ++k)
    for (int e = 0; e < n; ++e)
      if (!is_zero(rhs[e])) c[k] += pivot_inverse_(k, e) * rhs[e];
  if (!(to_matrix(c) == m)) throw std::invalid_argument("matrix is not in the span of the basis of " + name());
  return c;
}

Matrix LieAlgebra::to_matrix(const Vector& x) const {
  Matrix out(matrix_size(), matrix_size());
  for (int k = 0; k < dim(); ++k)
    if (!is_zero(x[k])) out += realization_[k] * x[k];
  return out;
}

Vector LieAlgebra::unit(int i) const {
  Vector v(dim());
  v[i] = 1;
  return v;
}

namespace {

int defining_size(Series s, int n) {
  switch (s) {
    case Series::A: return n + 1;
    case Series::B: return 2 * n + 1;
    case Series::C: return 2 * n;
    case Series::D: return 2 * n;
    default: return 0;
  }
}

// Chevalley generator e_i in the defining representation. The orthogonal and
// symplectic forms are antidiagonal, so with i' = N-1-i the root vectors take
// the shape E_{a,b} - E_{b',a'}.
Matrix chevalley_e(Series s, int n, int i) {
  const int size = defining_size(s, n);
  auto prime = [&](int a) { return size - 1 - a; };
  auto paired = [&](int a, int b) { return Matrix::unit(size, a, b) - Matrix::unit(size, prime(b), prime(a)); };
  switch (s) {
    case Series::A: return Matrix::unit(size, i, i + 1);
    case Series::B: return paired(i, i + 1);
    case Series::C: return i + 1 < n ? paired(i, i + 1) : Matrix::unit(size, n - 1, n);
    case Series::D: return i + 1 < n ? paired(i, i + 1) : paired(n - 2, n);
    default: break;
  }
  throw UnsupportedTypeError("no matrix realization");
}

std::string root_label(char prefix, const Root& r) {
  std::string s(1, prefix);
  for (int c : r) s += std::to_string(c);
  return s;
}

}  // namespace

LieAlgebraPtr realize_classical(const RootSystem& rs) {
  const Series s = rs.series;
  const int n = rs.rank;
  if (s != Series::A && s != Series::B && s != Series::C && s != Series::D) {
    throw UnsupportedTypeError("type " + rs.name() + " has no matrix realization");
  }

  std::vector<Matrix> e(n), f(n), h(n);
  for (int i = 0; i < n; ++i) {
    e[i] = chevalley_e(s, n, i);
    f[i] = e[i].transpose();
    const Matrix hh = commutator(e[i], f[i]);
    // [hh, e_i] = c e_i; rescale f_i so that [h_i, e_i] = 2 e_i.
    const Matrix he = commutator(hh, e[i]);
    Rational c = 0;
    for (int a = 0; a < he.rows() && is_zero(c); ++a)
      for (int b = 0; b < he.cols(); ++b)
        if (!is_zero(e[i](a, b))) {
          c = he(a, b) / e[i](a, b);
          break;
        }
    f[i] = f[i] * (Rational(2) / c);
    h[i] = commutator(e[i], f[i]);
  }

  const auto& pos = rs.positive_roots;
  const int np = static_cast<int>(pos.size());
  std::vector<Matrix> xp(np), xm(np);
  for (int k = 0; k < np; ++k) {
    const Root& beta = pos[k];
    if (height(beta) == 1) {
      const int i = static_cast<int>(std::find(beta.begin(), beta.end(), 1) - beta.begin());
      xp[k] = e[i];
      xm[k] = f[i];
      continue;
    }
    for (int i = 0; i < n; ++i) {
      Root gamma = beta;
      gamma[i] -= 1;
      const int g = rs.positive_index(gamma);
      if (g < 0) continue;
      xp[k] = commutator(e[i], xp[g]);
      xm[k] = commutator(f[i], xm[g]);
      break;
    }
  }

  std::vector<BasisElement> basis;
  std::vector<Matrix> mats;
  for (int i = 0; i < n; ++i) {
    basis.push_back({BasisElement::Kind::cartan, Root(n, 0), n == 1 ? "h" : "h" + std::to_string(i + 1)});
    mats.push_back(h[i]);
  }
  for (int k = 0; k < np; ++k) {
    basis.push_back({BasisElement::Kind::root, pos[k], n == 1 ? "e" : root_label('e', pos[k])});
    mats.push_back(xp[k]);
  }
  for (int k = 0; k < np; ++k) {
    Root neg = pos[k];
    for (auto& c : neg) c = -c;
    basis.push_back({BasisElement::Kind::root, neg, n == 1 ? "f" : root_label('f', pos[k])});
    mats.push_back(xm[k]);
  }
  return std::make_shared<const LieAlgebra>(rs, std::move(basis), std::move(mats));
}

LieAlgebraPtr make_algebra(std::string_view spec) { return realize_classical(build_root_system(TypeSpec::parse(spec))); }

}  // namespace qpv

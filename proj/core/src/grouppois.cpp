#include "qpv/grouppois.hpp"

#include <functional>

namespace qpv {

GroupRing::GroupRing(int n) : n_(n) {
  if (n < 1 || n * n > kMaxVariables) throw std::invalid_argument("matrix size out of range for the entry ring");
}

GroupPolynomial GroupRing::determinant() const {
  // Laplace expansion along the first row, recursively over column subsets.
  std::function<Polynomial(int, std::vector<int>)> minor = [&](int row, std::vector<int> cols) {
    if (cols.empty()) return Polynomial::constant(1);
    Polynomial out;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> rest = cols;
      rest.erase(rest.begin() + static_cast<long>(k));
      Polynomial term = entry(row, cols[k]) * minor(row + 1, rest);
      if (k % 2) out -= term;
      else out += term;
    }
    return out;
  };
  std::vector<int> all(n_);
  for (int j = 0; j < n_; ++j) all[j] = j;
  return minor(0, all);
}

std::vector<std::string> GroupRing::names() const {
  std::vector<std::string> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.push_back("t" + std::to_string(i + 1) + std::to_string(j + 1));
  return out;
}

namespace {

void require_square(const Matrix& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("field generator must be square");
}

// Derivation determined by its values on the entries.
GroupPolynomial apply_derivation(const std::vector<GroupPolynomial>& images, const GroupPolynomial& p) {
  Polynomial out;
  for (std::size_t a = 0; a < images.size(); ++a) {
    if (images[a].is_zero()) continue;
    const Polynomial d = p.derivative(static_cast<int>(a));
    if (!d.is_zero()) out += d * images[a];
  }
  return out;
}

std::vector<GroupPolynomial> left_images(const Matrix& x) {
  const int n = x.rows();
  GroupRing ring(n);
  std::vector<GroupPolynomial> img(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!is_zero(x(k, j))) img[ring.index(i, j)] += ring.entry(i, k) * x(k, j);
  return img;
}

std::vector<GroupPolynomial> right_images(const Matrix& x) {
  const int n = x.rows();
  GroupRing ring(n);
  std::vector<GroupPolynomial> img(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!is_zero(x(i, k))) img[ring.index(i, j)] += ring.entry(k, j) * x(i, k);
  return img;
}

void require_realization(const LieAlgebra& L) {
  if (!L.has_matrix_realization()) throw std::invalid_argument(L.name() + " has no matrix realization");
}

}  // namespace

GroupPolynomial left_field(const Matrix& x, const GroupPolynomial& p) {
  require_square(x);
  return apply_derivation(left_images(x), p);
}

GroupPolynomial right_field(const Matrix& x, const GroupPolynomial& p) {
  require_square(x);
  return apply_derivation(right_images(x), p);
}

GroupBivector::GroupBivector(int n) : n_(n), table_(static_cast<std::size_t>(n) * n * n * n) {}

void GroupBivector::set(int a, int b, GroupPolynomial value) { table_[a * n_ * n_ + b] = std::move(value); }

bool GroupBivector::is_antisymmetric() const {
  const int m = n_ * n_;
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b)
      if (!(at(a, b) + at(b, a)).is_zero()) return false;
  return true;
}

bool GroupBivector::is_zero() const {
  for (const auto& p : table_)
    if (!p.is_zero()) return false;
  return true;
}

GroupPolynomial GroupBivector::bracket(const GroupPolynomial& p, const GroupPolynomial& q) const {
  const int m = n_ * n_;
  std::vector<Polynomial> dq(m);
  for (int b = 0; b < m; ++b) dq[b] = q.derivative(b);
  Polynomial out;
  for (int a = 0; a < m; ++a) {
    const Polynomial dp = p.derivative(a);
    if (dp.is_zero()) continue;
    for (int b = 0; b < m; ++b)
      if (!dq[b].is_zero() && !at(a, b).is_zero()) out += dp * dq[b] * at(a, b);
  }
  return out;
}

namespace {

// sum_{uv} c^{uv} X_u(t_a) Y_v(t_b) for a plain 2-tensor c and per-basis
// entry images X, Y.
void accumulate_pair_table(GroupBivector& out, const MultiTensor& c,
                           const std::vector<std::vector<GroupPolynomial>>& x_img,
                           const std::vector<std::vector<GroupPolynomial>>& y_img) {
  const int m = out.n() * out.n();
  const MultiTensor plain = c.to_plain();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Polynomial v = out.at(a, b);
      for (const auto& [key, coeff] : plain.terms()) {
        const auto& xa = x_img[key[0]][a];
        const auto& yb = y_img[key[1]][b];
        if (xa.is_zero() || yb.is_zero()) continue;
        v += xa * yb * coeff;
      }
      out.set(a, b, std::move(v));
    }
}

std::vector<std::vector<GroupPolynomial>> all_left_images(const LieAlgebra& L) {
  std::vector<std::vector<GroupPolynomial>> out;
  for (const auto& x : L.matrix_realization()) out.push_back(left_images(x));
  return out;
}

std::vector<std::vector<GroupPolynomial>> all_right_images(const LieAlgebra& L) {
  std::vector<std::vector<GroupPolynomial>> out;
  for (const auto& x : L.matrix_realization()) out.push_back(right_images(x));
  return out;
}

}  // namespace

GroupBivector build_two_sided_bracket(const MultiTensor& r1, const MultiTensor& r2) {
  if (r1.algebra() != r2.algebra()) throw AlgebraMismatchError("r-matrices over different algebras");
  if (r1.degree() != 2 || r2.degree() != 2) throw std::invalid_argument("two-sided bracket expects 2-tensors");
  const auto& L = *r1.algebra();
  require_realization(L);
  GroupBivector out(L.matrix_size());
  if (!(algebraic_schouten(r1, r1) == algebraic_schouten(r2, r2))) {
    out.warnings.push_back("[[r1, r1]] != [[r2, r2]]; the bracket is not expected to be Poisson");
  }
  accumulate_pair_table(out, r1, all_left_images(L), all_left_images(L));
  accumulate_pair_table(out, r2, all_right_images(L), all_right_images(L));
  return out;
}

GroupBivector build_sklyanin_bracket(const MultiTensor& r) { return build_two_sided_bracket(r, -r); }

GroupBivector build_ad_bracket(const LieAlgebraPtr& algebra) {
  const auto& L = *algebra;
  require_realization(L);
  const MultiTensor t = canonical_tensors(algebra).t;
  GroupBivector half(L.matrix_size());
  accumulate_pair_table(half, t, all_left_images(L), all_right_images(L));
  GroupBivector out(L.matrix_size());
  const int m = out.n() * out.n();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) out.set(a, b, half.at(a, b) - half.at(b, a));
  return out;
}

JacobiatorTable jacobiator_on_generators(const GroupBivector& b, int degree_cap) {
  const int m = b.n() * b.n();
  JacobiatorTable table;
  table.n = b.n();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (b.at(x, y).degree() > degree_cap) throw ResourceLimitError("bracket table exceeds the degree cap");
  auto with_entry = [&](int a, const Polynomial& p) {
    Polynomial out;
    for (int d = 0; d < m; ++d) {
      const Polynomial dp = p.derivative(d);
      if (!dp.is_zero() && !b.at(a, d).is_zero()) out += b.at(a, d) * dp;
    }
    return out;
  };
  for (int a = 0; a < m; ++a)
    for (int c1 = a + 1; c1 < m; ++c1)
      for (int c2 = c1 + 1; c2 < m; ++c2) {
        const Polynomial terms[3] = {with_entry(a, b.at(c1, c2)), with_entry(c1, b.at(c2, a)),
                                     with_entry(c2, b.at(a, c1))};
        for (const auto& t : terms)
          if (t.degree() > degree_cap) throw ResourceLimitError("jacobiator exceeds the degree cap");
        Polynomial j = terms[0] + terms[1] + terms[2];
        ++table.triples_checked;
        if (!j.is_zero()) table.nonzero.emplace(std::array<int, 3>{a, c1, c2}, std::move(j));
      }
  return table;
}

std::map<std::array<int, 3>, GroupPolynomial> ad_action_trivector(const MultiTensor& psi) {
  const auto& L = *psi.algebra();
  require_realization(L);
  const int m = L.matrix_size() * L.matrix_size();
  std::vector<std::vector<GroupPolynomial>> fields;
  for (const auto& x : L.matrix_realization()) {
    auto left = left_images(x);
    const auto right = right_images(x);
    for (int a = 0; a < m; ++a) left[a] -= right[a];
    fields.push_back(std::move(left));
  }
  const MultiTensor plain = psi.to_plain();
  std::map<std::array<int, 3>, GroupPolynomial> out;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        Polynomial v;
        for (const auto& [key, coeff] : plain.terms()) {
          const auto& fa = fields[key[0]][a];
          const auto& fb = fields[key[1]][b];
          const auto& fc = fields[key[2]][c];
          if (fa.is_zero() || fb.is_zero() || fc.is_zero()) continue;
          v += fa * fb * fc * coeff;
        }
        if (!v.is_zero()) out.emplace(std::array<int, 3>{a, b, c}, std::move(v));
      }
  return out;
}

bool is_ad_invariant(const GroupBivector& b, const LieAlgebra& L) {
  require_realization(L);
  if (L.matrix_size() != b.n()) throw std::invalid_argument("bracket and algebra have different matrix sizes");
  const int m = b.n() * b.n();
  for (const auto& x : L.matrix_realization()) {
    auto img = left_images(x);
    const auto right = right_images(x);
    for (int a = 0; a < m; ++a) img[a] -= right[a];
    for (int a = 0; a < m; ++a)
      for (int c = a + 1; c < m; ++c) {
        const Polynomial lhs = apply_derivation(img, b.at(a, c));
        const Polynomial rhs = b.bracket(img[a], Polynomial::variable(c)) + b.bracket(Polynomial::variable(a), img[c]);
        if (!(lhs == rhs)) return false;
      }
  }
  return true;
}

bool preserves_determinant_ideal(const GroupBivector& b) {
  GroupRing ring(b.n());
  const Polynomial det = ring.determinant();
  for (int i = 0; i < b.n(); ++i)
    for (int j = 0; j < b.n(); ++j)
      if (!b.bracket(det, ring.entry(i, j)).divide_exact(det)) return false;
  return true;
}

bool left_right_fields_commute(const LieAlgebra& L) {
  require_realization(L);
  GroupRing ring(L.matrix_size());
  const auto& mats = L.matrix_realization();
  for (const auto& x : mats)
    for (const auto& y : mats)
      for (int i = 0; i < ring.n(); ++i)
        for (int j = 0; j < ring.n(); ++j) {
          const Polynomial t = ring.entry(i, j);
          if (!(left_field(x, right_field(y, t)) == right_field(y, left_field(x, t)))) return false;
        }
  return true;
}

}  // namespace qpv

#include "qpv/polyfield.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <tuple>

namespace qpv {

namespace {

// Sign of theta_A theta_B relative to theta_{A u B}; 0 when A, B overlap.
int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

// Right derivative d/dtheta_k of theta_A: sign of moving theta_k to the end.
int right_derivative_sign(Mask a, int k) { return std::popcount(a >> (k + 1)) % 2 ? -1 : 1; }

struct Term {
  Monomial m;
  Mask mask;
  Rational c;
};

void check_dimension(const LieAlgebra& L) {
  if (L.dim() > kMaxVariables) {
    throw ResourceLimitError("polyvector fields support at most " + std::to_string(kMaxVariables) +
                             " coordinates; " + L.name() + " has " + std::to_string(L.dim()));
  }
}

Polynomial linear(const SparseTerms& terms) {
  Polynomial p;
  for (const auto& [l, v] : terms) p.add(Monomial::variable(l), v);
  return p;
}

std::vector<std::string> coordinate_names(const LieAlgebra& L) {
  std::vector<std::string> names;
  for (int i = 0; i < L.dim(); ++i) names.push_back(L.label(i));
  return names;
}

}  // namespace

Mask mask_of(const Index& sorted_indices) {
  Mask m = 0;
  for (int i : sorted_indices) m |= Mask{1} << i;
  return m;
}

Index indices_of(Mask mask) {
  Index out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

int sorting_sign(const Index& indices) {
  Index k = indices;
  int sign = 1;
  for (std::size_t i = 1; i < k.size(); ++i)
    for (std::size_t j = i; j > 0 && k[j - 1] >= k[j]; --j) {
      if (k[j - 1] == k[j]) return 0;
      std::swap(k[j - 1], k[j]);
      sign = -sign;
    }
  return sign;
}

PolyVectorField::PolyVectorField(LieAlgebraPtr algebra, int degree) : algebra_(std::move(algebra)), degree_(degree) {
  check_dimension(*algebra_);
  if (degree < 0) throw std::invalid_argument("invalid multivector degree");
}

void PolyVectorField::add(const Monomial& m, Mask mask, const Rational& c) {
  if (qpv::is_zero(c)) return;
  if (std::popcount(mask) != degree_) throw std::invalid_argument("mask does not match the multivector degree");
  auto [it, inserted] = terms_.try_emplace(Key{m, mask}, 0);
  it->second += c;
  if (qpv::is_zero(it->second)) terms_.erase(it);
}

void PolyVectorField::add(const Polynomial& coefficient, Mask mask) {
  for (const auto& [m, c] : coefficient.terms()) add(m, mask, c);
}

void PolyVectorField::add(const Polynomial& coefficient, const Index& indices) {
  const int sign = sorting_sign(indices);
  if (sign == 0) return;
  Index sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  add(sign < 0 ? -coefficient : coefficient, mask_of(sorted));
}

Polynomial PolyVectorField::coefficient(Mask mask) const {
  Polynomial p;
  for (const auto& [key, c] : terms_)
    if (key.second == mask) p.add(key.first, c);
  return p;
}

Polynomial PolyVectorField::coefficient(const Index& indices) const {
  const int sign = sorting_sign(indices);
  if (sign == 0) return {};
  Index sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  const Polynomial p = coefficient(mask_of(sorted));
  return sign < 0 ? -p : p;
}

std::map<Mask, Polynomial> PolyVectorField::by_mask() const {
  std::map<Mask, Polynomial> out;
  for (const auto& [key, c] : terms_) out[key.second].add(key.first, c);
  return out;
}

int PolyVectorField::polynomial_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first.degree());
  return d;
}

void PolyVectorField::require_compatible(const PolyVectorField& o) const {
  if (algebra_ != o.algebra_) throw AlgebraMismatchError("fields over different algebras");
  if (degree_ != o.degree_) throw std::invalid_argument("multivector degree mismatch");
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  require_compatible(o);
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

PolyVectorField PolyVectorField::operator+(const PolyVectorField& o) const {
  PolyVectorField out = *this;
  out += o;
  return out;
}

PolyVectorField PolyVectorField::operator-(const PolyVectorField& o) const { return *this + o * Rational(-1); }

PolyVectorField PolyVectorField::operator*(const Rational& s) const {
  PolyVectorField out(algebra_, degree_);
  if (qpv::is_zero(s)) return out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, c * s);
  return out;
}

bool PolyVectorField::operator==(const PolyVectorField& o) const {
  return algebra_ == o.algebra_ && degree_ == o.degree_ && terms_ == o.terms_;
}

std::string PolyVectorField::to_string() const {
  const auto names = coordinate_names(*algebra_);
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, poly] : by_mask()) {
    os << (first ? "" : " + ") << "[" << poly.to_string(names) << "]";
    for (int i : indices_of(mask)) os << " d/" << names[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

PolyVectorField field_product(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.algebra() != b.algebra()) throw AlgebraMismatchError("fields over different algebras");
  PolyVectorField out(a.algebra(), a.degree() + b.degree());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const int s = merge_sign(ka.second, kb.second);
      if (s == 0) continue;
      out.add(ka.first * kb.first, ka.second | kb.second, s > 0 ? ca * cb : Rational(-ca * cb));
    }
  return out;
}

PolyVectorField scale_by(const Polynomial& p, const PolyVectorField& a) {
  PolyVectorField out(a.algebra(), a.degree());
  for (const auto& [m, c] : p.terms())
    for (const auto& [k, v] : a.terms()) out.add(m * k.first, k.second, c * v);
  return out;
}

PolyVectorField schouten_nijenhuis(const PolyVectorField& p, const PolyVectorField& q) {
  if (p.algebra() != q.algebra()) throw AlgebraMismatchError("fields over different algebras");
  const int dp = p.degree();
  const int dq = q.degree();
  const int n = p.algebra()->dim();
  PolyVectorField out(p.algebra(), std::max(dp + dq - 1, 0));
  if (dp + dq == 0) return out;

  auto theta_derivatives = [n](const PolyVectorField& f) {
    std::vector<std::vector<Term>> d(n);
    for (const auto& [key, c] : f.terms())
      for (Mask rest = key.second; rest; rest &= rest - 1) {
        const int k = std::countr_zero(rest);
        const int s = right_derivative_sign(key.second, k);
        d[k].push_back({key.first, key.second & ~(Mask{1} << k), s > 0 ? c : Rational(-c)});
      }
    return d;
  };
  auto y_derivatives = [n](const PolyVectorField& f) {
    std::vector<std::vector<Term>> d(n);
    for (const auto& [key, c] : f.terms())
      for (int k = 0; k < n; ++k) {
        const int e = key.first.exp[k];
        if (e == 0) continue;
        Monomial m = key.first;
        m.exp[k] -= 1;
        d[k].push_back({m, key.second, c * e});
      }
    return d;
  };
  auto accumulate = [&](const std::vector<std::vector<Term>>& dtheta, const std::vector<std::vector<Term>>& dy,
                        const Rational& sign) {
    for (int k = 0; k < n; ++k)
      for (const auto& a : dtheta[k])
        for (const auto& b : dy[k]) {
          const int s = merge_sign(a.mask, b.mask);
          if (s == 0) continue;
          out.add(a.m * b.m, a.mask | b.mask, s > 0 ? sign * a.c * b.c : Rational(-sign * a.c * b.c));
        }
  };
  accumulate(theta_derivatives(p), y_derivatives(q), Rational(1));
  const bool odd = ((dp - 1) * (dq - 1)) % 2 != 0;
  accumulate(theta_derivatives(q), y_derivatives(p), odd ? Rational(1) : Rational(-1));
  return out;
}

Polynomial evaluate(const PolyVectorField& p, const std::vector<Polynomial>& args) {
  const int k = p.degree();
  if (static_cast<int>(args.size()) != k) throw std::invalid_argument("argument count differs from the field degree");
  const int n = p.algebra()->dim();
  std::vector<std::vector<Polynomial>> grads(k, std::vector<Polynomial>(n));
  for (int l = 0; l < k; ++l)
    for (int i = 0; i < n; ++i) grads[l][i] = args[l].derivative(i);
  Polynomial out;
  for (const auto& [mask, coeff] : p.by_mask()) {
    Index idx = indices_of(mask);
    Index perm(k);
    for (int l = 0; l < k; ++l) perm[l] = l;
    Polynomial det;
    do {
      Polynomial prod = Polynomial::constant(sorting_sign(perm));
      for (int l = 0; l < k && !prod.is_zero(); ++l) prod = prod * grads[l][idx[perm[l]]];
      det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out += coeff * det;
  }
  return out;
}

Polynomial jacobiator(const PolyVectorField& p, const Polynomial& a, const Polynomial& b, const Polynomial& c) {
  auto br = [&](const Polynomial& x, const Polynomial& y) { return evaluate(p, {x, y}); };
  return br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b));
}

PolyVectorField action_field(const LieAlgebraPtr& algebra, const Vector& x) {
  const auto& sc = algebra->structure();
  PolyVectorField out(algebra, 1);
  for (int i = 0; i < algebra->dim(); ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < algebra->dim(); ++j)
      for (const auto& [l, v] : sc.bracket(i, j)) out.add(Monomial::variable(l), Mask{1} << j, x[i] * v);
  }
  return out;
}

PolyVectorField action_field(const LieAlgebraPtr& algebra, int basis_index) {
  return action_field(algebra, algebra->unit(basis_index));
}

PolyVectorField action_field(const MultiTensor& psi) {
  if (psi.symmetry() == Symmetry::symmetric) throw std::invalid_argument("action field of a symmetric tensor");
  const MultiTensor alt = psi.symmetry() == Symmetry::alternating ? psi : alternating_part(psi);
  const auto& L = alt.algebra();
  std::vector<PolyVectorField> fields;
  for (int i = 0; i < L->dim(); ++i) fields.push_back(action_field(L, i));
  PolyVectorField out(L, alt.degree());
  for (const auto& [key, c] : alt.terms()) {
    PolyVectorField prod(L, 0);
    prod.add(Monomial{}, 0, c);
    for (int i : key) prod = field_product(prod, fields[i]);
    out += prod;
  }
  return out;
}

PolyVectorField kirillov_bracket(const LieAlgebraPtr& algebra) {
  const auto& sc = algebra->structure();
  PolyVectorField out(algebra, 2);
  for (int a = 0; a < algebra->dim(); ++a)
    for (int b = a + 1; b < algebra->dim(); ++b) out.add(linear(sc.bracket(a, b)), mask_of({a, b}));
  return out;
}

PolyVectorField rmatrix_bracket(const MultiTensor& r) {
  if (r.degree() != 2) throw std::invalid_argument("r-matrix bracket expects a 2-tensor");
  return action_field(r);
}

PolyVectorField lie_derivative(int basis_index, const PolyVectorField& p) {
  return schouten_nijenhuis(action_field(p.algebra(), basis_index), p);
}

bool is_invariant(const PolyVectorField& p) {
  for (int i = 0; i < p.algebra()->dim(); ++i)
    if (!lie_derivative(i, p).is_zero()) return false;
  return true;
}

std::optional<Rational> field_ratio(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.algebra() != b.algebra() || a.degree() != b.degree()) return std::nullopt;
  if (b.is_zero()) return a.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  const auto& [key, v] = *b.terms().begin();
  auto it = a.terms().find(key);
  const Rational c = it == a.terms().end() ? Rational(0) : Rational(it->second / v);
  if (!(a == b * c)) return std::nullopt;
  return c;
}

EquivariantMapSpace solve_equivariant(const LieAlgebraPtr& algebra, int p, int q, long long cap) {
  const auto& L = *algebra;
  check_dimension(L);
  const int n = L.dim();
  if (p < 0 || q < 0 || p > n) throw std::invalid_argument("invalid degrees for the equivariant solver");
  long long masks = 1;
  for (int i = 1; i <= p; ++i) masks = masks * (n - p + i) / i;
  const long long size = masks * monomial_count(n, q);
  if (size > cap) {
    throw ResourceLimitError("equivariant system for (" + std::to_string(p) + ", " + std::to_string(q) + ") on " +
                             L.name() + " has " + std::to_string(size) + " unknowns; cap is " + std::to_string(cap));
  }

  // Unknowns: weight-zero pairs (monomial, mask). Coordinate y_j has the
  // weight of b_j and d/dy_j the opposite weight.
  const int r = L.rank();
  auto weight_of = [&](const Monomial& m, Mask mask) {
    std::vector<int> w(r, 0);
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < r; ++a) w[a] += m.exp[j] * L.weight(j)[a];
    for (int j : indices_of(mask))
      for (int a = 0; a < r; ++a) w[a] -= L.weight(j)[a];
    return w;
  };
  std::vector<Mask> mask_list;
  Index chosen(p);
  for (int i = 0; i < p; ++i) chosen[i] = i;
  while (true) {
    mask_list.push_back(mask_of(chosen));
    int i = p - 1;
    while (i >= 0 && chosen[i] == n - p + i) --i;
    if (i < 0) break;
    ++chosen[i];
    for (int j = i + 1; j < p; ++j) chosen[j] = chosen[j - 1] + 1;
  }
  const auto mons = monomials_of_degree(n, q);
  std::vector<PolyVectorField::Key> unknowns;
  const std::vector<int> zero(r, 0);
  for (Mask mask : mask_list)
    for (const auto& m : mons)
      if (weight_of(m, mask) == zero) unknowns.emplace_back(m, mask);

  std::vector<int> generators;
  for (int i = 0; i < r; ++i) {
    generators.push_back(L.simple_e(i));
    generators.push_back(L.simple_f(i));
  }
  std::map<std::tuple<int, Monomial, Mask>, SparseRow> rows;
  for (int g : generators) {
    const PolyVectorField xi = action_field(algebra, g);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      PolyVectorField t(algebra, p);
      t.add(unknowns[u].first, unknowns[u].second, 1);
      const PolyVectorField image = schouten_nijenhuis(xi, t);
      for (const auto& [key, c] : image.terms())
        rows[{g, key.first, key.second}][static_cast<int>(u)] += c;
    }
  }
  RowEchelon ech(static_cast<int>(unknowns.size()));
  for (auto& [key, row] : rows) ech.insert(std::move(row));

  EquivariantMapSpace space;
  space.p = p;
  space.q = q;
  for (const auto& v : ech.nullspace()) {
    PolyVectorField f(algebra, p);
    for (std::size_t u = 0; u < unknowns.size(); ++u) f.add(unknowns[u].first, unknowns[u].second, v[u]);
    space.basis.push_back(std::move(f));
  }
  return space;
}

PolyVectorField phibar(const LieAlgebraPtr& algebra) {
  const auto& L = *algebra;
  const auto& sc = L.structure();
  const MultiTensor phi = canonical_tensors(algebra).phi.to_plain();
  const int n = L.dim();
  PolyVectorField out(algebra, 3);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Polynomial coeff;
        for (const auto& [key, v] : phi.terms()) {
          const auto& ba = sc.bracket(key[0], a);
          const auto& bb = sc.bracket(key[1], b);
          const auto& bc = sc.bracket(key[2], c);
          if (ba.empty() || bb.empty() || bc.empty()) continue;
          coeff += linear(ba) * linear(bb) * linear(bc) * v;
        }
        out.add(coeff, mask_of({a, b, c}));
      }
  if (!(out == action_field(canonical_tensors(algebra).phi) * Rational(kPhibarSign))) {
    throw std::logic_error("phibar differs from the action field of phi by more than the frozen sign");
  }
  return out;
}

PolyVectorField quadratic_bracket(const LieAlgebraPtr& algebra, const Rational& scale) {
  auto space = solve_equivariant(algebra, 2, 2);
  if (space.dimension() != 1) {
    throw NoSolutionError("invariant quadratic brackets on " + algebra->name() + "* form a space of dimension " +
                          std::to_string(space.dimension()) + ", expected 1");
  }
  return space.basis.front() * scale;
}

ScaleCalibration calibrate_scale(const LieAlgebraPtr& algebra) {
  const PolyVectorField f0 = quadratic_bracket(algebra, 1);
  const PolyVectorField ff = schouten_nijenhuis(f0, f0);
  const auto mu = field_ratio(ff, phibar(algebra));
  if (!mu || is_zero(*mu)) throw NoSolutionError("[[f0, f0]] is not a nonzero multiple of phibar");
  ScaleCalibration cal;
  cal.mu = *mu;
  cal.lambda_squared = Rational(-1) / *mu;
  cal.lambda = rational_sqrt(cal.lambda_squared);
  return cal;
}

PolyVectorField trace_quadratic_bracket(const LieAlgebraPtr& algebra) {
  const auto& L = *algebra;
  if (L.root_system().series != Series::A) throw UnsupportedTypeError("trace quadratic bracket needs type A");
  const int n = L.dim();
  const auto& mats = L.matrix_realization();
  // Dual basis for the trace form: tr(d_i b_j) = delta_ij, X = sum y_j d_j.
  Matrix gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram(i, j) = (mats[i] * mats[j]).trace();
  const Matrix ginv = *inverse(gram);
  std::vector<Matrix> dual;
  for (int i = 0; i < n; ++i) {
    Matrix d(L.matrix_size(), L.matrix_size());
    for (int k = 0; k < n; ++k)
      if (!is_zero(ginv(k, i))) d += mats[k] * ginv(k, i);
    dual.push_back(std::move(d));
  }
  PolyVectorField out(algebra, 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Matrix c = commutator(mats[a], mats[b]);
      if (c.is_zero()) continue;
      Polynomial coeff;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          Rational v = (dual[i] * dual[j] * c).trace();
          if (i != j) v += (dual[j] * dual[i] * c).trace();
          coeff.add(Monomial::variable(i) * Monomial::variable(j), v);
        }
      out.add(coeff, mask_of({a, b}));
    }
  return out;
}

PencilReport poisson_pencil_check(const PolyVectorField& p, const PolyVectorField& q) {
  if (p.degree() != 2 || q.degree() != 2) throw std::invalid_argument("pencil check expects bivector fields");
  PencilReport rep{schouten_nijenhuis(p, p), schouten_nijenhuis(q, q), schouten_nijenhuis(p, q)};
  rep.p_poisson = rep.pp.is_zero();
  rep.q_poisson = rep.qq.is_zero();
  rep.compatible = rep.pq.is_zero();
  rep.pencil_poisson = rep.p_poisson && rep.q_poisson && rep.compatible;
  return rep;
}

PhiBracketPencilReport phi_bracket_pencil(const LieAlgebraPtr& algebra) {
  PhiBracketPencilReport rep;
  const PolyVectorField f0 = quadratic_bracket(algebra, 1);
  const PolyVectorField s = kirillov_bracket(algebra);
  const auto ct = canonical_tensors(algebra);
  const PolyVectorField rm = rmatrix_bracket(ct.r_sd);
  const PolyVectorField pb = phibar(algebra);
  const PolyVectorField phim = action_field(ct.phi);
  const PolyVectorField ff = schouten_nijenhuis(f0, f0);
  const PolyVectorField rr = schouten_nijenhuis(rm, rm);

  const auto mu = field_ratio(ff, pb);
  if (!mu || is_zero(*mu)) throw NoSolutionError("[[f0, f0]] is not a nonzero multiple of phibar");
  rep.calibration.mu = *mu;
  rep.calibration.lambda_squared = Rational(-1) / *mu;
  rep.calibration.lambda = rational_sqrt(rep.calibration.lambda_squared);

  rep.s_f_vanishes = schouten_nijenhuis(s, f0).is_zero();
  rep.ff_is_minus_phibar = (ff * rep.calibration.lambda_squared + pb).is_zero();
  rep.rr_is_phi_m = rr == phim;
  rep.f_r_vanishes = schouten_nijenhuis(f0, rm).is_zero();
  rep.s_r_vanishes = schouten_nijenhuis(s, rm).is_zero();
  const bool ss = schouten_nijenhuis(s, s).is_zero();
  // [[p, p]] = lambda^2 [[f0, f0]] + [[r_M, r_M]] - 2 lambda [[f0, r_M]].
  const bool even = (ff * rep.calibration.lambda_squared + rr).is_zero();
  rep.p_poisson = even && rep.f_r_vanishes;
  // [[s, p]] = lambda [[s, f0]] - [[s, r_M]].
  rep.pencil_poisson = ss && rep.p_poisson && rep.s_f_vanishes && rep.s_r_vanishes;
  return rep;
}

std::vector<BivectorScanDegree> invariant_bivector_scan(const LieAlgebraPtr& algebra, int max_degree, long long cap) {
  std::vector<BivectorScanDegree> out;
  const PolyVectorField s = kirillov_bracket(algebra);
  for (int k = 0; k <= max_degree; ++k) {
    BivectorScanDegree row;
    row.degree = k;
    row.basis = solve_equivariant(algebra, 2, k, cap).basis;
    row.dimension = static_cast<int>(row.basis.size());
    std::vector<PolyVectorField> products;
    if (k >= 1) {
      const auto invariants = solve_equivariant(algebra, 0, k - 1, cap);
      row.invariant_polynomial_dimension = invariants.dimension();
      for (const auto& b : invariants.basis) products.push_back(scale_by(b.coefficient(Mask{0}), s));
    }
    // Reduce the invariant bivectors modulo span{b * s}.
    std::map<PolyVectorField::Key, int> column;
    auto row_of = [&](const PolyVectorField& f) {
      SparseRow sr;
      for (const auto& [key, c] : f.terms()) {
        auto [it, inserted] = column.try_emplace(key, static_cast<int>(column.size()));
        sr[it->second] = c;
      }
      return sr;
    };
    std::vector<SparseRow> product_rows, basis_rows;
    for (const auto& f : products) product_rows.push_back(row_of(f));
    for (const auto& f : row.basis) basis_rows.push_back(row_of(f));
    RowEchelon ech(static_cast<int>(column.size()));
    for (auto& r : product_rows) ech.insert(std::move(r));
    for (std::size_t i = 0; i < row.basis.size(); ++i) {
      if (ech.insert(basis_rows[i])) {
        row.exceptional.push_back(row.basis[i]);
        row.exceptional_poisson.push_back(schouten_nijenhuis(row.basis[i], row.basis[i]).is_zero());
      }
    }
    row.conjecture_form = row.exceptional.empty();
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace qpv

#include "qpv/multivec.hpp"

#include <algorithm>
#include <sstream>

namespace qpv {

namespace {

// Sorts `key` ascending and returns the permutation sign.
int sort_with_sign(Index& key) {
  int sign = 1;
  for (std::size_t i = 1; i < key.size(); ++i)
    for (std::size_t j = i; j > 0 && key[j - 1] > key[j]; --j) {
      std::swap(key[j - 1], key[j]);
      sign = -sign;
    }
  return sign;
}

bool has_repeat(const Index& sorted) { return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end(); }

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

MultiTensor::MultiTensor(LieAlgebraPtr algebra, int degree, Symmetry symmetry)
    : algebra_(std::move(algebra)), degree_(degree), symmetry_(symmetry) {
  if (degree < 0) throw std::invalid_argument("negative tensor degree");
}

MultiTensor MultiTensor::from_vector(LieAlgebraPtr algebra, const Vector& x) {
  MultiTensor t(std::move(algebra), 1, Symmetry::alternating);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!qpv::is_zero(x[i])) t.add({static_cast<int>(i)}, x[i]);
  return t;
}

MultiTensor MultiTensor::basis_vector(LieAlgebraPtr algebra, int i) {
  MultiTensor t(std::move(algebra), 1, Symmetry::alternating);
  t.add({i}, 1);
  return t;
}

void MultiTensor::add(Index key, const Rational& c) {
  if (static_cast<int>(key.size()) != degree_) throw std::invalid_argument("tensor key has the wrong length");
  if (qpv::is_zero(c)) return;
  Rational v = c;
  if (symmetry_ == Symmetry::alternating) {
    if (sort_with_sign(key) < 0) v = -v;
    if (has_repeat(key)) return;
  } else if (symmetry_ == Symmetry::symmetric) {
    std::sort(key.begin(), key.end());
  }
  auto [it, inserted] = terms_.try_emplace(std::move(key), 0);
  it->second += v;
  if (qpv::is_zero(it->second)) terms_.erase(it);
}

Rational MultiTensor::component(const Index& key) const {
  Index k = key;
  int sign = 1;
  if (symmetry_ == Symmetry::alternating) {
    sign = sort_with_sign(k);
    if (has_repeat(k)) return 0;
  } else if (symmetry_ == Symmetry::symmetric) {
    std::sort(k.begin(), k.end());
  }
  auto it = terms_.find(k);
  if (it == terms_.end()) return 0;
  return sign < 0 ? Rational(-it->second) : it->second;
}

void MultiTensor::require_compatible(const MultiTensor& o) const {
  if (algebra_ != o.algebra_) throw AlgebraMismatchError("tensors over different algebras");
  if (degree_ != o.degree_) throw std::invalid_argument("tensor degree mismatch");
}

MultiTensor& MultiTensor::operator+=(const MultiTensor& o) {
  require_compatible(o);
  if (symmetry_ != o.symmetry_) {
    if (symmetry_ != Symmetry::plain) *this = to_plain();
    for (const auto& [k, v] : o.to_plain().terms_) add(k, v);
    return *this;
  }
  for (const auto& [k, v] : o.terms_) add(k, v);
  return *this;
}

MultiTensor MultiTensor::operator+(const MultiTensor& o) const {
  MultiTensor out = *this;
  out += o;
  return out;
}

MultiTensor MultiTensor::operator-(const MultiTensor& o) const { return *this + o * Rational(-1); }

MultiTensor MultiTensor::operator*(const Rational& s) const {
  MultiTensor out(algebra_, degree_, symmetry_);
  if (qpv::is_zero(s)) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * s);
  return out;
}

bool MultiTensor::operator==(const MultiTensor& o) const {
  if (algebra_ != o.algebra_ || degree_ != o.degree_) return false;
  if (symmetry_ == o.symmetry_) return terms_ == o.terms_;
  return to_plain().terms_ == o.to_plain().terms_;
}

MultiTensor MultiTensor::to_plain() const {
  if (symmetry_ == Symmetry::plain) return *this;
  MultiTensor out(algebra_, degree_, Symmetry::plain);
  for (const auto& [key, c] : terms_) {
    Index perm = key;
    do {
      Rational v = c;
      if (symmetry_ == Symmetry::alternating) {
        Index tmp = perm;
        if (sort_with_sign(tmp) < 0) v = -v;
      }
      out.terms_.emplace(perm, v);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::string MultiTensor::to_string() const {
  std::ostringstream os;
  const char* sep = symmetry_ == Symmetry::alternating ? "^" : (symmetry_ == Symmetry::symmetric ? "." : "(x)");
  bool first = true;
  for (const auto& [key, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.get_str() << ")";
    for (std::size_t i = 0; i < key.size(); ++i) os << (i ? sep : " ") << algebra_->label(key[i]);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

MultiTensor alternating_part(const MultiTensor& plain) {
  const MultiTensor p = plain.to_plain();
  MultiTensor out(p.algebra(), p.degree(), Symmetry::alternating);
  const Rational inv = Rational(1) / factorial(p.degree());
  for (const auto& [k, v] : p.terms()) out.add(k, v * inv);
  return out;
}

std::optional<MultiTensor> as_alternating(const MultiTensor& plain) {
  MultiTensor alt = alternating_part(plain);
  if (!(alt == plain)) return std::nullopt;
  return alt;
}

std::optional<Rational> tensor_ratio(const MultiTensor& a, const MultiTensor& b) {
  if (a.algebra() != b.algebra() || a.degree() != b.degree()) return std::nullopt;
  const MultiTensor pa = a.to_plain();
  const MultiTensor pb = b.to_plain();
  if (pb.is_zero()) return pa.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  const auto& [k0, v0] = *pb.terms().begin();
  const Rational c = pa.component(k0) / v0;
  if (!(pa == pb * c)) return std::nullopt;
  return c;
}

MultiTensor tensor_product(const MultiTensor& a, const MultiTensor& b) {
  if (a.algebra() != b.algebra()) throw AlgebraMismatchError("tensors over different algebras");
  const MultiTensor pa = a.to_plain();
  const MultiTensor pb = b.to_plain();
  MultiTensor out(a.algebra(), a.degree() + b.degree());
  for (const auto& [ka, va] : pa.terms())
    for (const auto& [kb, vb] : pb.terms()) {
      Index k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.add(std::move(k), va * vb);
    }
  return out;
}

MultiTensor wedge(const MultiTensor& a, const MultiTensor& b) {
  if (a.algebra() != b.algebra()) throw AlgebraMismatchError("tensors over different algebras");
  if (a.symmetry() == Symmetry::symmetric || b.symmetry() == Symmetry::symmetric)
    throw std::invalid_argument("wedge of a symmetric tensor");
  const MultiTensor aa = a.symmetry() == Symmetry::alternating ? a : alternating_part(a);
  const MultiTensor bb = b.symmetry() == Symmetry::alternating ? b : alternating_part(b);
  MultiTensor out(a.algebra(), a.degree() + b.degree(), Symmetry::alternating);
  for (const auto& [ka, va] : aa.terms())
    for (const auto& [kb, vb] : bb.terms()) {
      Index k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.add(std::move(k), va * vb);
    }
  return out;
}

MultiTensor ad_action(const Vector& x, const MultiTensor& t) {
  const auto& L = *t.algebra();
  if (static_cast<int>(x.size()) != L.dim()) throw AlgebraMismatchError("element and tensor over different algebras");
  if (t.symmetry() == Symmetry::symmetric) {
    // Symmetric orbits with repeated indices have nontrivial stabilizers, so
    // act on the expansion and read the result back.
    const MultiTensor plain = ad_action(x, t.to_plain());
    MultiTensor out(t.algebra(), t.degree(), Symmetry::symmetric);
    for (const auto& [k, v] : plain.terms())
      if (std::is_sorted(k.begin(), k.end())) out.add(k, v);
    return out;
  }
  const auto& sc = L.structure();
  MultiTensor out(t.algebra(), t.degree(), t.symmetry());
  for (const auto& [key, c] : t.terms())
    for (std::size_t leg = 0; leg < key.size(); ++leg)
      for (int i = 0; i < L.dim(); ++i) {
        if (is_zero(x[i])) continue;
        for (const auto& [m, v] : sc.bracket(i, key[leg])) {
          Index k = key;
          k[leg] = m;
          out.add(std::move(k), c * x[i] * v);
        }
      }
  return out;
}

MultiTensor ad_action(int basis_index, const MultiTensor& t) {
  return ad_action(t.algebra()->unit(basis_index), t);
}

bool is_invariant(const MultiTensor& t) {
  for (int i = 0; i < t.algebra()->dim(); ++i)
    if (!ad_action(i, t).is_zero()) return false;
  return true;
}

MultiTensor algebraic_schouten(const MultiTensor& a, const MultiTensor& b) {
  if (a.algebra() != b.algebra()) throw AlgebraMismatchError("tensors over different algebras");
  const int p = a.degree();
  const int q = b.degree();
  if (p == 0 || q == 0) return MultiTensor(a.algebra(), std::max(p + q - 1, 0), Symmetry::alternating);
  const MultiTensor aa = a.symmetry() == Symmetry::alternating ? a : alternating_part(a);
  const MultiTensor bb = b.symmetry() == Symmetry::alternating ? b : alternating_part(b);
  const auto& sc = a.algebra()->structure();
  MultiTensor out(a.algebra(), p + q - 1, Symmetry::alternating);
  for (const auto& [x, ca] : aa.terms())
    for (const auto& [y, cb] : bb.terms())
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
          const auto& br = sc.bracket(x[i], y[j]);
          if (br.empty()) continue;
          Index k(1);
          for (int u = 0; u < p; ++u)
            if (u != i) k.push_back(x[u]);
          for (int u = 0; u < q; ++u)
            if (u != j) k.push_back(y[u]);
          const Rational c = ((i + j) % 2 == 0 ? ca * cb : Rational(-ca * cb));
          for (const auto& [m, v] : br) {
            k[0] = m;
            out.add(k, c * v);
          }
        }
  return out;
}

MultiTensor cyb_trinomial(const MultiTensor& r) {
  if (r.degree() != 2 || r.symmetry() == Symmetry::symmetric)
    throw std::invalid_argument("cyb expects an alternating 2-tensor");
  const MultiTensor p = r.to_plain();
  const auto& sc = r.algebra()->structure();
  MultiTensor out(r.algebra(), 3);
  for (const auto& [k1, v1] : p.terms())
    for (const auto& [k2, v2] : p.terms()) {
      const int a = k1[0], b = k1[1], c = k2[0], d = k2[1];
      const Rational w = v1 * v2;
      for (const auto& [m, v] : sc.bracket(a, c)) out.add({m, b, d}, w * v);  // [r12, r13]
      for (const auto& [m, v] : sc.bracket(b, c)) out.add({a, m, d}, w * v);  // [r12, r23]
      for (const auto& [m, v] : sc.bracket(b, d)) out.add({a, c, m}, w * v);  // [r13, r23]
    }
  return out;
}

MultiTensor cyb(const MultiTensor& r) {
  MultiTensor out = cyb_trinomial(r);
  const MultiTensor rr = algebraic_schouten(r, r);
  if (!(out == rr * kCybSchoutenRatio)) throw std::logic_error("cyb(r) is not proportional to [[r, r]] with the frozen constant");
  return out;
}

MultiTensor cobracket(const MultiTensor& r, const Vector& x) {
  if (r.degree() != 2) throw std::invalid_argument("cobracket expects a 2-tensor");
  return ad_action(x, r) * Rational(-1);
}

CoJacobiReport co_jacobi_check(const MultiTensor& r) {
  CoJacobiReport rep;
  const auto& L = r.algebra();
  const MultiTensor rr = algebraic_schouten(r, r);
  rep.rr_invariant = is_invariant(rr);
  std::vector<MultiTensor> delta;
  for (int i = 0; i < L->dim(); ++i) delta.push_back(cobracket(r, L->unit(i)).to_plain());
  for (int x = 0; x < L->dim(); ++x) {
    MultiTensor iterated(L, 3);
    for (const auto& [ab, c] : delta[x].terms())
      for (const auto& [uv, w] : delta[ab[0]].terms()) iterated.add({uv[0], uv[1], ab[1]}, c * w);
    MultiTensor defect = alternating_part(iterated);
    if (defect.is_zero()) continue;
    rep.holds = false;
    rep.failing_basis = x;
    rep.defect_ratio = tensor_ratio(defect, ad_action(x, rr));
    rep.defect = std::move(defect);
    break;
  }
  return rep;
}

MultiTensor antipode_flip(const MultiTensor& t) { return t.degree() % 2 == 0 ? t : t * Rational(-1); }

CanonicalTensors canonical_tensors(const LieAlgebraPtr& algebra) {
  const auto& L = *algebra;
  const Matrix& kinv = L.killing_inverse();
  MultiTensor t(algebra, 2, Symmetry::symmetric);
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i; j < L.dim(); ++j)
      if (!is_zero(kinv(i, j))) t.add({i, j}, kinv(i, j));
  MultiTensor r(algebra, 2, Symmetry::alternating);
  for (int k = 0; k < L.num_positive_roots(); ++k)
    r.add({L.positive_root_index(k), L.negative_root_index(k)}, L.root_pair_scale(k));
  MultiTensor phi = algebraic_schouten(r, r);
  return {std::move(t), std::move(r), std::move(phi)};
}

MultiTensor structure_trivector(const LieAlgebraPtr& algebra) {
  const auto& L = *algebra;
  const Matrix& kinv = L.killing_inverse();
  MultiTensor plain(algebra, 3);
  for (int a1 = 0; a1 < L.dim(); ++a1)
    for (int b1 = 0; b1 < L.dim(); ++b1)
      for (const auto& [c, v] : L.structure().bracket(a1, b1))
        for (int a = 0; a < L.dim(); ++a) {
          if (is_zero(kinv(a, a1))) continue;
          for (int b = 0; b < L.dim(); ++b)
            if (!is_zero(kinv(b, b1))) plain.add({a, b, c}, kinv(a, a1) * kinv(b, b1) * v);
        }
  auto alt = as_alternating(plain);
  if (!alt) throw std::logic_error("structure trivector is not alternating");
  return *alt;
}

}  // namespace qpv

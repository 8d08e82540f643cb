#include "qpv/utensor.hpp"

#include <sstream>
#include <stdexcept>

namespace qpv {

UTensor::UTensor(LieAlgebraPtr algebra, int legs) : algebra_(std::move(algebra)), legs_(legs) {
  if (legs < 0) throw std::invalid_argument("negative leg count");
}

UTensor UTensor::unit(LieAlgebraPtr algebra, int legs) {
  UTensor out(std::move(algebra), legs);
  out.add(std::vector<Word>(legs), 1);
  return out;
}

UTensor UTensor::from_multitensor(const MultiTensor& t) {
  UTensor out(t.algebra(), t.degree());
  const MultiTensor plain = t.to_plain();
  for (const auto& [key, c] : plain.terms()) {
    std::vector<Word> k;
    for (int i : key) k.push_back({i});
    out.add(std::move(k), c);
  }
  return out;
}

UTensor UTensor::from_vector(LieAlgebraPtr algebra, const Vector& x) {
  UTensor out(std::move(algebra), 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!qpv::is_zero(x[i])) out.add({{static_cast<int>(i)}}, x[i]);
  return out;
}

void UTensor::add(std::vector<Word> key, const Rational& c) {
  if (static_cast<int>(key.size()) != legs_) throw std::invalid_argument("key has the wrong number of legs");
  if (qpv::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), 0);
  it->second += c;
  if (qpv::is_zero(it->second)) terms_.erase(it);
}

void UTensor::require_compatible(const UTensor& o) const {
  if (algebra_ != o.algebra_) throw AlgebraMismatchError("tensors over different algebras");
  if (legs_ != o.legs_) throw std::invalid_argument("leg count mismatch");
}

UTensor UTensor::operator+(const UTensor& o) const {
  require_compatible(o);
  UTensor out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k, c);
  return out;
}

UTensor UTensor::operator-(const UTensor& o) const { return *this + o * Rational(-1); }

UTensor UTensor::operator*(const Rational& s) const {
  UTensor out(algebra_, legs_);
  if (qpv::is_zero(s)) return out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
  return out;
}

UTensor UTensor::operator*(const UTensor& o) const {
  require_compatible(o);
  UTensor out(algebra_, legs_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      std::vector<Word> k = k1;
      for (int l = 0; l < legs_; ++l) k[l].insert(k[l].end(), k2[l].begin(), k2[l].end());
      out.add(std::move(k), c1 * c2);
    }
  return out;
}

std::string UTensor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.get_str() << ")";
    for (int l = 0; l < legs_; ++l) {
      os << (l ? " (x) " : " ");
      if (k[l].empty()) os << "1";
      for (std::size_t i = 0; i < k[l].size(); ++i) os << (i ? "." : "") << algebra_->label(k[l][i]);
    }
    first = false;
  }
  return os.str();
}

UTensor commutator(const UTensor& a, const UTensor& b) { return a * b - b * a; }

UTensor tensor_product(const UTensor& a, const UTensor& b) {
  if (a.algebra() != b.algebra()) throw AlgebraMismatchError("tensors over different algebras");
  UTensor out(a.algebra(), a.legs() + b.legs());
  for (const auto& [k1, c1] : a.terms())
    for (const auto& [k2, c2] : b.terms()) {
      std::vector<Word> k = k1;
      k.insert(k.end(), k2.begin(), k2.end());
      out.add(std::move(k), c1 * c2);
    }
  return out;
}

UTensor coproduct_on_leg(const UTensor& t, int leg) {
  if (leg < 0 || leg >= t.legs()) throw std::out_of_range("leg out of range");
  UTensor out(t.algebra(), t.legs() + 1);
  for (const auto& [k, c] : t.terms()) {
    const Word& w = k[leg];
    if (w.size() >= 31) throw std::length_error("word too long for the shuffle coproduct");
    const unsigned n = static_cast<unsigned>(w.size());
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
      Word left, right;
      for (unsigned i = 0; i < n; ++i) (bits & (1u << i) ? left : right).push_back(w[i]);
      std::vector<Word> nk(k.begin(), k.begin() + leg);
      nk.push_back(std::move(left));
      nk.push_back(std::move(right));
      nk.insert(nk.end(), k.begin() + leg + 1, k.end());
      out.add(std::move(nk), c);
    }
  }
  return out;
}

UTensor counit_on_leg(const UTensor& t, int leg) {
  if (leg < 0 || leg >= t.legs()) throw std::out_of_range("leg out of range");
  UTensor out(t.algebra(), t.legs() - 1);
  for (const auto& [k, c] : t.terms()) {
    if (!k[leg].empty()) continue;
    std::vector<Word> nk = k;
    nk.erase(nk.begin() + leg);
    out.add(std::move(nk), c);
  }
  return out;
}

UTensor embed_legs(const UTensor& t, int legs, const std::vector<int>& positions) {
  if (static_cast<int>(positions.size()) != t.legs()) throw std::invalid_argument("one position per leg expected");
  UTensor out(t.algebra(), legs);
  for (const auto& [k, c] : t.terms()) {
    std::vector<Word> nk(legs);
    for (std::size_t i = 0; i < positions.size(); ++i) nk.at(positions[i]) = k[i];
    out.add(std::move(nk), c);
  }
  return out;
}

UTensor swap_legs(const UTensor& t, int i, int j) {
  UTensor out(t.algebra(), t.legs());
  for (const auto& [k, c] : t.terms()) {
    std::vector<Word> nk = k;
    std::swap(nk.at(i), nk.at(j));
    out.add(std::move(nk), c);
  }
  return out;
}

UTensor primitive_coproduct(const LieAlgebraPtr& algebra, int basis_index) {
  UTensor out(algebra, 2);
  out.add({{basis_index}, {}}, 1);
  out.add({{}, {basis_index}}, 1);
  return out;
}

Representation defining_representation(const LieAlgebra& L) {
  if (!L.has_matrix_realization()) throw std::invalid_argument(L.name() + " has no matrix realization");
  Representation rep{"defining", L.matrix_size(), {}};
  for (const auto& m : L.matrix_realization()) rep.images.push_back(SparseMatrix::from_dense(m));
  return rep;
}

Representation adjoint_representation(const LieAlgebra& L) {
  Representation rep{"adjoint", L.dim(), {}};
  for (int i = 0; i < L.dim(); ++i) rep.images.push_back(SparseMatrix::from_dense(L.structure().ad_matrix(i)));
  return rep;
}

bool is_faithful_in_degree_one(const Representation& rep) {
  auto flatten = [&](const SparseMatrix& m) {
    Vector v(static_cast<std::size_t>(rep.dim) * rep.dim);
    for (const auto& [ij, c] : m.entries()) v[static_cast<std::size_t>(ij.first) * rep.dim + ij.second] = c;
    return v;
  };
  std::vector<Vector> vs{flatten(SparseMatrix::identity(rep.dim))};
  for (const auto& m : rep.images) vs.push_back(flatten(m));
  return rank(vs) == static_cast<int>(vs.size());
}

SparseMatrix evaluate_word(const Word& w, const Representation& rep) {
  SparseMatrix out = SparseMatrix::identity(rep.dim);
  for (int i : w) out = out * rep.images.at(i);
  return out;
}

SparseMatrix evaluate(const UTensor& t, const Representation& rep) {
  int size = 1;
  for (int l = 0; l < t.legs(); ++l) size *= rep.dim;
  SparseMatrix out(size, size);
  std::map<Word, SparseMatrix> cache;
  auto word_matrix = [&](const Word& w) -> const SparseMatrix& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, evaluate_word(w, rep)).first;
    return it->second;
  };
  for (const auto& [k, c] : t.terms()) {
    SparseMatrix m = SparseMatrix::identity(1);
    for (const auto& w : k) m = kron(m, word_matrix(w));
    out += m * c;
  }
  return out;
}

}  // namespace qpv

#pragma once

// Elements of U(g)^{(x)k} with legs given as words in the basis of g, and
// their evaluation in a representation through Kronecker products.
//
// Words are not reduced to a PBW basis: two different word sums may be equal
// in U(g). Equality checks therefore go through a representation, where a
// nonzero image certifies a nonzero element.

#include <map>
#include <string>
#include <vector>

#include "qpv/linalg.hpp"
#include "qpv/liealg.hpp"
#include "qpv/multivec.hpp"

namespace qpv {

/// Basis indices; the empty word is the unit.
using Word = std::vector<int>;

class UTensor {
 public:
  UTensor(LieAlgebraPtr algebra, int legs);

  /// 1 (x) ... (x) 1.
  static UTensor unit(LieAlgebraPtr algebra, int legs);
  /// Each leg of a g-tensor read as a one-letter word.
  static UTensor from_multitensor(const MultiTensor& t);
  static UTensor from_vector(LieAlgebraPtr algebra, const Vector& x);

  const LieAlgebraPtr& algebra() const { return algebra_; }
  int legs() const { return legs_; }
  const std::map<std::vector<Word>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(std::vector<Word> key, const Rational& c);

  UTensor operator+(const UTensor& o) const;
  UTensor operator-(const UTensor& o) const;
  UTensor operator*(const Rational& s) const;
  /// Legwise product in U(g)^{(x)k}.
  UTensor operator*(const UTensor& o) const;

  std::string to_string() const;

 private:
  void require_compatible(const UTensor& o) const;

  LieAlgebraPtr algebra_;
  int legs_;
  std::map<std::vector<Word>, Rational> terms_;
};

UTensor commutator(const UTensor& a, const UTensor& b);
/// a (x) b.
UTensor tensor_product(const UTensor& a, const UTensor& b);

/// Applies the coproduct to leg `leg`: primitive on letters, extended
/// multiplicatively, so a word splits into all order-preserving shuffles.
UTensor coproduct_on_leg(const UTensor& t, int leg);
/// Applies the counit to leg `leg` (1 on the empty word, 0 otherwise).
UTensor counit_on_leg(const UTensor& t, int leg);
/// Places the legs of t at `positions` inside `legs` legs, unit elsewhere.
UTensor embed_legs(const UTensor& t, int legs, const std::vector<int>& positions);
/// Swaps legs i and j.
UTensor swap_legs(const UTensor& t, int i, int j);
/// Delta(x) = x (x) 1 + 1 (x) x.
UTensor primitive_coproduct(const LieAlgebraPtr& algebra, int basis_index);

struct Representation {
  std::string name;
  int dim = 0;
  std::vector<SparseMatrix> images;
};

Representation defining_representation(const LieAlgebra& algebra);
Representation adjoint_representation(const LieAlgebra& algebra);

/// The identity and the basis images are linearly independent, so
/// identities among tensors with legs of degree at most one transfer
/// faithfully through the representation.
bool is_faithful_in_degree_one(const Representation& rep);

SparseMatrix evaluate_word(const Word& w, const Representation& rep);
SparseMatrix evaluate(const UTensor& t, const Representation& rep);

}  // namespace qpv

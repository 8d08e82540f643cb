#pragma once

// Brackets on the coordinate ring of GL(n): polynomials in the entries t_ij,
// variable index i * n + j. Left-invariant fields act by right
// multiplication, x^L t = t x; right-invariant fields by left
// multiplication, x^R t = x t.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qpv/errors.hpp"
#include "qpv/liealg.hpp"
#include "qpv/multivec.hpp"
#include "qpv/polynomial.hpp"

namespace qpv {

using GroupPolynomial = Polynomial;

class GroupRing {
 public:
  explicit GroupRing(int n);

  int n() const { return n_; }
  int variables() const { return n_ * n_; }
  int index(int i, int j) const { return i * n_ + j; }
  GroupPolynomial entry(int i, int j) const { return Polynomial::variable(index(i, j)); }
  GroupPolynomial determinant() const;
  std::vector<std::string> names() const;

 private:
  int n_;
};

/// Derivation of the entry ring with t_ij -> (t X)_ij.
GroupPolynomial left_field(const Matrix& x, const GroupPolynomial& p);
/// Derivation of the entry ring with t_ij -> (X t)_ij.
GroupPolynomial right_field(const Matrix& x, const GroupPolynomial& p);

/// A bivector on the entry ring given by its values on entry pairs and
/// extended by the Leibniz rule.
class GroupBivector {
 public:
  explicit GroupBivector(int n);

  int n() const { return n_; }
  const GroupPolynomial& at(int a, int b) const { return table_[a * n_ * n_ + b]; }
  void set(int a, int b, GroupPolynomial value);
  bool is_antisymmetric() const;
  bool is_zero() const;

  GroupPolynomial bracket(const GroupPolynomial& p, const GroupPolynomial& q) const;

  /// Problems noticed during construction (e.g. [[r1, r1]] != [[r2, r2]]).
  std::vector<std::string> warnings;

 private:
  int n_;
  std::vector<GroupPolynomial> table_;
};

/// sum r1^{ab} a^L (x) b^L + sum r2^{ab} a^R (x) b^R on entry pairs.
GroupBivector build_two_sided_bracket(const MultiTensor& r1, const MultiTensor& r2);
/// r^L - r^R.
GroupBivector build_sklyanin_bracket(const MultiTensor& r);
/// f(a, b) = (t_1^L a)(t_2^R b) - (t_1^L b)(t_2^R a) with t the inverse
/// Killing tensor.
GroupBivector build_ad_bracket(const LieAlgebraPtr& algebra);

inline constexpr int kDefaultGroupDegreeCap = 6;

struct JacobiatorTable {
  int n = 0;
  int triples_checked = 0;
  /// Nonzero values {a,{b,c}} + {b,{c,a}} + {c,{a,b}} keyed by entry
  /// indices a < b < c.
  std::map<std::array<int, 3>, GroupPolynomial> nonzero;
  bool all_zero() const { return nonzero.empty(); }
};

/// Throws ResourceLimitError if a value exceeds `degree_cap`.
JacobiatorTable jacobiator_on_generators(const GroupBivector& b, int degree_cap = kDefaultGroupDegreeCap);

/// psi evaluated on entry triples through the fields x -> x^L - x^R.
std::map<std::array<int, 3>, GroupPolynomial> ad_action_trivector(const MultiTensor& psi);

/// Jacobiator of the Ad bracket = kAdBracketJacobiatorRatio * phi through the
/// fields x^L - x^R; with [[f, f]] = 2 * jacobiator this is [[f, f]] = -phi_M.
inline const Rational kAdBracketJacobiatorRatio{-1, 2};

/// x^L - x^R is a derivation of the bracket for every basis element x.
bool is_ad_invariant(const GroupBivector& b, const LieAlgebra& algebra);

/// {det, t_ij} lies in the ideal (det) for every entry.
bool preserves_determinant_ideal(const GroupBivector& b);

/// x^L y^R = y^R x^L on every entry for all basis pairs.
bool left_right_fields_commute(const LieAlgebra& algebra);

}  // namespace qpv

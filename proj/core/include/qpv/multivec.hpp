#pragma once

// Sparse exact tensors over a Lie algebra g.
//
// A MultiTensor of degree k is an element of g^{(x)k}. Alternating and
// symmetric tensors are stored by one canonical key per orbit (strictly or
// weakly ascending index tuple); the stored coefficient is the component of
// the full tensor at that key. With this reading x^y = x(x)y - y(x)x has
// component 1 at (x, y), so wedge products carry no factorial factors.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpv/liealg.hpp"

namespace qpv {

enum class Symmetry { plain, alternating, symmetric };

using Index = std::vector<int>;

class AlgebraMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MultiTensor {
 public:
  MultiTensor(LieAlgebraPtr algebra, int degree, Symmetry symmetry = Symmetry::plain);

  static MultiTensor from_vector(LieAlgebraPtr algebra, const Vector& x);
  static MultiTensor basis_vector(LieAlgebraPtr algebra, int i);

  const LieAlgebraPtr& algebra() const { return algebra_; }
  int degree() const { return degree_; }
  Symmetry symmetry() const { return symmetry_; }
  const std::map<Index, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c times the component pattern at `key`. For alternating and
  /// symmetric tensors the key is canonicalized first (with sign for the
  /// alternating case; keys with a repeated index are dropped).
  void add(Index key, const Rational& c);
  /// Full-tensor component at an arbitrary index tuple.
  Rational component(const Index& key) const;

  MultiTensor operator+(const MultiTensor& o) const;
  MultiTensor operator-(const MultiTensor& o) const;
  MultiTensor operator*(const Rational& s) const;
  MultiTensor operator-() const { return *this * Rational(-1); }
  MultiTensor& operator+=(const MultiTensor& o);
  bool operator==(const MultiTensor& o) const;

  /// Expansion into a plain tensor.
  MultiTensor to_plain() const;

  std::string to_string() const;

 private:
  void require_compatible(const MultiTensor& o) const;

  LieAlgebraPtr algebra_;
  int degree_;
  Symmetry symmetry_;
  std::map<Index, Rational> terms_;
};

/// Antisymmetric projection (1/k!) sum_s sgn(s) T^s of a plain tensor.
MultiTensor alternating_part(const MultiTensor& plain);
/// Reads an antisymmetric plain tensor as alternating; nullopt if it is not
/// antisymmetric.
std::optional<MultiTensor> as_alternating(const MultiTensor& plain);

/// c with a = c * b, compared as full tensors; nullopt if not proportional.
std::optional<Rational> tensor_ratio(const MultiTensor& a, const MultiTensor& b);

MultiTensor tensor_product(const MultiTensor& a, const MultiTensor& b);
MultiTensor wedge(const MultiTensor& a, const MultiTensor& b);

/// Diagonal adjoint action sum over legs of (1 (x) ... (x) ad x (x) ... (x) 1).
MultiTensor ad_action(const Vector& x, const MultiTensor& t);
MultiTensor ad_action(int basis_index, const MultiTensor& t);
bool is_invariant(const MultiTensor& t);

/// Algebraic Schouten bracket on the exterior algebra:
/// [[x_1^..^x_p, y_1^..^y_q]] = sum_{i,j} (-1)^{i+j} [x_i, y_j] ^ x_1..^x_i..x_p ^ y_1..^y_j..y_q.
/// Degree-0 operands bracket to zero.
MultiTensor algebraic_schouten(const MultiTensor& a, const MultiTensor& b);

/// Ratio cyb(r) / [[r, r]] for every r; fixed by the sl(2) computation.
inline const Rational kCybSchoutenRatio{1, 2};

/// [r12, r13] + [r12, r23] + [r13, r23] as a plain 3-tensor.
MultiTensor cyb_trinomial(const MultiTensor& r);
/// cyb_trinomial(r), throwing std::logic_error unless it equals
/// kCybSchoutenRatio times [[r, r]].
MultiTensor cyb(const MultiTensor& r);

/// delta(x) = [r, x (x) 1 + 1 (x) x].
MultiTensor cobracket(const MultiTensor& r, const Vector& x);

struct CoJacobiReport {
  bool holds = true;
  bool rr_invariant = true;
  /// First basis element with a nonzero defect.
  std::optional<int> failing_basis;
  std::optional<MultiTensor> defect;
  /// c with defect = c * ad_x [[r, r]] at the failing basis element.
  std::optional<Rational> defect_ratio;
};

/// Checks that the alternation of (delta (x) id) delta(x) vanishes for every
/// basis element x.
CoJacobiReport co_jacobi_check(const MultiTensor& r);

/// Ratio of the co-Jacobi defect to ad_x [[r, r]]; fixed by the sl(3)
/// computation with r = X_{a1} ^ X_{a2}.
inline const Rational kCoJacobiDefectRatio{-1, 6};

/// (-1)^k T: the antipode s(x) = -x applied to each leg.
MultiTensor antipode_flip(const MultiTensor& t);

struct CanonicalTensors {
  MultiTensor t;
  MultiTensor r_sd;
  MultiTensor phi;
};

/// t = inverse Killing tensor, r_sd = sum_b c_b X_b ^ X_{-b} with
/// c_b = 1/(X_b, X_{-b}), phi = [[r_sd, r_sd]].
CanonicalTensors canonical_tensors(const LieAlgebraPtr& algebra);

/// Structure-constant trivector with all indices raised by the inverse
/// Killing form: sum K^{aa'} K^{bb'} c_{a'b'}^c.
MultiTensor structure_trivector(const LieAlgebraPtr& algebra);

/// phi = kPhiStructureRatio * structure_trivector for every classical type.
inline const Rational kPhiStructureRatio{-2};

}  // namespace qpv

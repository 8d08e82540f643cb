#pragma once

// Polynomial polyvector fields on g*.
//
// Coordinates on g* are the basis elements y_i of g read as linear functions.
// A k-vector field is stored as a superfunction sum p(y) theta_A over
// ascending index sets A of size k, where theta_i stands for d/dy_i and the
// thetas anticommute. With this encoding theta_a theta_b is the bivector
// d_a ^ d_b = d_a (x) d_b - d_b (x) d_a, matching the MultiTensor wedge.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpv/errors.hpp"
#include "qpv/liealg.hpp"
#include "qpv/multivec.hpp"
#include "qpv/polynomial.hpp"

namespace qpv {

using Mask = std::uint32_t;

class PolyVectorField {
 public:
  using Key = std::pair<Monomial, Mask>;

  PolyVectorField(LieAlgebraPtr algebra, int degree);

  const LieAlgebraPtr& algebra() const { return algebra_; }
  int degree() const { return degree_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Monomial& m, Mask mask, const Rational& c);
  void add(const Polynomial& coefficient, Mask mask);
  /// Adds c * theta_{i_1} ... theta_{i_k} for an arbitrary index tuple.
  void add(const Polynomial& coefficient, const Index& indices);

  Polynomial coefficient(Mask mask) const;
  /// Coefficient at an arbitrary index tuple, with the sorting sign.
  Polynomial coefficient(const Index& indices) const;
  std::map<Mask, Polynomial> by_mask() const;

  /// Maximum total degree of the coefficients; -1 for the zero field.
  int polynomial_degree() const;

  PolyVectorField operator+(const PolyVectorField& o) const;
  PolyVectorField operator-(const PolyVectorField& o) const;
  PolyVectorField operator*(const Rational& s) const;
  PolyVectorField& operator+=(const PolyVectorField& o);
  bool operator==(const PolyVectorField& o) const;

  std::string to_string() const;

 private:
  void require_compatible(const PolyVectorField& o) const;

  LieAlgebraPtr algebra_;
  int degree_;
  std::map<Key, Rational> terms_;
};

Mask mask_of(const Index& sorted_indices);
Index indices_of(Mask mask);
/// Sign of the permutation sorting `indices`; 0 if an index repeats.
int sorting_sign(const Index& indices);

/// Supercommutative product (wedge of multivector fields).
PolyVectorField field_product(const PolyVectorField& a, const PolyVectorField& b);
PolyVectorField scale_by(const Polynomial& p, const PolyVectorField& a);

/// Schouten-Nijenhuis bracket
/// [[P, Q]] = sum_k (dP/dtheta_k)(dQ/dy_k) - (-1)^{(p-1)(q-1)} (dQ/dtheta_k)(dP/dy_k)
/// with right theta-derivatives. On vector fields it is the commutator; for a
/// bivector P, [[P, P]] evaluated on (y_a, y_b, y_c) is twice the Jacobiator.
PolyVectorField schouten_nijenhuis(const PolyVectorField& p, const PolyVectorField& q);

/// P(f_1, ..., f_k) for a k-vector field.
Polynomial evaluate(const PolyVectorField& p, const std::vector<Polynomial>& args);

/// {a, {b, c}} + {b, {c, a}} + {c, {a, b}} for a bivector field.
Polynomial jacobiator(const PolyVectorField& p, const Polynomial& a, const Polynomial& b, const Polynomial& c);

/// Coadjoint vector field of x: the derivation sending y to [x, y].
PolyVectorField action_field(const LieAlgebraPtr& algebra, const Vector& x);
PolyVectorField action_field(const LieAlgebraPtr& algebra, int basis_index);
/// psi_M: each leg of psi replaced by its action field. Plain tensors are
/// antisymmetrized first.
PolyVectorField action_field(const MultiTensor& psi);

/// [[a_M, b_M]] = kActionSchoutenSign * [[a, b]]_M for alternating a, b.
inline constexpr int kActionSchoutenSign = 1;
/// phibar = kPhibarSign * phi_M.
inline constexpr int kPhibarSign = 1;

PolyVectorField kirillov_bracket(const LieAlgebraPtr& algebra);
PolyVectorField rmatrix_bracket(const MultiTensor& r);

/// Lie derivative [[x_M, P]].
PolyVectorField lie_derivative(int basis_index, const PolyVectorField& p);
bool is_invariant(const PolyVectorField& p);

/// c with a = c * b; nullopt if not proportional.
std::optional<Rational> field_ratio(const PolyVectorField& a, const PolyVectorField& b);

struct EquivariantMapSpace {
  int p = 0;
  int q = 0;
  std::vector<PolyVectorField> basis;
  int dimension() const { return static_cast<int>(basis.size()); }
};

inline constexpr long long kDefaultEquivariantCap = 1'000'000;

/// Invariant p-vector fields with homogeneous degree-q coefficients, i.e.
/// equivariant maps wedge^p g -> S^q g. Throws ResourceLimitError when
/// C(n, p) * C(n + q - 1, q) exceeds `cap` or dim g exceeds kMaxVariables.
EquivariantMapSpace solve_equivariant(const LieAlgebraPtr& algebra, int p, int q,
                                      long long cap = kDefaultEquivariantCap);

/// phibar(a, b, c) = [phi_1, a][phi_2, b][phi_3, c] with phi = [[r_sd, r_sd]].
/// Throws std::logic_error if it differs from kPhibarSign * action_field(phi).
PolyVectorField phibar(const LieAlgebraPtr& algebra);

/// The generator f0 of solve_equivariant(2, 2) times `scale`.
/// Throws NoSolutionError unless that space is one-dimensional.
PolyVectorField quadratic_bracket(const LieAlgebraPtr& algebra, const Rational& scale);

struct ScaleCalibration {
  /// [[f0, f0]] = mu * phibar.
  Rational mu;
  /// Scale with [[lambda f0, lambda f0]] = -phibar: lambda^2 = -1/mu.
  Rational lambda_squared;
  /// +lambda when lambda_squared is a rational square; the two solutions are
  /// then +-lambda. Otherwise lambda lives in Q(sqrt(lambda_squared)).
  std::optional<Rational> lambda;
};

ScaleCalibration calibrate_scale(const LieAlgebraPtr& algebra);

/// The gl(n) bracket (a, b) -> tr(X^2 [A, B]) restricted to sl(n)*, with
/// sl(n)* identified with sl(n) through the trace form. Type A only.
PolyVectorField trace_quadratic_bracket(const LieAlgebraPtr& algebra);

struct PencilReport {
  PolyVectorField pp;
  PolyVectorField qq;
  PolyVectorField pq;
  bool p_poisson = false;
  bool q_poisson = false;
  bool compatible = false;
  /// a P + b Q is Poisson for all a, b.
  bool pencil_poisson = false;
};

PencilReport poisson_pencil_check(const PolyVectorField& p, const PolyVectorField& q);

/// The sl(n) pencil {a s + b (lambda f0 - r_M)} checked exactly when lambda is
/// only known through lambda^2: the bracket squares split into
/// lambda-even and lambda-odd parts, each of which must vanish.
struct PhiBracketPencilReport {
  ScaleCalibration calibration;
  bool s_f_vanishes = false;       // [[s, f0]] = 0
  bool ff_is_minus_phibar = false; // lambda^2 [[f0, f0]] = -phibar
  bool rr_is_phi_m = false;        // [[r_M, r_M]] = phi_M
  bool f_r_vanishes = false;       // [[f0, r_M]] = 0
  bool s_r_vanishes = false;       // [[s, r_M]] = 0
  bool p_poisson = false;          // [[p, p]] = 0 for p = lambda f0 - r_M
  bool pencil_poisson = false;
};

PhiBracketPencilReport phi_bracket_pencil(const LieAlgebraPtr& algebra);

struct BivectorScanDegree {
  int degree = 0;
  int dimension = 0;
  /// dim (S g)^g in degree - 1.
  int invariant_polynomial_dimension = 0;
  /// Every invariant bivector of this degree is b * s with b invariant.
  bool conjecture_form = true;
  std::vector<PolyVectorField> basis;
  /// Basis of a complement of span{b * s} inside the invariant bivectors.
  std::vector<PolyVectorField> exceptional;
  /// [[F, F]] == 0 for each exceptional element.
  std::vector<bool> exceptional_poisson;
};

std::vector<BivectorScanDegree> invariant_bivector_scan(const LieAlgebraPtr& algebra, int max_degree,
                                                        long long cap = kDefaultEquivariantCap);

}  // namespace qpv

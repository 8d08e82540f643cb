#pragma once

// First-order quantization checks on S g and order-h^2 / order-h checks of
// the associator and R-matrix through representations.
//
// Conventions: F_h = 1 + (h/2) r + o(h), so Delta_1(x) = (1/2)[r, Delta x];
// the star product is ab + (h/2) m1-bracket + o(h); Phi_h = 1 + h^2 phi + o(h^2);
// R = 1 + h (t/2 - r) + o(h).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpv/liealg.hpp"
#include "qpv/multivec.hpp"
#include "qpv/polyfield.hpp"
#include "qpv/polynomial.hpp"
#include "qpv/utensor.hpp"

namespace qpv {

inline constexpr int kDefaultInvarianceDegree = 3;

/// Polynomials on g* truncated above total degree `max_degree`.
class TruncatedPolynomialAlgebra {
 public:
  TruncatedPolynomialAlgebra(LieAlgebraPtr algebra, int max_degree);

  const LieAlgebraPtr& algebra() const { return algebra_; }
  int max_degree() const { return max_degree_; }

  Polynomial truncate(const Polynomial& p) const;
  Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
  /// Monomials of total degree <= max_degree in lex order.
  const std::vector<Monomial>& monomials() const { return monomials_; }

 private:
  LieAlgebraPtr algebra_;
  int max_degree_;
  std::vector<Monomial> monomials_;
};

using BilinearMap = std::function<Polynomial(const Polynomial&, const Polynomial&)>;

/// The order-h term m1 of a star product.
struct FirstOrderProduct {
  /// Names the bivector, e.g. "(1/2)(f - r_M)".
  std::string name;
  BilinearMap m1;

  /// m1(a, b) = scale * P(a, b).
  static FirstOrderProduct from_bivector(std::string name, const PolyVectorField& p, const Rational& scale);
  static FirstOrderProduct zero();
};

struct InvarianceFailure {
  int basis = 0;
  Monomial a;
  Monomial b;
  Polynomial lhs;
  Polynomial rhs;
};

struct InvarianceReport {
  bool passed = true;
  long long cases = 0;
  std::optional<InvarianceFailure> failure;
};

/// Checks x.m1(a, b) - m1(x.a, b) - m1(a, x.b) = (1/2) m0([r, Delta x] (a (x) b))
/// for every basis x and monomials a, b with deg a + deg b <= degree, where
/// x acts on S g by the coadjoint vector field of x.
InvarianceReport first_order_invariance_check(const FirstOrderProduct& m1, const MultiTensor& r,
                                              int degree = kDefaultInvarianceDegree);

struct CocycleFailure {
  Monomial a;
  Monomial b;
  Monomial c;
  Polynomial value;
};

struct CocycleReport {
  bool passed = true;
  long long cases = 0;
  std::optional<CocycleFailure> failure;
};

/// a m1(b, c) - m1(ab, c) + m1(a, bc) - m1(a, b) c = 0 on monomial triples
/// of total degree <= degree.
CocycleReport hochschild_cocycle_check(const FirstOrderProduct& m1, const LieAlgebraPtr& algebra,
                                       int degree = kDefaultInvarianceDegree);

/// m1 + (deg a)^2 (deg b) ab: a perturbation that is not a Hochschild cocycle.
FirstOrderProduct with_degree_fault(const FirstOrderProduct& m1);
/// m1 + (deg a)(deg b) ab. This term is the coboundary of a -> -(1/2)(deg a)^2 a,
/// so the perturbed product is still a cocycle.
FirstOrderProduct with_coboundary_term(const FirstOrderProduct& m1);

struct TwistCorrespondenceReport {
  bool passed = true;
  long long cases = 0;
  std::optional<std::pair<Monomial, Monomial>> failure;
};

/// With mu1 = (1/2) f and m1 = mu1 - (1/2) m0 o r (from m_h = mu_h F_h^{-1}),
/// checks that the antisymmetric part of m1 - mu1 equals the antisymmetric
/// part of -(1/2) sum r^{uv} (u.a)(v.b), and that m1 = (1/2)(f - r_M).
TwistCorrespondenceReport twist_correspondence_check(const PolyVectorField& f, const MultiTensor& r,
                                                     int degree = kDefaultInvarianceDegree);

struct RepresentationDefect {
  int row = 0;
  int col = 0;
  Rational value;
};

struct PentagonReport {
  std::string representation;
  bool faithful = false;
  /// The defect vanishes as a sum of words, hence in U(g)^{(x)4}.
  bool symbolic_zero = false;
  bool representation_zero = false;
  std::optional<RepresentationDefect> defect;
  bool passed() const { return symbolic_zero || representation_zero; }
};

/// (id id Delta)phi + (Delta id id)phi - 1 (x) phi - (id Delta id)phi - phi (x) 1.
UTensor pentagon_order2_defect(const UTensor& phi);
PentagonReport pentagon_order2_check(const UTensor& phi, const Representation& rep);
/// phi = [[r_sd, r_sd]] in the defining representation.
PentagonReport pentagon_order2_check(const LieAlgebraPtr& algebra);

struct RMatrixReport {
  bool faithful = false;
  /// (Delta (x) id) rho1 = rho1_13 + rho1_23.
  bool split_left = false;
  /// (id (x) Delta) rho1 = rho1_13 + rho1_12.
  bool split_right = false;
  /// [rho1, Delta x] = sigma(Delta_1 x) - Delta_1 x for every basis x.
  bool coproduct_conjugation = false;
  /// The same with rho1 = -r; holds because [t, Delta x] = 0.
  bool coproduct_conjugation_without_t = false;
  bool t_commutes_with_coproduct = false;
  /// (eps (x) id) r = (id (x) eps) r = 0.
  bool counit = false;
  bool passed() const { return split_left && split_right && coproduct_conjugation && counit; }
};

struct SplitReport {
  bool left = false;
  bool right = false;
};

/// Identity (i) for an arbitrary two-leg element, evaluated in `rep`.
SplitReport split_identity_check(const UTensor& rho, const Representation& rep);
RMatrixReport rmatrix_first_order_checks(const LieAlgebraPtr& algebra);

}  // namespace qpv

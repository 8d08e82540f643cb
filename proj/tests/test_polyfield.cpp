#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qpv/polyfield.hpp"

using namespace qpv;

namespace {

constexpr int h = 0, e = 1, f = 2;

Polynomial y(int i) { return Polynomial::variable(i); }

int sign_pq(int p, int q) { return ((p - 1) * (q - 1)) % 2 == 0 ? 1 : -1; }

PolyVectorField random_field(const LieAlgebraPtr& L, int k, int terms, std::mt19937_64& rng) {
  PolyVectorField out(L, k);
  std::uniform_int_distribution<int> var(0, L->dim() - 1);
  std::uniform_int_distribution<int> deg(0, 2);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < terms; ++t) {
    Polynomial c = Polynomial::constant(coef(rng));
    for (int d = deg(rng); d > 0; --d) c = c * y(var(rng));
    Index idx(k);
    for (auto& i : idx) i = var(rng);
    out.add(c, idx);
  }
  return out;
}

Polynomial bracket(const PolyVectorField& p, const Polynomial& a, const Polynomial& b) { return evaluate(p, {a, b}); }

PolyVectorField rm_from(const LieAlgebraPtr& L, const PolyVectorField& f0, const Rational& lambda) {
  return f0 * lambda - rmatrix_bracket(canonical_tensors(L).r_sd);
}

}  // namespace

TEST(ActionField, Sl2Cartan) {
  const auto L = make_algebra("A1");
  const auto xh = action_field(L, h);
  EXPECT_EQ(evaluate(xh, {y(e)}), y(e) * Rational(2));
  EXPECT_EQ(evaluate(xh, {y(f)}), y(f) * Rational(-2));
  EXPECT_TRUE(evaluate(xh, {y(h)}).is_zero());
}

TEST(ActionField, PhiOnSl2VanishesOnSl3Cubic) {
  EXPECT_TRUE(action_field(canonical_tensors(make_algebra("A1")).phi).is_zero());
  const auto phiM = action_field(canonical_tensors(make_algebra("A2")).phi);
  EXPECT_FALSE(phiM.is_zero());
  EXPECT_EQ(phiM.degree(), 3);
  EXPECT_EQ(phiM.polynomial_degree(), 3);
  for (const auto& [key, c] : phiM.terms()) EXPECT_EQ(key.first.degree(), 3);
}

TEST(Kirillov, Sl2Values) {
  const auto L = make_algebra("A1");
  const auto s = kirillov_bracket(L);
  EXPECT_EQ(bracket(s, y(e), y(f)), y(h));
  EXPECT_EQ(bracket(s, y(h), y(e)), y(e) * Rational(2));
  EXPECT_EQ(bracket(s, y(h), y(f)), y(f) * Rational(-2));
  EXPECT_TRUE(schouten_nijenhuis(s, s).is_zero());
  EXPECT_TRUE(is_invariant(s));
}

TEST(Kirillov, PoissonAndInvariant) {
  for (const char* spec : {"A2", "B2", "C2"}) {
    const auto L = make_algebra(spec);
    const auto s = kirillov_bracket(L);
    EXPECT_TRUE(schouten_nijenhuis(s, s).is_zero()) << spec;
    for (int i = 0; i < L->dim(); ++i) EXPECT_TRUE(lie_derivative(i, s).is_zero()) << spec;
  }
}

TEST(Schouten, VectorFieldsCommutator) {
  const auto L = make_algebra("A2");
  for (int a = 0; a < L->dim(); ++a)
    for (int b = 0; b < L->dim(); ++b) {
      const auto lhs = schouten_nijenhuis(action_field(L, a), action_field(L, b));
      const auto rhs = action_field(L, L->structure().bracket(L->unit(a), L->unit(b))) * Rational(kActionSchoutenSign);
      ASSERT_EQ(lhs, rhs);
      // Direct commutator of derivations on coordinates.
      for (int c = 0; c < L->dim(); ++c) {
        const auto va = action_field(L, a), vb = action_field(L, b);
        const auto comm = evaluate(va, {evaluate(vb, {y(c)})}) - evaluate(vb, {evaluate(va, {y(c)})});
        ASSERT_EQ(evaluate(lhs, {y(c)}), comm);
      }
    }
}

TEST(Schouten, SquareIsTwiceJacobiator) {
  std::mt19937_64 rng(1);
  const auto L = make_algebra("A1");
  for (int trial = 0; trial < 10; ++trial) {
    const auto P = random_field(L, 2, 3, rng);
    const auto PP = schouten_nijenhuis(P, P);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        for (int c = b + 1; c < 3; ++c) {
          const auto jac = bracket(P, y(a), bracket(P, y(b), y(c))) + bracket(P, y(b), bracket(P, y(c), y(a))) +
                           bracket(P, y(c), bracket(P, y(a), y(b)));
          ASSERT_EQ(evaluate(PP, {y(a), y(b), y(c)}), jac * Rational(2));
          ASSERT_EQ(jacobiator(P, y(a), y(b), y(c)), jac);
        }
  }
}

TEST(Schouten, GradedAntisymmetryAndJacobi) {
  std::mt19937_64 rng(2);
  for (const char* spec : {"A1", "A2"}) {
    const auto L = make_algebra(spec);
    for (int trial = 0; trial < 4; ++trial)
      for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
          const auto A = random_field(L, p, 3, rng);
          const auto B = random_field(L, q, 3, rng);
          ASSERT_EQ(schouten_nijenhuis(A, B), schouten_nijenhuis(B, A) * Rational(-sign_pq(p, q))) << spec;
        }
    for (int trial = 0; trial < 4; ++trial)
      for (int p = 1; p <= 2; ++p)
        for (int q = 1; q <= 2; ++q) {
          const auto A = random_field(L, p, 2, rng);
          const auto B = random_field(L, q, 2, rng);
          const auto C = random_field(L, 2, 2, rng);
          const auto lhs = schouten_nijenhuis(A, schouten_nijenhuis(B, C));
          const auto rhs = schouten_nijenhuis(schouten_nijenhuis(A, B), C) +
                           schouten_nijenhuis(B, schouten_nijenhuis(A, C)) * Rational(sign_pq(p, q));
          ASSERT_EQ(lhs, rhs) << spec;
        }
  }
}

TEST(Schouten, ActionMapIntertwines) {
  std::mt19937_64 rng(4);
  for (const char* spec : {"A1", "A2"}) {
    const auto L = make_algebra(spec);
    for (int trial = 0; trial < 4; ++trial) {
      const auto a = oracle::random_alternating(L, 2, 2, rng);
      const auto b = oracle::random_alternating(L, 1 + trial % 2, 2, rng);
      EXPECT_EQ(schouten_nijenhuis(action_field(a), action_field(b)),
                action_field(algebraic_schouten(a, b)) * Rational(kActionSchoutenSign))
          << spec;
    }
  }
}

TEST(Fields, BivectorRoundTrip) {
  std::mt19937_64 rng(9);
  const auto L = make_algebra("A2");
  for (int trial = 0; trial < 5; ++trial) {
    const auto P = random_field(L, 2, 5, rng);
    PolyVectorField Q(L, 2);
    for (int a = 0; a < L->dim(); ++a)
      for (int b = a + 1; b < L->dim(); ++b) Q.add(bracket(P, y(a), y(b)), Index{a, b});
    EXPECT_EQ(Q, P);
  }
}

TEST(RMatrixBracket, Sl2IsPoisson) {
  const auto r = canonical_tensors(make_algebra("A1")).r_sd;
  const auto rM = rmatrix_bracket(r);
  EXPECT_EQ(rM.polynomial_degree(), 2);
  EXPECT_TRUE(schouten_nijenhuis(rM, rM).is_zero());
}

TEST(RMatrixBracket, Sl3SquareIsPhiM) {
  const auto L = make_algebra("A2");
  const auto ct = canonical_tensors(L);
  const auto rM = rmatrix_bracket(ct.r_sd);
  const auto rr = schouten_nijenhuis(rM, rM);
  EXPECT_FALSE(rr.is_zero());
  EXPECT_EQ(rr, action_field(ct.phi) * Rational(kActionSchoutenSign));
  EXPECT_EQ(kActionSchoutenSign, 1);
}

TEST(RMatrixBracket, CartanBivectorTriangular) {
  const auto L = make_algebra("A2");
  MultiTensor r(L, 2, Symmetry::alternating);
  r.add({0, 1}, 1);
  const auto rM = rmatrix_bracket(r);
  EXPECT_FALSE(rM.is_zero());
  EXPECT_TRUE(schouten_nijenhuis(rM, rM).is_zero());
}

TEST(Equivariant, Dimensions) {
  EXPECT_EQ(solve_equivariant(make_algebra("A1"), 2, 2).dimension(), 0);
  EXPECT_EQ(solve_equivariant(make_algebra("A2"), 2, 2).dimension(), 1);
  EXPECT_EQ(solve_equivariant(make_algebra("B2"), 2, 2).dimension(), 0);
  EXPECT_EQ(solve_equivariant(make_algebra("C2"), 2, 2).dimension(), 0);
  EXPECT_EQ(solve_equivariant(make_algebra("A1"), 2, 1).dimension(), 1);
  EXPECT_EQ(solve_equivariant(make_algebra("A2"), 2, 1).dimension(), 1);
  EXPECT_EQ(solve_equivariant(make_algebra("A2"), 3, 0).dimension(), 1);
}

TEST(Equivariant, BasisIsInvariant) {
  const auto L = make_algebra("A2");
  for (const auto& b : solve_equivariant(L, 2, 2).basis) {
    EXPECT_TRUE(is_invariant(b));
    for (int i = 0; i < L->dim(); ++i) EXPECT_TRUE(schouten_nijenhuis(b, action_field(L, i)).is_zero());
  }
}

TEST(Equivariant, ResourceCap) {
  EXPECT_THROW(solve_equivariant(make_algebra("A2"), 2, 2, 10), ResourceLimitError);
}

TEST(QuadraticBracket, Sl2HasNone) { EXPECT_THROW(quadratic_bracket(make_algebra("A1"), 1), NoSolutionError); }

TEST(QuadraticBracket, Sl3Identities) {
  const auto L = make_algebra("A2");
  const auto s = kirillov_bracket(L);
  const auto f0 = quadratic_bracket(L, 1);
  EXPECT_TRUE(schouten_nijenhuis(s, f0).is_zero());
  EXPECT_TRUE(schouten_nijenhuis(s, quadratic_bracket(L, Rational(-7, 3))).is_zero());
  const auto cal = calibrate_scale(L);
  EXPECT_EQ(cal.mu, -324);
  EXPECT_EQ(cal.lambda_squared, Rational(1, 324));
  ASSERT_TRUE(cal.lambda.has_value());
  EXPECT_EQ(*cal.lambda, Rational(1, 18));
  const auto pb = phibar(L);
  for (const Rational& lam : std::vector<Rational>{*cal.lambda, Rational(-*cal.lambda)}) {
    const auto fl = quadratic_bracket(L, lam);
    EXPECT_EQ(schouten_nijenhuis(fl, fl), pb * Rational(-1));
  }
  EXPECT_EQ(schouten_nijenhuis(f0, f0), pb * cal.mu);
}

TEST(QuadraticBracket, AgreesWithTraceBracket) {
  const auto L = make_algebra("A2");
  const auto ratio = field_ratio(trace_quadratic_bracket(L), quadratic_bracket(L, 1));
  ASSERT_TRUE(ratio.has_value());
  EXPECT_EQ(*ratio, Rational(1, 3));
}

TEST(Phibar, MatchesPhiM) {
  EXPECT_TRUE(phibar(make_algebra("A1")).is_zero());
  const auto L = make_algebra("A2");
  const auto pb = phibar(L);
  EXPECT_FALSE(pb.is_zero());
  EXPECT_EQ(pb, action_field(canonical_tensors(L).phi) * Rational(kPhibarSign));
  for (int i = 0; i < L->dim(); ++i) EXPECT_TRUE(lie_derivative(i, pb).is_zero());
}

TEST(Pencil, KirillovWithPhiBracketRM) {
  const auto L = make_algebra("A2");
  const auto s = kirillov_bracket(L);
  const auto f0 = quadratic_bracket(L, 1);
  const auto p = rm_from(L, f0, Rational(1, 18));
  const auto rep = poisson_pencil_check(s, p);
  EXPECT_TRUE(rep.pp.is_zero());
  EXPECT_TRUE(rep.qq.is_zero());
  EXPECT_TRUE(rep.pq.is_zero());
  EXPECT_TRUE(rep.pencil_poisson);
  // Neither summand of p is Poisson on its own.
  const auto fl = quadratic_bracket(L, Rational(1, 18));
  EXPECT_FALSE(schouten_nijenhuis(fl, fl).is_zero());
  const auto rM = rmatrix_bracket(canonical_tensors(L).r_sd);
  EXPECT_FALSE(schouten_nijenhuis(rM, rM).is_zero());

  const auto full = phi_bracket_pencil(L);
  EXPECT_TRUE(full.s_f_vanishes);
  EXPECT_TRUE(full.ff_is_minus_phibar);
  EXPECT_TRUE(full.rr_is_phi_m);
  EXPECT_TRUE(full.f_r_vanishes);
  EXPECT_TRUE(full.s_r_vanishes);
  EXPECT_TRUE(full.p_poisson);
  EXPECT_TRUE(full.pencil_poisson);
}

TEST(Pencil, TrivialAndFlagged) {
  const auto L = make_algebra("A2");
  const auto s = kirillov_bracket(L);
  const auto self = poisson_pencil_check(s, s);
  EXPECT_TRUE(self.compatible);
  EXPECT_TRUE(self.pencil_poisson);
  const auto bad = poisson_pencil_check(s, rmatrix_bracket(canonical_tensors(L).r_sd));
  EXPECT_TRUE(bad.p_poisson);
  EXPECT_FALSE(bad.q_poisson);
  EXPECT_FALSE(bad.qq.is_zero());
  EXPECT_FALSE(bad.pencil_poisson);
}

TEST(Scan, Sl2ConjectureForm) {
  const auto L = make_algebra("A1");
  const auto scan = invariant_bivector_scan(L, 3);
  ASSERT_EQ(scan.size(), 4u);
  const int dims[] = {0, 1, 0, 1};
  for (int k = 0; k <= 3; ++k) {
    EXPECT_EQ(scan[k].degree, k);
    EXPECT_EQ(scan[k].dimension, dims[k]) << k;
    EXPECT_TRUE(scan[k].conjecture_form) << k;
    EXPECT_TRUE(scan[k].exceptional.empty());
  }
  // Degree 3 is spanned by (Casimir) * s.
  const Polynomial casimir = y(h) * y(h) * Rational(1, 2) + y(e) * y(f) * Rational(2);
  const auto ratio = field_ratio(scale_by(casimir, kirillov_bracket(L)), scan[3].basis[0]);
  ASSERT_TRUE(ratio.has_value());
  EXPECT_NE(*ratio, 0);
}

TEST(Scan, Sl3QuadraticException) {
  const auto L = make_algebra("A2");
  const auto scan = invariant_bivector_scan(L, 2);
  ASSERT_EQ(scan.size(), 3u);
  EXPECT_EQ(scan[1].dimension, 1);
  EXPECT_TRUE(scan[1].conjecture_form);
  EXPECT_EQ(scan[2].dimension, 1);
  EXPECT_FALSE(scan[2].conjecture_form);
  ASSERT_EQ(scan[2].exceptional.size(), 1u);
  EXPECT_FALSE(scan[2].exceptional_poisson[0]);
  EXPECT_TRUE(field_ratio(scan[2].exceptional[0], quadratic_bracket(L, 1)).has_value());
  for (const auto& F : scan[2].basis)
    for (int i = 0; i < L->dim(); ++i) EXPECT_TRUE(schouten_nijenhuis(F, action_field(L, i)).is_zero());
}

TEST(Scan, So5NoQuadratic) {
  const auto scan = invariant_bivector_scan(make_algebra("B2"), 2);
  ASSERT_EQ(scan.size(), 3u);
  EXPECT_EQ(scan[2].dimension, 0);
  EXPECT_TRUE(scan[2].conjecture_form);
}

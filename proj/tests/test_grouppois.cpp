#include <gtest/gtest.h>

#include "qpv/grouppois.hpp"

using namespace qpv;

namespace {

bool same_table(const GroupBivector& a, const GroupBivector& b) {
  const int m = a.n() * a.n();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

// Symbolic n x n matrix T of entry variables times a rational matrix.
std::vector<Polynomial> times(const GroupRing& ring, const Matrix& x, bool x_on_right) {
  const int n = ring.n();
  std::vector<Polynomial> out(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (x_on_right && !is_zero(x(k, j))) out[i * n + j] += ring.entry(i, k) * x(k, j);
        if (!x_on_right && !is_zero(x(i, k))) out[i * n + j] += ring.entry(k, j) * x(i, k);
      }
  return out;
}

// {t_a, t_b} = sum r^{uv} ((T U)_a (T V)_b - (U T)_a (V T)_b).
Polynomial sklyanin_oracle(const LieAlgebra& L, const MultiTensor& r, int a, int b) {
  const GroupRing ring(L.matrix_size());
  const auto plain = r.to_plain();
  Polynomial out;
  for (const auto& [key, c] : plain.terms()) {
    const auto& U = L.matrix_realization()[key[0]];
    const auto& V = L.matrix_realization()[key[1]];
    out += times(ring, U, true)[a] * times(ring, V, true)[b] * c;
    out -= times(ring, U, false)[a] * times(ring, V, false)[b] * c;
  }
  return out;
}

}  // namespace

TEST(Fields, Sl2LeftField) {
  const auto L = make_algebra("A1");
  const GroupRing ring(2);
  const Matrix& e = L->matrix_realization()[1];
  const Matrix& h = L->matrix_realization()[0];
  for (int i = 0; i < 2; ++i) {
    EXPECT_TRUE(left_field(e, ring.entry(i, 0)).is_zero());
    EXPECT_EQ(left_field(e, ring.entry(i, 1)), ring.entry(i, 0));
    EXPECT_EQ(left_field(h, ring.entry(i, 0)), ring.entry(i, 0));
    EXPECT_EQ(left_field(h, ring.entry(i, 1)), -ring.entry(i, 1));
    EXPECT_EQ(right_field(e, ring.entry(1, i)), Polynomial());
    EXPECT_EQ(right_field(e, ring.entry(0, i)), ring.entry(1, i));
  }
  // Leibniz on a product.
  const auto p = ring.entry(0, 1) * ring.entry(1, 1);
  EXPECT_EQ(left_field(e, p), ring.entry(0, 0) * ring.entry(1, 1) + ring.entry(0, 1) * ring.entry(1, 0));
}

TEST(Fields, LeftAndRightCommute) {
  EXPECT_TRUE(left_right_fields_commute(*make_algebra("A1")));
  EXPECT_TRUE(left_right_fields_commute(*make_algebra("A2")));
  EXPECT_TRUE(left_right_fields_commute(*make_algebra("B2")));
}

TEST(Sklyanin, MatchesMatrixOracle) {
  for (const char* spec : {"A1", "A2"}) {
    const auto L = make_algebra(spec);
    const auto r = canonical_tensors(L).r_sd;
    const auto b = build_sklyanin_bracket(r);
    const int m = b.n() * b.n();
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < m; ++c) ASSERT_EQ(b.at(a, c), sklyanin_oracle(*L, r, a, c)) << spec;
    EXPECT_TRUE(b.is_antisymmetric());
  }
}

TEST(Sklyanin, Sl2Values) {
  const auto L = make_algebra("A1");
  const auto b = build_sklyanin_bracket(canonical_tensors(L).r_sd);
  const GroupRing ring(2);
  const int t11 = ring.index(0, 0), t12 = ring.index(0, 1), t21 = ring.index(1, 0), t22 = ring.index(1, 1);
  EXPECT_EQ(b.at(t11, t12), ring.entry(0, 0) * ring.entry(0, 1) * Rational(-1, 4));
  EXPECT_EQ(b.at(t11, t22), ring.entry(0, 1) * ring.entry(1, 0) * Rational(-1, 2));
  EXPECT_TRUE(b.at(t12, t21).is_zero());
  EXPECT_EQ(b.bracket(ring.entry(0, 0), ring.entry(0, 1)), b.at(t11, t12));
  (void)t21;
}

TEST(Sklyanin, EqualsTwoSided) {
  for (const char* spec : {"A1", "A2"}) {
    const auto r = canonical_tensors(make_algebra(spec)).r_sd;
    const auto two = build_two_sided_bracket(r, -r);
    EXPECT_TRUE(same_table(two, build_sklyanin_bracket(r))) << spec;
    EXPECT_TRUE(two.warnings.empty());
  }
}

TEST(Sklyanin, PoissonOnEntries) {
  for (const char* spec : {"A1", "A2"}) {
    const auto b = build_sklyanin_bracket(canonical_tensors(make_algebra(spec)).r_sd);
    const auto jac = jacobiator_on_generators(b);
    EXPECT_TRUE(jac.all_zero()) << spec;
    const int m = b.n() * b.n();
    EXPECT_EQ(jac.triples_checked, m * (m - 1) * (m - 2) / 6);
  }
}

TEST(Sklyanin, PreservesDeterminantIdeal) {
  const auto b = build_sklyanin_bracket(canonical_tensors(make_algebra("A1")).r_sd);
  EXPECT_TRUE(preserves_determinant_ideal(b));
  const GroupRing ring(2);
  EXPECT_TRUE(b.bracket(ring.determinant(), ring.entry(0, 0)).is_zero());
}

TEST(Sklyanin, DeterminantIdealFault) {
  GroupBivector b(2);
  b.set(0, 1, Polynomial::constant(1));
  EXPECT_FALSE(preserves_determinant_ideal(b));
}

TEST(TwoSided, ZeroBracket) {
  const auto L = make_algebra("A1");
  const MultiTensor zero(L, 2, Symmetry::alternating);
  const auto b = build_two_sided_bracket(zero, zero);
  EXPECT_TRUE(b.is_zero());
  EXPECT_TRUE(jacobiator_on_generators(b).all_zero());
}

// [[r1, r1]] = [[r2, r2]] makes r1^L + r2^R Poisson; unequal squares do not.
TEST(TwoSided, EqualSquares) {
  for (const char* spec : {"A1", "A2"}) {
    const auto r = canonical_tensors(make_algebra(spec)).r_sd;
    const auto b = build_two_sided_bracket(r, r);
    EXPECT_TRUE(b.warnings.empty());
    EXPECT_TRUE(jacobiator_on_generators(b).all_zero()) << spec;
  }
}

TEST(TwoSided, UnequalSquaresWarnAndFail) {
  const auto L = make_algebra("A1");
  const auto r = canonical_tensors(L).r_sd;
  const auto b = build_two_sided_bracket(r, MultiTensor(L, 2, Symmetry::alternating));
  EXPECT_FALSE(b.warnings.empty());
  const auto jac = jacobiator_on_generators(b);
  EXPECT_EQ(jac.nonzero.size(), 4u);
}

TEST(AdBracket, AntisymmetricAndInvariant) {
  for (const char* spec : {"A1", "A2"}) {
    const auto L = make_algebra(spec);
    const auto f = build_ad_bracket(L);
    EXPECT_TRUE(f.is_antisymmetric());
    EXPECT_FALSE(f.is_zero());
    EXPECT_TRUE(is_ad_invariant(f, *L)) << spec;
  }
  const auto L = make_algebra("A1");
  EXPECT_FALSE(is_ad_invariant(build_sklyanin_bracket(canonical_tensors(L).r_sd), *L));
}

TEST(AdBracket, JacobiatorIsPhiThroughAdFields) {
  for (const char* spec : {"A1", "A2"}) {
    const auto L = make_algebra(spec);
    const auto jac = jacobiator_on_generators(build_ad_bracket(L));
    const auto phi = ad_action_trivector(canonical_tensors(L).phi);
    const int m = L->matrix_size() * L->matrix_size();
    int nonzero = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c) {
          const std::array<int, 3> key{a, b, c};
          const auto it = jac.nonzero.find(key);
          const Polynomial got = it == jac.nonzero.end() ? Polynomial() : it->second;
          const auto jt = phi.find(key);
          const Polynomial want = jt == phi.end() ? Polynomial() : jt->second * kAdBracketJacobiatorRatio;
          ASSERT_EQ(got, want) << spec;
          nonzero += got.is_zero() ? 0 : 1;
        }
    // Generic conjugacy classes in GL(2) are 2-dimensional, so phi dies there.
    if (L->rank() >= 2) EXPECT_GT(nonzero, 0) << spec;
  }
  EXPECT_EQ(kAdBracketJacobiatorRatio, Rational(-1, 2));
}

TEST(Jacobiator, DegreeCap) {
  const auto b = build_sklyanin_bracket(canonical_tensors(make_algebra("A2")).r_sd);
  EXPECT_THROW(jacobiator_on_generators(b, 2), ResourceLimitError);
}

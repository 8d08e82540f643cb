#include <gtest/gtest.h>

#include "qpv/utensor.hpp"

using namespace qpv;

namespace {
constexpr int h = 0, e = 1, f = 2;

UTensor word(const LieAlgebraPtr& L, std::vector<Word> legs, const Rational& c = 1) {
  UTensor t(L, static_cast<int>(legs.size()));
  t.add(std::move(legs), c);
  return t;
}

Matrix dense(const SparseMatrix& s) {
  Matrix m(s.rows(), s.cols());
  for (const auto& [ij, v] : s.entries()) m(ij.first, ij.second) = v;
  return m;
}
}  // namespace

TEST(UTensor, ShuffleCoproduct) {
  const auto L = make_algebra("A1");
  const auto got = coproduct_on_leg(word(L, {{e, f}}), 0);
  UTensor want(L, 2);
  want.add({{e, f}, {}}, 1);
  want.add({{e}, {f}}, 1);
  want.add({{f}, {e}}, 1);
  want.add({{}, {e, f}}, 1);
  EXPECT_TRUE((got - want).is_zero());
  EXPECT_TRUE((coproduct_on_leg(word(L, {{h}}), 0) - primitive_coproduct(L, h)).is_zero());
}

TEST(UTensor, Counit) {
  const auto L = make_algebra("A1");
  EXPECT_TRUE(counit_on_leg(word(L, {{e}, {f}}), 0).is_zero());
  const auto c = counit_on_leg(word(L, {{}, {f}}, 3), 0);
  EXPECT_TRUE((c - word(L, {{f}}, 3)).is_zero());
}

TEST(UTensor, LegOperations) {
  const auto L = make_algebra("A1");
  const auto t = word(L, {{e}, {f}});
  EXPECT_TRUE((swap_legs(t, 0, 1) - word(L, {{f}, {e}})).is_zero());
  EXPECT_TRUE((embed_legs(t, 3, {0, 2}) - word(L, {{e}, {}, {f}})).is_zero());
  EXPECT_TRUE((tensor_product(word(L, {{e}}), word(L, {{f}})) - t).is_zero());
  EXPECT_TRUE((word(L, {{e}, {h}}) * word(L, {{f}, {h}}) - word(L, {{e, f}, {h, h}})).is_zero());
}

TEST(Representation, Faithfulness) {
  for (const char* spec : {"A1", "A2", "B2"}) {
    const auto L = make_algebra(spec);
    EXPECT_TRUE(is_faithful_in_degree_one(defining_representation(*L))) << spec;
    EXPECT_TRUE(is_faithful_in_degree_one(adjoint_representation(*L))) << spec;
  }
  const auto L = make_algebra("A1");
  EXPECT_EQ(adjoint_representation(*L).dim, 3);
  EXPECT_EQ(defining_representation(*L).dim, 2);
}

TEST(Representation, HomomorphismOnCommutators) {
  const auto L = make_algebra("A2");
  for (const auto& rep : {defining_representation(*L), adjoint_representation(*L)})
    for (int a = 0; a < L->dim(); ++a)
      for (int b = 0; b < L->dim(); ++b) {
        const auto lhs = commutator(dense(rep.images[a]), dense(rep.images[b]));
        Matrix rhs(rep.dim, rep.dim);
        for (const auto& [k, c] : L->structure().bracket(a, b)) rhs += dense(rep.images[k]) * c;
        ASSERT_EQ(lhs, rhs) << rep.name;
      }
}

TEST(Representation, EvaluateUsesKronecker) {
  const auto L = make_algebra("A1");
  const auto rep = defining_representation(*L);
  EXPECT_EQ(evaluate_word({e, f}, rep), rep.images[e] * rep.images[f]);
  EXPECT_EQ(evaluate_word({}, rep), SparseMatrix::identity(2));
  const auto t = word(L, {{e}, {f, h}}) + word(L, {{}, {h}}, Rational(1, 2));
  const auto want = kron(rep.images[e], rep.images[f] * rep.images[h]) +
                    kron(SparseMatrix::identity(2), rep.images[h]) * Rational(1, 2);
  EXPECT_EQ(evaluate(t, rep), want);
  const auto x = UTensor::from_vector(L, L->unit(e));
  const auto y = UTensor::from_vector(L, L->unit(f));
  EXPECT_EQ(evaluate(commutator(x, y), rep), rep.images[h]);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "qpv/rootsys.hpp"

using namespace qpv;

namespace {

const std::vector<TypeSpec> kAllTypes = {
    {Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::A, 4}, {Series::A, 5}, {Series::A, 6},
    {Series::B, 2}, {Series::B, 3}, {Series::B, 4}, {Series::C, 2}, {Series::C, 3}, {Series::C, 4},
    {Series::D, 4}, {Series::D, 5}, {Series::E, 6}, {Series::E, 7}, {Series::E, 8}, {Series::F, 4},
    {Series::G, 2}};

std::size_t classical_count(const TypeSpec& t) {
  const std::size_t n = t.rank;
  switch (t.series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return 0;
}

}  // namespace

TEST(RootSystem, A1) {
  const auto rs = build_root_system(Series::A, 1);
  EXPECT_EQ(rs.positive_roots, std::vector<Root>{{1}});
  EXPECT_EQ(rs.highest_root, Root{1});
}

TEST(RootSystem, A2MatchesOrbitOracle) {
  const auto rs = build_root_system(Series::A, 2);
  const std::set<Root> got(rs.positive_roots.begin(), rs.positive_roots.end());
  EXPECT_EQ(got, (std::set<Root>{{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(got, oracle::positive_part(oracle::weyl_orbit_roots(rs.cartan_matrix)));
  EXPECT_EQ(rs.highest_root, (Root{1, 1}));
}

TEST(RootSystem, G2) {
  const auto rs = build_root_system(Series::G, 2);
  EXPECT_EQ(rs.positive_roots.size(), 6u);
  EXPECT_EQ(rs.highest_root, (Root{3, 2}));
}

TEST(RootSystem, CartanMatrixShape) {
  for (const auto& t : kAllTypes) {
    const auto rs = build_root_system(t);
    ASSERT_EQ(static_cast<int>(rs.cartan_matrix.size()), t.rank) << t.name();
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) {
        const int a = rs.cartan_matrix[i][j];
        if (i == j) {
          EXPECT_EQ(a, 2);
        } else {
          EXPECT_LE(a, 0);
          EXPECT_EQ(a == 0, rs.cartan_matrix[j][i] == 0) << t.name();
        }
      }
  }
}

TEST(RootSystem, CountsAndOrbitOracle) {
  for (const auto& t : kAllTypes) {
    const auto rs = build_root_system(t);
    EXPECT_EQ(rs.positive_roots.size(), classical_count(t)) << t.name();
    const std::set<Root> got(rs.positive_roots.begin(), rs.positive_roots.end());
    const auto all = oracle::weyl_orbit_roots(rs.cartan_matrix);
    EXPECT_EQ(got, oracle::positive_part(all)) << t.name();
    EXPECT_EQ(all.size(), 2 * got.size()) << t.name();
  }
}

TEST(RootSystem, HighestRootDominates) {
  for (const auto& t : kAllTypes) {
    const auto rs = build_root_system(t);
    for (const auto& r : rs.positive_roots)
      for (int i = 0; i < t.rank; ++i) EXPECT_LE(r[i], rs.highest_root[i]) << t.name();
  }
}

TEST(RootSystem, ClosureFromSimpleRoots) {
  for (const auto& t : kAllTypes) {
    const auto rs = build_root_system(t);
    const std::set<Root> roots(rs.positive_roots.begin(), rs.positive_roots.end());
    for (const auto& r : rs.positive_roots) {
      if (height(r) == 1) continue;
      bool reachable = false;
      for (int i = 0; i < t.rank && !reachable; ++i) {
        Root prev = r;
        --prev[i];
        reachable = roots.count(prev) > 0;
      }
      EXPECT_TRUE(reachable) << t.name();
    }
  }
}

// <2 rho, alpha_i^vee> = 2 for every simple coroot.
TEST(RootSystem, WeylVectorDoubling) {
  for (const auto& t : kAllTypes) {
    const auto rs = build_root_system(t);
    Root sum(t.rank, 0);
    for (const auto& r : rs.positive_roots)
      for (int i = 0; i < t.rank; ++i) sum[i] += r[i];
    for (int i = 0; i < t.rank; ++i) {
      int pairing = 0;
      for (int j = 0; j < t.rank; ++j) pairing += rs.cartan_matrix[i][j] * sum[j];
      EXPECT_EQ(pairing, 2) << t.name() << " node " << i + 1;
    }
  }
  EXPECT_EQ(([] {
              const auto rs = build_root_system(Series::B, 2);
              Root s(2, 0);
              for (const auto& r : rs.positive_roots) s[0] += r[0], s[1] += r[1];
              return s;
            })(),
            (Root{3, 4}));
}

TEST(RootSystem, CoefficientOneNodes) {
  EXPECT_EQ(coefficient_one_nodes(build_root_system(Series::A, 3)), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(coefficient_one_nodes(build_root_system(Series::B, 2)), (std::vector<int>{1}));
  EXPECT_EQ(build_root_system(Series::B, 2).highest_root, (Root{1, 2}));
  EXPECT_TRUE(coefficient_one_nodes(build_root_system(Series::G, 2)).empty());
  EXPECT_TRUE(coefficient_one_nodes(build_root_system(Series::E, 8)).empty());
  EXPECT_TRUE(coefficient_one_nodes(build_root_system(Series::F, 4)).empty());
  EXPECT_EQ(coefficient_one_nodes(build_root_system(Series::D, 4)), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(coefficient_one_nodes(build_root_system(Series::C, 3)), (std::vector<int>{3}));
  EXPECT_EQ(coefficient_one_nodes(build_root_system(Series::E, 6)), (std::vector<int>{1, 6}));
  EXPECT_EQ(coefficient_one_nodes(build_root_system(Series::E, 7)), (std::vector<int>{7}));
  for (int n = 1; n <= 6; ++n) {
    const auto rs = build_root_system(Series::A, n);
    EXPECT_TRUE(std::all_of(rs.highest_root.begin(), rs.highest_root.end(), [](int c) { return c == 1; }));
  }
}

TEST(RootSystem, Deterministic) {
  for (const auto& t : kAllTypes) {
    const auto a = build_root_system(t);
    const auto b = build_root_system(t);
    EXPECT_EQ(a.positive_roots, b.positive_roots);
    EXPECT_EQ(a.cartan_matrix, b.cartan_matrix);
    EXPECT_EQ(a.highest_root, b.highest_root);
  }
}

TEST(RootSystem, LongShortConvention) {
  const auto b3 = build_root_system(Series::B, 3);
  EXPECT_LT(b3.length_squared[2], b3.length_squared[0]);
  const auto c3 = build_root_system(Series::C, 3);
  EXPECT_GT(c3.length_squared[2], c3.length_squared[0]);
}

TEST(TypeSpecParse, AcceptsLettersAndAliases) {
  EXPECT_EQ(TypeSpec::parse("A2"), (TypeSpec{Series::A, 2}));
  EXPECT_EQ(TypeSpec::parse("d4"), (TypeSpec{Series::D, 4}));
  EXPECT_EQ(TypeSpec::parse("sl3"), (TypeSpec{Series::A, 2}));
  EXPECT_EQ(TypeSpec::parse("so5"), (TypeSpec{Series::B, 2}));
  EXPECT_EQ(TypeSpec::parse("sp4"), (TypeSpec{Series::C, 2}));
  EXPECT_EQ(TypeSpec::parse("so8"), (TypeSpec{Series::D, 4}));
  EXPECT_EQ(TypeSpec::parse("G2").name(), "G2");
}

TEST(TypeSpecParse, RejectsInvalid) {
  for (const char* bad : {"A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "X2", "", "A", "2A", "sl1"})
    EXPECT_THROW(TypeSpec::parse(bad), InvalidTypeError) << bad;
  EXPECT_THROW(build_root_system(Series::D, 3), InvalidTypeError);
}

#pragma once

// Levi subalgebras, good semisimple orbits, and tangent-space data at the
// orbit base point.
//
// A Levi subalgebra l is fixed by a subset S of simple roots (1-based
// Bourbaki labels). The complement m = g/l is represented by the root vectors
// whose roots are not in the span of S; m is ad(l)-stable.

#include <map>
#include <string>
#include <vector>

#include "qpv/liealg.hpp"
#include "qpv/multivec.hpp"
#include "qpv/rootsys.hpp"

namespace qpv {

struct LeviDatum {
  TypeSpec type;
  std::vector<int> S;
  /// Simple roots not in S.
  std::vector<int> T;
  /// Dimension of the center of l, |T|.
  int orbit_rank = 0;
  bool good = false;
  /// |T| = 1 and the node of T has highest-root coefficient 1.
  bool hermitian_symmetric = false;

  std::string label() const;
};

/// Throws std::invalid_argument when S is the full node set or contains an
/// invalid label.
LeviDatum classify_levi(const RootSystem& rs, std::vector<int> S);

/// Every proper subset S with a good Levi datum, ordered by the bitmask of S.
std::vector<LeviDatum> enumerate_good_orbits(const RootSystem& rs);

/// Closed-form good-orbit count from the coefficient-one node count:
/// 2^n - 1 for type A, C(c, 1) + C(c, 2) otherwise.
long long good_orbit_count_formula(const RootSystem& rs);

/// Basis indices of l (Cartan and root vectors with roots in span S).
std::vector<int> levi_basis(const LeviDatum& levi, const LieAlgebra& algebra);
/// Basis indices of the complement m.
std::vector<int> complement_basis(const LeviDatum& levi, const LieAlgebra& algebra);

/// An alternating tensor on m, keyed by ascending positions in `basis`.
struct QuotientTensor {
  std::vector<int> basis;
  int degree = 0;
  std::map<Index, Rational> terms;
  bool is_zero() const { return terms.empty(); }
};

/// Image of an alternating tensor under wedge^k(g -> g/l).
QuotientTensor tangent_projection(const MultiTensor& psi, const LeviDatum& levi);

/// [m, m] lies in l, so l + m is a symmetric pair with involution +1 on l,
/// -1 on m.
bool is_symmetric_pair(const LeviDatum& levi, const LieAlgebra& algebra);

/// dim (wedge^2 m)^l, by exact nullspace computation.
int invariant_bivector_dim_at_base(const LeviDatum& levi, const LieAlgebraPtr& algebra);

}  // namespace qpv

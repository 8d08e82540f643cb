#pragma once

// Concrete semisimple Lie algebras of classical type in their defining
// representation.
//
// Basis: Cartan generators h_1..h_r (simple coroots), then root vectors X_b for
// positive roots b in height order, then X_{-b} in the same order. The root
// vectors are built from Chevalley generators by iterated commutators, so the
// structure constants are rational and [e_i, f_i] = h_i, [h_i, e_i] = 2 e_i.
// They are not Killing-normalized; root_pair_scale(b) gives the factor that
// makes (X_b, c X_{-b}) = 1.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpv/linalg.hpp"
#include "qpv/rootsys.hpp"

namespace qpv {

using SparseTerms = std::vector<std::pair<int, Rational>>;

/// Sparse table of brackets [b_i, b_j] = sum_k c_ij^k b_k.
class StructureConstants {
 public:
  explicit StructureConstants(int dim) : dim_(dim), table_(static_cast<std::size_t>(dim) * dim) {}

  int dim() const { return dim_; }
  const SparseTerms& bracket(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim_ + j]; }
  Rational coefficient(int i, int j, int k) const;

  /// Sets [b_i, b_j] and the antisymmetric counterpart [b_j, b_i].
  void set_bracket(int i, int j, SparseTerms terms);

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad(b_i): column k holds the coordinates of [b_i, b_k].
  Matrix ad_matrix(int i) const;

  /// Largest violation index of the Jacobi identity, nullopt if it holds.
  std::optional<std::array<int, 3>> jacobi_violation() const;

 private:
  int dim_;
  std::vector<SparseTerms> table_;
};

struct BasisElement {
  enum class Kind { cartan, root };
  Kind kind;
  /// Signed root in the simple-root basis; zero vector for Cartan elements.
  Root weight;
  std::string label;
};

class UnsupportedTypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LieAlgebra {
 public:
  LieAlgebra(RootSystem rs, std::vector<BasisElement> basis, std::vector<Matrix> realization);

  const RootSystem& root_system() const { return rs_; }
  std::string name() const { return rs_.name(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  int rank() const { return rs_.rank; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::string& label(int i) const { return basis_[i].label; }
  const Root& weight(int i) const { return basis_[i].weight; }

  const StructureConstants& structure() const { return sc_; }
  const Matrix& killing() const { return killing_; }
  const Matrix& killing_inverse() const { return killing_inverse_; }

  bool has_matrix_realization() const { return !realization_.empty(); }
  /// Defining-representation matrices of the basis elements.
  const std::vector<Matrix>& matrix_realization() const { return realization_; }
  int matrix_size() const { return realization_.empty() ? 0 : realization_.front().rows(); }

  /// Basis index of the root vector for a signed root, or -1.
  int root_index(const Root& signed_root) const;
  int positive_root_index(int k) const { return rank() + k; }
  int negative_root_index(int k) const { return rank() + static_cast<int>(rs_.positive_roots.size()) + k; }
  int num_positive_roots() const { return static_cast<int>(rs_.positive_roots.size()); }
  /// Chevalley generators e_i, f_i for 0-based simple root i.
  int simple_e(int i) const;
  int simple_f(int i) const;

  /// c with (X_b, c X_{-b}) = 1 for the k-th positive root b.
  Rational root_pair_scale(int k) const;

  /// Coordinates of a matrix in the basis; throws if it is not in the span.
  Vector coordinates(const Matrix& m) const;
  Matrix to_matrix(const Vector& x) const;

  Vector unit(int i) const;

 private:
  RootSystem rs_;
  std::vector<BasisElement> basis_;
  std::vector<Matrix> realization_;
  std::vector<std::pair<int, int>> pivot_entries_;
  Matrix pivot_inverse_;
  StructureConstants sc_;
  Matrix killing_;
  Matrix killing_inverse_;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Defining-representation realization of a type A, B, C or D root system.
/// Throws UnsupportedTypeError for E, F, G.
LieAlgebraPtr realize_classical(const RootSystem& rs);
LieAlgebraPtr make_algebra(std::string_view spec);

/// K_ij = trace(ad b_i ad b_j), computed from structure constants.
Matrix killing_form(const StructureConstants& sc);
inline Matrix killing_form(const LieAlgebra& L) { return killing_form(L.structure()); }

}  // namespace qpv

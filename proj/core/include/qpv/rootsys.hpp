#pragma once

// Root systems of the simple Lie algebras, with Bourbaki node numbering.
//
// Roots are integer coefficient vectors in the simple-root basis. Simple-root
// labels exposed through the API (node sets, Levi data) are 1-based, matching
// Bourbaki; coefficient vectors are indexed from 0.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qpv {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

using Root = std::vector<int>;

class InvalidTypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TypeSpec {
  Series series;
  int rank;

  /// "A2", "d4", or one of the aliases sl2..sl9, so5, sp4, so8.
  static TypeSpec parse(std::string_view text);
  std::string name() const;
  bool operator==(const TypeSpec&) const = default;
};

struct RootSystem {
  Series series;
  int rank;
  /// a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
  std::vector<std::vector<int>> cartan_matrix;
  /// Twice the squared lengths of the simple roots (short roots of the
  /// simply-laced and B/C/F series have value 2).
  std::vector<int> length_squared;
  /// Ordered by height, then lexicographically within a height.
  std::vector<Root> positive_roots;
  Root highest_root;

  TypeSpec type() const { return {series, rank}; }
  std::string name() const { return type().name(); }

  /// Index into positive_roots, or -1.
  int positive_index(const Root& root) const;
  /// Integer pairing <root, alpha_i^vee> for every simple root i.
  std::vector<int> coroot_pairings(const Root& root) const;
};

int height(const Root& root);

/// Builds the root system of (series, rank) by root-string closure from the
/// Cartan matrix. Throws InvalidTypeError for unsupported pairs.
RootSystem build_root_system(Series series, int rank);
RootSystem build_root_system(const TypeSpec& type);

/// 1-based labels i with highest_root[i-1] == 1.
std::vector<int> coefficient_one_nodes(const RootSystem& rs);

}  // namespace qpv

#pragma once

// The filtered family (S g)_t = T(g)[t] / J_t with J_t generated by
// xy - yx - t[x, y], truncated at a word length, with PBW flatness and
// confluence checks.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qpv/liealg.hpp"
#include "qpv/utensor.hpp"

namespace qpv {

inline constexpr int kDefaultPbwDegree = 4;
/// Upper bound on the number of words of length <= degree.
inline constexpr long long kPbwWordCap = 20'000;
inline constexpr int kDefaultConfluenceSamples = 100;

class RewriteSystem {
 public:
  using Element = std::map<Word, Rational>;
  enum class Strategy { leftmost, rightmost };

  /// `order` lists the basis indices from smallest to largest; words are in
  /// normal form when nondecreasing in this order.
  RewriteSystem(StructureConstants structure, std::vector<int> order, Rational t);

  int generators() const { return structure_.dim(); }
  const std::vector<int>& order() const { return order_; }
  const Rational& t() const { return t_; }
  const StructureConstants& structure() const { return structure_; }

  bool is_normal(const Word& w) const;
  /// Applies xy -> yx + t[x, y] to out-of-order adjacent pairs until every
  /// word is normal.
  Element normal_form(const Word& w, Strategy strategy) const;
  Element normal_form(const Element& e, Strategy strategy) const;

  /// Degree-lex comparison of words under the generator order.
  bool word_less(const Word& a, const Word& b) const;

 private:
  int out_of_order_position(const Word& w, Strategy strategy) const;

  StructureConstants structure_;
  std::vector<int> order_;
  std::vector<int> rank_;
  Rational t_;
};

/// Number of normal-form words of each length k <= degree: the standard
/// words of the truncated ideal spanned by u (xy - yx - t[x, y]) v with
/// |u| + |v| + 2 <= degree, under degree-lex order.
std::vector<long long> normal_form_counts(const RewriteSystem& system, int degree);

struct PbwReport {
  int degree = 0;
  /// dim S^k g.
  std::vector<long long> expected;
  std::vector<long long> counts;
  /// Same with t = 0.
  std::vector<long long> counts_t0;
  /// Same under the reversed generator order.
  std::vector<long long> counts_reordered;
  int words_sampled = 0;
  bool confluent = true;
  std::optional<Word> nonconfluent_word;

  bool flat() const { return counts == expected && counts_t0 == expected && counts_reordered == expected; }
  bool passed() const { return flat() && confluent; }
};

/// Throws ResourceLimitError beyond kPbwWordCap words.
PbwReport pbw_flatness(const StructureConstants& structure, int degree, std::uint64_t seed,
                       int samples = kDefaultConfluenceSamples);
PbwReport pbw_flatness(const LieAlgebra& algebra, int degree, std::uint64_t seed,
                       int samples = kDefaultConfluenceSamples);

}  // namespace qpv

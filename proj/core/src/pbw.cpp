#include "qpv/pbw.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qpv/errors.hpp"
#include "qpv/polynomial.hpp"

namespace qpv {

RewriteSystem::RewriteSystem(StructureConstants structure, std::vector<int> order, Rational t)
    : structure_(std::move(structure)), order_(std::move(order)), rank_(structure_.dim(), -1), t_(std::move(t)) {
  if (static_cast<int>(order_.size()) != structure_.dim()) throw std::invalid_argument("order must list every generator");
  for (std::size_t k = 0; k < order_.size(); ++k) {
    const int g = order_[k];
    if (g < 0 || g >= structure_.dim() || rank_[g] >= 0) throw std::invalid_argument("order is not a permutation");
    rank_[g] = static_cast<int>(k);
  }
}

bool RewriteSystem::is_normal(const Word& w) const { return out_of_order_position(w, Strategy::leftmost) < 0; }

bool RewriteSystem::word_less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return rank_[a[i]] < rank_[b[i]];
  return false;
}

int RewriteSystem::out_of_order_position(const Word& w, Strategy strategy) const {
  const int n = static_cast<int>(w.size());
  if (strategy == Strategy::leftmost) {
    for (int p = 0; p + 1 < n; ++p)
      if (rank_[w[p]] > rank_[w[p + 1]]) return p;
  } else {
    for (int p = n - 2; p >= 0; --p)
      if (rank_[w[p]] > rank_[w[p + 1]]) return p;
  }
  return -1;
}

RewriteSystem::Element RewriteSystem::normal_form(const Word& w, Strategy strategy) const {
  return normal_form(Element{{w, Rational(1)}}, strategy);
}

RewriteSystem::Element RewriteSystem::normal_form(const Element& e, Strategy strategy) const {
  auto accumulate = [](Element& into, const Word& w, const Rational& c) {
    if (qpv::is_zero(c)) return;
    auto [it, inserted] = into.try_emplace(w, 0);
    it->second += c;
    if (qpv::is_zero(it->second)) into.erase(it);
  };
  Element out;
  Element todo;
  for (const auto& [w, c] : e) accumulate(todo, w, c);
  while (!todo.empty()) {
    // Longest words first so that shorter correction terms collect before
    // they are processed.
    auto it = std::prev(todo.end());
    for (auto j = todo.begin(); j != todo.end(); ++j)
      if (j->first.size() > it->first.size()) it = j;
    const Word w = it->first;
    const Rational c = it->second;
    todo.erase(it);
    const int p = out_of_order_position(w, strategy);
    if (p < 0) {
      accumulate(out, w, c);
      continue;
    }
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    accumulate(todo, swapped, c);
    if (qpv::is_zero(t_)) continue;
    for (const auto& [k, coeff] : structure_.bracket(w[p], w[p + 1])) {
      Word shorter(w.begin(), w.begin() + p);
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
      accumulate(todo, shorter, c * coeff * t_);
    }
  }
  return out;
}

namespace {

std::vector<Word> words_up_to(int n, int degree) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int k = 1; k <= degree; ++k) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int g = 0; g < n; ++g) {
        Word v = w;
        v.push_back(g);
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

long long word_count(int n, int degree) {
  long long total = 0;
  long long layer = 1;
  for (int k = 0; k <= degree; ++k) {
    total += layer;
    if (total > kPbwWordCap) return total;
    layer *= n;
  }
  return total;
}

}  // namespace

std::vector<long long> normal_form_counts(const RewriteSystem& system, int degree) {
  const int n = system.generators();
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (word_count(n, degree) > kPbwWordCap) throw ResourceLimitError("word space exceeds the PBW cap");

  // Columns in decreasing degree-lex order, so each pivot is a leading word.
  std::vector<Word> words = words_up_to(n, degree);
  std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) { return system.word_less(b, a); });
  std::map<Word, int> column;
  for (std::size_t i = 0; i < words.size(); ++i) column.emplace(words[i], static_cast<int>(i));

  RowEchelon ech(static_cast<int>(words.size()));
  std::vector<Word> contexts = words_up_to(n, std::max(0, degree - 2));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !system.word_less(Word{y}, Word{x})) continue;
      for (const auto& u : contexts)
        for (const auto& v : contexts) {
          if (static_cast<int>(u.size() + v.size()) + 2 > degree) continue;
          SparseRow row;
          auto put = [&](Word w, const Rational& c) {
            if (qpv::is_zero(c)) return;
            auto [it, inserted] = row.try_emplace(column.at(w), 0);
            it->second += c;
            if (qpv::is_zero(it->second)) row.erase(it);
          };
          auto wrap = [&](std::initializer_list<int> mid) {
            Word w = u;
            w.insert(w.end(), mid);
            w.insert(w.end(), v.begin(), v.end());
            return w;
          };
          put(wrap({x, y}), 1);
          put(wrap({y, x}), -1);
          for (const auto& [k, c] : system.structure().bracket(x, y)) put(wrap({k}), -c * system.t());
          ech.insert(std::move(row));
        }
    }

  std::vector<long long> counts(degree + 1, 0);
  std::vector<bool> pivot(words.size(), false);
  for (std::size_t i = 0; i < words.size(); ++i) {
    SparseRow probe{{static_cast<int>(i), Rational(1)}};
    // A column is a pivot exactly when the unit vector reduces below it.
    const SparseRow reduced = ech.reduce(probe);
    pivot[i] = reduced.empty() || reduced.begin()->first != static_cast<int>(i);
  }
  for (std::size_t i = 0; i < words.size(); ++i)
    if (!pivot[i]) ++counts[words[i].size()];
  return counts;
}

PbwReport pbw_flatness(const StructureConstants& structure, int degree, std::uint64_t seed, int samples) {
  const int n = structure.dim();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> reversed(order.rbegin(), order.rend());

  PbwReport report;
  report.degree = degree;
  for (int k = 0; k <= degree; ++k) report.expected.push_back(monomial_count(n, k));

  const RewriteSystem system(structure, order, 1);
  report.counts = normal_form_counts(system, degree);
  report.counts_t0 = normal_form_counts(RewriteSystem(structure, order, 0), degree);
  report.counts_reordered = normal_form_counts(RewriteSystem(structure, reversed, 1), degree);

  std::mt19937_64 rng(seed);
  const int max_len = std::max(degree, 2);
  for (int s = 0; s < samples; ++s) {
    const int len = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len - 1));
    Word w(len);
    for (auto& g : w) g = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    ++report.words_sampled;
    if (system.normal_form(w, RewriteSystem::Strategy::leftmost) !=
        system.normal_form(w, RewriteSystem::Strategy::rightmost)) {
      report.confluent = false;
      report.nonconfluent_word = w;
      break;
    }
  }
  return report;
}

PbwReport pbw_flatness(const LieAlgebra& algebra, int degree, std::uint64_t seed, int samples) {
  return pbw_flatness(algebra.structure(), degree, seed, samples);
}

}  // namespace qpv

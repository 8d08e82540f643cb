#include "qpv/orbits.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qpv/linalg.hpp"

namespace qpv {

std::string LeviDatum::label() const {
  std::ostringstream os;
  os << type.name() << " S={";
  for (std::size_t i = 0; i < S.size(); ++i) os << (i ? "," : "") << S[i];
  os << "}";
  return os.str();
}

LeviDatum classify_levi(const RootSystem& rs, std::vector<int> S) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  for (int s : S)
    if (s < 1 || s > rs.rank) throw std::invalid_argument("simple root label out of range");
  if (static_cast<int>(S.size()) == rs.rank) throw std::invalid_argument("S is the full node set; not an orbit");

  LeviDatum out;
  out.type = rs.type();
  out.S = S;
  for (int i = 1; i <= rs.rank; ++i)
    if (!std::binary_search(S.begin(), S.end(), i)) out.T.push_back(i);
  out.orbit_rank = static_cast<int>(out.T.size());

  const auto ones = coefficient_one_nodes(rs);
  const bool all_one = std::all_of(out.T.begin(), out.T.end(),
                                   [&](int i) { return std::find(ones.begin(), ones.end(), i) != ones.end(); });
  if (rs.series == Series::A) out.good = true;
  else out.good = out.orbit_rank <= 2 && all_one;
  out.hermitian_symmetric = out.orbit_rank == 1 && all_one;
  return out;
}

std::vector<LeviDatum> enumerate_good_orbits(const RootSystem& rs) {
  std::vector<LeviDatum> out;
  const unsigned full = (1u << rs.rank) - 1;
  for (unsigned bits = 0; bits < full; ++bits) {
    std::vector<int> S;
    for (int i = 0; i < rs.rank; ++i)
      if (bits & (1u << i)) S.push_back(i + 1);
    LeviDatum d = classify_levi(rs, S);
    if (d.good) out.push_back(std::move(d));
  }
  return out;
}

long long good_orbit_count_formula(const RootSystem& rs) {
  if (rs.series == Series::A) return (1LL << rs.rank) - 1;
  const long long c = static_cast<long long>(coefficient_one_nodes(rs).size());
  return c + c * (c - 1) / 2;
}

namespace {

bool in_levi(const Root& weight, const std::vector<int>& S) {
  for (std::size_t i = 0; i < weight.size(); ++i)
    if (weight[i] != 0 && !std::binary_search(S.begin(), S.end(), static_cast<int>(i) + 1)) return false;
  return true;
}

void require_same_type(const LeviDatum& levi, const LieAlgebra& L) {
  if (!(levi.type == L.root_system().type())) throw std::invalid_argument("Levi datum and algebra have different types");
}

}  // namespace

std::vector<int> levi_basis(const LeviDatum& levi, const LieAlgebra& L) {
  require_same_type(levi, L);
  std::vector<int> out;
  for (int i = 0; i < L.dim(); ++i)
    if (in_levi(L.weight(i), levi.S)) out.push_back(i);
  return out;
}

std::vector<int> complement_basis(const LeviDatum& levi, const LieAlgebra& L) {
  require_same_type(levi, L);
  std::vector<int> out;
  for (int i = 0; i < L.dim(); ++i)
    if (!in_levi(L.weight(i), levi.S)) out.push_back(i);
  return out;
}

QuotientTensor tangent_projection(const MultiTensor& psi, const LeviDatum& levi) {
  const auto& L = *psi.algebra();
  QuotientTensor out;
  out.basis = complement_basis(levi, L);
  out.degree = psi.degree();
  std::vector<int> position(L.dim(), -1);
  for (std::size_t k = 0; k < out.basis.size(); ++k) position[out.basis[k]] = static_cast<int>(k);

  const MultiTensor alt = psi.symmetry() == Symmetry::alternating ? psi : alternating_part(psi.to_plain());
  for (const auto& [key, c] : alt.terms()) {
    Index q;
    for (int i : key) {
      if (position[i] < 0) break;
      q.push_back(position[i]);
    }
    // Ascending in g and the position map is monotone, so q stays ascending.
    if (q.size() == key.size()) out.terms.emplace(std::move(q), c);
  }
  return out;
}

bool is_symmetric_pair(const LeviDatum& levi, const LieAlgebra& L) {
  const auto m = complement_basis(levi, L);
  for (int a : m)
    for (int b : m)
      for (const auto& [k, c] : L.structure().bracket(a, b))
        if (!in_levi(L.weight(k), levi.S)) return false;
  return true;
}

int invariant_bivector_dim_at_base(const LeviDatum& levi, const LieAlgebraPtr& algebra) {
  const auto& L = *algebra;
  const auto l = levi_basis(levi, L);
  const auto m = complement_basis(levi, L);
  const int k = static_cast<int>(m.size());
  std::vector<int> position(L.dim(), -1);
  for (int i = 0; i < k; ++i) position[m[i]] = i;
  // Unknowns: coefficients of m_a ^ m_b for a < b.
  auto pair_index = [k](int a, int b) { return a * k + b; };

  RowEchelon ech(k * k);
  for (int x : l) {
    // ad_x (m_a ^ m_b) = [x, m_a] ^ m_b + m_a ^ [x, m_b]; collect the
    // coefficient of each m_c ^ m_d (c < d) as a linear form in the unknowns.
    std::map<int, SparseRow> rows;
    auto emit = [&](int c, int d, int unknown, const Rational& v) {
      if (c == d) return;
      Rational s = v;
      if (c > d) {
        std::swap(c, d);
        s = -s;
      }
      SparseRow& row = rows[pair_index(c, d)];
      auto [it, inserted] = row.try_emplace(unknown, 0);
      it->second += s;
      if (qpv::is_zero(it->second)) row.erase(it);
    };
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        const int u = pair_index(a, b);
        for (const auto& [j, c] : L.structure().bracket(x, m[a]))
          if (position[j] >= 0) emit(position[j], b, u, c);
        for (const auto& [j, c] : L.structure().bracket(x, m[b]))
          if (position[j] >= 0) emit(a, position[j], u, c);
      }
    for (auto& [key, row] : rows)
      if (!row.empty()) ech.insert(std::move(row));
  }
  // Unknown slots with a >= b are never used; discount them.
  const int unused = k * k - k * (k - 1) / 2;
  return static_cast<int>(ech.nullspace().size()) - unused;
}

}  // namespace qpv

#include "qpv/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace qpv {

namespace {

bool valid_type(Series s, int n) {
  switch (s) {
    case Series::A: return n >= 1;
    case Series::B: return n >= 2;
    case Series::C: return n >= 2;
    case Series::D: return n >= 4;
    case Series::E: return n >= 6 && n <= 8;
    case Series::F: return n == 4;
    case Series::G: return n == 2;
  }
  return false;
}

// Doubled Gram matrix of the simple roots, (alpha_i, alpha_j) scaled so that
// the shortest roots have squared length 2.
std::vector<std::vector<int>> gram_matrix(Series s, int n) {
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) {
    g[i][j] = v;
    g[j][i] = v;
  };
  switch (s) {
    case Series::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Series::B:
      for (int i = 0; i < n; ++i) g[i][i] = 4;
      g[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Series::C:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Series::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Series::E:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Series::F:
      g = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      break;
    case Series::G:
      g = {{2, -3}, {-3, 6}};
      break;
  }
  return g;
}

}  // namespace

TypeSpec TypeSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "so5") return {Series::B, 2};
  if (s == "sp4") return {Series::C, 2};
  if (s == "so8") return {Series::D, 4};
  if (s.size() == 3 && s.rfind("sl", 0) == 0 && s[2] >= '2' && s[2] <= '9') {
    return {Series::A, s[2] - '1'};
  }
  if (s.size() < 2 || s.size() > 3) throw InvalidTypeError("unrecognized algebra spec '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (letter < 'A' || letter > 'G') throw InvalidTypeError("unrecognized series in '" + std::string(text) + "'");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw InvalidTypeError("unrecognized rank in '" + std::string(text) + "'");
    }
    rank = rank * 10 + (s[i] - '0');
  }
  const auto series = static_cast<Series>(letter);
  if (!valid_type(series, rank)) throw InvalidTypeError("unsupported type " + std::string(1, letter) + std::to_string(rank));
  return {series, rank};
}

std::string TypeSpec::name() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }

int height(const Root& root) {
  int h = 0;
  for (int c : root) h += c;
  return h;
}

int RootSystem::positive_index(const Root& root) const {
  auto it = std::find(positive_roots.begin(), positive_roots.end(), root);
  return it == positive_roots.end() ? -1 : static_cast<int>(it - positive_roots.begin());
}

std::vector<int> RootSystem::coroot_pairings(const Root& root) const {
  std::vector<int> out(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) out[i] += root[j] * cartan_matrix[i][j];
  return out;
}

RootSystem build_root_system(Series series, int rank) {
  if (!valid_type(series, rank)) {
    throw InvalidTypeError("unsupported type " + std::string(1, static_cast<char>(series)) + std::to_string(rank));
  }
  RootSystem rs;
  rs.series = series;
  rs.rank = rank;
  const auto gram = gram_matrix(series, rank);
  rs.cartan_matrix.assign(rank, std::vector<int>(rank, 0));
  rs.length_squared.resize(rank);
  for (int i = 0; i < rank; ++i) {
    rs.length_squared[i] = gram[i][i];
    for (int j = 0; j < rank; ++j) rs.cartan_matrix[i][j] = 2 * gram[i][j] / gram[i][i];
  }

  std::set<Root> known;
  std::vector<Root> level;
  for (int i = 0; i < rank; ++i) {
    Root r(rank, 0);
    r[i] = 1;
    level.push_back(r);
  }
  auto by_lex_desc = [](const Root& a, const Root& b) { return a > b; };
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), by_lex_desc);
    for (const auto& r : level) {
      known.insert(r);
      rs.positive_roots.push_back(r);
    }
    std::set<Root, std::greater<>> next;
    for (const auto& beta : level) {
      const auto pairing = rs.coroot_pairings(beta);
      for (int i = 0; i < rank; ++i) {
        // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
        // with p - q = <beta, alpha_i^vee>.
        int p = 0;
        Root down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        const int q = p - pairing[i];
        if (q > 0) {
          Root up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
  }
  rs.highest_root = rs.positive_roots.back();
  return rs;
}

RootSystem build_root_system(const TypeSpec& type) { return build_root_system(type.series, type.rank); }

std::vector<int> coefficient_one_nodes(const RootSystem& rs) {
  std::vector<int> out;
  for (int i = 0; i < rs.rank; ++i)
    if (rs.highest_root[i] == 1) out.push_back(i + 1);
  return out;
}

}  // namespace qpv

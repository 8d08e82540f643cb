#pragma once

// Sparse multivariate polynomials with rational coefficients in at most
// kMaxVariables variables. Terms are kept in lexicographic order with
// x_0 > x_1 > ...; the leading term is the last map entry.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpv/rational.hpp"

namespace qpv {

inline constexpr int kMaxVariables = 32;

struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exp{};

  static Monomial variable(int i);
  int degree() const;
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  /// o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial variable(int i);
  static Polynomial term(const Monomial& m, const Rational& c);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  void add(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  Polynomial operator-() const { return *this * Rational(-1); }
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  Polynomial derivative(int var) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  /// Quotient q with *this = q * d, or nullopt if d does not divide.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::map<Monomial, Rational> terms_;
};

/// Number of monomials of total degree k in n variables.
long long monomial_count(int n, int k);
/// All exponent vectors of total degree k in the first n variables, in
/// increasing Monomial order.
std::vector<Monomial> monomials_of_degree(int n, int k);

}  // namespace qpv

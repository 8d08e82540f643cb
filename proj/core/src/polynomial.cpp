#include "qpv/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qpv {

Monomial Monomial::variable(int i) {
  if (i < 0 || i >= kMaxVariables) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.exp[i] = 1;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kMaxVariables; ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (int i = 0; i < kMaxVariables; ++i) {
    const int e = exp[i] + o.exp[i];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    m.exp[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial m;
  for (int i = 0; i < kMaxVariables; ++i) m.exp[i] = static_cast<std::uint8_t>(o.exp[i] - exp[i]);
  return m;
}

Polynomial Polynomial::constant(const Rational& c) { return term(Monomial{}, c); }

Polynomial Polynomial::variable(int i) { return term(Monomial::variable(i), 1); }

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p;
  p.add(m, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

void Polynomial::add(const Monomial& m, const Rational& c) {
  if (qpv::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, 0);
  it->second += c;
  if (qpv::is_zero(it->second)) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  out += o;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  out -= o;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add(m1 * m2, c1 * c2);
  return out;
}

Polynomial Polynomial::operator*(const Rational& s) const {
  Polynomial out;
  if (qpv::is_zero(s)) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
  return out;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] == 0) continue;
    Monomial d = m;
    d.exp[var] -= 1;
    out.add(d, c * m.exp[var]);
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < kMaxVariables; ++i)
      for (int k = 0; k < m.exp[i]; ++k) v *= point.at(i);
    total += v;
  }
  return total;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& [lead_m, lead_c] = *d.terms_.rbegin();
  Polynomial rem = *this;
  Polynomial quot;
  // With a single divisor the division remainder is zero exactly when d
  // divides the dividend.
  while (!rem.is_zero()) {
    const auto& [m, c] = *rem.terms_.rbegin();
    if (!lead_m.divides(m)) return std::nullopt;
    const Polynomial t = term(lead_m.quotient_of(m), c / lead_c);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    os << (first ? "" : " + ") << "(" << c.get_str() << ")";
    for (int i = 0; i < kMaxVariables; ++i) {
      if (m.exp[i] == 0) continue;
      os << "*" << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i));
      if (m.exp[i] > 1) os << "^" << static_cast<int>(m.exp[i]);
    }
    first = false;
  }
  return os.str();
}

long long monomial_count(int n, int k) {
  // C(n + k - 1, k)
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n + i - 1) / i;
  return c;
}

std::vector<Monomial> monomials_of_degree(int n, int k) {
  if (n > kMaxVariables) throw std::out_of_range("too many variables");
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n - 1) {
      m.exp[var] = static_cast<std::uint8_t>(left);
      out.push_back(m);
      m.exp[var] = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.exp[var] = static_cast<std::uint8_t>(e);
      rec(var + 1, left - e);
    }
    m.exp[var] = 0;
  };
  if (n == 0) {
    if (k == 0) out.push_back(m);
    return out;
  }
  rec(0, k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qpv

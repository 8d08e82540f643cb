#include "qpv/quantize.hpp"

#include <stdexcept>

namespace qpv {

TruncatedPolynomialAlgebra::TruncatedPolynomialAlgebra(LieAlgebraPtr algebra, int max_degree)
    : algebra_(std::move(algebra)), max_degree_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative truncation degree");
  for (int k = 0; k <= max_degree; ++k)
    for (const auto& m : monomials_of_degree(algebra_->dim(), k)) monomials_.push_back(m);
}

Polynomial TruncatedPolynomialAlgebra::truncate(const Polynomial& p) const {
  Polynomial out;
  for (const auto& [m, c] : p.terms())
    if (m.degree() <= max_degree_) out.add(m, c);
  return out;
}

Polynomial TruncatedPolynomialAlgebra::multiply(const Polynomial& a, const Polynomial& b) const {
  return truncate(a * b);
}

FirstOrderProduct FirstOrderProduct::from_bivector(std::string name, const PolyVectorField& p, const Rational& scale) {
  if (p.degree() != 2) throw std::invalid_argument("first-order product needs a bivector");
  return {std::move(name), [p, scale](const Polynomial& a, const Polynomial& b) { return evaluate(p, {a, b}) * scale; }};
}

FirstOrderProduct FirstOrderProduct::zero() {
  return {"0", [](const Polynomial&, const Polynomial&) { return Polynomial{}; }};
}

namespace {

struct ActionCache {
  std::vector<PolyVectorField> fields;

  explicit ActionCache(const LieAlgebraPtr& algebra) {
    for (int i = 0; i < algebra->dim(); ++i) fields.push_back(action_field(algebra, i));
  }
  Polynomial apply(int i, const Polynomial& p) const { return evaluate(fields[i], {p}); }
};

// Pairs of monomials with deg a + deg b <= degree.
template <typename F>
void for_each_pair(int dim, int degree, F&& f) {
  for (int da = 0; da <= degree; ++da)
    for (const auto& a : monomials_of_degree(dim, da))
      for (int db = 0; da + db <= degree; ++db)
        for (const auto& b : monomials_of_degree(dim, db))
          if (!f(a, b)) return;
}

// sum_{uv} c^{uv} (u.a)(v.b) over the full components of a 2-tensor.
Polynomial contract_pair(const MultiTensor& c, const ActionCache& act, const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  const MultiTensor plain = c.to_plain();
  for (const auto& [key, coeff] : plain.terms()) {
    const Polynomial ua = act.apply(key[0], a);
    if (ua.is_zero()) continue;
    const Polynomial vb = act.apply(key[1], b);
    if (!vb.is_zero()) out += ua * vb * coeff;
  }
  return out;
}

}  // namespace

InvarianceReport first_order_invariance_check(const FirstOrderProduct& m1, const MultiTensor& r, int degree) {
  const LieAlgebraPtr& algebra = r.algebra();
  const ActionCache act(algebra);
  const int n = algebra->dim();
  std::vector<MultiTensor> deltas;
  for (int x = 0; x < n; ++x) deltas.push_back(cobracket(r, algebra->unit(x)));

  InvarianceReport report;
  for (int x = 0; x < n; ++x) {
    for_each_pair(n, degree, [&](const Monomial& ma, const Monomial& mb) {
      const Polynomial a = Polynomial::term(ma, 1);
      const Polynomial b = Polynomial::term(mb, 1);
      const Polynomial lhs = act.apply(x, m1.m1(a, b)) - m1.m1(act.apply(x, a), b) - m1.m1(a, act.apply(x, b));
      const Polynomial rhs = contract_pair(deltas[x], act, a, b) * Rational(1, 2);
      ++report.cases;
      if (lhs == rhs) return true;
      report.passed = false;
      report.failure = InvarianceFailure{x, ma, mb, lhs, rhs};
      return false;
    });
    if (!report.passed) break;
  }
  return report;
}

CocycleReport hochschild_cocycle_check(const FirstOrderProduct& m1, const LieAlgebraPtr& algebra, int degree) {
  const int n = algebra->dim();
  CocycleReport report;
  // Triples without constants first: that is where defects of normalized
  // cochains live.
  for (const bool with_constants : {false, true})
    for (int da = 0; da <= degree && report.passed; ++da)
      for (const auto& ma : monomials_of_degree(n, da)) {
        for_each_pair(n, degree - da, [&](const Monomial& mb, const Monomial& mc) {
          const bool has_constant = da == 0 || mb.degree() == 0 || mc.degree() == 0;
          if (has_constant != with_constants) return true;
          const Polynomial a = Polynomial::term(ma, 1);
          const Polynomial b = Polynomial::term(mb, 1);
          const Polynomial c = Polynomial::term(mc, 1);
          const Polynomial v = a * m1.m1(b, c) - m1.m1(a * b, c) + m1.m1(a, b * c) - m1.m1(a, b) * c;
          ++report.cases;
          if (v.is_zero()) return true;
          report.passed = false;
          report.failure = CocycleFailure{ma, mb, mc, v};
          return false;
        });
        if (!report.passed) break;
      }
  return report;
}

namespace {

// Total degree of a homogeneous polynomial; monomial arguments only.
Rational homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) return 0;
  if (!p.is_homogeneous()) throw std::invalid_argument("degree perturbation needs homogeneous arguments");
  return p.degree();
}

}  // namespace

FirstOrderProduct with_degree_fault(const FirstOrderProduct& m1) {
  auto base = m1.m1;
  return {m1.name + " + (deg a)^2 (deg b) ab", [base](const Polynomial& a, const Polynomial& b) {
            const Rational da = homogeneous_degree(a);
            return base(a, b) + a * b * (da * da * homogeneous_degree(b));
          }};
}

FirstOrderProduct with_coboundary_term(const FirstOrderProduct& m1) {
  auto base = m1.m1;
  return {m1.name + " + (deg a)(deg b) ab", [base](const Polynomial& a, const Polynomial& b) {
            return base(a, b) + a * b * (homogeneous_degree(a) * homogeneous_degree(b));
          }};
}

TwistCorrespondenceReport twist_correspondence_check(const PolyVectorField& f, const MultiTensor& r, int degree) {
  const LieAlgebraPtr& algebra = r.algebra();
  const ActionCache act(algebra);
  const PolyVectorField p = f - rmatrix_bracket(r);
  auto mu1 = [&](const Polynomial& a, const Polynomial& b) { return evaluate(f, {a, b}) * Rational(1, 2); };
  auto m0r = [&](const Polynomial& a, const Polynomial& b) { return contract_pair(r, act, a, b); };
  auto m1 = [&](const Polynomial& a, const Polynomial& b) { return mu1(a, b) - m0r(a, b) * Rational(1, 2); };

  TwistCorrespondenceReport report;
  for_each_pair(algebra->dim(), degree, [&](const Monomial& ma, const Monomial& mb) {
    const Polynomial a = Polynomial::term(ma, 1);
    const Polynomial b = Polynomial::term(mb, 1);
    const Polynomial diff = (m1(a, b) - m1(b, a)) - (mu1(a, b) - mu1(b, a));
    const Polynomial expected = (m0r(a, b) - m0r(b, a)) * Rational(-1, 2);
    const bool matches_bivector = m1(a, b) == evaluate(p, {a, b}) * Rational(1, 2);
    ++report.cases;
    if (diff == expected && matches_bivector) return true;
    report.passed = false;
    report.failure = std::make_pair(ma, mb);
    return false;
  });
  return report;
}

namespace {

std::optional<RepresentationDefect> first_entry(const SparseMatrix& m) {
  if (m.is_zero()) return std::nullopt;
  const auto& [ij, v] = *m.entries().begin();
  return RepresentationDefect{ij.first, ij.second, v};
}

}  // namespace

UTensor pentagon_order2_defect(const UTensor& phi) {
  if (phi.legs() != 3) throw std::invalid_argument("pentagon check expects a three-leg element");
  return coproduct_on_leg(phi, 2) + coproduct_on_leg(phi, 0) - embed_legs(phi, 4, {1, 2, 3}) -
         coproduct_on_leg(phi, 1) - embed_legs(phi, 4, {0, 1, 2});
}

PentagonReport pentagon_order2_check(const UTensor& phi, const Representation& rep) {
  PentagonReport report;
  report.representation = rep.name;
  report.faithful = is_faithful_in_degree_one(rep);
  const UTensor defect = pentagon_order2_defect(phi);
  report.symbolic_zero = defect.is_zero();
  const SparseMatrix image = evaluate(defect, rep);
  report.representation_zero = image.is_zero();
  report.defect = first_entry(image);
  return report;
}

PentagonReport pentagon_order2_check(const LieAlgebraPtr& algebra) {
  const UTensor phi = UTensor::from_multitensor(canonical_tensors(algebra).phi);
  return pentagon_order2_check(phi, defining_representation(*algebra));
}

SplitReport split_identity_check(const UTensor& rho, const Representation& rep) {
  if (rho.legs() != 2) throw std::invalid_argument("split identity expects a two-leg element");
  SplitReport out;
  const UTensor left = coproduct_on_leg(rho, 0) - embed_legs(rho, 3, {0, 2}) - embed_legs(rho, 3, {1, 2});
  const UTensor right = coproduct_on_leg(rho, 1) - embed_legs(rho, 3, {0, 2}) - embed_legs(rho, 3, {0, 1});
  out.left = left.is_zero() || evaluate(left, rep).is_zero();
  out.right = right.is_zero() || evaluate(right, rep).is_zero();
  return out;
}

RMatrixReport rmatrix_first_order_checks(const LieAlgebraPtr& algebra) {
  const Representation rep = defining_representation(*algebra);
  const CanonicalTensors ct = canonical_tensors(algebra);
  const UTensor r = UTensor::from_multitensor(ct.r_sd);
  const UTensor t = UTensor::from_multitensor(ct.t);
  const UTensor rho = t * Rational(1, 2) - r;

  RMatrixReport report;
  report.faithful = is_faithful_in_degree_one(rep);
  const SplitReport split = split_identity_check(rho, rep);
  report.split_left = split.left;
  report.split_right = split.right;

  report.coproduct_conjugation = true;
  report.coproduct_conjugation_without_t = true;
  report.t_commutes_with_coproduct = true;
  for (int x = 0; x < algebra->dim(); ++x) {
    const UTensor d = primitive_coproduct(algebra, x);
    const UTensor delta1 = commutator(r, d) * Rational(1, 2);
    const SparseMatrix expected = evaluate(swap_legs(delta1, 0, 1) - delta1, rep);
    if (!(evaluate(commutator(rho, d), rep) == expected)) report.coproduct_conjugation = false;
    if (!(evaluate(commutator(r * Rational(-1), d), rep) == expected)) report.coproduct_conjugation_without_t = false;
    if (!evaluate(commutator(t, d), rep).is_zero()) report.t_commutes_with_coproduct = false;
  }

  report.counit = counit_on_leg(r, 0).is_zero() && counit_on_leg(r, 1).is_zero();
  return report;
}

}  // namespace qpv

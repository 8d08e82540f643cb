// Acceptance run: one line per criterion with its verdict and wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qpv/grouppois.hpp"
#include "qpv/multivec.hpp"
#include "qpv/orbits.hpp"
#include "qpv/pbw.hpp"
#include "qpv/polyfield.hpp"
#include "qpv/quantize.hpp"
#include "qpv/rootsys.hpp"
#include "qpv/suites.hpp"

using namespace qpv;

namespace {

// Accumulates clause results; the criterion passes iff every clause does.
class Clauses {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      if (!failed_.empty()) failed_ += "; ";
      failed_ += what;
    }
  }
  bool ok() const { return ok_; }
  const std::string& failed() const { return failed_; }

 private:
  bool ok_ = true;
  std::string failed_;
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // <= 0: no limit
  std::function<void(Clauses&)> body;
};

bool all_zero(const PencilReport& r) { return r.pp.is_zero() && r.qq.is_zero() && r.pq.is_zero(); }

void cybe(Clauses& c) {
  for (const char* spec : {"sl2", "sl3", "so5", "sp4"}) {
    const auto L = make_algebra(spec);
    const auto ct = canonical_tensors(L);
    const auto alt = as_alternating(ct.phi.to_plain());
    c.expect(alt && *alt == ct.phi, std::string(spec) + ": phi not alternating");
    c.expect(is_invariant(ct.phi), std::string(spec) + ": phi not invariant");
    c.expect(tensor_ratio(cyb_trinomial(ct.r_sd), ct.phi) == kCybSchoutenRatio,
             std::string(spec) + ": cyb(r_sd) is not kCybSchoutenRatio * phi");
  }
}

void cobracket_suite(Clauses& c) {
  for (const char* spec : {"sl2", "sl3"}) {
    const auto L = make_algebra(spec);
    c.expect(co_jacobi_check(canonical_tensors(L).r_sd).holds, std::string(spec) + ": co-Jacobi fails");
  }
  const auto L = make_algebra("sl3");
  MultiTensor r(L, 2, Symmetry::alternating);
  r.add({L->simple_e(0), L->simple_e(1)}, 1);
  const auto rep = co_jacobi_check(r);
  c.expect(!is_invariant(algebraic_schouten(r, r)), "fault r has invariant [[r, r]]");
  c.expect(!rep.holds && rep.failing_basis.has_value(), "non-invariant [[r, r]] not detected");
}

void phi_bracket(Clauses& c) {
  const auto L = make_algebra("sl3");
  c.expect(solve_equivariant(L, 2, 2).dimension() == 1, "dim Hom_g(wedge^2 g, S^2 g) != 1");
  const auto cal = calibrate_scale(L);
  const auto s = kirillov_bracket(L);
  const auto phib = phibar(L);
  c.expect(phib == action_field(canonical_tensors(L).phi) * Rational(kPhibarSign) && (kPhibarSign == 1 || kPhibarSign == -1),
           "phibar != sign * phi_M");
  const auto rep = phi_bracket_pencil(L);
  c.expect(rep.s_f_vanishes, "[[s, f]] != 0");
  c.expect(rep.ff_is_minus_phibar, "[[f, f]] != -phibar");
  c.expect(rep.pencil_poisson, "pencil brackets do not vanish");
  if (cal.lambda) {
    const auto f = quadratic_bracket(L, *cal.lambda);
    c.expect(schouten_nijenhuis(f, f) == phib * Rational(-1), "[[f, f]] != -phibar at rational lambda");
    const auto p = f - rmatrix_bracket(canonical_tensors(L).r_sd);
    const auto pencil = poisson_pencil_check(s, p);
    c.expect(all_zero(pencil) && pencil.pencil_poisson, "{a s + b (f - r_M)} is not Poisson");
  }
}

void negative_spaces(Clauses& c) {
  c.expect(solve_equivariant(make_algebra("sl2"), 2, 2).dimension() == 0, "sl2 has an invariant quadratic bracket");
  c.expect(solve_equivariant(make_algebra("so5"), 2, 2).dimension() == 0, "so5 has an invariant quadratic bracket");
  const auto scan = invariant_bivector_scan(make_algebra("so5"), 2);
  c.expect(scan.size() == 3 && scan[2].dimension == 0, "so5 scan finds a quadratic invariant bivector");
}

void sl2_degeneracy(Clauses& c) {
  const auto L = make_algebra("sl2");
  const auto ct = canonical_tensors(L);
  c.expect(action_field(ct.phi).is_zero(), "phi_M != 0 on sl2*");
  const auto rM = rmatrix_bracket(ct.r_sd);
  c.expect(schouten_nijenhuis(rM, rM).is_zero(), "[[r_M, r_M]] != 0 on sl2*");
}

void conjecture_scan(Clauses& c) {
  for (const auto& row : invariant_bivector_scan(make_algebra("sl2"), 3))
    c.expect(row.conjecture_form, "sl2 degree " + std::to_string(row.degree) + " not of the form b s");
  const auto L = make_algebra("sl3");
  const auto scan = invariant_bivector_scan(L, 2);
  c.expect(scan.size() == 3 && scan[2].dimension == 1, "sl3 degree-2 space is not one-dimensional");
  if (scan.size() == 3) {
    c.expect(!scan[2].conjecture_form && scan[2].exceptional.size() == 1, "sl3 exception not flagged");
    if (scan[2].exceptional.size() == 1)
      c.expect(field_ratio(scan[2].exceptional[0], quadratic_bracket(L, 1)).has_value(),
               "sl3 exception is not the quadratic bracket f");
  }
}

void group_suite(Clauses& c) {
  for (const char* spec : {"sl2", "sl3"}) {
    const auto L = make_algebra(spec);
    const auto ct = canonical_tensors(L);
    const std::string n = std::to_string(L->matrix_size());
    c.expect(jacobiator_on_generators(build_sklyanin_bracket(ct.r_sd)).all_zero(), "r^L - r^R not Poisson, n = " + n);
    const auto two = jacobiator_on_generators(build_two_sided_bracket(ct.r_sd, ct.r_sd));
    c.expect(!two.all_zero(), "r^L + r^R with r1 = r2 = r_sd has zero jacobiator on all " +
                                  std::to_string(two.triples_checked) + " entry triples, n = " + n);
    const auto jac = jacobiator_on_generators(build_ad_bracket(L));
    const auto phi = ad_action_trivector(ct.phi);
    bool identity = true;
    for (const auto& [key, v] : phi) {
      const auto it = jac.nonzero.find(key);
      const Polynomial got = it == jac.nonzero.end() ? Polynomial() : it->second;
      identity = identity && got == v * kAdBracketJacobiatorRatio;
    }
    for (const auto& [key, v] : jac.nonzero) identity = identity && phi.count(key) > 0;
    c.expect(identity, "Ad bracket fails the phi-bracket identity, n = " + n);
  }
}

void good_orbits(Clauses& c) {
  struct Case {
    Series s;
    int rank;
    long long expected;
  };
  std::vector<Case> cases;
  for (int n = 1; n <= 6; ++n) cases.push_back({Series::A, n, (1LL << n) - 1});
  for (int n = 2; n <= 6; ++n) cases.push_back({Series::B, n, 1});
  for (int n = 2; n <= 6; ++n) cases.push_back({Series::C, n, 1});
  cases.push_back({Series::D, 4, 6});
  cases.push_back({Series::E, 6, 3});
  cases.push_back({Series::E, 7, 1});
  cases.push_back({Series::E, 8, 0});
  cases.push_back({Series::F, 4, 0});
  cases.push_back({Series::G, 2, 0});
  for (const auto& k : cases) {
    const auto rs = build_root_system(k.s, k.rank);
    const auto got = static_cast<long long>(enumerate_good_orbits(rs).size());
    c.expect(got == k.expected, rs.name() + ": " + std::to_string(got) + " good orbits");
  }
}

void quantization(Clauses& c) {
  for (const char* spec : {"sl2", "sl3"})
    c.expect(pentagon_order2_check(make_algebra(spec)).passed(), std::string("pentagon fails on ") + spec);
  const auto r2 = rmatrix_first_order_checks(make_algebra("sl2"));
  c.expect(r2.split_left && r2.split_right, "R-matrix (i) fails on sl2");
  c.expect(r2.coproduct_conjugation, "R-matrix (ii) fails on sl2");
  c.expect(r2.counit, "R-matrix (iii) fails on sl2");

  const auto L = make_algebra("sl3");
  const auto ct = canonical_tensors(L);
  const auto cal = calibrate_scale(L);
  const auto f = cal.lambda ? quadratic_bracket(L, *cal.lambda) : quadratic_bracket(L, 1);
  const auto rM = rmatrix_bracket(ct.r_sd);
  const auto good = FirstOrderProduct::from_bivector("(1/2)(f - r_M)", f - rM, Rational(1, 2));
  const auto bad = FirstOrderProduct::from_bivector("(1/2)(f + r_M)", f + rM, Rational(1, 2));
  c.expect(first_order_invariance_check(good, ct.r_sd, 3).passed, "invariance fails for (1/2)(f - r_M) at d = 3");
  const auto fault = first_order_invariance_check(bad, ct.r_sd, 3);
  c.expect(!fault.passed && fault.failure.has_value(), "fault-injected product passes invariance");

  const std::vector<std::pair<std::string, PolyVectorField>> fields = {
      {"s", kirillov_bracket(L)}, {"r_M", rM}, {"f", f}, {"f - r_M", f - rM}};
  for (const auto& [name, field] : fields)
    c.expect(hochschild_cocycle_check(FirstOrderProduct::from_bivector(name, field, Rational(1, 2)), L, 3).passed,
             "Hochschild fails for " + name);
  const auto A1 = make_algebra("sl2");
  c.expect(hochschild_cocycle_check(FirstOrderProduct::from_bivector("s", kirillov_bracket(A1), 1), A1, 3).passed,
           "Hochschild fails for s on sl2");
}

std::string counts_text(const std::vector<long long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "(") << v[i];
  os << ")";
  return os.str();
}

void pbw(Clauses& c) {
  const auto p2 = pbw_flatness(*make_algebra("sl2"), 4, 0);
  c.expect(p2.flat(), "sl2 counts " + counts_text(p2.counts));
  c.expect(p2.confluent, "sl2 rewriting not confluent");
  const auto p3 = pbw_flatness(*make_algebra("sl3"), 3, 0);
  c.expect(p3.flat(), "sl3 counts " + counts_text(p3.counts));
  c.expect(p3.confluent, "sl3 rewriting not confluent");
  const auto L = make_algebra("sl2");
  StructureConstants bad = L->structure();
  bad.set_bracket(0, 1, {{1, Rational(3)}});
  const auto fp = pbw_flatness(bad, 3, 0);
  c.expect(!fp.passed(), "Jacobi fault not detected");
}

void determinism(Clauses& c) {
  for (const auto& d : list_suites()) {
    SuiteConfig cfg;
    cfg.suite = d.name;
    cfg.algebra = d.default_algebra;
    cfg.seed = 12345;
    cfg.format = OutputFormat::json;
    const auto a = to_json(run_suite(cfg));
    const auto b = to_json(run_suite(cfg));
    c.expect(a == b, d.name + ": JSON differs between runs");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "CYBE: phi alternating, invariant, cyb(r_sd) = const * phi", 5, cybe},
      {2, "cobracket: co-Jacobi for sl2, sl3; non-invariant [[r,r]] detected", 5, cobracket_suite},
      {3, "phi-bracket on sl3: dim 1, [[s,f]] = 0, [[f,f]] = -phibar, pencil", 60, phi_bracket},
      {4, "negative spaces: sl2, so5 have no quadratic invariant bracket", 120, negative_spaces},
      {5, "sl2 degeneracy: phi_M = 0 and r_M Poisson", 5, sl2_degeneracy},
      {6, "conjecture scan: sl2 d <= 3 of form b s; sl3 quadratic exception", 120, conjecture_scan},
      {7, "group brackets: r^L - r^R Poisson; r^L + r^R witness; Ad identity", 120, group_suite},
      {8, "good-orbit counts from root data", 5, good_orbits},
      {9, "quantization order: pentagon, R-matrix, invariance, Hochschild", 300, quantization},
      {10, "PBW flatness, confluence, Jacobi fault", 60, pbw},
      {11, "determinism: byte-identical JSON reports", 0, determinism},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Clauses clauses;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(clauses);
    } catch (const std::exception& ex) {
      clauses.expect(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = cr.limit_seconds <= 0 || secs < cr.limit_seconds;
    if (!in_time) clauses.expect(false, "time limit exceeded");
    const bool pass = clauses.ok();
    failures += pass ? 0 : 1;
    char timing[64];
    if (cr.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%7.2f s / %3.0f s", secs, cr.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%7.2f s / none ", secs);
    std::printf("criterion %2d %s %s  %s", cr.number, pass ? "PASS" : "FAIL", timing, cr.title.c_str());
    if (!pass) std::printf("  [%s]", clauses.failed().c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

#include "qpv/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qpv/errors.hpp"
#include "qpv/grouppois.hpp"
#include "qpv/liealg.hpp"
#include "qpv/multivec.hpp"
#include "qpv/orbits.hpp"
#include "qpv/pbw.hpp"
#include "qpv/polyfield.hpp"
#include "qpv/quantize.hpp"
#include "qpv/rootsys.hpp"
#include "qpv/utensor.hpp"

namespace qpv {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "fail";
}

bool Report::aggregate_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status != CheckStatus::fail; });
}

const std::vector<SuiteDescriptor>& list_suites() {
  static const std::vector<SuiteDescriptor> suites{
      {"ad-bracket", "Ad-invariant bracket on GL(n): antisymmetry, invariance, phi-bracket identity",
       "Ad-invariant group bracket built from the invariant element of Sym^2 g", "A1"},
      {"cobracket", "Cobracket delta(x) = [r, Delta x] and the co-Jacobi identity, with a fault case",
       "Lie bialgebra structure on g defined by the r-matrix", "A2"},
      {"conjecture-scan", "Invariant bivector fields on g* against invariant multiples of the Kirillov bracket",
       "conjecture on invariant Poisson brackets of the form b[.,.]", "A1"},
      {"cybe", "phi = [[r_sd, r_sd]]: alternation, invariance, CYBE trinomial ratio",
       "classical Yang-Baxter equation with invariant right-hand side", "A2"},
      {"good-orbits", "Levi subsets with good semisimple orbits and base-point tangent data",
       "classification of good orbits by coefficient-one nodes of the maximal root", "A2"},
      {"group-sklyanin", "Two-sided brackets r1^L + r2^R and the Sklyanin-Drinfeld bracket on GL(n)",
       "two-sided and Sklyanin-Drinfeld Poisson brackets on the group", "A1"},
      {"pbw", "Normal forms of T(g)[t]/J_t: graded counts, ordering and t-independence, confluence",
       "PBW family (S g)_t is a free module", "A1"},
      {"pentagon", "Order-h^2 pentagon identity for Phi = 1 + h^2 phi through representations",
       "pentagon identity for the associator", "A1"},
      {"phi-bracket", "Quadratic invariant bracket f: [[s, f]] = 0, [[f, f]] = -phibar, Poisson pencil",
       "phi-brackets on g* and the two-parameter Poisson pencil", "A2"},
      {"rmatrix-first-order", "Order-h relations of R = 1 + h(t/2 - r): splitting, coproduct conjugation, counit",
       "quasitriangular structure and R-matrix relations", "A1"},
      {"star-first-order", "First-order star product (1/2)(f - r_M): twisted invariance and Hochschild cocycle",
       "invariance of the star product under the twisted coproduct", "A2"},
  };
  return suites;
}

namespace {

using Outcome = std::pair<CheckStatus, std::string>;

Outcome verdict(bool ok, std::string note = {}) { return {ok ? CheckStatus::pass : CheckStatus::fail, std::move(note)}; }
Outcome skipped(std::string why) { return {CheckStatus::skip, std::move(why)}; }

std::string q(const Rational& r) { return r.get_str(); }

class Runner {
 public:
  Runner(Report& report, bool timing) : report_(report), timing_(timing) {}

  void check(const std::string& id, const std::string& paper_ref, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = body();
    CheckRecord rec{id, paper_ref, outcome.first, std::move(outcome.second), 0};
    if (timing_)
      rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(rec));
  }

 private:
  Report& report_;
  bool timing_;
};

std::vector<std::string> labels(const LieAlgebra& L) {
  std::vector<std::string> names;
  for (int i = 0; i < L.dim(); ++i) names.push_back(L.label(i));
  return names;
}

std::string mono_text(const Monomial& m, const LieAlgebra& L) { return Polynomial::term(m, 1).to_string(labels(L)); }

bool is_type_a_higher(const LieAlgebra& L) { return L.root_system().series == Series::A && L.rank() >= 2; }

// r = X_{a1} ^ X_{a2}: [[r, r]] is not invariant once a1 + a2 is a root.
std::optional<MultiTensor> non_invariant_rmatrix(const LieAlgebraPtr& L) {
  if (L->rank() < 2) return std::nullopt;
  MultiTensor r(L, 2, Symmetry::alternating);
  r.add({L->simple_e(0), L->simple_e(1)}, 1);
  return r;
}

// ---------------------------------------------------------------- cybe

void suite_cybe(const LieAlgebraPtr& L, Runner& run) {
  const CanonicalTensors ct = canonical_tensors(L);
  run.check("phi-alternating", "classical Yang-Baxter equation", [&] {
    return verdict(as_alternating(ct.phi.to_plain()).has_value() && !ct.phi.is_zero());
  });
  run.check("phi-invariant", "invariant element phi of wedge^3 g", [&] { return verdict(is_invariant(ct.phi)); });
  run.check("t-invariant", "invariant element t of Sym^2 g", [&] { return verdict(is_invariant(ct.t)); });
  run.check("cyb-ratio", "classical Yang-Baxter equation", [&] {
    const auto ratio = tensor_ratio(cyb_trinomial(ct.r_sd), ct.phi);
    if (!ratio) return verdict(false, "cyb(r_sd) is not proportional to phi");
    return verdict(*ratio == kCybSchoutenRatio, "ratio " + q(*ratio) + ", frozen " + q(kCybSchoutenRatio));
  });
  run.check("phi-structure-trivector", "invariant element phi of wedge^3 g", [&] {
    const auto ratio = tensor_ratio(ct.phi, structure_trivector(L));
    if (!ratio) return verdict(false, "phi is not proportional to the structure trivector");
    return verdict(*ratio == kPhiStructureRatio, "ratio " + q(*ratio));
  });
  run.check("rsd-weight-zero", "standard r-matrix of weight zero", [&] {
    for (const auto& [key, c] : ct.r_sd.terms()) {
      Root w = L->weight(key[0]);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += L->weight(key[1])[i];
      if (std::any_of(w.begin(), w.end(), [](int v) { return v != 0; })) return verdict(false, "term of nonzero weight");
    }
    return verdict(true);
  });
  run.check("antipode-flip", "antipode constraint on the associator", [&] {
    return verdict(antipode_flip(ct.phi) == -ct.phi && antipode_flip(ct.t) == ct.t);
  });
}

// ----------------------------------------------------------- cobracket

void suite_cobracket(const LieAlgebraPtr& L, Runner& run) {
  const CanonicalTensors ct = canonical_tensors(L);
  run.check("co-jacobi-rsd", "Lie bialgebra structure on g", [&] {
    const auto rep = co_jacobi_check(ct.r_sd);
    return verdict(rep.holds && rep.rr_invariant);
  });
  run.check("cartan-cobracket-zero", "Lie bialgebra structure on g", [&] {
    for (int i = 0; i < L->rank(); ++i)
      if (!cobracket(ct.r_sd, L->unit(i)).is_zero()) return verdict(false, "delta(" + L->label(i) + ") != 0");
    return verdict(true);
  });
  run.check("cobracket-alternating", "Lie bialgebra structure on g", [&] {
    for (int i = 0; i < L->dim(); ++i)
      if (cobracket(ct.r_sd, L->unit(i)).symmetry() != Symmetry::alternating) return verdict(false, L->label(i));
    return verdict(true);
  });
  run.check("co-jacobi-fault-detected", "Lie bialgebra structure on g", [&] {
    const auto r = non_invariant_rmatrix(L);
    if (!r) return skipped("wedge^3 of a rank-one algebra is one-dimensional; every [[r, r]] is invariant");
    const auto rep = co_jacobi_check(*r);
    if (rep.holds || rep.rr_invariant) return verdict(false, "fault r = X_a1 ^ X_a2 not detected");
    std::string w = "fails at " + L->label(*rep.failing_basis);
    if (rep.defect_ratio) w += ", defect/ad_x[[r,r]] = " + q(*rep.defect_ratio);
    return verdict(rep.defect_ratio && *rep.defect_ratio == kCoJacobiDefectRatio, w);
  });
}

// --------------------------------------------------------- phi-bracket

void suite_phi_bracket(const LieAlgebraPtr& L, Runner& run) {
  const CanonicalTensors ct = canonical_tensors(L);
  const PolyVectorField rm = rmatrix_bracket(ct.r_sd);
  const PolyVectorField phim = action_field(ct.phi);
  const bool type_a = is_type_a_higher(*L);

  run.check("equivariant-2-2-dimension", "unique up to a factor invariant map wedge^2 g -> S^2 g", [&] {
    const int dim = solve_equivariant(L, 2, 2).dimension();
    return verdict(dim == (type_a ? 1 : 0), "dimension " + std::to_string(dim));
  });
  run.check("rr-is-phi-m", "Poisson bracket p = f - r_M", [&] {
    return verdict(schouten_nijenhuis(rm, rm) == phim * Rational(kActionSchoutenSign));
  });
  run.check("phibar-sign", "phibar built from phi", [&] {
    return verdict(phibar(L) == phim * Rational(kPhibarSign), "frozen sign " + std::to_string(kPhibarSign));
  });
  run.check("phi-m-vanishing", "phi_M on g*", [&] {
    // Rank one: every coadjoint orbit has dimension <= 2.
    if (L->rank() == 1) return verdict(phim.is_zero() && schouten_nijenhuis(rm, rm).is_zero(), "r_M is Poisson");
    return verdict(!phim.is_zero(), "phi_M nonzero; r_M is not Poisson");
  });
  if (!type_a) {
    run.check("pencil", "two-parameter Poisson pencil", [] { return skipped("no quadratic invariant bracket"); });
    return;
  }
  const PhiBracketPencilReport pen = phi_bracket_pencil(L);
  const std::string lam = pen.calibration.lambda ? q(*pen.calibration.lambda) : "sqrt(" + q(pen.calibration.lambda_squared) + ")";
  run.check("calibration", "invariant quadratic bracket +-f_0", [&] {
    return verdict(true, "[[f0,f0]] = " + q(pen.calibration.mu) + " phibar, lambda = +-" + lam);
  });
  run.check("s-f-vanishes", "[[s, f]] = 0", [&] { return verdict(pen.s_f_vanishes); });
  run.check("ff-minus-phibar", "[[f, f]] = -phibar", [&] { return verdict(pen.ff_is_minus_phibar); });
  run.check("f-r-vanishes", "Poisson bracket p = f - r_M", [&] { return verdict(pen.f_r_vanishes); });
  run.check("p-poisson", "Poisson bracket p = f - r_M", [&] { return verdict(pen.p_poisson); });
  run.check("pencil", "two-parameter Poisson pencil", [&] {
    return verdict(pen.pencil_poisson, "[[s,s]], [[p,p]], [[s,p]] all vanish");
  });
  run.check("trace-form-agreement", "gl(n) trace bracket restricted to sl(n)*", [&] {
    const auto c = field_ratio(trace_quadratic_bracket(L), quadratic_bracket(L, 1));
    return verdict(c && !is_zero(*c), c ? "trace bracket = " + q(*c) + " f0" : "not proportional");
  });
}

// ------------------------------------------------------ conjecture-scan

void suite_conjecture_scan(const LieAlgebraPtr& L, int degree, Runner& run) {
  const auto scan = invariant_bivector_scan(L, degree);
  const bool type_a = is_type_a_higher(*L);
  for (const auto& row : scan) {
    const std::string id = "degree-" + std::to_string(row.degree);
    std::ostringstream note;
    note << "dimension " << row.dimension;
    if (row.degree > 0)
      note << ", invariant polynomials of degree " << row.degree - 1 << ": " << row.invariant_polynomial_dimension;
    note << ", exceptional " << row.exceptional.size();
    run.check(id + "-poisson-conjecture-form", "conjecture on invariant Poisson brackets", [&] {
      bool ok = true;
      for (std::size_t i = 0; i < row.exceptional.size(); ++i)
        if (row.exceptional_poisson[i]) ok = false;
      return verdict(ok, note.str());
    });
    if (row.degree == 2) {
      run.check("quadratic-exception", "sl(n) quadratic bracket f", [&] {
        if (!type_a) return verdict(row.exceptional.empty() && row.dimension == 0, note.str());
        if (row.exceptional.size() != 1) return verdict(false, note.str());
        const auto c = field_ratio(row.exceptional.front(), quadratic_bracket(L, 1));
        return verdict(c.has_value() && !is_zero(*c), note.str() + "; exceptional element is f0, flagged as the sl(n) case");
      });
    }
  }
}

// ------------------------------------------------------ group-sklyanin

std::string jacobi_witness(const JacobiatorTable& t, const GroupRing& ring) {
  if (t.all_zero()) return "jacobiator zero on " + std::to_string(t.triples_checked) + " triples";
  const auto& [abc, p] = *t.nonzero.begin();
  const auto names = ring.names();
  return std::to_string(t.nonzero.size()) + " nonzero triples; first (" + names[abc[0]] + "," + names[abc[1]] + "," +
         names[abc[2]] + ") -> " + p.to_string(names);
}

void suite_group_sklyanin(const LieAlgebraPtr& L, int cap, Runner& run) {
  const CanonicalTensors ct = canonical_tensors(L);
  const GroupRing ring(L->matrix_size());
  const GroupBivector sd = build_sklyanin_bracket(ct.r_sd);
  run.check("left-right-commute", "left- and right-invariant vector fields", [&] {
    return verdict(left_right_fields_commute(*L));
  });
  run.check("sd-antisymmetric", "Sklyanin-Drinfeld Poisson bracket", [&] { return verdict(sd.is_antisymmetric()); });
  run.check("sd-jacobiator-zero", "Sklyanin-Drinfeld Poisson bracket", [&] {
    const auto t = jacobiator_on_generators(sd, cap);
    return verdict(t.all_zero(), jacobi_witness(t, ring));
  });
  run.check("sd-determinant-ideal", "Sklyanin-Drinfeld Poisson bracket", [&] {
    return verdict(preserves_determinant_ideal(sd));
  });
  run.check("sd-equals-two-sided", "two-sided bracket r1^L + r2^R", [&] {
    const GroupBivector ts = build_two_sided_bracket(ct.r_sd, -ct.r_sd);
    for (int a = 0; a < ring.variables(); ++a)
      for (int b = 0; b < ring.variables(); ++b)
        if (!(ts.at(a, b) == sd.at(a, b))) return verdict(false);
    return verdict(true);
  });
  run.check("two-sided-equal-squares-poisson", "two-sided bracket r1^L + r2^R", [&] {
    const GroupBivector b = build_two_sided_bracket(ct.r_sd, ct.r_sd);
    const auto t = jacobiator_on_generators(b, cap);
    return verdict(t.all_zero() && b.warnings.empty(), "r1 = r2 = r_sd: " + jacobi_witness(t, ring));
  });
  run.check("two-sided-unequal-squares-detected", "two-sided bracket r1^L + r2^R", [&] {
    const GroupBivector b = build_two_sided_bracket(ct.r_sd, ct.r_sd * Rational(0));
    const auto t = jacobiator_on_generators(b, cap);
    return verdict(!t.all_zero() && !b.warnings.empty(), "r1 = r_sd, r2 = 0: " + jacobi_witness(t, ring));
  });
}

// ---------------------------------------------------------- ad-bracket

void suite_ad_bracket(const LieAlgebraPtr& L, int cap, Runner& run) {
  const GroupBivector f = build_ad_bracket(L);
  const GroupRing ring(L->matrix_size());
  run.check("antisymmetric", "Ad-invariant group bracket", [&] { return verdict(f.is_antisymmetric()); });
  run.check("ad-invariant", "Ad-invariant group bracket", [&] { return verdict(is_ad_invariant(f, *L)); });
  run.check("phi-bracket-identity", "phi-bracket identity [[f, f]] = -phi_M", [&] {
    const auto jac = jacobiator_on_generators(f, cap);
    const auto phi = ad_action_trivector(canonical_tensors(L).phi);
    for (const auto& [abc, p] : jac.nonzero) {
      auto it = phi.find(abc);
      if (it == phi.end() || !(p == it->second * kAdBracketJacobiatorRatio)) return verdict(false, jacobi_witness(jac, ring));
    }
    for (const auto& [abc, p] : phi)
      if (!jac.nonzero.count(abc)) return verdict(false, "phi nonzero where the jacobiator vanishes");
    return verdict(true, std::to_string(jac.nonzero.size()) + " nonzero triples, jacobiator = " +
                             q(kAdBracketJacobiatorRatio) + " phi through x^L - x^R");
  });
}

// --------------------------------------------------------- good-orbits

void suite_good_orbits(const RootSystem& rs, Runner& run, Report& report) {
  const auto good = enumerate_good_orbits(rs);
  report.table.push_back({"type", "S", "T", "rank", "good", "hermitian_symmetric"});
  auto set_text = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  for (const auto& d : good)
    report.table.push_back({rs.name(), set_text(d.S), set_text(d.T), std::to_string(d.orbit_rank), d.good ? "yes" : "no",
                            d.hermitian_symmetric ? "yes" : "no"});
  run.check("good-orbit-count", "classification of good orbits", [&] {
    const long long expected = good_orbit_count_formula(rs);
    return verdict(static_cast<long long>(good.size()) == expected,
                   std::to_string(good.size()) + " good classes, coefficient-one count formula " + std::to_string(expected));
  });
  run.check("coefficient-one-nodes", "classification of good orbits", [&] {
    return verdict(true, set_text(coefficient_one_nodes(rs)));
  });

  const bool classical = rs.series == Series::A || rs.series == Series::B || rs.series == Series::C || rs.series == Series::D;
  if (!classical) return;
  const LieAlgebraPtr L = realize_classical(rs);
  if (L->dim() > 28) {
    run.check("tangent-hermitian-vanishing", "phi_M = 0 on symmetric orbits", [] {
      return skipped("tangent checks limited to algebras of dimension <= 28");
    });
    return;
  }
  const MultiTensor phi = canonical_tensors(L).phi;
  run.check("tangent-hermitian-vanishing", "phi_M = 0 on symmetric orbits", [&] {
    int count = 0;
    for (const auto& d : good) {
      if (!d.hermitian_symmetric) continue;
      ++count;
      if (!is_symmetric_pair(d, *L)) return verdict(false, d.label() + " is not a symmetric pair");
      if (!tangent_projection(phi, d).is_zero()) return verdict(false, d.label() + ": projection of phi nonzero");
    }
    return verdict(true, std::to_string(count) + " hermitian symmetric classes, projection of phi zero on each");
  });
  run.check("tangent-invariant-bivectors", "invariant bivectors at the base point", [&] {
    std::string note;
    for (const auto& d : good)
      note += (note.empty() ? "" : "; ") + set_text(d.S) + ": dim " + std::to_string(invariant_bivector_dim_at_base(d, L)) +
              " vs rank " + std::to_string(d.orbit_rank);
    return verdict(true, note);
  });
}

// ------------------------------------------------------------ pentagon

void suite_pentagon(const LieAlgebraPtr& L, Runner& run) {
  const MultiTensor phi = canonical_tensors(L).phi;
  const UTensor uphi = UTensor::from_multitensor(phi);
  const Representation def = defining_representation(*L);
  auto describe = [&](const PentagonReport& p) {
    std::string s = p.representation + " representation" + (p.faithful ? "" : " (not faithful in degree one)");
    if (p.defect) s += ", defect entry (" + std::to_string(p.defect->row) + "," + std::to_string(p.defect->col) + ") = " + q(p.defect->value);
    return s;
  };
  run.check("pentagon-defining", "pentagon identity for the associator", [&] {
    const auto p = pentagon_order2_check(uphi, def);
    return verdict(p.passed() && p.faithful && p.representation_zero, describe(p));
  });
  run.check("pentagon-adjoint", "pentagon identity for the associator", [&] {
    if (L->dim() > 3) return skipped("adjoint cross-check limited to dim 3");
    const auto p = pentagon_order2_check(uphi, adjoint_representation(*L));
    return verdict(p.representation_zero, describe(p));
  });
  run.check("pentagon-factor-insensitive", "associator Phi = 1 + h^2 phi", [&] {
    const auto p = pentagon_order2_check(uphi * Rational(7, 3), def);
    return verdict(p.representation_zero, "identity is linear in phi");
  });
  run.check("pentagon-word-leg-fault-detected", "pentagon identity for the associator", [&] {
    const int e = L->simple_e(0), f = L->simple_f(0), h = 0;
    UTensor fault = uphi;
    fault.add({{e, e}, {h}, {f}}, 1);
    const auto p = pentagon_order2_check(fault, def);
    return verdict(!p.representation_zero, "phi + ee (x) h (x) f: " + describe(p));
  });
  run.check("counit-phi", "counit constraint", [&] {
    return verdict(counit_on_leg(uphi, 0).is_zero() && counit_on_leg(uphi, 1).is_zero() && counit_on_leg(uphi, 2).is_zero());
  });
  run.check("antipode-phi", "antipode constraint on the associator", [&] { return verdict(antipode_flip(phi) == -phi); });
}

// ------------------------------------------------- rmatrix-first-order

void suite_rmatrix(const LieAlgebraPtr& L, Runner& run) {
  const RMatrixReport r = rmatrix_first_order_checks(L);
  const std::string faithful = r.faithful ? "" : "defining representation not faithful in degree one";
  run.check("faithful", "R-matrix relations", [&] { return verdict(r.faithful, faithful); });
  run.check("split-left", "R-matrix relations", [&] { return verdict(r.split_left); });
  run.check("split-right", "R-matrix relations", [&] { return verdict(r.split_right); });
  run.check("coproduct-conjugation", "Delta'(x) = R Delta(x) R^-1", [&] { return verdict(r.coproduct_conjugation); });
  run.check("coproduct-conjugation-without-t", "Delta'(x) = R Delta(x) R^-1", [&] {
    return verdict(r.coproduct_conjugation_without_t && r.t_commutes_with_coproduct, "holds since [t, Delta x] = 0");
  });
  run.check("counit", "counit constraint on the twist", [&] { return verdict(r.counit); });
  run.check("split-fault-detected", "R-matrix relations", [&] {
    UTensor rho(L, 2);
    rho.add({{L->simple_e(0), L->simple_e(0)}, {0}}, 1);
    const SplitReport s = split_identity_check(rho, defining_representation(*L));
    return verdict(!s.left && s.right, "rho = ee (x) h: left splitting fails, right holds");
  });
}

// ----------------------------------------------------------------- pbw

void suite_pbw(const LieAlgebraPtr& L, int degree, std::uint64_t seed, Runner& run) {
  const PbwReport p = pbw_flatness(*L, degree, seed);
  auto counts = [](const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
  };
  run.check("counts", "PBW family (S g)_t", [&] {
    return verdict(p.counts == p.expected, counts(p.counts) + " expected " + counts(p.expected));
  });
  run.check("counts-t0", "PBW family (S g)_t", [&] { return verdict(p.counts_t0 == p.expected, counts(p.counts_t0)); });
  run.check("counts-reordered", "PBW family (S g)_t", [&] {
    return verdict(p.counts_reordered == p.expected, counts(p.counts_reordered));
  });
  run.check("confluence", "PBW family (S g)_t", [&] {
    return verdict(p.confluent, std::to_string(p.words_sampled) + " random words, leftmost vs rightmost rewriting");
  });
  run.check("jacobi-fault-detected", "PBW family (S g)_t", [&] {
    StructureConstants bad = L->structure();
    const int e = L->simple_e(0);
    bad.set_bracket(0, e, {{e, Rational(3)}});
    if (!bad.jacobi_violation()) return verdict(false, "fault did not break Jacobi");
    // The overlap ambiguity that exposes the fault needs words of length 3.
    PbwReport fp;
    try {
      fp = pbw_flatness(bad, 3, seed);
    } catch (const ResourceLimitError&) {
      return skipped("words of length 3 exceed the PBW word cap for " + L->name());
    }
    return verdict(!fp.passed(), "[h1, e1] = 3 e1: counts " + counts(fp.counts) + (fp.confluent ? "" : ", non-confluent"));
  });
}

// ---------------------------------------------------- star-first-order

void suite_star(const LieAlgebraPtr& L, int degree, Runner& run) {
  const CanonicalTensors ct = canonical_tensors(L);
  const bool type_a = is_type_a_higher(*L);
  const PolyVectorField rm = rmatrix_bracket(ct.r_sd);
  const PolyVectorField s = kirillov_bracket(L);
  PolyVectorField f(L, 2);
  Rational lambda = 0;
  std::string fname = "0";
  if (type_a) {
    const auto cal = calibrate_scale(L);
    if (!cal.lambda) throw NoSolutionError("calibrated scale is irrational");
    lambda = *cal.lambda;
    f = quadratic_bracket(L, lambda);
    fname = "f";
  }
  const auto names = labels(*L);
  const FirstOrderProduct m1 = FirstOrderProduct::from_bivector("(1/2)(" + fname + " - r_M)", f - rm, Rational(1, 2));
  const FirstOrderProduct m1_fault = FirstOrderProduct::from_bivector("(1/2)(" + fname + " + r_M)", f + rm, Rational(1, 2));
  const FirstOrderProduct half_s = FirstOrderProduct::from_bivector("(1/2)s", s, Rational(1, 2));

  auto inv_witness = [&](const InvarianceReport& r) {
    if (!r.failure) return std::to_string(r.cases) + " cases";
    const auto& w = *r.failure;
    return "x = " + L->label(w.basis) + ", a = " + mono_text(w.a, *L) + ", b = " + mono_text(w.b, *L) +
           ", lhs = " + w.lhs.to_string(names) + ", rhs = " + w.rhs.to_string(names);
  };
  auto coc_witness = [&](const CocycleReport& r) {
    if (!r.failure) return std::to_string(r.cases) + " triples";
    const auto& w = *r.failure;
    return "a = " + mono_text(w.a, *L) + ", b = " + mono_text(w.b, *L) + ", c = " + mono_text(w.c, *L) +
           ", value = " + w.value.to_string(names);
  };
  const MultiTensor zero_r(L, 2, Symmetry::alternating);

  run.check("invariance", "invariance under the twisted coproduct", [&] {
    const auto r = first_order_invariance_check(m1, ct.r_sd, degree);
    return verdict(r.passed, m1.name + ": " + inv_witness(r));
  });
  run.check("invariance-fault-detected", "invariance under the twisted coproduct", [&] {
    // The flipped r_M term first differs on pairs of total degree 2.
    const auto r = first_order_invariance_check(m1_fault, ct.r_sd, std::max(degree, 2));
    return verdict(!r.passed && r.failure.has_value(), m1_fault.name + ": " + inv_witness(r));
  });
  run.check("invariance-untwisted", "invariance under the twisted coproduct", [&] {
    const auto r = first_order_invariance_check(half_s, zero_r, degree);
    return verdict(r.passed, "(1/2)s with r = 0: " + inv_witness(r));
  });
  run.check("hochschild", "associativity at order h", [&] {
    const auto a = hochschild_cocycle_check(m1, L, degree);
    const auto b = hochschild_cocycle_check(half_s, L, degree);
    const auto c = hochschild_cocycle_check(FirstOrderProduct::zero(), L, degree);
    return verdict(a.passed && b.passed && c.passed, coc_witness(a));
  });
  run.check("hochschild-coboundary-term", "associativity at order h", [&] {
    const auto r = hochschild_cocycle_check(with_coboundary_term(m1), L, degree);
    return verdict(r.passed, "(deg a)(deg b) ab is a coboundary: " + coc_witness(r));
  });
  run.check("hochschild-fault-detected", "associativity at order h", [&] {
    // The fault's defect is a multiple of abc with a, b, c nonconstant.
    const auto r = hochschild_cocycle_check(with_degree_fault(m1), L, std::max(degree, 3));
    return verdict(!r.passed, "(deg a)^2 (deg b) ab: " + coc_witness(r));
  });
  run.check("twist-correspondence", "m_h = mu_h F_h^-1", [&] {
    const auto r = twist_correspondence_check(f, ct.r_sd, degree);
    return verdict(r.passed, std::to_string(r.cases) + " pairs");
  });
}

int default_degree(const std::string& suite, const LieAlgebra* L) {
  const int dim = L ? L->dim() : 0;
  if (suite == "pbw") return dim <= 3 ? 4 : (dim <= 8 ? 3 : 2);
  if (suite == "conjecture-scan") return dim <= 3 ? 3 : 2;
  if (suite == "star-first-order") return dim <= 10 ? kDefaultInvarianceDegree : 2;
  return kDefaultInvarianceDegree;
}

}  // namespace

Report run_suite(const SuiteConfig& config) {
  const auto& suites = list_suites();
  auto it = std::find_if(suites.begin(), suites.end(), [&](const SuiteDescriptor& d) { return d.name == config.suite; });
  if (it == suites.end()) throw UnknownSuiteError("unknown suite '" + config.suite + "'");

  const TypeSpec type = TypeSpec::parse(config.algebra.empty() ? it->default_algebra : config.algebra);
  const RootSystem rs = build_root_system(type);

  Report report;
  report.suite = config.suite;
  report.algebra = type.name();
  report.config = config;
  Runner run(report, config.timing);

  if (config.suite == "good-orbits") {
    suite_good_orbits(rs, run, report);
  } else {
    const LieAlgebraPtr L = realize_classical(rs);
    const int degree = config.degree.value_or(default_degree(config.suite, L.get()));
    report.config.degree = degree;
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    if (config.suite == "cybe") suite_cybe(L, run);
    else if (config.suite == "cobracket") suite_cobracket(L, run);
    else if (config.suite == "phi-bracket") suite_phi_bracket(L, run);
    else if (config.suite == "conjecture-scan") suite_conjecture_scan(L, degree, run);
    else if (config.suite == "group-sklyanin") suite_group_sklyanin(L, config.group_degree_cap, run);
    else if (config.suite == "ad-bracket") suite_ad_bracket(L, config.group_degree_cap, run);
    else if (config.suite == "pentagon") suite_pentagon(L, run);
    else if (config.suite == "rmatrix-first-order") suite_rmatrix(L, run);
    else if (config.suite == "pbw") suite_pbw(L, degree, config.seed, run);
    else if (config.suite == "star-first-order") suite_star(L, degree, run);
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return report;
}

std::string to_json(const Report& report) {
  using json = nlohmann::ordered_json;
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = report.suite;
  j["algebra"] = report.algebra;
  json cfg;
  cfg["degree"] = report.config.degree ? json(*report.config.degree) : json(nullptr);
  cfg["group_degree_cap"] = report.config.group_degree_cap;
  cfg["seed"] = report.config.seed;
  cfg["timing"] = report.config.timing;
  j["config"] = cfg;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json cj;
    cj["id"] = c.id;
    cj["paper_ref"] = c.paper_ref;
    cj["status"] = to_string(c.status);
    if (!c.witness.empty()) cj["witness"] = c.witness;
    cj["millis"] = c.millis;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  if (!report.table.empty()) j["table"] = report.table;
  j["aggregate"] = report.aggregate_pass() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  os << report.suite << " on " << report.algebra << "\n";
  if (!report.table.empty()) {
    std::vector<std::size_t> width(report.table.front().size(), 0);
    for (const auto& row : report.table)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    for (const auto& row : report.table) {
      os << " ";
      for (std::size_t i = 0; i < row.size(); ++i) os << " " << row[i] << std::string(width[i] - row[i].size(), ' ');
      os << "\n";
    }
  }
  for (const auto& c : report.checks) {
    os << "  [" << to_string(c.status) << "] " << c.id;
    if (!c.witness.empty()) os << ": " << c.witness;
    if (report.config.timing) os << " (" << c.millis << " ms)";
    os << "\n";
  }
  os << (report.aggregate_pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string suites_to_json() {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& d : list_suites())
    j.push_back({{"name", d.name}, {"summary", d.summary}, {"paper_ref", d.paper_ref}, {"default_algebra", d.default_algebra}});
  return j.dump(2) + "\n";
}

std::string suites_to_text() {
  std::ostringstream os;
  for (const auto& d : list_suites()) os << d.name << "\t" << d.summary << " [" << d.paper_ref << "]\n";
  return os.str();
}

}  // namespace qpv

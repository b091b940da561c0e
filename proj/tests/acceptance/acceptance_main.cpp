// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// A criterion passes only when its checks hold and it finishes within budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "../test_support.hpp"
#include "rrh/chi/chi.hpp"
#include "rrh/deligne/diagram.hpp"
#include "rrh/flat/sections.hpp"
#include "rrh/integral/verify.hpp"
#include "rrh/precision/special.hpp"

using namespace rrh;
using rrh::testing::cplx;
using rrh::testing::Rng;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

double rel(const APComplex& a, const APComplex& b) { return relative_distance(a, b).to_double(); }

APComplex q(long num, long den, Precision p) { return APComplex(mpq_class(num, den), p); }

// ------------------------------------------------------------------ 1
Verdict chi_three_eighths() {
  Verdict v;
  const mpq_class exact = chi::chi_projective(mpq_class(-1, 2), 2);
  v.require(exact == mpq_class(3, 8), "rational path gives " + exact.get_str());

  // binom(N+n, n) through gamma values
  const Precision p(128);
  const APComplex N = q(-1, 2, p);
  const APComplex via_gamma = gamma(N + 3, p) / (gamma(N + 1, p) * gamma(APComplex(3, p), p));
  const double err = rel(via_gamma, q(3, 8, p));
  v.require(err < 1e-30, "gamma path rel_err " + sci(err));
  v.note("rational 3/8, gamma path rel_err " + sci(err));
  return v;
}

// ------------------------------------------------------------------ 2
Verdict hilbert_coefficients() {
  Verdict v;
  const auto series = chi::hilbert_series(2, mpq_class(-1, 2), 4);
  std::vector<mpq_class> want{mpq_class(1), mpq_class(6, 16), mpq_class(60, 256), mpq_class(700, 4096),
                              mpq_class(8820, 65536)};
  for (auto& w : want) w.canonicalize();
  std::string got;
  for (const auto& c : series) got += (got.empty() ? "" : ", ") + c.get_str();
  v.require(series == want, "got [" + got + "]");
  v.note("[" + got + "]");
  return v;
}

// ------------------------------------------------------------------ 3
Verdict beta_representation() {
  Verdict v;
  const Precision p(128);
  Rng rng(20261016);
  double worst = 0.0;
  int bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    double re = rng.uniform(-5.0, 0.0);
    // half real (kept 0.01 away from integers), half genuinely complex
    const double im = trial % 2 == 0 ? 0.0 : rng.uniform(-1.0, 1.0);
    if (im == 0.0) {
      while (std::abs(re - std::round(re)) < 0.01) re = rng.uniform(-5.0, 0.0);
    }
    const int n = rng.integer(0, 8);
    const APComplex N = cplx(re, im, p);
    const double err = rel(integral::prop1_integral(N, n, p), chi::chi_projective(N, n));
    worst = std::max(worst, err);
    if (!(err < 1e-25)) ++bad;
  }
  v.require(bad == 0, std::to_string(bad) + " of 200 above 1e-25");
  v.note("200 cases at 128 bits, worst rel_err " + sci(worst));
  return v;
}

// ------------------------------------------------------------------ 4
Verdict selberg_representation() {
  Verdict v;
  const Precision p(192);
  Rng rng(1016);
  double worst = 0.0;
  int bad = 0;
  int quadrature_rows = 0;
  double worst_quadrature = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int k = rng.integer(1, 4);
    const int n = rng.integer(0, 6);
    // Im N away from 0 keeps every gamma argument off the poles
    const double im = (rng.integer(0, 1) ? 1 : -1) * rng.uniform(0.05, 1.0);
    const APComplex N = cplx(rng.uniform(-5.0, 3.0), im, p);
    for (const auto& r : integral::prop2_check(chi::ChiQuery(k, N, n), p, 1e-25)) {
      if (r.method == "selberg-closed-form") {
        worst = std::max(worst, r.rel_err);
        if (!(r.rel_err < 1e-25)) ++bad;
      } else {
        ++quadrature_rows;
        worst_quadrature = std::max(worst_quadrature, r.rel_err);
      }
    }
  }
  v.require(bad == 0, std::to_string(bad) + " of 200 above 1e-25");
  v.note("200 cases at 192 bits, worst rel_err " + sci(worst) + " (plus " + std::to_string(quadrature_rows) +
         " quadrature rows, worst " + sci(worst_quadrature) + ")");
  return v;
}

// ------------------------------------------------------------------ 5
Verdict selberg_quadrature() {
  Verdict v;
  const Precision p(128);
  struct Case {
    long a, b, g;
    int k;
    std::optional<mpq_class> exact;
  };
  const std::vector<Case> cases{{1, 1, 1, 2, mpq_class(1, 6)},
                                {2, 1, 1, 2, mpq_class(1, 36)},
                                {2, 2, 1, 2, std::nullopt},
                                {1, 1, 1, 3, std::nullopt}};
  double worst = 0.0;
  for (const auto& c : cases) {
    const integral::SelbergParams sp(APComplex(c.a, p), APComplex(c.b, p), APComplex(c.g, p), c.k);
    const APComplex closed = integral::selberg_closed_form(sp, p);
    const APComplex quad = integral::selberg_quadrature(sp, p).value;
    const std::string name = "(" + std::to_string(c.a) + "," + std::to_string(c.b) + "," + std::to_string(c.g) +
                             "," + std::to_string(c.k) + ")";
    const double err = rel(quad, closed);
    worst = std::max(worst, err);
    v.require(err < 1e-20, name + " quadrature vs closed form " + sci(err));
    if (c.exact) {
      const APComplex e(*c.exact, p);
      v.require(rel(closed, e) < 1e-30 && rel(quad, e) < 1e-20, name + " differs from " + c.exact->get_str());
    }
  }
  v.note("4 tuples, worst rel_err " + sci(worst) + ", 1/6 and 1/36 reproduced");
  return v;
}

// ------------------------------------------------------------------ 6
Verdict deligne_suite() {
  using namespace rrh::deligne;
  Verdict v;
  const Word vv = Word::parse("••");
  const Poly sym = categorical_dim(vv, symmetrizer(vv));
  const Poly alt = categorical_dim(vv, antisymmetrizer(vv));
  v.require(sym.factored() == "t(t+1)/2", "Sym^2 dim " + sym.factored());
  v.require(alt.factored() == "t(t-1)/2", "Alt^2 dim " + alt.factored());
  v.require(sym + alt == Poly::t() * Poly::t(), "Sym^2 + Alt^2 != t^2");
  const Word one = Word::parse("•");
  v.require(categorical_dim(one, identity(one)) == Poly::t(), "dim V != t");
  v.require(categorical_dim(dual(one), identity(dual(one))) == Poly::t(), "dim V* != t");

  const LawCheck laws = check_category_laws(3);
  v.require(laws.failed == 0, std::to_string(laws.failed) + " law failures");

  const Word bottom = Word::parse("∘•");
  const Word middle = Word::parse("•∘•∘");
  const Word top = Word::parse("••∘∘");
  const DiagMorphism g(bottom, middle, Matching({{2, 1}, {5, 0}, {3, 4}}));
  const DiagMorphism f(middle, top, Matching({{4, 6}, {5, 0}, {7, 3}, {1, 2}}));
  const DiagMorphism want(bottom, top, Matching({{2, 4}, {3, 1}, {5, 0}}), Poly::t());
  v.require(compose(f, g) == want, "four-letter composite " + compose(f, g).to_string());
  v.note("Sym+Alt = t^2, dim V = t, " + std::to_string(laws.checked) + " law instances, composite " +
         compose(f, g).to_string());
  return v;
}

// ------------------------------------------------------------------ 7
Verdict flat_section_oracles() {
  Verdict v;
  const Precision p(128);
  const double tol = std::ldexp(1.0, -128 + 16);
  double worst = 0.0;
  for (const APComplex& z : {APComplex(-5, p), APComplex(3, p), cplx(1, 2, p)}) {
    const double err = rel(flat::psi_jet(APComplex(-1, p), z, 4, p).psi[0], exp(z));
    worst = std::max(worst, err);
    v.require(err < tol, "N=-1 Psi_0 vs e^z " + sci(err));
  }
  for (const APComplex& z : {q(1, 2, p), q(-3, 10, p), cplx(0.2, 0.4, p)}) {
    const double err = rel(flat::psi_jet(APComplex(-2, p), z, 4, p).psi[0], APComplex(1, p) / (1 - z));
    worst = std::max(worst, err);
    v.require(err < tol, "N=-2 Psi_0 vs 1/(1-z) " + sci(err));
  }
  double worst_minor = 0.0;
  const APComplex two_pi_i = 2 * i_pi(p);
  for (const APComplex& N : {APComplex(5, p), q(-1, 2, p), cplx(0.3, 1.7, p)}) {
    const flat::GammaCoeffs g = flat::gamma_class_coeffs(N, 2, p);
    const double err = rel(g.c[1] * g.d[0] - g.c[0] * g.d[1], two_pi_i);
    worst_minor = std::max(worst_minor, err);
    v.require(err < 1e-30, "c1 d0 - c0 d1 vs 2 pi i " + sci(err));
  }
  v.note("closed forms worst rel_err " + sci(worst) + ", 2 pi i worst " + sci(worst_minor));
  return v;
}

// ------------------------------------------------------------------ 8
Verdict gamma_claim_trend() {
  Verdict v;
  const Precision p(256);
  std::vector<APComplex> zs;
  for (long z : {-10, -20, -40, -80}) zs.emplace_back(z, p);
  const flat::ClaimReport report = flat::claim_report(APComplex(5, p), zs, {3, 3}, 6, p);
  for (const auto& row : report.rows) {
    std::ostringstream trail;
    for (const auto& e : row.entries) trail << " " << sci(e.abs_err);
    const std::string name = "(" + std::to_string(row.i) + "," + std::to_string(row.j) + ")";
    v.require(row.non_increasing, name + " not non-increasing:" + trail.str());
    if (row.i == 2 && row.j == 0) {
      const double first = row.entries.front().abs_err;
      const double last = row.entries.back().abs_err;
      v.require(last * 2 <= first, "(2,0) dropped only from " + sci(first) + " to " + sci(last));
      v.note("(2,0):" + trail.str());
    }
  }
  v.require(report.rows.size() == 3, std::to_string(report.rows.size()) + " rows");
  return v;
}

// ------------------------------------------------------------------ 9
Verdict ode_residual() {
  Verdict v;
  const Precision p(128);
  const double tol = std::ldexp(1.0, -128 + 16);
  double worst = 0.0;
  for (long N : {1, 2, 3}) {
    for (const APComplex& z : {APComplex(-3, p), APComplex(2, p), cplx(1, 1, p)}) {
      const double r = flat::integer_ode_residual(N, z, 6, p).to_double();
      worst = std::max(worst, r);
      v.require(r < tol, "N=" + std::to_string(N) + " residual " + sci(r));
    }
  }
  v.note("worst residual " + sci(worst) + " vs " + sci(tol));
  return v;
}

// ------------------------------------------------------------------ 10
Verdict poincare_series() {
  Verdict v;
  const Precision p(128);
  const APComplex y = q(1, 4, p);
  for (const APComplex& N : {q(-1, 2, p), APComplex(0, p), APComplex(1, p), q(7, 3, p)}) {
    const VerificationReport r = chi::poincare_check(N, y, chi::poincare_terms_for(N, y, p), p);
    v.require(r.passed, r.label + " abs_err " + sci(r.abs_err) + " > bound " + sci(r.tolerance));
  }
  v.note("N in {-1/2, 0, 1, 7/3}, y = 1/4");
  return v;
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "chi(O(2)) on P^(-1/2) is 3/8", 1e-3, chi_three_eighths},
      {2, "Hilbert coefficients of G(2, N=-1/2)", 1e-2, hilbert_coefficients},
      {3, "beta-integral form of chi on P^N, 200 random cases", 30, beta_representation},
      {4, "Selberg form of chi on G(k, N+k), 200 random cases", 10, selberg_representation},
      {5, "Selberg quadrature vs closed form", 5, selberg_quadrature},
      {6, "Rep(GL_t) dimensions, category laws, four-letter composite", 5, deligne_suite},
      {7, "flat-section closed forms and the 2 pi i minor", 1, flat_section_oracles},
      {8, "gamma-class discrepancy trend at N=5", 300, gamma_claim_trend},
      {9, "integer-N ODE residual", 10, ode_residual},
      {10, "Poincare series vs (1-y)^-(N+1)", 1, poincare_series},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs <= c.budget_seconds, "runtime over budget of " + sci(c.budget_seconds) + " s");
    if (!v.ok) ++failed;
    std::printf("%s %2d %s (%.4f s): %s\n", v.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <regex>
#include <sstream>

#include "rrh/chi/chi.hpp"
#include "rrh/deligne/diagram.hpp"
#include "rrh/flat/sections.hpp"
#include "rrh/integral/verify.hpp"
#include "rrh/precision/error.hpp"
#include "rrh/precision/special.hpp"

namespace rrh::cli {

using json = nlohmann::ordered_json;

namespace {

// Exact literals are rounded with this many bits beyond the run precision.
constexpr long kExactExtraBits = 64;
constexpr long kMinPrecision = Precision::kMinimum;
constexpr long kMaxPrecision = 1L << 24;

enum class Format { Json, Csv, Text };

struct RunConfig {
  long precision_bits = 128;
  double tolerance = 1e-20;
  Format format = Format::Text;
  flat::Branch branch = flat::Branch::Plus;

  Precision prec() const { return Precision(precision_bits); }
};

// One verification row, or the domain error that prevented it.
struct Row {
  std::string label;
  std::optional<VerificationReport> report;
  std::string error;
};

struct Outcome {
  json params = json::object();
  json result = json::object();
  std::vector<Row> rows;
  std::vector<std::string> text;
  std::vector<std::vector<std::string>> csv;  // header first; empty means report csv
  int exit_code = 0;
};

// ---------------------------------------------------------------- formatting

std::string fmt_double(double x, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

json number_json(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

json complex_json(const APComplex& z) { return {{"re", z.re().to_string()}, {"im", z.im().to_string()}}; }

// Inverse of parse_number for display: "a", "bi", "a+bi", "a-bi".
std::string complex_text(const APComplex& z, int digits = 0) {
  if (z.im().is_zero()) return z.re().to_string(digits);
  std::string im = z.im().to_string(digits);
  if (z.re().is_zero()) return im + "i";
  if (im.front() != '-') im = "+" + im;
  return z.re().to_string(digits) + im + "i";
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

json row_json(const Row& row) {
  if (!row.report) return {{"label", row.label}, {"passed", false}, {"error", row.error}};
  const VerificationReport& r = *row.report;
  return {{"label", r.label},
          {"method", r.method},
          {"lhs", complex_json(r.lhs)},
          {"rhs", complex_json(r.rhs)},
          {"abs_err", number_json(r.abs_err)},
          {"rel_err", number_json(r.rel_err)},
          {"tolerance", number_json(r.tolerance)},
          {"precision_bits", r.precision_bits},
          {"passed", r.passed}};
}

std::vector<std::vector<std::string>> report_csv(const std::vector<Row>& rows) {
  std::vector<std::vector<std::string>> out{{"label", "method", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err",
                                             "rel_err", "tolerance", "precision_bits", "passed", "error"}};
  for (const Row& row : rows) {
    if (!row.report) {
      out.push_back({row.label, "", "", "", "", "", "", "", "", "", "false", row.error});
      continue;
    }
    const VerificationReport& r = *row.report;
    out.push_back({r.label, r.method, r.lhs.re().to_string(), r.lhs.im().to_string(), r.rhs.re().to_string(),
                   r.rhs.im().to_string(), fmt_double(r.abs_err, "%.17g"), fmt_double(r.rel_err, "%.17g"),
                   fmt_double(r.tolerance, "%.17g"), std::to_string(r.precision_bits), r.passed ? "true" : "false",
                   ""});
  }
  return out;
}

std::string row_text(const Row& row) {
  if (!row.report) return "ERROR " + row.label + ": " + row.error;
  const VerificationReport& r = *row.report;
  return std::string(r.passed ? "PASS " : "FAIL ") + r.label + " [" + r.method + "] lhs=" + complex_text(r.lhs, 25) +
         " rhs=" + complex_text(r.rhs, 25) + " rel_err=" + fmt_double(r.rel_err, "%.3e") +
         " abs_err=" + fmt_double(r.abs_err, "%.3e") + " tol=" + fmt_double(r.tolerance, "%.3e");
}

void render(const std::string& op, const RunConfig& cfg, const Outcome& o, std::ostream& out) {
  switch (cfg.format) {
    case Format::Json: {
      json report = json::array();
      for (const Row& row : o.rows) report.push_back(row_json(row));
      json doc{{"op", op},
               {"params", o.params},
               {"result", o.result},
               {"report", report},
               {"precision_bits", cfg.precision_bits}};
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      const auto table = o.csv.empty() ? report_csv(o.rows) : o.csv;
      for (const auto& line : table) {
        for (std::size_t c = 0; c < line.size(); ++c) out << (c ? "," : "") << csv_field(line[c]);
        out << "\n";
      }
      break;
    }
    case Format::Text:
      for (const auto& line : o.text) out << line << "\n";
      for (const Row& row : o.rows) out << row_text(row) << "\n";
      break;
  }
}

// Exit code for a set of verification rows: domain errors dominate failures.
int rows_exit_code(const std::vector<Row>& rows) {
  int code = 0;
  for (const Row& row : rows) {
    if (!row.report) return 2;
    if (!row.report->passed) code = 1;
  }
  return code;
}

// Runs one row, turning a domain error into an error row.
template <class F>
void add_rows(Outcome& o, const std::string& label, F&& compute) {
  try {
    for (auto& r : compute()) o.rows.push_back(Row{r.label, std::move(r), ""});
  } catch (const DomainError& e) {
    o.rows.push_back({label, std::nullopt, e.what()});
  }
}

// ---------------------------------------------------------------- parsing

std::pair<APComplex, std::optional<mpq_class>> parse_component(const std::string& s, Precision prec) {
  static const std::regex rational(R"([+-]?[0-9]+(/[0-9]+)?)");
  static const std::regex decimal(R"([+-]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][+-]?[0-9]+)?)");
  if (std::regex_match(s, rational)) {
    const std::string body = s.front() == '+' ? s.substr(1) : s;
    mpq_class q;
    if (q.set_str(body, 10) != 0 || q.get_den() == 0) throw DomainError("cannot parse number '" + s + "'");
    q.canonicalize();
    return {APComplex(q, prec + kExactExtraBits), q};
  }
  if (std::regex_match(s, decimal)) return {APComplex(Real::from_string(s, prec)), std::nullopt};
  throw DomainError("cannot parse number '" + s + "'");
}

std::pair<std::size_t, std::size_t> parse_box(const std::string& s) {
  static const std::regex box(R"(([0-9]+)[xX]([0-9]+))");
  std::smatch m;
  if (!std::regex_match(s, m, box)) throw DomainError("box must look like 3x3, got '" + s + "'");
  return {std::stoul(m[1]), std::stoul(m[2])};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

// "0-2,1-3" -> {(0,2), (1,3)}; empty string is the empty matching.
deligne::Matching parse_edges(const std::string& s) {
  static const std::regex edge(R"(\s*([0-9]+)\s*-\s*([0-9]+)\s*)");
  std::vector<std::pair<int, int>> edges;
  for (const auto& item : split(s, ',')) {
    std::smatch m;
    if (!std::regex_match(item, m, edge)) throw DomainError("edge must look like 0-3, got '" + item + "'");
    edges.emplace_back(std::stoi(m[1]), std::stoi(m[2]));
  }
  return deligne::Matching(std::move(edges));
}

// ---------------------------------------------------------------- handlers

struct Inputs {
  int k = 1;
  std::string N;
  int n = 0;
  std::optional<int> series;
  std::string alpha, beta, gamma;
  std::string y = "1/4";
  std::optional<int> terms;
  std::string z;
  long ode_N = 1;
  std::size_t order = 6;
  std::string word;
  std::string idempotent = "id";
  std::string nesting = "right";
  std::optional<std::string> t;
  std::string source, middle, target, f_edges, g_edges;
  int max_word_len = 3;
  std::string z_list;
  std::string box = "3x3";
  std::string normalization = "zero";
};

Outcome run_chi(const Inputs& in, const RunConfig& cfg) {
  Outcome o;
  const Number N = parse_number(in.N, cfg.prec());
  o.params = {{"k", in.k}, {"N", in.N}};
  if (in.series) {
    o.params["series"] = *in.series;
  } else {
    o.params["n"] = in.n;
  }

  std::vector<APComplex> values;
  std::vector<std::string> exact;
  if (N.exact) {
    const auto qs = in.series ? chi::hilbert_series(in.k, *N.exact, *in.series)
                              : std::vector<mpq_class>{chi::chi_grassmannian(in.k, *N.exact, in.n)};
    for (const auto& q : qs) {
      exact.push_back(rational_text(q));
      values.emplace_back(q, cfg.prec());
    }
  } else {
    values = in.series ? chi::hilbert_series(in.k, N.value, *in.series)
                       : std::vector<APComplex>{chi::chi_grassmannian(chi::ChiQuery(in.k, N.value, in.n))};
  }

  auto shown = [&](std::size_t i) { return exact.empty() ? complex_text(values[i]) : exact[i]; };
  if (in.series) {
    json coeffs = json::array();
    std::string line = "[";
    o.csv.push_back({"n", "exact", "re", "im"});
    for (std::size_t i = 0; i < values.size(); ++i) {
      json c{{"n", i}};
      if (!exact.empty()) c["exact"] = exact[i];
      c["value"] = complex_json(values[i]);
      coeffs.push_back(c);
      line += (i ? ", " : "") + shown(i);
      o.csv.push_back({std::to_string(i), exact.empty() ? "" : exact[i], values[i].re().to_string(),
                       values[i].im().to_string()});
    }
    o.result["coefficients"] = coeffs;
    o.text.push_back(line + "]");
  } else {
    if (!exact.empty()) o.result["exact"] = exact[0];
    o.result["value"] = complex_json(values[0]);
    o.text.push_back(shown(0));
    o.csv = {{"n", "exact", "re", "im"},
             {std::to_string(in.n), exact.empty() ? "" : exact[0], values[0].re().to_string(),
              values[0].im().to_string()}};
  }
  return o;
}

Outcome run_prop1(const Inputs& in, const RunConfig& cfg) {
  Outcome o;
  o.params = {{"N", in.N}, {"n", in.n}};
  const Number N = parse_number(in.N, cfg.prec());
  const std::string label = "prop1 N=" + in.N + " n=" + std::to_string(in.n);
  add_rows(o, label, [&] {
    APComplex lhs = integral::prop1_integral(N.value, in.n, cfg.prec());
    APComplex rhs = N.exact ? APComplex(chi::chi_projective(*N.exact, in.n), cfg.prec())
                            : chi::chi_projective(N.value, in.n);
    return std::vector{make_report(label, "tanh-sinh", std::move(lhs), std::move(rhs), cfg.tolerance, cfg.prec())};
  });
  o.exit_code = rows_exit_code(o.rows);
  return o;
}

Outcome run_prop2(const Inputs& in, const RunConfig& cfg) {
  Outcome o;
  o.params = {{"k", in.k}, {"N", in.N}, {"n", in.n}};
  const Number N = parse_number(in.N, cfg.prec());
  add_rows(o, "prop2 k=" + std::to_string(in.k) + " N=" + in.N + " n=" + std::to_string(in.n), [&] {
    return integral::prop2_check(chi::ChiQuery(in.k, N.value, in.n), cfg.prec(), cfg.tolerance);
  });
  o.exit_code = rows_exit_code(o.rows);
  return o;
}

Outcome run_selberg(const Inputs& in, const RunConfig& cfg) {
  Outcome o;
  o.params = {{"alpha", in.alpha}, {"beta", in.beta}, {"gamma", in.gamma}, {"k", in.k}};
  const integral::SelbergParams p(parse_number(in.alpha, cfg.prec()).value, parse_number(in.beta, cfg.prec()).value,
                                  parse_number(in.gamma, cfg.prec()).value, in.k);
  const std::string label =
      "selberg alpha=" + in.alpha + " beta=" + in.beta + " gamma=" + in.gamma + " k=" + std::to_string(in.k);
  std::optional<APComplex> closed;
  try {
    closed = integral::selberg_closed_form(p, cfg.prec());
    o.result["closed_form"] = complex_json(*closed);
    o.text.push_back("closed form: " + complex_text(*closed));
  } catch (const DomainError& e) {
    o.rows.push_back({label, std::nullopt, e.what()});
  }
  if (closed) {
    add_rows(o, label, [&] {
      const integral::QuadratureResult q = integral::selberg_quadrature(p, cfg.prec());
      o.result["quadrature"] = complex_json(q.value);
      o.result["quadrature_error_estimate"] = number_json(q.error_estimate);
      o.text.push_back("quadrature:  " + complex_text(q.value));
      return std::vector{make_report(label, "gauss-jacobi", q.value, *closed, cfg.tolerance, cfg.prec())};
    });
  }
  o.exit_code = rows_exit_code(o.rows);
  return o;
}

Outcome run_beta(const Inputs& in, const RunConfig& cfg) {
  Outcome o;
  o.params = {{"alpha", in.alpha}, {"beta", in.beta}};
  const APComplex a = parse_number(in.alpha, cfg.prec()).value;
  const APComplex b = parse_number(in.beta, cfg.prec()).value;
  const std::string label = "beta alpha=" + in.alpha + " beta=" + in.beta;
  add_rows(o, label, [&] {
    const bool direct = a.re() > 0;
    const integral::QuadratureResult q =
        direct ? integral::beta_quadrature(a, b, cfg.prec()) : integral::beta_continued(a, b, cfg.prec());
    o.result["quadrature_error_estimate"] = number_json(q.error_estimate);
    return std::vector{make_report(label, direct ? "tanh-sinh" : "tanh-sinh+binomial-series", q.value,
                                   integral::beta_closed(a, b, cfg.prec()), cfg.tolerance, cfg.prec())};
  });
  o.exit_code = rows_exit_code(o.rows);
  return o;
}

Outcome run_poincare(const Inputs& in, const RunConfig& cfg) {
  Outcome o;
  o.params = {{"N", in.N}, {"y", in.y}};
  const APComplex N = parse_number(in.N, cfg.prec()).value;
  const APComplex y = parse_number(in.y, cfg.prec()).value;
  add_rows(o, "poincare N=" + in.N + " y=" + in.y, [&] {
    const int n_max = in.terms ? *in.terms : chi::poincare_terms_for(N, y, cfg.prec());
    o.result["terms"] = n_max;
    return std::vector{chi::poincare_check(N, y, n_max, cfg.prec())};
  });
  o.exit_code = rows_exit_code(o.rows);
  return o;
}

Outcome run_ode(const Inputs& in, const RunConfig& cfg) {
  Outcome o;
  o.params = {{"N", in.ode_N}, {"z", in.z}, {"order", in.order}};
  const APComplex z = parse_number(in.z, cfg.prec()).value;
  const std::string label = "ode N=" + std::to_string(in.ode_N) + " z=" + in.z;
  add_rows(o, label, [&] {
    const Real residual = flat::integer_ode_residual(in.ode_N, z, in.order, cfg.prec(), cfg.branch);
    const double tol = std::ldexp(1.0, static_cast<int>(-cfg.precision_bits + 16));
    return std::vector{make_report(label, "term-wise z d/dz", APComplex(residual), APComplex(cfg.prec()), tol,
                                   cfg.prec())};
  });
  o.exit_code = rows_exit_code(o.rows);
  return o;
}

json poly_json(const deligne::Poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rational_text(c));
  return {{"factored", p.factored()}, {"expanded", p.expanded()}, {"coefficients", coeffs}};
}

Outcome run_dim(const Inputs& in, const RunConfig& cfg) {
  Outcome o;
  o.params = {{"word", in.word}, {"idempotent", in.idempotent}, {"nesting", in.nesting}};
  const deligne::Word w = deligne::Word::parse(in.word);
  const deligne::DiagMorphism e = in.idempotent == "sym"   ? deligne::symmetrizer(w)
                                  : in.idempotent == "alt" ? deligne::antisymmetrizer(w)
                                                           : deligne::identity(w);
  const deligne::Poly d =
      deligne::categorical_dim(w, e, in.nesting == "left" ? deligne::Nesting::Left : deligne::Nesting::Right);
  o.result["dimension"] = poly_json(d);
  o.text.push_back(d.factored());
  o.csv = {{"word", "idempotent", "factored", "expanded", "t", "value"},
           {w.to_string(), in.idempotent, d.factored(), d.expanded(), "", ""}};
  if (in.t) {
    o.params["t"] = *in.t;
    const Number t = parse_number(*in.t, cfg.prec());
    const std::string shown = t.exact ? rational_text(d.evaluate(*t.exact)) : complex_text(d.evaluate(t.value));
    o.result["value"] = t.exact ? json(shown) : complex_json(d.evaluate(t.value));
    o.text.push_back("at t=" + *in.t + ": " + shown);
    o.csv[1][4] = *in.t;
    o.csv[1][5] = shown;
  }
  return o;
}

Outcome run_compose(const Inputs& in, const RunConfig&) {
  Outcome o;
  o.params = {{"source", in.source}, {"middle", in.middle}, {"target", in.target}, {"g", in.g_edges},
              {"f", in.f_edges}};
  const deligne::Word a = deligne::Word::parse(in.source);
  const deligne::Word b = deligne::Word::parse(in.middle);
  const deligne::Word c = deligne::Word::parse(in.target);
  const deligne::DiagMorphism g(a, b, parse_edges(in.g_edges));
  const deligne::DiagMorphism f(b, c, parse_edges(in.f_edges));
  const deligne::DiagMorphism fg = deligne::compose(f, g);
  json terms = json::array();
  o.csv.push_back({"edges", "coefficient"});
  for (const auto& [m, coeff] : fg.terms()) {
    json edges = json::array();
    std::string edge_text;
    for (const auto& [x, y] : m.edges()) {
      edges.push_back({x, y});
      edge_text += (edge_text.empty() ? "" : ",") + std::to_string(x) + "-" + std::to_string(y);
    }
    terms.push_back({{"edges", edges}, {"coefficient", poly_json(coeff)}});
    o.csv.push_back({edge_text, coeff.factored()});
  }
  o.result = {{"source", a.to_string()}, {"target", c.to_string()}, {"morphism", fg.to_string()}, {"terms", terms}};
  o.text.push_back(fg.to_string());
  return o;
}

Outcome run_check_laws(const Inputs& in, const RunConfig&) {
  Outcome o;
  o.params = {{"max_word_len", in.max_word_len}};
  if (in.max_word_len < 0) throw DomainError("--max-word-len must be non-negative");
  const deligne::LawCheck c = deligne::check_category_laws(in.max_word_len);
  o.result = {{"checked", c.checked}, {"failed", c.failed}, {"failures", c.failures}};
  o.text.push_back(std::string(c.failed == 0 ? "PASS" : "FAIL") + " category laws up to length " +
                   std::to_string(in.max_word_len) + ": " + std::to_string(c.checked) + " checked, " +
                   std::to_string(c.failed) + " failed");
  for (const auto& f : c.failures) o.text.push_back("  " + f);
  o.csv = {{"max_word_len", "checked", "failed"},
           {std::to_string(in.max_word_len), std::to_string(c.checked), std::to_string(c.failed)}};
  o.exit_code = c.failed == 0 ? 0 : 1;
  return o;
}

Outcome run_vogel(const Inputs& in, const RunConfig& cfg) {
  Outcome o;
  o.params = {{"alpha", in.alpha}, {"beta", in.beta}, {"gamma", in.gamma}};
  const Number a = parse_number(in.alpha, cfg.prec());
  const Number b = parse_number(in.beta, cfg.prec());
  const Number c = parse_number(in.gamma, cfg.prec());
  std::string shown;
  if (a.exact && b.exact && c.exact) {
    const mpq_class d = deligne::vogel_dimension(*a.exact, *b.exact, *c.exact);
    shown = rational_text(d);
    o.result["exact"] = shown;
    o.result["value"] = complex_json(APComplex(d, cfg.prec()));
  } else {
    const APComplex d = deligne::vogel_dimension(a.value, b.value, c.value);
    shown = complex_text(d);
    o.result["value"] = complex_json(d);
  }
  o.text.push_back(shown);
  o.csv = {{"alpha", "beta", "gamma", "dimension"}, {in.alpha, in.beta, in.gamma, shown}};
  return o;
}

Outcome run_gamma_claim(const Inputs& in, const RunConfig& cfg) {
  Outcome o;
  o.params = {{"N", in.N}, {"z_list", in.z_list}, {"box", in.box}, {"order", in.order},
              {"branch", cfg.branch == flat::Branch::Plus ? "plus" : "minus"}, {"normalization", in.normalization}};
  const Number N = parse_number(in.N, cfg.prec());
  std::vector<APComplex> zs;
  std::vector<std::string> z_text;
  for (const auto& item : split(in.z_list, ',')) {
    zs.push_back(parse_number(item, cfg.prec()).value);
    z_text.push_back(item);
  }
  if (zs.empty()) throw DomainError("--z-list is empty");
  const auto box = parse_box(in.box);
  const flat::ClaimReport report = flat::claim_report(N.value, zs, box, in.order, cfg.prec(), cfg.branch);
  const auto norm = in.normalization == "one" ? flat::Normalization::One : flat::Normalization::Zero;

  o.text.push_back("N=" + in.N + " K=" + std::to_string(in.order) + " box=" + in.box +
                   " prec=" + std::to_string(cfg.precision_bits));
  for (const auto& w : report.warnings) o.text.push_back("warning: " + w);

  // Psi diagnostics, with the closed forms at N = -1 (e^z) and N = -2 (1/(1-z), |z| < 1).
  json psi = json::array();
  for (std::size_t zi = 0; zi < zs.size(); ++zi) {
    const flat::FrobeniusData d = flat::psi_jet(N.value, zs[zi], in.order, cfg.prec(), cfg.branch, norm);
    json coeffs = json::array();
    json primes = json::array();
    for (std::size_t k = 0; k < in.order; ++k) {
      coeffs.push_back(complex_json(d.psi[k]));
      primes.push_back(complex_json(d.psi_prime[k]));
    }
    json entry{{"z", z_text[zi]}, {"terms", d.terms}, {"psi", coeffs}, {"psi_prime", primes}};
    std::string line = "z=" + z_text[zi] + " Psi_0=" + complex_text(d.psi[0], 20);
    std::optional<APComplex> closed;
    if (N.exact && *N.exact == -1) closed = exp(zs[zi]);
    if (N.exact && *N.exact == -2 && abs(zs[zi]) < 1) closed = APComplex(1, cfg.prec()) / (1 - zs[zi]);
    if (closed && norm == flat::Normalization::Zero) {
      const double rel = relative_distance(d.psi[0], *closed).to_double();
      entry["psi0_closed_form"] = complex_json(*closed);
      entry["psi0_rel_err"] = number_json(rel);
      line += " closed_form=" + complex_text(*closed, 20) + " rel_err=" + fmt_double(rel, "%.3e");
    }
    psi.push_back(entry);
    o.text.push_back(line);
  }

  json rows = json::array();
  o.csv.push_back({"i", "j", "z", "ratio_re", "ratio_im", "gamma_rhs_re", "gamma_rhs_im", "discrepancy", "step_ok"});
  std::string header = "(i,j)";
  for (const auto& zt : z_text) header += "  " + zt;
  o.text.push_back(header + "  trend");
  for (const auto& row : report.rows) {
    json entries = json::array();
    std::string line = "(" + std::to_string(row.i) + "," + std::to_string(row.j) + ")";
    for (std::size_t zi = 0; zi < row.entries.size(); ++zi) {
      const auto& e = row.entries[zi];
      entries.push_back({{"z", z_text[zi]},
                         {"ratio", complex_json(e.lhs)},
                         {"gamma_rhs", complex_json(e.rhs)},
                         {"discrepancy", number_json(e.abs_err)},
                         {"step_ok", e.passed}});
      o.csv.push_back({std::to_string(row.i), std::to_string(row.j), z_text[zi], e.lhs.re().to_string(),
                       e.lhs.im().to_string(), e.rhs.re().to_string(), e.rhs.im().to_string(),
                       fmt_double(e.abs_err, "%.17g"), e.passed ? "true" : "false"});
      line += "  " + fmt_double(e.abs_err, "%.6g");
    }
    rows.push_back({{"i", row.i},
                    {"j", row.j},
                    {"entries", entries},
                    {"non_increasing", row.non_increasing},
                    {"final_discrepancy", number_json(row.final_discrepancy)}});
    o.text.push_back(line + "  " + (row.non_increasing ? "non-increasing" : "increasing somewhere"));
  }
  o.result = {{"N", complex_json(report.N)},
              {"K", report.K},
              {"box", {report.box.first, report.box.second}},
              {"z_list", z_text},
              {"warnings", report.warnings},
              {"psi", psi},
              {"rows", rows}};
  return o;
}

struct Leaf {
  CLI::App* app;
  std::string op;
  std::function<Outcome(const Inputs&, const RunConfig&)> run;
};

void report_error(const std::string& op, const std::string& kind, const std::string& message, Format format,
                  std::ostream& err) {
  if (format == Format::Json) {
    err << json{{"op", op}, {"error", {{"type", kind}, {"message", message}}}}.dump() << "\n";
  } else {
    err << "error (" << kind << "): " << message << "\n";
  }
}

}  // namespace

Number parse_number(std::string_view text, Precision prec) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  if (s.empty()) throw DomainError("empty number");
  std::string re_part = s;
  std::string im_part;
  if (s.back() == 'i') {
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t cut = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        cut = k;
        break;
      }
    }
    re_part = cut == std::string::npos ? "" : body.substr(0, cut);
    im_part = cut == std::string::npos ? body : body.substr(cut);
    if (im_part.empty() || im_part == "+" || im_part == "-") im_part += "1";
  }
  const Precision wp = prec + kExactExtraBits;
  auto [re, re_exact] = re_part.empty() ? std::pair{APComplex(wp), std::optional<mpq_class>(0)}
                                        : parse_component(re_part, prec);
  if (im_part.empty()) return {re, re_exact};
  auto [im, im_exact] = parse_component(im_part, prec);
  Number out{APComplex(re.re(), im.re()), std::nullopt};
  if (re_exact && im_exact && *im_exact == 0) out.exact = re_exact;
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  Inputs in;
  std::string format = "text";
  std::string branch = "plus";

  CLI::App app{"Interpolated Euler characteristics, their integral representations, Rep(GL_t) dimensions and "
               "gamma-class experiments.",
               "rrh"};
  app.fallthrough();
  app.require_subcommand(1);
  CLI::Option* prec_opt =
      app.add_option("--prec", cfg.precision_bits, "working precision in bits (>= 64); default from RRH_PRECISION_BITS")
          ->check(CLI::Range(kMinPrecision, kMaxPrecision))
      ->capture_default_str();
  app.add_option("--tol", cfg.tolerance, "relative tolerance for verification rows")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--branch", branch, "Log z on the negative axis: plus (arg = pi) or minus (arg = -pi)")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();

  std::vector<Leaf> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, const std::string& op,
                  auto run) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    leaves.push_back({sub, op, run});
    return sub;
  };

  CLI::App* chi = leaf(&app, "chi", "chi(O(n)) on G(k, N+k), or its Hilbert coefficients", "chi", run_chi);
  chi->add_option("--k", in.k, "rank k (1 = projective space)")->check(CLI::PositiveNumber)->capture_default_str();
  chi->add_option("--N", in.N, "interpolated dimension N")->required();
  CLI::Option* n_opt = chi->add_option("--n", in.n, "twist n")->check(CLI::NonNegativeNumber)->capture_default_str();
  chi->add_option("--series", in.series, "coefficients n = 0..n_max")->check(CLI::NonNegativeNumber)->excludes(n_opt);

  CLI::App* verify = app.add_subcommand("verify", "integral representations checked by quadrature");
  verify->fallthrough();
  verify->require_subcommand(1);
  CLI::App* prop1 = leaf(verify, "prop1", "beta-integral form of chi(O_{P^N}(n))", "verify prop1", run_prop1);
  prop1->add_option("--N", in.N)->required();
  prop1->add_option("--n", in.n)->check(CLI::NonNegativeNumber)->required();
  CLI::App* prop2 = leaf(verify, "prop2", "Selberg-integral form of chi(O_{G(k,N+k)}(n))", "verify prop2", run_prop2);
  prop2->add_option("--k", in.k)->check(CLI::PositiveNumber)->required();
  prop2->add_option("--N", in.N)->required();
  prop2->add_option("--n", in.n)->check(CLI::NonNegativeNumber)->required();
  CLI::App* selberg =
      leaf(verify, "selberg", "Selberg integral: Gauss-Jacobi quadrature vs closed form", "verify selberg", run_selberg);
  selberg->add_option("--alpha", in.alpha)->required();
  selberg->add_option("--beta", in.beta)->required();
  selberg->add_option("--gamma", in.gamma)->required();
  selberg->add_option("--k", in.k)->check(CLI::PositiveNumber)->required();
  CLI::App* beta = leaf(verify, "beta", "beta integral: quadrature vs gamma quotient", "verify beta", run_beta);
  beta->add_option("--alpha", in.alpha)->required();
  beta->add_option("--beta", in.beta)->required();
  CLI::App* poincare =
      leaf(verify, "poincare", "partial sums of sum chi(O(n)) y^n vs (1-y)^-(N+1)", "verify poincare", run_poincare);
  poincare->add_option("--N", in.N)->required();
  poincare->add_option("--y", in.y)->capture_default_str();
  poincare->add_option("--terms", in.terms, "n_max (default: from the tail bound)")->check(CLI::NonNegativeNumber);
  CLI::App* ode = leaf(verify, "ode", "integer-N residual of the series ODE, tolerance 2^(-prec+16)", "verify ode",
                       run_ode);
  ode->add_option("--N", in.ode_N)->check(CLI::PositiveNumber)->required();
  ode->add_option("--z", in.z)->required();
  ode->add_option("--order", in.order, "jet order K (needs N <= K-3)")->capture_default_str();

  CLI::App* deligne = app.add_subcommand("deligne", "diagram calculus of Rep(GL_t)");
  deligne->fallthrough();
  deligne->require_subcommand(1);
  CLI::App* dim = leaf(deligne, "dim", "categorical dimension of an idempotent", "deligne dim", run_dim);
  dim->add_option("--word", in.word, "letters: filled dot or '*' for V, hollow dot or 'o' for V*")->required();
  dim->add_option("--idempotent", in.idempotent)
      ->check(CLI::IsMember({"id", "sym", "alt"}))
      ->capture_default_str();
  dim->add_option("--nesting", in.nesting)->check(CLI::IsMember({"right", "left"}))->capture_default_str();
  dim->add_option("--t", in.t, "also evaluate at this t");
  CLI::App* compose =
      leaf(deligne, "compose", "f o g for single matchings g: source -> middle, f: middle -> target",
           "deligne compose", run_compose);
  compose->add_option("--source", in.source)->required();
  compose->add_option("--middle", in.middle)->required();
  compose->add_option("--target", in.target)->required();
  compose->add_option("--g", in.g_edges, "edges of g, e.g. 0-3,1-2 (domain positions first)")->required();
  compose->add_option("--f", in.f_edges, "edges of f")->required();
  CLI::App* laws =
      leaf(deligne, "check-laws", "exhaustive category-law check", "deligne check-laws", run_check_laws);
  laws->add_option("--max-word-len", in.max_word_len)->capture_default_str();
  CLI::App* vogel = leaf(deligne, "vogel", "universal dimension at Vogel parameters", "deligne vogel", run_vogel);
  vogel->add_option("--alpha", in.alpha)->required();
  vogel->add_option("--beta", in.beta)->required();
  vogel->add_option("--gamma", in.gamma)->required();

  CLI::App* claim = leaf(&app, "gamma-claim", "Wronskian ratios vs gamma-class minors along a list of negative z",
                         "gamma-claim", run_gamma_claim);
  claim->add_option("--N", in.N)->required();
  claim->add_option("--z-list", in.z_list, "comma separated negative reals")->required();
  claim->add_option("--box", in.box, "pairs (i,j), j < i, inside an a x b box")->capture_default_str();
  claim->add_option("--order", in.order, "jet order K")->capture_default_str();
  claim->add_option("--normalization", in.normalization, "gamma class in the Psi diagnostics")
      ->check(CLI::IsMember({"zero", "one"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  // The environment replaces the default only; an explicit --prec wins.
  if (const char* env = std::getenv("RRH_PRECISION_BITS"); env && prec_opt->count() == 0) {
    const std::string text = env;
    if (!std::regex_match(text, std::regex("[0-9]{1,9}")) || std::stol(text) < kMinPrecision ||
        std::stol(text) > kMaxPrecision) {
      err << "usage error: RRH_PRECISION_BITS must be an integer in [" << kMinPrecision << ", " << kMaxPrecision
          << "], got '" << text << "'\n";
      return 2;
    }
    cfg.precision_bits = std::stol(text);
  }
  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  cfg.branch = branch == "minus" ? flat::Branch::Minus : flat::Branch::Plus;

  for (const Leaf& l : leaves) {
    if (!l.app->parsed()) continue;
    try {
      const Outcome o = l.run(in, cfg);
      render(l.op, cfg, o, out);
      return o.exit_code;
    } catch (const PoleError& e) {
      report_error(l.op, "PoleError", e.what(), cfg.format, err);
    } catch (const DomainError& e) {
      report_error(l.op, "DomainError", e.what(), cfg.format, err);
    } catch (const Error& e) {
      report_error(l.op, "Error", e.what(), cfg.format, err);
    }
    return 2;
  }
  err << "usage error: no command given\n";
  return 2;
}

}  // namespace rrh::cli

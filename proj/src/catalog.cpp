#include "logbott/catalog.hpp"

#include "logbott/errors.hpp"

namespace logbott::catalog {

namespace {

Monomial mono(std::initializer_list<int> e) { return Monomial(e); }

RingPtr truncated_ring(std::vector<std::string> names, std::vector<int> caps) {
  // Q[x_1..x_n]/(x_i^{cap_i + 1}) with all generators of degree 2.
  const std::size_t n = names.size();
  std::vector<Generator> gens;
  std::vector<RewriteRule> rules;
  Monomial top(n, 0);
  int top_degree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back({names[i], 2});
    Monomial lead(n, 0);
    lead[i] = caps[i] + 1;
    rules.push_back({lead, Polynomial(n)});
    top[i] = caps[i];
    top_degree += 2 * caps[i];
  }
  return make_ring(std::move(gens), std::move(rules), top_degree, IntegrationTable{{top, Rational(1)}});
}

RingPtr point_ring() { return make_ring(std::vector<Generator>{}, std::vector<RewriteRule>{}, 0, IntegrationTable{{Monomial{}, Rational(1)}}); }

GradedClass cls(const RingPtr& ring, std::string_view text) { return GradedClass::parse(ring, text); }

BundleData line(const RingPtr& ring, std::string_view c1) { return make_bundle(ring, {cls(ring, c1)}); }

// Bundle whose total Chern class is (1 + x)^power truncated to the rank.
BundleData power_bundle(const RingPtr& ring, std::string_view x, int rank, int power) {
  const GradedClass one_plus = GradedClass::constant(ring, 1) + cls(ring, x);
  std::vector<GradedClass> chern;
  const GradedClass total = one_plus.pow(static_cast<unsigned>(power));
  for (int i = 1; i <= rank; ++i) chern.push_back(homogeneous_part(total, 2 * i));
  return make_bundle(ring, std::move(chern));
}

std::string q(const Rational& r) { return to_string(r); }

ExampleEntry weighted_p3(const ExampleParams& p) {
  if (p.k < 2) throw ConstraintError("weighted-p3 requires k >= 2, got k = " + std::to_string(p.k));
  if (p.a == 0 || p.b == 0 || p.c == 0) throw ConstraintError("weighted-p3 requires a, b, c nonzero");
  if (p.a == p.b) throw ConstraintError("weighted-p3 requires a != b");
  if (p.c == p.k * p.a) throw ConstraintError("weighted-p3 requires c != k*a");
  if (p.c == p.k * p.b) throw ConstraintError("weighted-p3 requires c != k*b");
  const int k = p.k;
  const std::string ks = std::to_string(k);

  ExampleEntry e;
  e.id = std::string(kWeightedP3);
  e.description = "resolution X = P(O + O(k)) of P(1,1,1,k), D the exceptional P^2, field a z0d0 + a z1d1 + b z2d2 + c z3d3";
  e.parameters = {{"k", ks}, {"a", q(p.a)}, {"b", q(p.b)}, {"c", q(p.c)}};

  const RingPtr ring = weighted_p3_ring(k);
  const GradedClass d = cls(ring, "xi - " + ks + "*h");
  const GradedClass h = cls(ring, "h");
  const GradedClass c1 = 2 * Rational(1) * d + Rational(k + 3) * h;
  const GradedClass c2 = Rational(6) * h * d + Rational(3 * (k + 1)) * h * h;
  const GradedClass c3 = Rational(6) * h * h * d;
  e.global.ring = ring;
  e.global.tangent = make_bundle(ring, {c1, c2, c3});
  e.global.divisors = {d};

  // The line {z2 = 0} in the section {z3 = 0}: normal bundle O(1) + O(k).
  const RingPtr p1 = truncated_ring({"x"}, {1});
  FixedComponent curve;
  curve.name = "C";
  curve.dim = 1;
  curve.codim = 2;
  curve.ring = p1;
  curve.k_blocks = {{0, line(p1, "2*x")}};
  curve.n_blocks = {{p.b - p.a, line(p1, "x")}, {p.c - k * p.a, line(p1, ks + "*x")}};

  const RingPtr pt = point_ring();
  FixedComponent point;
  point.name = "p";
  point.dim = 0;
  point.codim = 3;
  point.ring = pt;
  point.n_blocks = {{p.a - p.b, trivial_bundle(pt, 1)}, {p.a - p.b, trivial_bundle(pt, 1)},
                    {p.c - k * p.b, trivial_bundle(pt, 1)}};

  e.components = {curve, point};
  e.expected_global = 3;
  e.expected_contributions = {2, 1};
  return e;
}

ExampleEntry p1p1pm(const ExampleParams& p) {
  if (p.m < 2) throw ConstraintError("p1p1pm requires m >= 2, got m = " + std::to_string(p.m));
  const int m = p.m;
  ExampleEntry e;
  e.id = std::string(kP1P1Pm);
  e.description = "X = P^1 x P^1 x P^m, D = P^1 x P^1 x H_inf, field generating ([x0:l x1],[y0:l y1],u)";
  e.parameters = {{"m", std::to_string(m)}};

  const RingPtr ring = truncated_ring({"eta1", "eta2", "h"}, {1, 1, m});
  const BundleData tp1_a = line(ring, "2*eta1");
  const BundleData tp1_b = line(ring, "2*eta2");
  const BundleData tpm = power_bundle(ring, "h", m, m + 1);
  const BundleData tpm_log = power_bundle(ring, "h", m, m);
  e.global.ring = ring;
  e.global.tangent = whitney_product(whitney_product(tp1_a, tp1_b), tpm);
  e.global.divisors = {cls(ring, "h")};
  e.global.direct_log_bundle = whitney_product(whitney_product(tp1_a, tp1_b), tpm_log);

  const RingPtr pm = truncated_ring({"h"}, {m});
  const BundleData k_bundle = power_bundle(pm, "h", m, m);
  for (const auto& [l1, n1] : {std::pair{1, "0"}, std::pair{-1, "inf"}}) {
    for (const auto& [l2, n2] : {std::pair{1, "0"}, std::pair{-1, "inf"}}) {
      FixedComponent f;
      f.name = std::string("F(") + n1 + "," + n2 + ")";
      f.dim = m;
      f.codim = 2;
      f.ring = pm;
      f.k_blocks = {{0, k_bundle}};
      f.n_blocks = {{l1, trivial_bundle(pm, 1)}, {l2, trivial_bundle(pm, 1)}};
      e.components.push_back(std::move(f));
    }
  }
  e.expected_global = 4;
  e.expected_contributions = {1, 1, 1, 1};
  return e;
}

ExampleEntry fm_p2() {
  ExampleEntry e;
  e.id = std::string(kFultonMacPhersonP2);
  e.description = "X = (P^2)[2] = Bl_diag(P^2 x P^2), D = E the exceptional divisor";
  const RingPtr ring = blowup_p2xp2_ring();
  e.global.ring = ring;
  e.global.tangent = blowup_p2xp2_tangent(ring);
  e.global.divisors = {cls(ring, "E")};
  const Integer chi_p2 = euler_characteristic_projective(2);
  e.oracle = Oracle{"chi(P^2 x P^2) - chi(diagonal) = " + Integer(chi_p2 * chi_p2).get_str() + " - " + chi_p2.get_str(),
                    Rational(chi_p2 * chi_p2 - chi_p2)};
  e.expected_global = 6;
  e.notes = {
      "fixed components of the field induced by [u0:u1:l u2] (data not supplied):",
      "closures of L x L, L x {p}, {p} x L with L = {u2 = 0}, p = [0:0:1]",
      "two sections of E|_L = P(T_{P^2}|_L) (tangent and normal directions to L)",
      "the fiber E_p = P(T_p P^2)",
  };
  return e;
}

}  // namespace

std::vector<std::string> example_ids() {
  return {std::string(kWeightedP3), std::string(kP1P1Pm), std::string(kFultonMacPhersonP2)};
}

RingPtr weighted_p3_ring(int k) {
  // Generator order (xi, h) makes xi^2 the lead of xi^2 - k h xi.
  std::vector<Generator> gens{{"xi", 2}, {"h", 2}};
  std::vector<RewriteRule> rules{
      {mono({2, 0}), Polynomial::term(mono({1, 1}), Rational(k))},
      {mono({0, 3}), Polynomial(2)},
  };
  return make_ring(std::move(gens), std::move(rules), 6, IntegrationTable{{mono({1, 2}), Rational(1)}});
}

RingPtr blowup_p2xp2_ring() {
  // Derivation in docs/blowup_ring.md. Relations h1^3, h2^3, (h1 - h2) E and
  // E^2 - 3 h1 E + [diagonal]; the rules below are their reduced Groebner
  // basis for the order E > h1 > h2.
  std::vector<Generator> gens{{"E", 2}, {"h1", 2}, {"h2", 2}};
  std::vector<std::string> names{"E", "h1", "h2"};
  std::vector<RewriteRule> rules{
      {mono({0, 3, 0}), Polynomial(3)},
      {mono({0, 0, 3}), Polynomial(3)},
      {mono({1, 1, 0}), parse_polynomial("E*h2", names)},
      {mono({2, 0, 0}), parse_polynomial("3*E*h2 - h1^2 - h1*h2 - h2^2", names)},
  };
  return make_ring(std::move(gens), std::move(rules), 8, IntegrationTable{{mono({0, 2, 2}), Rational(1)}});
}

BundleData blowup_p2xp2_tangent(const RingPtr& ring) {
  // 0 -> T_X~ -> pi^* T_X -> j_* F -> 0 with F = N_diag / O_E(-1), a line
  // bundle on E extending to M = 3 h1 - E, so c(j_* F) = (1 + M)/(1 + M - E).
  const GradedClass one = GradedClass::constant(ring, 1);
  const GradedClass pullback = (one + cls(ring, "h1")).pow(3) * (one + cls(ring, "h2")).pow(3);
  const GradedClass m = cls(ring, "3*h1 - E");
  const GradedClass total = pullback * (one + m - cls(ring, "E")) * invert_unit(one + m);
  return bundle_from_total(ring, 4, total);
}

Integer euler_characteristic_projective(int n) { return Integer(n + 1); }

ExampleEntry build_example(std::string_view id, const ExampleParams& params) {
  if (id == kWeightedP3) return weighted_p3(params);
  if (id == kP1P1Pm) return p1p1pm(params);
  if (id == kFultonMacPhersonP2) return fm_p2();
  throw InputError("unknown example '" + std::string(id) + "'");
}

VerificationReport verify_entry(const ExampleEntry& entry) {
  if (!entry.components.empty() || !entry.oracle) {
    return verify(entry.id, entry.global, entry.components, entry.phi);
  }
  VerificationReport report;
  report.example = entry.id;
  report.phi = entry.phi.name();
  report.comparison = "oracle";
  report.contributions = {{entry.oracle->description, entry.oracle->value}};
  report.sum = entry.oracle->value;
  try {
    report.global_value = global_value(entry.global, entry.phi);
    report.matched = report.global_value == report.sum;
  } catch (const Error& e) {
    report.error = "global side: " + e.kind() + ": " + e.what();
  }
  return report;
}

io::Json entry_to_json(const ExampleEntry& entry) {
  io::Json components = io::Json::array();
  for (const auto& z : entry.components) components.push_back(io::component_to_json(z));
  io::Json contributions = io::Json::array();
  for (const auto& v : entry.expected_contributions) contributions.push_back(io::rational_to_json(v));
  io::Json out = {{"schema", io::kSchemaVersion},
                  {"id", entry.id},
                  {"description", entry.description},
                  {"parameters", entry.parameters},
                  {"phi", io::phi_to_json(entry.phi)},
                  {"global", io::global_to_json(entry.global)},
                  {"components", components},
                  {"expected_global", io::rational_to_json(entry.expected_global)},
                  {"expected_contributions", contributions}};
  if (entry.oracle) {
    out["oracle"] = {{"description", entry.oracle->description}, {"value", io::rational_to_json(entry.oracle->value)}};
  }
  if (!entry.notes.empty()) out["notes"] = entry.notes;
  return out;
}

ExampleEntry entry_from_json(const io::Json& j) {
  if (!j.is_object() || !j.contains("id") || !j.contains("global")) throw InputError("catalog entry needs id and global");
  ExampleEntry e;
  e.id = j.at("id").get<std::string>();
  e.description = j.value("description", "");
  if (j.contains("parameters")) e.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  e.phi = j.contains("phi") ? io::phi_from_json(j.at("phi")) : InvariantPolySpec::top_chern();
  e.global = io::global_from_json(j.at("global"));
  if (j.contains("components")) {
    for (const auto& z : j.at("components")) e.components.push_back(io::component_from_json(z));
  }
  if (j.contains("expected_global")) e.expected_global = io::rational_from_json(j.at("expected_global"));
  if (j.contains("expected_contributions")) {
    for (const auto& v : j.at("expected_contributions")) e.expected_contributions.push_back(io::rational_from_json(v));
  }
  if (j.contains("oracle")) {
    e.oracle = Oracle{j.at("oracle").value("description", ""), io::rational_from_json(j.at("oracle").at("value"))};
  }
  if (j.contains("notes")) e.notes = j.at("notes").get<std::vector<std::string>>();
  return e;
}

io::Json export_catalog() {
  io::Json entries = io::Json::array();
  for (const auto& id : example_ids()) entries.push_back(entry_to_json(build_example(id)));
  return {{"schema", io::kSchemaVersion}, {"entries", entries}};
}

namespace {

Polynomial scaled_var(std::size_t n, std::size_t i, const Rational& c) { return Polynomial::variable(n, i) * c; }

}  // namespace

std::vector<ChartCase> weighted_p3_charts(int k, const Rational& a, const Rational& b, const Rational& c) {
  using Kind = NondegeneracyVerdict::Kind;
  const Kind along_c = (a != b && c != k * a) ? Kind::Nondegenerate : Kind::Degenerate;
  const Kind at_p = (a != b && c != k * b) ? Kind::Nondegenerate : Kind::Degenerate;
  std::vector<ChartCase> out;
  // {z0 != 0}: u1 = z1/z0, u2 = z2/z0, tau = z3/z0^k; the curve C is u2 = tau = 0.
  {
    LogChartField v{3, {}, {Polynomial(3), scaled_var(3, 1, b - a), scaled_var(3, 2, c - k * a)}, {"u1", "u2", "tau"}};
    out.push_back({"curve-chart", {std::move(v), ComponentChart{{1, 2}}, along_c}});
  }
  // {z2 != 0}: v0, v1, eta = z3/z2^k; the isolated zero p is the origin.
  {
    LogChartField v{3, {}, {scaled_var(3, 0, a - b), scaled_var(3, 1, a - b), scaled_var(3, 2, c - k * b)},
                    {"v0", "v1", "eta"}};
    out.push_back({"point-chart", {std::move(v), ComponentChart{{0, 1, 2}}, at_p}});
  }
  // {z0 != 0} near D with sigma = 1/tau: log coefficient ka - c along sigma d/dsigma.
  {
    LogChartField v{3, {2}, {Polynomial(3), scaled_var(3, 1, b - a), Polynomial::constant(3, k * a - c)},
                    {"u1", "u2", "sigma"}};
    out.push_back({"boundary-chart-sigma", {std::move(v), ComponentChart{{1, 2}}, along_c}});
  }
  // {z2 != 0} near D with rho = 1/eta: log coefficient kb - c along rho d/drho.
  {
    LogChartField v{3, {2}, {scaled_var(3, 0, a - b), scaled_var(3, 1, a - b), Polynomial::constant(3, k * b - c)},
                    {"v0", "v1", "rho"}};
    out.push_back({"boundary-chart-rho", {std::move(v), ComponentChart{{0, 1, 2}}, at_p}});
  }
  return out;
}

ChartCase p1p1pm_chart(int m) {
  if (m < 1) throw InputError("p1p1pm chart needs m >= 1");
  const auto n = static_cast<std::size_t>(m + 2);
  LogChartField v;
  v.dim = m + 2;
  v.log_indices = {2};
  v.names = {"t", "w", "s0"};
  for (int i = 2; i <= m; ++i) v.names.push_back("s" + std::to_string(i));
  v.coeffs.assign(n, Polynomial(n));
  v.coeffs[0] = Polynomial::variable(n, 0);
  v.coeffs[1] = Polynomial::variable(n, 1);
  return {"fixed-component-chart", {std::move(v), ComponentChart{{0, 1}}, NondegeneracyVerdict::Kind::Nondegenerate}};
}

}  // namespace logbott::catalog

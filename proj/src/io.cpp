#include "logbott/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "logbott/errors.hpp"

namespace logbott::io {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("field '") + what + "' has the wrong type");
  }
}

Monomial monomial_from_json(const Json& j, std::size_t num_vars) {
  auto m = get_as<Monomial>(j, "monomial");
  if (m.size() != num_vars) {
    throw InputError("monomial has " + std::to_string(m.size()) + " exponents, expected " + std::to_string(num_vars));
  }
  return m;
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw InputError("rationals are serialized as \"p/q\" strings or integers");
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) out.push_back(Json::array({rational_to_json(c), m}));
  return out;
}

Polynomial polynomial_from_json(const Json& j, std::size_t num_vars, std::span<const std::string> names) {
  if (j.is_string()) {
    if (names.size() != num_vars) throw InputError("string polynomial without variable names");
    return parse_polynomial(j.get<std::string>(), names);
  }
  if (!j.is_array()) throw InputError("polynomial must be a list of [coefficient, exponents] pairs");
  Polynomial p(num_vars);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw InputError("polynomial term must be [coefficient, exponents]");
    p.add_term(monomial_from_json(term[1], num_vars), rational_from_json(term[0]));
  }
  return p;
}

Json ring_to_json(const RingPresentation& ring) {
  Json gens = Json::array();
  for (const auto& g : ring.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  Json rules = Json::array();
  for (const auto& r : ring.rules()) rules.push_back({{"lead", r.lead}, {"rhs", polynomial_to_json(r.rhs)}});
  Json table = Json::array();
  for (const auto& [m, v] : ring.integration_table()) {
    table.push_back({{"monomial", m}, {"value", rational_to_json(v)}});
  }
  return {{"generators", gens}, {"rules", rules}, {"top_degree", ring.top_degree()}, {"integration_table", table}};
}

RingPtr ring_from_json(const Json& j) {
  std::vector<Generator> gens;
  for (const auto& g : require(j, "generators")) {
    gens.push_back({get_as<std::string>(require(g, "name"), "name"), get_as<int>(require(g, "degree"), "degree")});
  }
  std::vector<std::string> names;
  for (const auto& g : gens) names.push_back(g.name);
  const std::size_t n = gens.size();
  std::vector<RewriteRule> rules;
  for (const auto& r : require(j, "rules")) {
    const Json& lead = require(r, "lead");
    Monomial m;
    if (lead.is_string()) {
      const Polynomial p = parse_polynomial(lead.get<std::string>(), names);
      if (p.terms().size() != 1 || p.terms().begin()->second != 1) throw InputError("rule lead must be a monomial");
      m = p.terms().begin()->first;
    } else {
      m = monomial_from_json(lead, n);
    }
    rules.push_back({std::move(m), polynomial_from_json(require(r, "rhs"), n, names)});
  }
  IntegrationTable table;
  for (const auto& e : require(j, "integration_table")) {
    table[monomial_from_json(require(e, "monomial"), n)] = rational_from_json(require(e, "value"));
  }
  return make_ring(std::move(gens), std::move(rules), get_as<int>(require(j, "top_degree"), "top_degree"),
                   std::move(table));
}

Json bundle_to_json(const BundleData& e) {
  Json chern = Json::array();
  for (const auto& c : e.chern) chern.push_back(polynomial_to_json(c.to_polynomial()));
  return {{"rank", e.rank}, {"chern", chern}};
}

BundleData bundle_from_json(const Json& j, const RingPtr& ring) {
  const int rank = get_as<int>(require(j, "rank"), "rank");
  std::vector<GradedClass> chern;
  for (const auto& c : require(j, "chern")) {
    chern.push_back(
        GradedClass::from_polynomial(ring, polynomial_from_json(c, ring->num_generators(), ring->generator_names())));
  }
  BundleData e{ring, rank, std::move(chern)};
  e.validate();
  return e;
}

Json phi_to_json(const InvariantPolySpec& phi) {
  if (phi.is_top_chern()) return "top_chern";
  Json factors = Json::array();
  for (const auto& [i, a] : phi.factors()) factors.push_back(Json::array({i, a}));
  return {{"monomial", factors}};
}

InvariantPolySpec phi_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "top_chern") return InvariantPolySpec::top_chern();
    throw InputError("unknown invariant polynomial '" + j.get<std::string>() + "'");
  }
  std::vector<std::pair<int, int>> factors;
  for (const auto& f : require(j, "monomial")) {
    if (!f.is_array() || f.size() != 2) throw InputError("Chern monomial factor must be [index, exponent]");
    factors.emplace_back(get_as<int>(f[0], "index"), get_as<int>(f[1], "exponent"));
  }
  return InvariantPolySpec::chern_monomial(std::move(factors));
}

namespace {

Json blocks_to_json(const std::vector<EigenBlock>& blocks) {
  Json out = Json::array();
  for (const auto& b : blocks) out.push_back({{"lambda", rational_to_json(b.eigenvalue)}, {"bundle", bundle_to_json(b.bundle)}});
  return out;
}

std::vector<EigenBlock> blocks_from_json(const Json& j, const RingPtr& ring) {
  std::vector<EigenBlock> out;
  for (const auto& b : j) {
    const Json& lambda = require(b, "lambda");
    if (!lambda.is_string() && !lambda.is_number_integer()) {
      throw InputError("eigenvalues must be constant rationals; non-constant weights are not supported");
    }
    out.push_back({rational_from_json(lambda), bundle_from_json(require(b, "bundle"), ring)});
  }
  return out;
}

}  // namespace

Json component_to_json(const FixedComponent& z) {
  return {{"name", z.name},
          {"dim", z.dim},
          {"codim", z.codim},
          {"ring", ring_to_json(*z.ring)},
          {"k_blocks", blocks_to_json(z.k_blocks)},
          {"n_blocks", blocks_to_json(z.n_blocks)},
          {"log_transversal", z.log_transversal}};
}

FixedComponent component_from_json(const Json& j) {
  FixedComponent z;
  z.name = get_as<std::string>(require(j, "name"), "name");
  z.dim = get_as<int>(require(j, "dim"), "dim");
  z.codim = get_as<int>(require(j, "codim"), "codim");
  z.ring = ring_from_json(require(j, "ring"));
  z.k_blocks = blocks_from_json(require(j, "k_blocks"), z.ring);
  z.n_blocks = blocks_from_json(require(j, "n_blocks"), z.ring);
  z.log_transversal = j.value("log_transversal", true);
  z.validate();
  return z;
}

Json global_to_json(const GlobalSide& g) {
  Json divisors = Json::array();
  for (const auto& d : g.divisors) divisors.push_back(polynomial_to_json(d.to_polynomial()));
  Json out = {{"ring", ring_to_json(*g.ring)}, {"tangent", bundle_to_json(g.tangent)}, {"divisors", divisors}};
  if (g.direct_log_bundle) out["direct_log_bundle"] = bundle_to_json(*g.direct_log_bundle);
  return out;
}

GlobalSide global_from_json(const Json& j) {
  GlobalSide g;
  g.ring = ring_from_json(require(j, "ring"));
  g.tangent = bundle_from_json(require(j, "tangent"), g.ring);
  for (const auto& d : require(j, "divisors")) {
    g.divisors.push_back(GradedClass::from_polynomial(
        g.ring, polynomial_from_json(d, g.ring->num_generators(), g.ring->generator_names())));
  }
  if (j.contains("direct_log_bundle")) g.direct_log_bundle = bundle_from_json(j.at("direct_log_bundle"), g.ring);
  g.validate();
  return g;
}

Json report_to_json(const VerificationReport& r) {
  Json contributions = Json::array();
  for (const auto& c : r.contributions) {
    contributions.push_back({{"component", c.component}, {"value", rational_to_json(c.value)}});
  }
  Json out = {{"schema", kSchemaVersion},
              {"example", r.example},
              {"phi", r.phi},
              {"comparison", r.comparison},
              {"global", rational_to_json(r.global_value)},
              {"contributions", contributions},
              {"sum", rational_to_json(r.sum)},
              {"matched", r.matched},
              {"log_transversal_asserted", r.log_transversal_asserted}};
  if (r.error) out["error"] = *r.error;
  return out;
}

Json chart_to_json(const ChartInput& chart) {
  const auto& v = chart.field;
  Json coeffs = Json::array();
  for (const auto& a : v.coeffs) coeffs.push_back(polynomial_to_json(a));
  Json out = {{"dim", v.dim}};
  if (!v.names.empty()) out["names"] = v.names;
  out["log_indices"] = v.log_indices;
  out["coeffs"] = coeffs;
  out["component"] = {{"normal_coords", chart.component.normal_coords}};
  if (chart.expected_verdict) {
    std::string e = to_string(*chart.expected_verdict);
    std::transform(e.begin(), e.end(), e.begin(), [](unsigned char ch) { return std::tolower(ch); });
    out["expect"] = e;
  }
  return out;
}

ChartInput chart_from_json(const Json& j) {
  LogChartField v;
  v.dim = get_as<int>(require(j, "dim"), "dim");
  if (v.dim < 0) throw InputError("chart dimension must be nonnegative");
  if (j.contains("names")) v.names = get_as<std::vector<std::string>>(j.at("names"), "names");
  v.log_indices = get_as<std::vector<std::size_t>>(require(j, "log_indices"), "log_indices");
  const auto names = v.display_names();
  for (const auto& a : require(j, "coeffs")) {
    v.coeffs.push_back(polynomial_from_json(a, static_cast<std::size_t>(v.dim), names));
  }
  v.validate();
  ChartInput out{std::move(v), {}, std::nullopt};
  out.component.normal_coords =
      get_as<std::vector<std::size_t>>(require(require(j, "component"), "normal_coords"), "normal_coords");
  out.component.validate(out.field.dim);
  if (j.contains("expect")) {
    const auto e = get_as<std::string>(j.at("expect"), "expect");
    using Kind = NondegeneracyVerdict::Kind;
    if (e == "nondegenerate") out.expected_verdict = Kind::Nondegenerate;
    else if (e == "degenerate") out.expected_verdict = Kind::Degenerate;
    else if (e == "indeterminate") out.expected_verdict = Kind::Indeterminate;
    else throw InputError("expect must be nondegenerate, degenerate or indeterminate");
  }
  return out;
}

MapInput map_from_json(const Json& j) {
  const int k = get_as<int>(require(j, "k"), "k");
  if (k < 1) throw InputError("map dimension k must be positive");
  const auto n = static_cast<std::size_t>(k);
  std::vector<std::string> names =
      j.contains("names") ? get_as<std::vector<std::string>>(j.at("names"), "names") : default_names(n, "y");
  if (names.size() != n) throw InputError("map names do not match k");
  std::vector<Polynomial> f;
  for (const auto& p : require(j, "f")) f.push_back(polynomial_from_json(p, n, names));
  if (f.size() != n) throw InputError("map needs exactly k components");
  Polynomial g = j.contains("g") ? polynomial_from_json(j.at("g"), n, names) : Polynomial::constant(n, 1);
  std::optional<RationalMatrix> transform;
  if (j.contains("transform")) {
    RationalMatrix m;
    for (const auto& row : j.at("transform")) {
      std::vector<Rational> r;
      for (const auto& e : row) r.push_back(rational_from_json(e));
      m.push_back(std::move(r));
    }
    transform = std::move(m);
  }
  return MapInput{LocalMap(std::move(f)), std::move(g), std::move(transform), std::move(names)};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

}  // namespace logbott::io

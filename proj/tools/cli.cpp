#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>

#include "logbott/catalog.hpp"
#include "logbott/ch_numeric.hpp"
#include "logbott/errors.hpp"
#include "logbott/io.hpp"
#include "logbott/log_field.hpp"

namespace logbott::cli {

namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = 0;

  std::string example;
  bool all = false;
  std::string file;
  std::optional<int> k, m;
  std::optional<std::string> a, b, c;

  std::string path;
  double eps = 0.1;
  int points = 64;
  bool richardson = false;
  double tolerance = 1e-6;
};

std::string complex_str(Complex z) {
  std::ostringstream s;
  s << std::setprecision(15) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return s.str();
}

io::Json complex_json(Complex z) { return io::Json::array({z.real(), z.imag()}); }

std::string matrix_str(const PolynomialMatrix& m, const std::vector<std::string>& names, const std::string& indent) {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 0;
  for (const auto& row : m) {
    auto& r = cells.emplace_back();
    for (const auto& e : row) {
      r.push_back(e.to_string(names));
      width = std::max(width, r.back().size());
    }
  }
  std::ostringstream s;
  for (const auto& r : cells) {
    s << indent << "[";
    for (std::size_t j = 0; j < r.size(); ++j) s << (j ? "  " : " ") << std::setw(static_cast<int>(width)) << r[j];
    s << " ]\n";
  }
  return s.str();
}

io::Json matrix_json(const PolynomialMatrix& m, const std::vector<std::string>& names) {
  io::Json out = io::Json::array();
  for (const auto& row : m) {
    io::Json r = io::Json::array();
    for (const auto& e : row) r.push_back(e.to_string(names));
    out.push_back(r);
  }
  return out;
}

// --- verify ----------------------------------------------------------------

struct VerifyOutcome {
  catalog::ExampleEntry entry;
  VerificationReport report;
  bool ok = false;
};

VerifyOutcome verify_one(catalog::ExampleEntry entry) {
  VerifyOutcome o{std::move(entry), {}, false};
  o.report = catalog::verify_entry(o.entry);
  o.ok = o.report.matched && !o.report.error && o.report.global_value == o.entry.expected_global;
  return o;
}

std::vector<catalog::ExampleEntry> entries_from_file(const std::string& path) {
  const io::Json j = io::read_json_file(path);
  std::vector<catalog::ExampleEntry> out;
  if (j.is_object() && j.contains("entries")) {
    for (const auto& e : j.at("entries")) out.push_back(catalog::entry_from_json(e));
  } else {
    out.push_back(catalog::entry_from_json(j));
  }
  return out;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  catalog::ExampleParams params;
  if (opt.k) params.k = *opt.k;
  if (opt.m) params.m = *opt.m;
  if (opt.a) params.a = parse_rational(*opt.a);
  if (opt.b) params.b = parse_rational(*opt.b);
  if (opt.c) params.c = parse_rational(*opt.c);

  std::vector<catalog::ExampleEntry> entries;
  if (!opt.file.empty()) {
    entries = entries_from_file(opt.file);
  } else if (opt.all) {
    for (const auto& id : catalog::example_ids()) entries.push_back(catalog::build_example(id, params));
  } else if (!opt.example.empty()) {
    entries.push_back(catalog::build_example(opt.example, params));
  } else {
    err << "verify: give an example id, --all, or --file\n";
    return kInputError;
  }

  std::vector<std::future<VerifyOutcome>> jobs;
  for (auto& e : entries) jobs.push_back(std::async(std::launch::async, verify_one, std::move(e)));
  std::vector<VerifyOutcome> results;
  for (auto& j : jobs) results.push_back(j.get());

  const bool all_ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.ok; });
  if (opt.json) {
    io::Json reports = io::Json::array();
    for (const auto& r : results) {
      io::Json rep = io::report_to_json(r.report);
      rep["expected_global"] = io::rational_to_json(r.entry.expected_global);
      rep["ok"] = r.ok;
      reports.push_back(rep);
    }
    out << io::Json{{"schema", io::kSchemaVersion}, {"command", "verify"}, {"ok", all_ok}, {"reports", reports}}.dump(2)
        << '\n';
  } else {
    out << std::left << std::setw(14) << "example" << std::setw(12) << "phi" << std::setw(10) << "global"
        << std::setw(10) << "sum" << std::setw(10) << "expected" << "status\n";
    for (const auto& r : results) {
      const auto& rep = r.report;
      out << std::setw(14) << rep.example << std::setw(12) << rep.phi << std::setw(10)
          << (rep.error ? "-" : to_string(rep.global_value)) << std::setw(10) << to_string(rep.sum) << std::setw(10)
          << to_string(r.entry.expected_global) << (r.ok ? "ok" : "MISMATCH") << '\n';
      for (const auto& c : rep.contributions) out << "    " << c.component << ": " << to_string(c.value) << '\n';
      if (rep.comparison == "oracle") out << "    (compared with an independent count)\n";
      if (rep.error) out << "    error: " << *rep.error << '\n';
    }
    out << std::right;
  }
  return all_ok ? kOk : kCheckFailed;
}

// --- analyze-field -----------------------------------------------------------

int cmd_analyze(const Options& opt, std::ostream& out) {
  const io::ChartInput chart = io::chart_from_json(io::read_json_file(opt.path));
  const auto& v = chart.field;
  const auto names = v.display_names();
  const BottMatrix bm = bott_matrix(v, chart.component);
  const NondegeneracyVerdict verdict = check_nondegenerate(bm, v.dim, {opt.seed, 16});
  const auto eigen = log_eigenvalues(v, chart.component);
  const auto ideal = zero_ideal(v);

  bool ok = true;
  if (chart.expected_verdict) ok = *chart.expected_verdict == verdict.kind;

  std::vector<std::string> normal_names;
  for (auto i : chart.component.normal_coords) normal_names.push_back(names[i]);

  if (opt.json) {
    io::Json gens = io::Json::array();
    for (const auto& p : ideal) gens.push_back(p.to_string(names));
    io::Json eig = io::Json::array();
    for (const auto& e : eigen) eig.push_back({{"coordinate", names[e.coordinate]}, {"eigenvalue", e.eigenvalue.to_string(names)}});
    io::Json samples = io::Json::array();
    for (const auto& s : verdict.samples) {
      io::Json pt = io::Json::array();
      for (const auto& x : s.point) pt.push_back(io::rational_to_json(x));
      samples.push_back({{"point", pt}, {"determinant", io::rational_to_json(s.determinant)}});
    }
    io::Json doc = {{"schema", io::kSchemaVersion},
                    {"command", "analyze-field"},
                    {"coordinates", names},
                    {"normal_coordinates", normal_names},
                    {"zero_ideal", gens},
                    {"bott_matrix", matrix_json(bm.conormal, names)},
                    {"normal_matrix", matrix_json(bm.normal(), names)},
                    {"determinant", verdict.determinant.to_string(names)},
                    {"verdict", to_string(verdict.kind)},
                    {"samples", samples},
                    {"log_eigenvalues", eig},
                    {"ok", ok}};
    if (chart.expected_verdict) doc["expected_verdict"] = to_string(*chart.expected_verdict);
    out << doc.dump(2) << '\n';
  } else {
    out << "coordinates: ";
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i] << (v.is_log_index(i) ? " (log)" : "");
    out << "\nzero ideal: (";
    for (std::size_t i = 0; i < ideal.size(); ++i) out << (i ? ", " : "") << ideal[i].to_string(names);
    out << ")\ncomponent: ";
    for (std::size_t i = 0; i < normal_names.size(); ++i) out << (i ? " = " : "") << normal_names[i];
    out << " = 0\nBott matrix on I/I^2:\n" << matrix_str(bm.conormal, names, "  ");
    out << "determinant: " << verdict.determinant.to_string(names) << '\n';
    for (const auto& e : eigen) out << "log eigenvalue along " << names[e.coordinate] << ": " << e.eigenvalue.to_string(names) << '\n';
    out << "verdict: " << to_string(verdict.kind);
    if (verdict.kind == NondegeneracyVerdict::Kind::Degenerate && !verdict.samples.empty()) {
      out << " (vanishes at";
      for (const auto& x : verdict.samples.back().point) out << ' ' << to_string(x);
      out << ')';
    }
    out << '\n';
    if (!ok) out << "expected verdict: " << to_string(*chart.expected_verdict) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

// --- ch-residue ----------------------------------------------------------------

int cmd_ch_residue(const Options& opt, std::ostream& out) {
  const io::MapInput input = io::map_from_json(io::read_json_file(opt.path));
  QuadratureConfig cfg;
  cfg.eps = opt.eps;
  cfg.points = opt.points;
  cfg.tolerance = opt.tolerance;
  cfg.ladder = opt.richardson ? std::vector<double>{opt.eps, opt.eps / 2} : std::vector<double>{opt.eps};
  cfg.validate(input.map.codim());

  const std::vector<Rational> origin(input.names.size(), Rational(0));
  const Rational expected = input.test_function.evaluate(origin);
  const double target = expected.get_d();
  const RichardsonResult limit = residue_limit(input.map, input.test_function, cfg);
  const double error = std::abs(limit.extrapolated - Complex(target));
  bool ok = error <= cfg.tolerance;

  std::optional<std::pair<Complex, Complex>> transformed;
  double transform_gap = 0;
  if (input.transform) {
    transformed = transformation_check(input.map, *input.transform, input.test_function, cfg);
    transform_gap = std::abs(transformed->first - transformed->second);
    ok = ok && transform_gap <= cfg.tolerance;
  }

  if (opt.json) {
    io::Json samples = io::Json::array();
    for (const auto& [e, z] : limit.samples) samples.push_back({{"eps", e}, {"value", complex_json(z)}});
    io::Json doc = {{"schema", io::kSchemaVersion},
                    {"command", "ch-residue"},
                    {"points", cfg.points},
                    {"samples", samples},
                    {"residue", complex_json(limit.extrapolated)},
                    {"expected", io::rational_to_json(expected)},
                    {"error", error},
                    {"tolerance", cfg.tolerance},
                    {"ok", ok}};
    if (transformed) {
      doc["transformed"] = complex_json(transformed->second);
      doc["transform_gap"] = transform_gap;
    }
    out << doc.dump(2) << '\n';
  } else {
    out << std::setprecision(15);
    for (const auto& [e, z] : limit.samples) out << "eps " << e << ": " << complex_str(z) << '\n';
    if (limit.samples.size() > 1) out << "extrapolated: " << complex_str(limit.extrapolated) << '\n';
    out << "g(0) = " << to_string(expected) << ", |error| = " << std::setprecision(3) << error << " (tolerance "
        << cfg.tolerance << ")\n";
    if (transformed) {
      out << std::setprecision(15) << "after transform: " << complex_str(transformed->second) << ", gap "
          << std::setprecision(3) << transform_gap << '\n';
    }
    out << (ok ? "ok" : "OUT OF TOLERANCE") << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_export(const Options& opt, std::ostream& out) {
  io::write_json_file(opt.path, catalog::export_catalog());
  if (!opt.json) out << "wrote " << catalog::example_ids().size() << " entries to " << opt.path << '\n';
  else out << io::Json{{"schema", io::kSchemaVersion}, {"command", "export-catalog"}, {"path", opt.path}}.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact checks of logarithmic Bott residue formulas"};
  app.name("logbott");
  app.require_subcommand(1, 1);
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--seed", opt.seed, "seed for sampling grids")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "compare the global side with the localization sum");
  verify->add_option("example", opt.example, "example id")->check(CLI::IsMember(catalog::example_ids()));
  verify->add_flag("--all", opt.all, "every built-in example");
  verify->add_option("--file", opt.file, "catalog entry or catalog document")->check(CLI::ExistingFile);
  verify->add_option("--k", opt.k, "weight of the last coordinate (weighted-p3)");
  verify->add_option("--a", opt.a, "eigenvalue a (weighted-p3)");
  verify->add_option("--b", opt.b, "eigenvalue b (weighted-p3)");
  verify->add_option("--c", opt.c, "eigenvalue c (weighted-p3)");
  verify->add_option("--m", opt.m, "dimension of the projective factor (p1p1pm)");
  verify->fallthrough();

  auto* analyze = app.add_subcommand("analyze-field", "Bott matrix and nondegeneracy of a field on a chart");
  analyze->add_option("path", opt.path, "chart file")->required()->check(CLI::ExistingFile);
  analyze->fallthrough();

  auto* residue = app.add_subcommand("ch-residue", "numeric residue of g df/f over a polytube");
  residue->add_option("path", opt.path, "map file")->required()->check(CLI::ExistingFile);
  residue->add_option("--eps", opt.eps, "polytube radius")->check(CLI::PositiveNumber)->capture_default_str();
  residue->add_option("--points", opt.points, "quadrature points per circle (power of two)")->capture_default_str();
  residue->add_flag("--richardson", opt.richardson, "extrapolate over eps and eps/2");
  residue->add_option("--tolerance", opt.tolerance, "accepted distance from g(0)")->check(CLI::PositiveNumber)->capture_default_str();
  residue->fallthrough();

  auto* exporter = app.add_subcommand("export-catalog", "write the built-in examples as JSON");
  exporter->add_option("path", opt.path, "output file")->required();
  exporter->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (verify->parsed()) {
      if (opt.all + !opt.example.empty() + !opt.file.empty() > 1) {
        err << "verify: example id, --all and --file are exclusive\n";
        return kInputError;
      }
      return cmd_verify(opt, out, err);
    }
    if (analyze->parsed()) return cmd_analyze(opt, out);
    if (residue->parsed()) return cmd_ch_residue(opt, out);
    if (exporter->parsed()) return cmd_export(opt, out);
  } catch (const Error& e) {
    if (opt.json) {
      out << io::Json{{"schema", io::kSchemaVersion}, {"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump(2) << '\n';
    } else {
      err << "error (" << e.kind() << "): " << e.what() << '\n';
    }
    return kInputError;
  }
  return kInputError;
}

}  // namespace logbott::cli

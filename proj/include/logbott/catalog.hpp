#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logbott/io.hpp"
#include "logbott/localization.hpp"
#include "logbott/log_field.hpp"

namespace logbott::catalog {

// Identifiers of the built-in examples.
inline constexpr std::string_view kWeightedP3 = "weighted-p3";  // resolution of P(1,1,1,k)
inline constexpr std::string_view kP1P1Pm = "p1p1pm";           // P^1 x P^1 x P^m, D = P^1 x P^1 x H
inline constexpr std::string_view kFultonMacPhersonP2 = "fm-p2";  // (P^2)[2] = Bl_diag(P^2 x P^2)

std::vector<std::string> example_ids();

struct ExampleParams {
  int k = 2;  // weighted-p3
  Rational a = 1, b = 2, c = 7;
  int m = 2;  // p1p1pm
};

// Independent count compared with the global side when no per-component
// data is available.
struct Oracle {
  std::string description;
  Rational value;
};

struct ExampleEntry {
  std::string id;
  std::string description;
  std::map<std::string, std::string> parameters;
  GlobalSide global;
  std::vector<FixedComponent> components;
  InvariantPolySpec phi = InvariantPolySpec::top_chern();
  Rational expected_global;
  std::vector<Rational> expected_contributions;
  std::optional<Oracle> oracle;
  std::vector<std::string> notes;
};

// Throws ConstraintError naming the violated inequality for inadmissible
// parameters and InputError for unknown ids.
ExampleEntry build_example(std::string_view id, const ExampleParams& params = {});

// Localization report, or the oracle comparison for entries without
// component data.
VerificationReport verify_entry(const ExampleEntry& entry);

io::Json entry_to_json(const ExampleEntry& entry);
ExampleEntry entry_from_json(const io::Json& j);

// Document holding every built-in example at default parameters.
io::Json export_catalog();

// Chow ring Q[h, xi]/(h^3, xi^2 - k h xi) of P(O + O(k)) over P^2.
RingPtr weighted_p3_ring(int k);
// Q[E, h1, h2] presentation of the blow-up of P^2 x P^2 along the diagonal.
RingPtr blowup_p2xp2_ring();
// c(T) of the blow-up, from c(T_{P^2 x P^2}) and the exceptional divisor.
BundleData blowup_p2xp2_tangent(const RingPtr& ring);

// Euler characteristic of P^n.
Integer euler_characteristic_projective(int n);

struct ChartCase {
  std::string name;
  io::ChartInput chart;
};

// The four SNC charts of the weighted-p3 field with raw (unchecked)
// parameters: the curve chart, the chart at the isolated point, and the two
// charts at the exceptional divisor.
std::vector<ChartCase> weighted_p3_charts(int k, const Rational& a, const Rational& b, const Rational& c);
// Chart (t, w, s_0, s_2, ..., s_m) near a fixed component of the p1p1pm
// field, boundary s_0 = 0.
ChartCase p1p1pm_chart(int m);

}  // namespace logbott::catalog

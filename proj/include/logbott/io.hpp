#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "logbott/ch_numeric.hpp"
#include "logbott/localization.hpp"
#include "logbott/log_field.hpp"

namespace logbott::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// Polynomials are lists of [coefficient, [exponents...]]. On input a string
// such as "2*h*xi - 1" is also accepted when variable names are known.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, std::size_t num_vars, std::span<const std::string> names = {});

Json ring_to_json(const RingPresentation& ring);
RingPtr ring_from_json(const Json& j);

Json bundle_to_json(const BundleData& e);
BundleData bundle_from_json(const Json& j, const RingPtr& ring);

Json phi_to_json(const InvariantPolySpec& phi);
InvariantPolySpec phi_from_json(const Json& j);

Json component_to_json(const FixedComponent& z);
FixedComponent component_from_json(const Json& j);

Json global_to_json(const GlobalSide& g);
GlobalSide global_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);

struct ChartInput {
  LogChartField field;
  ComponentChart component;
  std::optional<NondegeneracyVerdict::Kind> expected_verdict;
};
Json chart_to_json(const ChartInput& chart);
ChartInput chart_from_json(const Json& j);

struct MapInput {
  LocalMap map;
  Polynomial test_function;
  std::optional<RationalMatrix> transform;
  std::vector<std::string> names;
};
MapInput map_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace logbott::io

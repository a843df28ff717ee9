#include "logbott/localization.hpp"

#include "logbott/errors.hpp"

namespace logbott {

namespace {

int total_rank(std::span<const EigenBlock> blocks) {
  int r = 0;
  for (const auto& b : blocks) r += b.bundle.rank;
  return r;
}

}  // namespace

void FixedComponent::validate() const {
  const std::string where = "component '" + name + "'";
  if (!ring) throw InputError(where + " has no ring");
  if (dim < 0 || codim < 1) throw InputError(where + ": need dim >= 0 and codim >= 1");
  if (ring->top_degree() != 2 * dim) {
    throw InputError(where + ": ring top degree " + std::to_string(ring->top_degree()) + " does not match dim " +
                     std::to_string(dim));
  }
  if (ring->integration_table().empty()) throw InputError(where + ": ring has no integration table");
  for (const auto* blocks : {&k_blocks, &n_blocks}) {
    for (const auto& b : *blocks) {
      b.bundle.validate();
      if (!same_ring(b.bundle.ring, ring)) throw RingMismatchError(where + ": eigenblock over a foreign ring");
    }
  }
  if (total_rank(k_blocks) != dim) {
    throw InputError(where + ": K blocks have total rank " + std::to_string(total_rank(k_blocks)) +
                     ", expected dim " + std::to_string(dim));
  }
  if (total_rank(n_blocks) != codim) {
    throw InputError(where + ": N blocks have total rank " + std::to_string(total_rank(n_blocks)) +
                     ", expected codim " + std::to_string(codim));
  }
  for (const auto& b : n_blocks) {
    if (b.eigenvalue == 0) throw NondegeneracyError(where + ": normal eigenvalue 0 violates Bott nondegeneracy");
  }
}

void GlobalSide::validate() const {
  if (!ring) throw InputError("global side has no ring");
  tangent.validate();
  if (!same_ring(tangent.ring, ring)) throw RingMismatchError("tangent bundle over a foreign ring");
  if (2 * tangent.rank != ring->top_degree()) {
    throw InputError("tangent rank " + std::to_string(tangent.rank) + " does not match ring top degree " +
                     std::to_string(ring->top_degree()));
  }
  for (const auto& d : divisors) {
    if (!same_ring(d.ring(), ring)) throw RingMismatchError("divisor class over a foreign ring");
  }
  if (direct_log_bundle) {
    direct_log_bundle->validate();
    if (direct_log_bundle->rank != tangent.rank) throw InputError("direct log bundle rank differs from tangent rank");
  }
}

GradedClass residue_form(const FixedComponent& z, const InvariantPolySpec& phi) {
  z.validate();
  std::vector<ShiftedChernPolynomial> shifted;
  for (const auto* blocks : {&z.k_blocks, &z.n_blocks}) {
    for (const auto& b : *blocks) shifted.push_back(shift_block(b.eigenvalue, b.bundle));
  }
  const GradedClass numerator = evaluate_phi(phi, block_product(shifted));
  const GradedClass inverse_det = invert_unit(equivariant_det(z.n_blocks));
  return homogeneous_part(numerator * inverse_det, 2 * z.dim);
}

Rational local_contribution(const FixedComponent& z, const InvariantPolySpec& phi) {
  return integrate(residue_form(z, phi), *z.ring);
}

Rational localization_sum(std::span<const FixedComponent> components, const InvariantPolySpec& phi) {
  Rational sum(0);
  for (const auto& z : components) sum += local_contribution(z, phi);
  return sum;
}

Rational global_value(const GlobalSide& global, const InvariantPolySpec& phi) {
  global.validate();
  const BundleData quotient = log_chern(global.tangent, global.divisors);
  const BundleData* log_bundle = &quotient;
  if (global.direct_log_bundle) {
    const GradedClass direct_total = total_chern(*global.direct_log_bundle);
    const GradedClass quotient_total = total_chern(quotient);
    if (!(direct_total == quotient_total)) {
      throw ConsistencyError("direct log bundle total class " + direct_total.to_string() +
                             " differs from c(T_X)/prod(1+D_i) = " + quotient_total.to_string());
    }
    log_bundle = &*global.direct_log_bundle;
  }
  return integrate(evaluate_phi(phi, unshifted(*log_bundle)), *global.ring);
}

VerificationReport verify(const std::string& example, const GlobalSide& global,
                          std::span<const FixedComponent> components, const InvariantPolySpec& phi) {
  VerificationReport report;
  report.example = example;
  report.phi = phi.name();
  report.sum = 0;
  try {
    report.global_value = global_value(global, phi);
  } catch (const Error& e) {
    report.error = "global side: " + std::string(e.kind()) + ": " + e.what();
  }
  for (const auto& z : components) {
    report.log_transversal_asserted = report.log_transversal_asserted && z.log_transversal;
    try {
      const Rational value = local_contribution(z, phi);
      report.contributions.push_back({z.name, value});
      report.sum += value;
    } catch (const Error& e) {
      if (!report.error) report.error = "component '" + z.name + "': " + e.kind() + ": " + e.what();
    }
  }
  report.matched = !report.error && report.sum == report.global_value;
  return report;
}

}  // namespace logbott

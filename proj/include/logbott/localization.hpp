#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logbott/chern.hpp"

namespace logbott {

// One connected component Z of the zero scheme. The log tangent bundle
// restricted to Z splits as K (rank r = dim Z) plus the normal bundle N
// (rank k = codim Z); each is given as eigenblocks of the Bott action.
struct FixedComponent {
  std::string name;
  int dim = 0;
  int codim = 1;
  RingPtr ring;
  std::vector<EigenBlock> k_blocks;
  std::vector<EigenBlock> n_blocks;
  // Surjectivity of T_X(-log D)|_Z -> N is asserted by the caller, not checked.
  bool log_transversal = true;

  // Ranks, ring degree, ring identity of every block, nonzero normal
  // eigenvalues. Throws InputError / NondegeneracyError.
  void validate() const;
};

struct GlobalSide {
  RingPtr ring;
  BundleData tangent;
  std::vector<GradedClass> divisors;
  // Known splitting of T_X(-log D); cross-checked against the quotient formula.
  std::optional<BundleData> direct_log_bundle;

  void validate() const;
  int dim() const { return tangent.rank; }
};

struct Contribution {
  std::string component;
  Rational value;
};

struct VerificationReport {
  std::string example;
  std::string phi;
  // "localization" sums residues; "oracle" compares with an independent count.
  std::string comparison = "localization";
  Rational global_value;
  std::vector<Contribution> contributions;
  Rational sum;
  bool matched = false;
  bool log_transversal_asserted = true;
  std::optional<std::string> error;
};

// Degree-2r part of Phi(A + Omega_K) * det(A + Omega_N)^{-1} on Z.
GradedClass residue_form(const FixedComponent& z, const InvariantPolySpec& phi);
Rational local_contribution(const FixedComponent& z, const InvariantPolySpec& phi);
Rational localization_sum(std::span<const FixedComponent> components, const InvariantPolySpec& phi);
Rational global_value(const GlobalSide& global, const InvariantPolySpec& phi);

// Never throws for mathematical failures: errors are recorded in the report
// and force matched = false.
VerificationReport verify(const std::string& example, const GlobalSide& global,
                          std::span<const FixedComponent> components, const InvariantPolySpec& phi);

}  // namespace logbott

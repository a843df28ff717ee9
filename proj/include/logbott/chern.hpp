#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "logbott/graded_ring.hpp"

namespace logbott {

// A vector bundle known through its Chern classes c_1..c_rank; c_i is
// homogeneous of degree 2i in the ambient ring.
struct BundleData {
  RingPtr ring;
  int rank = 0;
  std::vector<GradedClass> chern;

  // Checks rank/length agreement, the ambient ring and the degree of every
  // c_i. Throws InputError.
  void validate() const;
  const GradedClass& c(int i) const { return chern.at(static_cast<std::size_t>(i - 1)); }
};

BundleData make_bundle(RingPtr ring, std::vector<GradedClass> chern);
BundleData trivial_bundle(RingPtr ring, int rank);
// Reads c_1..c_rank off an inhomogeneous total class. Nonzero parts above
// degree 2*rank raise ConsistencyError.
BundleData bundle_from_total(RingPtr ring, int rank, const GradedClass& total);

GradedClass total_chern(const BundleData& e);
BundleData whitney_product(const BundleData& e, const BundleData& f);
// c(T_X(-log D)) = c(T_X) * prod (1 + D_i)^{-1}.
BundleData log_chern(const BundleData& tx, std::span<const GradedClass> divisors);

// Chern polynomial in a formal variable, coefficients s_0 = 1, s_1..s_rank.
// After an eigenvalue shift the coefficients mix powers of the eigenvalue
// with Chern classes, so they are inhomogeneous.
struct ShiftedChernPolynomial {
  std::vector<GradedClass> coefficients;

  int rank() const { return static_cast<int>(coefficients.size()) - 1; }
  const GradedClass& s(int i) const { return coefficients.at(static_cast<std::size_t>(i)); }
  friend bool operator==(const ShiftedChernPolynomial&, const ShiftedChernPolynomial&) = default;
};

ShiftedChernPolynomial unshifted(const BundleData& e);
// Chern roots x_j -> lambda + x_j:
//   s_i = sum_{j<=i} C(rank-j, i-j) lambda^(i-j) s_j.
ShiftedChernPolynomial shift(const ShiftedChernPolynomial& p, const Rational& lambda);
ShiftedChernPolynomial shift_block(const Rational& lambda, const BundleData& e);
// Product of Chern polynomials (convolution of coefficients).
ShiftedChernPolynomial block_product(std::span<const ShiftedChernPolynomial> blocks);

struct EigenBlock {
  Rational eigenvalue;
  BundleData bundle;
};

// det(A + Omega) for A acting by a constant eigenvalue on each block:
// the product of the top shifted coefficients. Throws NondegeneracyError
// when some block has eigenvalue zero.
GradedClass equivariant_det(std::span<const EigenBlock> blocks);

// Phi is either c_n (top Chern) or a Chern monomial prod c_i^{a_i} with
// sum i*a_i = n.
class InvariantPolySpec {
 public:
  static InvariantPolySpec top_chern() { return InvariantPolySpec(); }
  static InvariantPolySpec chern_monomial(std::vector<std::pair<int, int>> factors);

  bool is_top_chern() const { return top_chern_; }
  const std::vector<std::pair<int, int>>& factors() const { return factors_; }
  // Weighted degree; the top Chern class has degree n for every n.
  int weighted_degree(int n) const;
  std::string name() const;

  friend bool operator==(const InvariantPolySpec&, const InvariantPolySpec&) = default;

 private:
  InvariantPolySpec() = default;

  bool top_chern_ = true;
  std::vector<std::pair<int, int>> factors_;
};

GradedClass evaluate_phi(const InvariantPolySpec& phi, const ShiftedChernPolynomial& total);

}  // namespace logbott

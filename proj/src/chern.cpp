#include "logbott/chern.hpp"

#include <map>

#include "logbott/errors.hpp"

namespace logbott {

void BundleData::validate() const {
  if (!ring) throw InputError("bundle has no ambient ring");
  if (rank < 0) throw InputError("bundle rank must be nonnegative");
  if (chern.size() != static_cast<std::size_t>(rank)) {
    throw InputError("bundle of rank " + std::to_string(rank) + " lists " + std::to_string(chern.size()) +
                     " Chern classes");
  }
  for (int i = 1; i <= rank; ++i) {
    const GradedClass& ci = c(i);
    if (!same_ring(ci.ring(), ring)) throw RingMismatchError("Chern class c" + std::to_string(i) + " in foreign ring");
    if (!ci.is_homogeneous_of_degree(2 * i)) {
      throw InputError("c" + std::to_string(i) + " = " + ci.to_string() + " is not homogeneous of degree " +
                       std::to_string(2 * i));
    }
  }
}

BundleData make_bundle(RingPtr ring, std::vector<GradedClass> chern) {
  BundleData e{std::move(ring), static_cast<int>(chern.size()), std::move(chern)};
  e.validate();
  return e;
}

BundleData trivial_bundle(RingPtr ring, int rank) {
  std::vector<GradedClass> chern(static_cast<std::size_t>(std::max(rank, 0)), GradedClass(ring));
  BundleData e{std::move(ring), rank, std::move(chern)};
  e.validate();
  return e;
}

BundleData bundle_from_total(RingPtr ring, int rank, const GradedClass& total) {
  if (!same_ring(ring, total.ring())) throw RingMismatchError("total class in foreign ring");
  if (total.degree_zero_coefficient() != 1) throw InputError("total Chern class must start with 1");
  for (const auto& [d, part] : total.parts()) {
    if (d > 2 * rank) {
      throw ConsistencyError("total class has a nonzero part in degree " + std::to_string(d) +
                             " above twice the rank " + std::to_string(rank));
    }
  }
  std::vector<GradedClass> chern;
  for (int i = 1; i <= rank; ++i) chern.push_back(homogeneous_part(total, 2 * i));
  return make_bundle(std::move(ring), std::move(chern));
}

GradedClass total_chern(const BundleData& e) {
  GradedClass total = GradedClass::constant(e.ring, 1);
  for (const auto& ci : e.chern) total += ci;
  return total;
}

BundleData whitney_product(const BundleData& e, const BundleData& f) {
  if (!same_ring(e.ring, f.ring)) throw RingMismatchError("Whitney sum of bundles over different rings");
  return bundle_from_total(e.ring, e.rank + f.rank, total_chern(e) * total_chern(f));
}

BundleData log_chern(const BundleData& tx, std::span<const GradedClass> divisors) {
  GradedClass total = total_chern(tx);
  for (const auto& d : divisors) {
    if (!d.is_homogeneous_of_degree(2)) throw InputError("divisor class " + d.to_string() + " is not of degree 2");
    total *= invert_unit(GradedClass::constant(tx.ring, 1) + d);
  }
  return bundle_from_total(tx.ring, tx.rank, total);
}

ShiftedChernPolynomial unshifted(const BundleData& e) {
  ShiftedChernPolynomial p;
  p.coefficients.push_back(GradedClass::constant(e.ring, 1));
  for (const auto& ci : e.chern) p.coefficients.push_back(ci);
  return p;
}

ShiftedChernPolynomial shift(const ShiftedChernPolynomial& p, const Rational& lambda) {
  const int rank = p.rank();
  ShiftedChernPolynomial out;
  for (int i = 0; i <= rank; ++i) {
    GradedClass si(p.s(0).ring());
    for (int j = 0; j <= i; ++j) {
      si += p.s(j) * (binomial(rank - j, i - j) * power(lambda, static_cast<unsigned>(i - j)));
    }
    out.coefficients.push_back(std::move(si));
  }
  return out;
}

ShiftedChernPolynomial shift_block(const Rational& lambda, const BundleData& e) {
  return shift(unshifted(e), lambda);
}

ShiftedChernPolynomial block_product(std::span<const ShiftedChernPolynomial> blocks) {
  if (blocks.empty()) throw InputError("block product of an empty list");
  ShiftedChernPolynomial acc = blocks.front();
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    const auto& next = blocks[b];
    if (!same_ring(acc.s(0).ring(), next.s(0).ring())) throw RingMismatchError("eigenblocks over different rings");
    ShiftedChernPolynomial prod;
    const RingPtr& ring = acc.s(0).ring();
    prod.coefficients.assign(static_cast<std::size_t>(acc.rank() + next.rank() + 1), GradedClass(ring));
    for (int i = 0; i <= acc.rank(); ++i) {
      for (int j = 0; j <= next.rank(); ++j) {
        prod.coefficients[static_cast<std::size_t>(i + j)] += acc.s(i) * next.s(j);
      }
    }
    acc = std::move(prod);
  }
  return acc;
}

GradedClass equivariant_det(std::span<const EigenBlock> blocks) {
  if (blocks.empty()) throw InputError("determinant of an empty block list");
  GradedClass det = GradedClass::constant(blocks.front().bundle.ring, 1);
  for (const auto& block : blocks) {
    if (block.eigenvalue == 0 && block.bundle.rank > 0) {
      throw NondegeneracyError("eigenvalue 0 on a normal block of rank " + std::to_string(block.bundle.rank) +
                               ": the Bott action is not invertible");
    }
    const ShiftedChernPolynomial p = shift_block(block.eigenvalue, block.bundle);
    det *= p.s(p.rank());
  }
  return det;
}

InvariantPolySpec InvariantPolySpec::chern_monomial(std::vector<std::pair<int, int>> factors) {
  std::map<int, int> merged;
  for (const auto& [i, a] : factors) {
    if (i < 1 || a < 0) throw InputError("Chern monomial factors need index >= 1 and exponent >= 0");
    if (a > 0) merged[i] += a;
  }
  if (merged.empty()) throw InputError("empty Chern monomial");
  InvariantPolySpec spec;
  spec.top_chern_ = false;
  spec.factors_.assign(merged.begin(), merged.end());
  return spec;
}

int InvariantPolySpec::weighted_degree(int n) const {
  if (top_chern_) return n;
  int d = 0;
  for (const auto& [i, a] : factors_) d += i * a;
  return d;
}

std::string InvariantPolySpec::name() const {
  if (top_chern_) return "top_chern";
  std::string out;
  for (const auto& [i, a] : factors_) {
    if (!out.empty()) out += "*";
    out += "c" + std::to_string(i);
    if (a > 1) out += "^" + std::to_string(a);
  }
  return out;
}

GradedClass evaluate_phi(const InvariantPolySpec& phi, const ShiftedChernPolynomial& total) {
  const int n = total.rank();
  if (phi.is_top_chern()) return total.s(n);
  if (phi.weighted_degree(n) != n) {
    throw InputError("invariant polynomial " + phi.name() + " has degree " + std::to_string(phi.weighted_degree(n)) +
                     ", ambient dimension is " + std::to_string(n));
  }
  const RingPtr& ring = total.s(0).ring();
  GradedClass value = GradedClass::constant(ring, 1);
  for (const auto& [i, a] : phi.factors()) {
    if (i > n) return GradedClass(ring);
    value *= total.s(i).pow(static_cast<unsigned>(a));
  }
  return value;
}

}  // namespace logbott

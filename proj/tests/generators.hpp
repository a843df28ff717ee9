#pragma once

// Hand-rolled random generators for the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "logbott/chern.hpp"
#include "logbott/graded_ring.hpp"
#include "logbott/log_field.hpp"

namespace logbott::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int max_num = 9, int max_den = 5) {
    Rational q(integer(-max_num, max_num), integer(1, max_den));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(int max_num = 9, int max_den = 5) {
    for (;;) {
      Rational q = rational(max_num, max_den);
      if (q != 0) return q;
    }
  }

  // Random combination of normal-form monomials of the given degree.
  GradedClass homogeneous(const RingPtr& ring, int degree, int max_terms = 3) {
    const auto basis = ring->standard_monomials(degree);
    Polynomial p = ring->zero();
    if (basis.empty()) return GradedClass(ring);
    const int terms = integer(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      p.add_term(basis[static_cast<std::size_t>(integer(0, static_cast<int>(basis.size()) - 1))], rational());
    }
    return GradedClass::from_polynomial(ring, p);
  }

  GradedClass element(const RingPtr& ring) {
    GradedClass x(ring);
    for (int d = 0; d <= ring->top_degree(); d += 2) {
      if (coin()) x += homogeneous(ring, d);
    }
    return x;
  }

  GradedClass unit(const RingPtr& ring) {
    GradedClass x = element(ring);
    x -= homogeneous_part(x, 0);
    return x + GradedClass::constant(ring, nonzero_rational());
  }

  BundleData bundle(const RingPtr& ring, int rank) {
    std::vector<GradedClass> chern;
    for (int i = 1; i <= rank; ++i) chern.push_back(homogeneous(ring, 2 * i));
    return make_bundle(ring, std::move(chern));
  }

  Polynomial polynomial(std::size_t num_vars, int max_degree, int max_terms = 4) {
    Polynomial p(num_vars);
    const int terms = integer(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      Monomial m(num_vars, 0);
      int budget = integer(0, max_degree);
      while (budget-- > 0) ++m[static_cast<std::size_t>(integer(0, static_cast<int>(num_vars) - 1))];
      p.add_term(m, rational());
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace logbott::testing

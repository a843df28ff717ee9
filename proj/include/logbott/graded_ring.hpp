#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "logbott/polynomial.hpp"
#include "logbott/rational.hpp"

namespace logbott {

struct Generator {
  std::string name;
  int degree = 2;  // cohomological, positive and even

  friend bool operator==(const Generator&, const Generator&) = default;
};

// lead -> rhs, with every monomial of rhs strictly below lead.
struct RewriteRule {
  Monomial lead;
  Polynomial rhs;

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

using IntegrationTable = std::map<Monomial, Rational>;

// Graded commutative Q-algebra presented by generators, a terminating and
// confluent monomial rewrite system, a top degree 2n above which everything
// vanishes, and the values of the fundamental class on the normal-form
// monomials of degree 2n.
//
// Monomials are compared by weighted degree first, then lexicographically
// with the first declared generator most significant.
class RingPresentation {
 public:
  // Validates homogeneity, termination and confluence (every critical pair
  // of rule leads must join). Throws InputError or ConfluenceError.
  RingPresentation(std::vector<Generator> generators, std::vector<RewriteRule> rules,
                   int top_degree, IntegrationTable integration_table);

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  int top_degree() const { return top_degree_; }
  const IntegrationTable& integration_table() const { return integration_table_; }
  std::size_t num_generators() const { return generators_.size(); }

  int degree(const Monomial& m) const;
  // Strict monomial order: true when a comes before b.
  bool precedes(const Monomial& a, const Monomial& b) const;
  bool is_reducible(const Monomial& m) const;

  Polynomial normal_form(const Polynomial& p) const;

  Polynomial generator(std::string_view name) const;
  Polynomial parse(std::string_view text) const;
  Polynomial zero() const { return Polynomial(generators_.size()); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(generators_.size(), c); }

  // All rewrite-irreducible monomials of the given weighted degree, in
  // increasing order.
  std::vector<Monomial> standard_monomials(int degree) const;

  std::string format(const Polynomial& p) const { return p.to_string(names_); }

  friend bool operator==(const RingPresentation& a, const RingPresentation& b);

 private:
  struct Order {
    const RingPresentation* ring;
    bool operator()(const Monomial& a, const Monomial& b) const { return ring->precedes(a, b); }
  };

  void validate() const;
  void check_confluence() const;
  const RewriteRule* find_rule(const Monomial& m) const;

  std::vector<Generator> generators_;
  std::vector<std::string> names_;
  std::vector<RewriteRule> rules_;
  int top_degree_ = 0;
  IntegrationTable integration_table_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

template <typename... Args>
RingPtr make_ring(Args&&... args) {
  return std::make_shared<const RingPresentation>(std::forward<Args>(args)...);
}

bool same_ring(const RingPtr& a, const RingPtr& b);

Polynomial normal_form(const Polynomial& p, const RingPresentation& ring);

// Inhomogeneous element of a graded ring, stored as normal-form homogeneous
// parts keyed by degree. Parts above the top degree are dropped.
class GradedClass {
 public:
  GradedClass() = default;
  explicit GradedClass(RingPtr ring) : ring_(std::move(ring)) {}

  static GradedClass from_polynomial(RingPtr ring, const Polynomial& p);
  static GradedClass constant(RingPtr ring, const Rational& c);
  static GradedClass parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const std::map<int, Polynomial>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  Rational degree_zero_coefficient() const;
  // True for the zero class as well.
  bool is_homogeneous_of_degree(int d) const;
  Polynomial to_polynomial() const;
  std::string to_string() const;

  GradedClass& operator+=(const GradedClass& other);
  GradedClass& operator-=(const GradedClass& other);
  GradedClass& operator*=(const GradedClass& other);
  GradedClass& operator*=(const Rational& c);

  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(GradedClass a, const GradedClass& b) { return a *= b; }
  friend GradedClass operator*(GradedClass a, const Rational& c) { return a *= c; }
  friend GradedClass operator*(const Rational& c, GradedClass a) { return a *= c; }
  friend GradedClass operator-(GradedClass a) { return a *= Rational(-1); }
  friend bool operator==(const GradedClass& a, const GradedClass& b);

  GradedClass pow(unsigned exponent) const;

 private:
  void check_ring(const GradedClass& other) const;
  void assign(const Polynomial& p);

  RingPtr ring_;
  std::map<int, Polynomial> parts_;
};

// Degree-d piece. Odd or negative d is an InputError; d above the top degree
// yields zero.
GradedClass homogeneous_part(const GradedClass& x, int d);

// Multiplicative inverse of a class with nonzero degree-0 part; the
// geometric series terminates because positive-degree classes are nilpotent.
// Throws NonInvertibleError otherwise.
GradedClass invert_unit(const GradedClass& x);

// Pairs the top-degree part with the fundamental class.
Rational integrate(const GradedClass& x, const RingPresentation& ring);
Rational integrate(const GradedClass& x);

}  // namespace logbott

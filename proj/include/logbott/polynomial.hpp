#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logbott/rational.hpp"

namespace logbott {

// Exponent vector; position i is the power of variable i.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
bool divides(const Monomial& d, const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);
Monomial monomial_quotient(const Monomial& m, const Monomial& d);  // requires divides(d, m)
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed number of variables. Zero coefficients are never stored. This is the
// ungraded arithmetic core; graded quotient rings and chart fields both sit
// on top of it.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial term(Monomial m, const Rational& c);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  int total_degree() const;  // -1 for the zero polynomial

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::size_t var) const;
  // Sets the listed variables to zero.
  Polynomial restrict_to_zero(std::span<const std::size_t> vars) const;

  Rational evaluate(std::span<const Rational> point) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t num_vars_ = 0;
  Terms terms_;
};

// Names "<prefix>1", ..., "<prefix>n".
std::vector<std::string> default_names(std::size_t n, std::string_view prefix);

// Parses sums of products such as "3/2*x^2*y - y + 7". Variables must come
// from `names`; anything else is an InputError.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names);

}  // namespace logbott

#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "logbott/polynomial.hpp"

namespace logbott {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Polynomial map f = (f_1, ..., f_k): C^k -> C^k with f(0) = 0 and an
// invertible Jacobian at the origin.
class LocalMap {
 public:
  // Throws InputError when f(0) != 0 or |det Df(0)| <= 1e-12.
  explicit LocalMap(std::vector<Polynomial> components);

  int codim() const { return static_cast<int>(components_.size()); }
  const std::vector<Polynomial>& components() const { return components_; }

  ComplexVector value(std::span<const Complex> y) const;
  std::vector<ComplexVector> jacobian(std::span<const Complex> y) const;

  // The map M * f for an invertible rational matrix M.
  LocalMap compose_linear(const RationalMatrix& m) const;

 private:
  struct Term {
    double coefficient;
    std::vector<int> exponents;
  };
  using Compiled = std::vector<Term>;

  static Compiled compile(const Polynomial& p);
  static Complex eval(const Compiled& p, std::span<const Complex> y);

  std::vector<Polynomial> components_;
  std::vector<Compiled> values_;
  std::vector<std::vector<Compiled>> derivatives_;
};

struct QuadratureConfig {
  double eps = 0.1;                    // base polytube radius
  std::vector<double> radius_weights;  // eps_i = eps * weight_i; empty means all 1
  int points = 64;                     // per circle, power of two
  double newton_tolerance = 1e-13;
  int max_newton_iterations = 50;
  std::vector<double> ladder{0.1, 0.05};  // radii for the eps -> 0 extrapolation
  double tolerance = 1e-6;                // accepted |extrapolated - g(0)|
  unsigned threads = 0;                   // 0 = hardware concurrency

  void validate(int codim) const;
  std::vector<double> radii(double base, int codim) const;
};

// Solves f(y) = u by damped Newton iteration seeded with Df(0)^{-1} u.
// Throws TubeError when the residual is not below the tolerance after
// max_newton_iterations steps.
ComplexVector tube_point(const LocalMap& f, std::span<const Complex> u, const QuadratureConfig& cfg);

// (2 pi i)^{-k} times the integral of g df_1/f_1 ^ ... ^ df_k/f_k over the
// polytube {|f_i| = eps_i}, computed with the product trapezoid rule on the
// parametrizing torus. Grid points are evaluated in parallel and summed in
// index order, so the result is reproducible for a fixed point count.
Complex polytube_residue(const LocalMap& f, const Polynomial& g, const QuadratureConfig& cfg, double eps);
inline Complex polytube_residue(const LocalMap& f, const Polynomial& g, const QuadratureConfig& cfg) {
  return polytube_residue(f, g, cfg, cfg.eps);
}

struct RichardsonResult {
  std::vector<std::pair<double, Complex>> samples;
  Complex raw;           // value at the smallest radius sampled last
  Complex extrapolated;  // linear model in eps through the last two samples
};

// Needs at least two samples with distinct radii (InputError otherwise).
RichardsonResult richardson_limit(std::span<const std::pair<double, Complex>> values);

// Residues over every radius of cfg.ladder followed by extrapolation. A
// single-entry ladder reports the raw value as the limit.
RichardsonResult residue_limit(const LocalMap& f, const Polynomial& g, const QuadratureConfig& cfg);

// Limits computed with f and with M f; by the determinant transformation law
// they agree.
std::pair<Complex, Complex> transformation_check(const LocalMap& f, const RationalMatrix& m, const Polynomial& g,
                                                 const QuadratureConfig& cfg);

}  // namespace logbott

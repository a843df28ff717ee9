#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logbott/polynomial.hpp"

namespace logbott {

// A logarithmic vector field on an SNC chart with coordinates z_0..z_{n-1}
// (0-based) and boundary D = {prod_{i in log_indices} z_i = 0}:
//   v = sum_{i in log} a_i z_i d/dz_i + sum_{i not in log} a_i d/dz_i.
struct LogChartField {
  int dim = 0;
  std::vector<std::size_t> log_indices;
  std::vector<Polynomial> coeffs;
  std::vector<std::string> names;  // display only; defaults to z1..zn

  void validate() const;
  bool is_log_index(std::size_t i) const;
  // v(z_i): a_i z_i on boundary coordinates, a_i otherwise.
  Polynomial component(std::size_t i) const;
  std::vector<std::string> display_names() const;
};

// Z = {z_j = 0 for j in normal_coords}; the remaining coordinates run along Z.
struct ComponentChart {
  std::vector<std::size_t> normal_coords;

  std::vector<std::size_t> tangent_coords(int dim) const;
  void validate(int dim) const;
};

// Generators of the zero ideal in the log frame z_i d/dz_i (i in log),
// d/dz_j (j not in log): the coefficients a_1..a_n.
std::vector<Polynomial> zero_ideal(const LogChartField& v);

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

struct BottMatrix {
  std::vector<std::size_t> normal_coords;
  // conormal[b][c] = d w_b / d y_c restricted to Z: the matrix of
  // [f] -> [v(f)] on I/I^2 in the basis [y_1], ..., [y_k].
  PolynomialMatrix conormal;

  // Matrix of the dual action on the normal bundle.
  PolynomialMatrix normal() const;
};

// Throws InputError, naming a witness monomial, when some normal component
// of v does not vanish on Z.
BottMatrix bott_matrix(const LogChartField& v, const ComponentChart& z);

Polynomial determinant(const PolynomialMatrix& m);

struct NondegeneracyOptions {
  std::uint64_t seed = 0;
  int samples = 16;
};

struct SamplePoint {
  std::vector<Rational> point;
  Rational determinant;
};

struct NondegeneracyVerdict {
  enum class Kind { Nondegenerate, Degenerate, Indeterminate };

  Kind kind = Kind::Indeterminate;
  Polynomial determinant;
  // Sampled points on Z when the determinant is not constant; for a
  // Degenerate verdict found by sampling, the last entry is the witness.
  std::vector<SamplePoint> samples;
};

std::string to_string(NondegeneracyVerdict::Kind kind);

// Constant nonzero determinant: Nondegenerate. Identically zero: Degenerate.
// Otherwise the determinant is sampled on Z; a vanishing sample is a
// Degenerate witness, no vanishing sample leaves the verdict Indeterminate.
NondegeneracyVerdict check_nondegenerate(const BottMatrix& m, int dim, const NondegeneracyOptions& options = {});

struct LogEigenvalue {
  std::size_t coordinate;
  Polynomial eigenvalue;  // a_i restricted to Z
};

// [z_i] is an eigenvector of the conormal action for every boundary
// coordinate z_i in I_Z, with eigenvalue a_i|_Z. With an empty `which`, all
// boundary coordinates that are normal to Z are reported; explicitly listed
// coordinates must be boundary coordinates normal to Z (InputError otherwise).
std::vector<LogEigenvalue> log_eigenvalues(const LogChartField& v, const ComponentChart& z,
                                           std::span<const std::size_t> which = {});

}  // namespace logbott

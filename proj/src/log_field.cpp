#include "logbott/log_field.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "logbott/errors.hpp"

namespace logbott {

void LogChartField::validate() const {
  if (dim < 0) throw InputError("chart dimension must be nonnegative");
  const auto n = static_cast<std::size_t>(dim);
  if (coeffs.size() != n) {
    throw InputError("chart of dimension " + std::to_string(dim) + " has " + std::to_string(coeffs.size()) +
                     " coefficients");
  }
  for (const auto& a : coeffs) {
    if (a.num_vars() != n) throw InputError("coefficient polynomial has wrong number of variables");
  }
  std::set<std::size_t> seen;
  for (auto i : log_indices) {
    if (i >= n || !seen.insert(i).second) throw InputError("invalid or repeated boundary index " + std::to_string(i));
  }
  if (!names.empty() && names.size() != n) throw InputError("chart names do not match the dimension");
}

bool LogChartField::is_log_index(std::size_t i) const {
  return std::find(log_indices.begin(), log_indices.end(), i) != log_indices.end();
}

Polynomial LogChartField::component(std::size_t i) const {
  if (!is_log_index(i)) return coeffs.at(i);
  return coeffs.at(i) * Polynomial::variable(static_cast<std::size_t>(dim), i);
}

std::vector<std::string> LogChartField::display_names() const {
  return names.empty() ? default_names(static_cast<std::size_t>(dim), "z") : names;
}

std::vector<std::size_t> ComponentChart::tangent_coords(int dim) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < static_cast<std::size_t>(dim); ++i) {
    if (std::find(normal_coords.begin(), normal_coords.end(), i) == normal_coords.end()) out.push_back(i);
  }
  return out;
}

void ComponentChart::validate(int dim) const {
  std::set<std::size_t> seen;
  for (auto i : normal_coords) {
    if (i >= static_cast<std::size_t>(dim) || !seen.insert(i).second) {
      throw InputError("invalid or repeated normal coordinate " + std::to_string(i));
    }
  }
}

std::vector<Polynomial> zero_ideal(const LogChartField& v) {
  v.validate();
  return v.coeffs;
}

PolynomialMatrix BottMatrix::normal() const {
  const std::size_t k = conormal.size();
  PolynomialMatrix t(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) t[i].push_back(conormal[j][i]);
  }
  return t;
}

BottMatrix bott_matrix(const LogChartField& v, const ComponentChart& z) {
  v.validate();
  z.validate(v.dim);
  const auto names = v.display_names();
  BottMatrix out;
  out.normal_coords = z.normal_coords;
  for (std::size_t b : z.normal_coords) {
    const Polynomial w = v.component(b);
    const Polynomial on_z = w.restrict_to_zero(z.normal_coords);
    if (!on_z.is_zero()) {
      const auto& [m, c] = *on_z.terms().rbegin();
      throw InputError("field component along " + names[b] + " does not vanish on Z; witness monomial " +
                       Polynomial::term(m, c).to_string(names));
    }
    std::vector<Polynomial> row;
    for (std::size_t c : z.normal_coords) row.push_back(w.derivative(c).restrict_to_zero(z.normal_coords));
    out.conormal.push_back(std::move(row));
  }
  return out;
}

Polynomial determinant(const PolynomialMatrix& m) {
  const std::size_t k = m.size();
  if (k == 0) return Polynomial::constant(0, 1);
  const std::size_t nvars = m[0][0].num_vars();
  if (k == 1) return m[0][0];
  Polynomial det(nvars);
  for (std::size_t col = 0; col < k; ++col) {
    if (m[0][col].is_zero()) continue;
    PolynomialMatrix minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * determinant(minor);
    if (col % 2 == 1) term *= Rational(-1);
    det += term;
  }
  return det;
}

std::string to_string(NondegeneracyVerdict::Kind kind) {
  switch (kind) {
    case NondegeneracyVerdict::Kind::Nondegenerate:
      return "Nondegenerate";
    case NondegeneracyVerdict::Kind::Degenerate:
      return "Degenerate";
    case NondegeneracyVerdict::Kind::Indeterminate:
      return "Indeterminate";
  }
  return "?";
}

NondegeneracyVerdict check_nondegenerate(const BottMatrix& m, int dim, const NondegeneracyOptions& options) {
  NondegeneracyVerdict verdict;
  verdict.determinant = m.conormal.empty() ? Polynomial::constant(static_cast<std::size_t>(dim), 1)
                                           : determinant(m.conormal);
  if (verdict.determinant.is_zero()) {
    verdict.kind = NondegeneracyVerdict::Kind::Degenerate;
    return verdict;
  }
  if (verdict.determinant.is_constant()) {
    verdict.kind = NondegeneracyVerdict::Kind::Nondegenerate;
    return verdict;
  }
  // Points on Z (normal coordinates 0): first the small grid {0, 1, -1}^t on
  // the tangent coordinates, then seeded rationals p/q with |p| <= 9, q <= 5.
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  const auto tangent = ComponentChart{m.normal_coords}.tangent_coords(dim);
  std::size_t grid_size = 1;
  for (std::size_t i = 0; i < tangent.size() && grid_size < static_cast<std::size_t>(options.samples); ++i) grid_size *= 3;
  grid_size = std::min(grid_size, static_cast<std::size_t>(options.samples / 2));
  verdict.kind = NondegeneracyVerdict::Kind::Indeterminate;
  for (int s = 0; s < options.samples; ++s) {
    std::vector<Rational> point(static_cast<std::size_t>(dim), Rational(0));
    if (static_cast<std::size_t>(s) < grid_size) {
      std::size_t code = static_cast<std::size_t>(s);
      for (auto t : tangent) {
        static constexpr int kGrid[3] = {0, 1, -1};
        point[t] = kGrid[code % 3];
        code /= 3;
      }
    } else {
      for (auto t : tangent) {
        point[t] = Rational(num(rng), den(rng));
        point[t].canonicalize();
      }
    }
    Rational value = verdict.determinant.evaluate(point);
    const bool vanishes = value == 0;
    verdict.samples.push_back({std::move(point), std::move(value)});
    if (vanishes) {
      verdict.kind = NondegeneracyVerdict::Kind::Degenerate;
      break;
    }
  }
  return verdict;
}

std::vector<LogEigenvalue> log_eigenvalues(const LogChartField& v, const ComponentChart& z,
                                           std::span<const std::size_t> which) {
  v.validate();
  z.validate(v.dim);
  const auto names = v.display_names();
  auto is_normal = [&](std::size_t i) {
    return std::find(z.normal_coords.begin(), z.normal_coords.end(), i) != z.normal_coords.end();
  };
  std::vector<std::size_t> selected;
  if (which.empty()) {
    for (auto i : v.log_indices) {
      if (is_normal(i)) selected.push_back(i);
    }
  } else {
    for (auto i : which) {
      if (i >= static_cast<std::size_t>(v.dim) || !v.is_log_index(i)) {
        throw InputError("coordinate " + std::to_string(i) + " is not a boundary coordinate");
      }
      if (!is_normal(i)) throw InputError("boundary coordinate " + names[i] + " does not lie in the ideal of Z");
      selected.push_back(i);
    }
  }
  std::vector<LogEigenvalue> out;
  for (auto i : selected) out.push_back({i, v.coeffs[i].restrict_to_zero(z.normal_coords)});
  return out;
}

}  // namespace logbott

#include "logbott/ch_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "logbott/errors.hpp"

namespace logbott {

namespace {

using ComplexMatrix = std::vector<ComplexVector>;

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

// Gaussian elimination with partial pivoting; returns false when singular.
bool solve_in_place(ComplexMatrix a, ComplexMatrix& rhs_columns_as_rows) {
  // rhs_columns_as_rows[c] is the c-th right-hand side.
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) == 0.0) return false;
    std::swap(a[pivot], a[col]);
    for (auto& b : rhs_columns_as_rows) std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = a[r][col] / a[col][col];
      if (factor == Complex(0.0)) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      for (auto& b : rhs_columns_as_rows) b[r] -= factor * b[col];
    }
  }
  for (auto& b : rhs_columns_as_rows) {
    for (std::size_t r = n; r-- > 0;) {
      Complex s = b[r];
      for (std::size_t c = r + 1; c < n; ++c) s -= a[r][c] * b[c];
      b[r] = s / a[r][r];
    }
  }
  return true;
}

Complex det(ComplexMatrix a) {
  const std::size_t n = a.size();
  Complex d(1.0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return d;
}

Rational rational_det(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return d;
}

}  // namespace

LocalMap::LocalMap(std::vector<Polynomial> components) : components_(std::move(components)) {
  const std::size_t k = components_.size();
  if (k == 0) throw InputError("local map needs at least one component");
  for (const auto& p : components_) {
    if (p.num_vars() != k) throw InputError("local map components must be polynomials in k variables");
    if (p.constant_term() != 0) throw InputError("local map must vanish at the origin");
  }
  for (const auto& p : components_) {
    values_.push_back(compile(p));
    std::vector<Compiled> row;
    for (std::size_t j = 0; j < k; ++j) row.push_back(compile(p.derivative(j)));
    derivatives_.push_back(std::move(row));
  }
  const ComplexVector origin(k, Complex(0.0));
  if (std::abs(det(jacobian(origin))) <= 1e-12) {
    throw InputError("Jacobian of the local map is singular at the origin");
  }
}

LocalMap::Compiled LocalMap::compile(const Polynomial& p) {
  Compiled out;
  for (const auto& [m, c] : p.terms()) out.push_back({c.get_d(), m});
  return out;
}

Complex LocalMap::eval(const Compiled& p, std::span<const Complex> y) {
  Complex sum(0.0);
  for (const auto& t : p) {
    Complex v(t.coefficient);
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      for (int e = 0; e < t.exponents[i]; ++e) v *= y[i];
    }
    sum += v;
  }
  return sum;
}

ComplexVector LocalMap::value(std::span<const Complex> y) const {
  ComplexVector out;
  out.reserve(values_.size());
  for (const auto& p : values_) out.push_back(eval(p, y));
  return out;
}

std::vector<ComplexVector> LocalMap::jacobian(std::span<const Complex> y) const {
  std::vector<ComplexVector> out;
  for (const auto& row : derivatives_) {
    ComplexVector r;
    for (const auto& p : row) r.push_back(eval(p, y));
    out.push_back(std::move(r));
  }
  return out;
}

LocalMap LocalMap::compose_linear(const RationalMatrix& m) const {
  const std::size_t k = components_.size();
  if (m.size() != k || std::any_of(m.begin(), m.end(), [&](const auto& row) { return row.size() != k; })) {
    throw InputError("transformation matrix must be k x k");
  }
  if (rational_det(m) == 0) throw InputError("transformation matrix is singular");
  std::vector<Polynomial> composed;
  for (std::size_t i = 0; i < k; ++i) {
    Polynomial p(k);
    for (std::size_t j = 0; j < k; ++j) p += components_[j] * m[i][j];
    composed.push_back(std::move(p));
  }
  return LocalMap(std::move(composed));
}

void QuadratureConfig::validate(int codim) const {
  if (!(eps > 0.0)) throw InputError("polytube radius must be positive");
  if (points < 1 || (points & (points - 1)) != 0) throw InputError("points per circle must be a power of two");
  if (!radius_weights.empty() && radius_weights.size() != static_cast<std::size_t>(codim)) {
    throw InputError("radius weights must have one entry per factor");
  }
  for (double w : radius_weights) {
    if (!(w > 0.0)) throw InputError("radius weights must be positive");
  }
  for (double e : ladder) {
    if (!(e > 0.0)) throw InputError("Richardson radii must be positive");
  }
  if (!(newton_tolerance > 0.0) || max_newton_iterations < 1) throw InputError("invalid Newton settings");
}

std::vector<double> QuadratureConfig::radii(double base, int codim) const {
  std::vector<double> r(static_cast<std::size_t>(codim), base);
  for (std::size_t i = 0; i < radius_weights.size() && i < r.size(); ++i) r[i] *= radius_weights[i];
  return r;
}

ComplexVector tube_point(const LocalMap& f, std::span<const Complex> u, const QuadratureConfig& cfg) {
  const std::size_t k = static_cast<std::size_t>(f.codim());
  if (u.size() != k) throw InputError("tube point target has wrong dimension");
  const ComplexVector origin(k, Complex(0.0));

  auto newton_step = [&](const ComplexVector& at, const ComplexVector& rhs) {
    ComplexMatrix sys{rhs};
    if (!solve_in_place(f.jacobian(at), sys)) throw TubeError("singular Jacobian while parametrizing the polytube");
    return sys.front();
  };

  ComplexVector y = newton_step(origin, ComplexVector(u.begin(), u.end()));
  auto residual = [&](const ComplexVector& at) {
    ComplexVector r = f.value(at);
    for (std::size_t i = 0; i < k; ++i) r[i] -= u[i];
    return r;
  };
  ComplexVector r = residual(y);
  double rnorm = norm(r);
  for (int iter = 0; iter < cfg.max_newton_iterations; ++iter) {
    if (rnorm < cfg.newton_tolerance) return y;
    const ComplexVector step = newton_step(y, r);
    double t = 1.0;
    ComplexVector trial(k);
    double trial_norm = 0.0;
    for (int halvings = 0; halvings < 30; ++halvings) {
      for (std::size_t i = 0; i < k; ++i) trial[i] = y[i] - t * step[i];
      trial_norm = norm(residual(trial));
      if (trial_norm < rnorm) break;
      t *= 0.5;
    }
    y = trial;
    r = residual(y);
    rnorm = norm(r);
  }
  if (rnorm < cfg.newton_tolerance) return y;
  throw TubeError("Newton inversion of the local map did not converge within " +
                  std::to_string(cfg.max_newton_iterations) + " iterations (residual " + std::to_string(rnorm) +
                  "); the polytube radius is too large");
}

Complex polytube_residue(const LocalMap& f, const Polynomial& g, const QuadratureConfig& cfg, double eps) {
  const int k = f.codim();
  cfg.validate(k);
  if (g.num_vars() != static_cast<std::size_t>(k)) throw InputError("test function has wrong number of variables");
  if (!(eps > 0.0)) throw InputError("polytube radius must be positive");
  const std::vector<double> radii = cfg.radii(eps, k);
  const std::size_t n = static_cast<std::size_t>(cfg.points);
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) total *= n;

  std::vector<Complex> density(total);
  auto evaluate_range = [&](std::size_t begin, std::size_t end) {
    ComplexVector u(static_cast<std::size_t>(k));
    for (std::size_t idx = begin; idx < end; ++idx) {
      std::size_t rest = idx;
      for (int i = 0; i < k; ++i) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(rest % n) / static_cast<double>(n);
        rest /= n;
        u[static_cast<std::size_t>(i)] = std::polar(radii[static_cast<std::size_t>(i)], theta);
      }
      const ComplexVector y = tube_point(f, u, cfg);
      const auto jac = f.jacobian(y);
      // Columns of dy/dtheta solve Df(y) Y = diag(i u).
      ComplexMatrix tangents(static_cast<std::size_t>(k), ComplexVector(static_cast<std::size_t>(k), 0.0));
      for (std::size_t l = 0; l < tangents.size(); ++l) tangents[l][l] = Complex(0.0, 1.0) * u[l];
      if (!solve_in_place(jac, tangents)) throw TubeError("singular Jacobian on the polytube");
      // Pull back df_1 ^ ... ^ df_k: entry (l, m) is df_l applied to dy/dtheta_m.
      ComplexMatrix pulled(static_cast<std::size_t>(k), ComplexVector(static_cast<std::size_t>(k), 0.0));
      for (std::size_t l = 0; l < pulled.size(); ++l) {
        for (std::size_t m = 0; m < pulled.size(); ++m) {
          for (std::size_t j = 0; j < pulled.size(); ++j) pulled[l][m] += jac[l][j] * tangents[m][j];
        }
      }
      const ComplexVector fy = f.value(y);
      Complex denom(1.0);
      for (const auto& v : fy) denom *= v;
      density[idx] = g.evaluate(y) * det(pulled) / denom;
    }
  };

  unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  if (workers <= 1) {
    evaluate_range(0, total);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          evaluate_range(begin, end);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : failures) {
      if (e) std::rethrow_exception(e);
    }
  }

  Complex sum(0.0);
  for (const auto& d : density) sum += d;
  // Mean over the torus of the dtheta density, divided by i^k.
  Complex i_pow(1.0);
  for (int i = 0; i < k; ++i) i_pow *= Complex(0.0, 1.0);
  return sum / static_cast<double>(total) / i_pow;
}

RichardsonResult richardson_limit(std::span<const std::pair<double, Complex>> values) {
  if (values.size() < 2) throw InputError("Richardson extrapolation needs at least two samples");
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i].first == values[j].first) throw InputError("Richardson samples must use distinct radii");
    }
  }
  RichardsonResult out;
  out.samples.assign(values.begin(), values.end());
  const auto& [e1, v1] = values[values.size() - 2];
  const auto& [e2, v2] = values[values.size() - 1];
  out.raw = v2;
  out.extrapolated = (e1 * v2 - e2 * v1) / (e1 - e2);
  return out;
}

RichardsonResult residue_limit(const LocalMap& f, const Polynomial& g, const QuadratureConfig& cfg) {
  if (cfg.ladder.empty()) throw InputError("empty Richardson ladder");
  std::vector<std::pair<double, Complex>> samples;
  for (double eps : cfg.ladder) samples.emplace_back(eps, polytube_residue(f, g, cfg, eps));
  if (samples.size() == 1) {
    RichardsonResult out;
    out.samples = samples;
    out.raw = out.extrapolated = samples.front().second;
    return out;
  }
  return richardson_limit(samples);
}

std::pair<Complex, Complex> transformation_check(const LocalMap& f, const RationalMatrix& m, const Polynomial& g,
                                                 const QuadratureConfig& cfg) {
  const LocalMap transformed = f.compose_linear(m);
  return {residue_limit(f, g, cfg).extrapolated, residue_limit(transformed, g, cfg).extrapolated};
}

}  // namespace logbott

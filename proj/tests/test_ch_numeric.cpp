#include <doctest.h>

#include <cmath>

#include "logbott/ch_numeric.hpp"
#include "logbott/errors.hpp"

using namespace logbott;

namespace {

LocalMap map_of(std::vector<std::string> f, const std::vector<std::string>& names) {
  std::vector<Polynomial> comps;
  for (const auto& s : f) comps.push_back(parse_polynomial(s, names));
  return LocalMap(std::move(comps));
}

const std::vector<std::string> kY2{"y1", "y2"};
const std::vector<std::string> kY3{"y1", "y2", "y3"};

}  // namespace

TEST_CASE("identity and linear maps return g(0)") {
  QuadratureConfig cfg;
  const LocalMap id = map_of({"y1", "y2"}, kY2);
  CHECK(std::abs(polytube_residue(id, parse_polynomial("1", kY2), cfg) - Complex(1)) < 1e-10);
  CHECK(std::abs(polytube_residue(id, parse_polynomial("3 + y1*y2 + y1^2", kY2), cfg) - Complex(3)) < 1e-10);
  CHECK(std::abs(polytube_residue(id, parse_polynomial("y1", kY2), cfg)) < 1e-10);
  const LocalMap lin = map_of({"2*y1 + y2", "y1 - y2"}, kY2);
  CHECK(std::abs(polytube_residue(lin, parse_polynomial("1", kY2), cfg) - Complex(1)) < 1e-10);
  CHECK(std::abs(polytube_residue(lin, parse_polynomial("-5/2 + y2^3", kY2), cfg) - Complex(-2.5)) < 1e-10);
  const LocalMap lin3 = map_of({"y1 + y3", "3*y2", "y1 - y2 + 2*y3"}, kY3);
  cfg.points = 16;
  CHECK(std::abs(polytube_residue(lin3, parse_polynomial("7 + y1*y2*y3", kY3), cfg) - Complex(7)) < 1e-10);
  const LocalMap one = LocalMap({parse_polynomial("4*y1", std::vector<std::string>{"y1"})});
  CHECK(std::abs(polytube_residue(one, parse_polynomial("2", std::vector<std::string>{"y1"}), cfg) - Complex(2)) < 1e-10);
}

TEST_CASE("nonlinear map after Richardson extrapolation") {
  QuadratureConfig cfg;
  const LocalMap f = map_of({"y1*(1 + y2)", "y2"}, kY2);
  const auto r = residue_limit(f, parse_polynomial("1", kY2), cfg);
  REQUIRE(r.samples.size() == 2);
  CHECK(r.samples[0].first == doctest::Approx(0.1));
  CHECK(r.samples[1].first == doctest::Approx(0.05));
  CHECK(std::abs(r.extrapolated - Complex(1)) < 1e-6);
  const auto g = residue_limit(f, parse_polynomial("2 + y1 + y2^2", kY2), cfg);
  CHECK(std::abs(g.extrapolated - Complex(2)) < 1e-6);
  const LocalMap cubic = map_of({"y1 + y2^2", "y2 - y1^3"}, kY2);
  CHECK(std::abs(residue_limit(cubic, parse_polynomial("1 + y1*y2", kY2), cfg).extrapolated - Complex(1)) < 1e-6);
}

TEST_CASE("determinant transformation law") {
  QuadratureConfig cfg;
  const LocalMap f = map_of({"y1*(1 + y2)", "y2"}, kY2);
  const RationalMatrix m{{1, 1}, {0, 2}};
  const auto [plain, transformed] = transformation_check(f, m, parse_polynomial("1 + y2", kY2), cfg);
  CHECK(std::abs(plain - transformed) < 1e-8);
  const RationalMatrix singular{{1, 1}, {2, 2}};
  CHECK_THROWS_AS(f.compose_linear(singular), InputError);
  const LocalMap mf = f.compose_linear(m);
  CHECK(mf.components()[1] == parse_polynomial("2*y2", kY2));
}

TEST_CASE("Richardson extrapolation of a linear model is exact") {
  const std::vector<std::pair<double, Complex>> samples{{0.1, Complex(1.3, 0.2)}, {0.05, Complex(1.15, 0.1)}};
  const auto r = richardson_limit(samples);
  CHECK(std::abs(r.extrapolated - Complex(1.0, 0.0)) < 1e-12);
  CHECK(r.raw == Complex(1.15, 0.1));
  const std::vector<std::pair<double, Complex>> single{{0.1, Complex(1)}};
  CHECK_THROWS_AS(richardson_limit(single), InputError);
  const std::vector<std::pair<double, Complex>> same{{0.1, Complex(1)}, {0.1, Complex(2)}};
  CHECK_THROWS_AS(richardson_limit(same), InputError);
}

TEST_CASE("tube points solve f(y) = u") {
  QuadratureConfig cfg;
  const LocalMap f = map_of({"y1*(1 + y2)", "y2"}, kY2);
  const std::vector<Complex> u{Complex(0.05, 0.02), Complex(-0.03, 0.04)};
  const auto y = tube_point(f, u, cfg);
  const auto fy = f.value(y);
  CHECK(std::abs(fy[0] - u[0]) < 1e-12);
  CHECK(std::abs(fy[1] - u[1]) < 1e-12);
  cfg.max_newton_iterations = 0;
  CHECK_THROWS_AS(tube_point(f, u, cfg), TubeError);
}

TEST_CASE("configuration and map validation") {
  const std::vector<std::string> y1{"y1"};
  CHECK_THROWS_AS(LocalMap({parse_polynomial("1 + y1", y1)}), InputError);
  CHECK_THROWS_AS(LocalMap({parse_polynomial("y1^2", y1)}), InputError);
  CHECK_THROWS_AS(LocalMap({}), InputError);
  QuadratureConfig cfg;
  cfg.points = 48;
  CHECK_THROWS_AS(cfg.validate(2), InputError);
  cfg = {};
  cfg.eps = -1;
  CHECK_THROWS_AS(cfg.validate(2), InputError);
  cfg = {};
  cfg.radius_weights = {1, 2, 3};
  CHECK_THROWS_AS(cfg.validate(2), InputError);
  cfg.radius_weights = {1, 2};
  CHECK(cfg.radii(0.1, 2) == std::vector<double>{0.1, 0.2});
}

TEST_CASE("results are reproducible across thread counts") {
  const LocalMap f = map_of({"y1*(1 + y2)", "y2"}, kY2);
  const Polynomial g = parse_polynomial("1 + y1", kY2);
  QuadratureConfig one;
  one.threads = 1;
  QuadratureConfig four;
  four.threads = 4;
  CHECK(polytube_residue(f, g, one) == polytube_residue(f, g, four));
}

TEST_CASE("property: residue of a polynomial test function over random linear maps") {
  // For f = A y the residue of g df/f is g(0) for every invertible A.
  std::uint64_t state = 77;
  auto next = [&state] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % 7) - 3;
  };
  QuadratureConfig cfg;
  cfg.points = 32;
  int done = 0;
  while (done < 10) {
    const int a = next(), b = next(), c = next(), d = next();
    if (a * d - b * c == 0) continue;
    const Polynomial y1 = Polynomial::variable(2, 0), y2 = Polynomial::variable(2, 1);
    std::vector<Polynomial> comps{y1 * Rational(a) + y2 * Rational(b), y1 * Rational(c) + y2 * Rational(d)};
    const LocalMap f(std::move(comps));
    const double g0 = next();
    const Polynomial g = Polynomial::constant(2, static_cast<int>(g0)) + y1 * y2 - y2;
    CHECK(std::abs(polytube_residue(f, g, cfg) - Complex(g0)) < 1e-10);
    ++done;
  }
}

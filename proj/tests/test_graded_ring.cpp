#include <doctest.h>

#include "generators.hpp"
#include "logbott/catalog.hpp"
#include "logbott/errors.hpp"
#include "logbott/graded_ring.hpp"

using namespace logbott;

namespace {

// Q[h]/(h^{n+1}) with the point class normalized to 1.
RingPtr projective(int n) {
  return make_ring(std::vector<Generator>{{"h", 2}}, std::vector<RewriteRule>{{{n + 1}, Polynomial(1)}}, 2 * n,
                   IntegrationTable{{{n}, Rational(1)}});
}

// Q[w]/(w^2) with w in degree 2 and no fundamental class beyond degree 2.
RingPtr dual_numbers() {
  return make_ring(std::vector<Generator>{{"w", 2}}, std::vector<RewriteRule>{{{2}, Polynomial(1)}}, 2,
                   IntegrationTable{{{1}, Rational(1)}});
}

GradedClass C(const RingPtr& r, std::string_view s) { return GradedClass::parse(r, s); }

std::vector<RingPtr> sample_rings() {
  return {projective(3), catalog::weighted_p3_ring(2), catalog::weighted_p3_ring(5), catalog::blowup_p2xp2_ring()};
}

}  // namespace

TEST_CASE("invert_unit on small rings") {
  const RingPtr d = dual_numbers();
  CHECK(invert_unit(C(d, "2 + w")) == C(d, "1/2 - 1/4*w"));
  const RingPtr p3 = projective(3);
  CHECK(invert_unit(C(p3, "1 + h")) == C(p3, "1 - h + h^2 - h^3"));
  CHECK_THROWS_AS(invert_unit(C(p3, "h")), NonInvertibleError);
  CHECK_THROWS_AS(invert_unit(GradedClass(p3)), NonInvertibleError);
}

TEST_CASE("integration in the weighted projective resolution ring") {
  for (int k : {2, 3, 5}) {
    const RingPtr r = catalog::weighted_p3_ring(k);
    const std::string ks = std::to_string(k);
    CHECK(integrate(C(r, "h^2*xi")) == 1);
    // h^2 D = 1 with D = xi - k h, because h^3 = 0.
    CHECK(integrate(C(r, "h^2*(xi - " + ks + "*h)")) == 1);
    CHECK(integrate(C(r, "(xi - " + ks + "*h)^3")) == k * k);
    // Degree-6 monomials all reduce to multiples of h^2 xi.
    CHECK(integrate(C(r, "xi^3")) == k * k);
    CHECK(integrate(C(r, "h*xi^2")) == k);
  }
  CHECK(integrate(C(projective(4), "h^4")) == 1);
  CHECK(integrate(C(projective(4), "h^3 + 5")) == 0);
}

TEST_CASE("normal forms and standard monomials") {
  const RingPtr r = catalog::weighted_p3_ring(2);
  CHECK(r->normal_form(r->parse("xi^2")) == r->parse("2*xi*h"));
  CHECK(r->normal_form(r->parse("h^3 + xi")) == r->parse("xi"));
  CHECK(r->standard_monomials(6) == std::vector<Monomial>{{1, 2}});
  CHECK(r->standard_monomials(4).size() == 2);  // h^2, xi h
  CHECK(r->is_reducible({2, 0}));
  CHECK_FALSE(r->is_reducible({1, 2}));
  CHECK(r->precedes({0, 1}, {1, 0}));  // h < xi
  CHECK(r->precedes({1, 0}, {0, 2}));  // lower degree first
}

TEST_CASE("truncation and homogeneous parts") {
  const RingPtr p2 = projective(2);
  const GradedClass x = C(p2, "1 + h")
                            .pow(5);  // degree 6 and above silently vanish
  CHECK(x == C(p2, "1 + 5*h + 10*h^2"));
  CHECK(homogeneous_part(x, 2) == C(p2, "5*h"));
  CHECK(homogeneous_part(x, 8).is_zero());
  CHECK_THROWS_AS(homogeneous_part(x, 3), InputError);
  CHECK_THROWS_AS(homogeneous_part(x, -2), InputError);
  CHECK(x.degree_zero_coefficient() == 1);
  CHECK(homogeneous_part(x, 4).is_homogeneous_of_degree(4));
  CHECK_FALSE(x.is_homogeneous_of_degree(4));
}

TEST_CASE("presentation validation") {
  using Gens = std::vector<Generator>;
  using Rules = std::vector<RewriteRule>;
  const std::vector<std::string> xy{"x", "y"};
  SUBCASE("non-confluent rules are rejected") {
    // x^2 y reduces to y^3 one way and to 0 the other.
    Rules rules{{{2, 0}, parse_polynomial("y^2", xy)}, {{1, 1}, Polynomial(2)}};
    CHECK_THROWS_AS(RingPresentation(Gens{{"x", 2}, {"y", 2}}, rules, 6, {}), ConfluenceError);
  }
  SUBCASE("the same rules are fine once y^3 is truncated") {
    Rules rules{{{2, 0}, parse_polynomial("y^2", xy)}, {{1, 1}, Polynomial(2)}};
    CHECK_NOTHROW(RingPresentation(Gens{{"x", 2}, {"y", 2}}, rules, 4, {}));
  }
  SUBCASE("inhomogeneous rule") {
    Rules rules{{{2, 0}, parse_polynomial("y", xy)}};
    CHECK_THROWS_AS(RingPresentation(Gens{{"x", 2}, {"y", 2}}, rules, 4, {}), InputError);
  }
  SUBCASE("rule whose right side is above the lead") {
    Rules rules{{{0, 2}, parse_polynomial("x^2", xy)}};
    CHECK_THROWS_AS(RingPresentation(Gens{{"x", 2}, {"y", 2}}, rules, 4, {}), InputError);
  }
  SUBCASE("odd generator degree") {
    CHECK_THROWS_AS(RingPresentation(Gens{{"x", 3}}, Rules{}, 6, {}), InputError);
  }
  SUBCASE("duplicate generator names") {
    CHECK_THROWS_AS(RingPresentation(Gens{{"x", 2}, {"x", 2}}, Rules{}, 4, {}), InputError);
  }
  SUBCASE("missing integration value") {
    const RingPtr r = make_ring(Gens{{"x", 2}}, Rules{{{3}, Polynomial(1)}}, 4, IntegrationTable{});
    CHECK_THROWS_AS(integrate(C(r, "x^2")), PresentationIncompleteError);
    CHECK(integrate(C(r, "x")) == 0);
  }
  SUBCASE("classes from different rings do not mix") {
    const RingPtr a = projective(2), b = projective(3);
    CHECK_THROWS_AS(C(a, "h") + C(b, "h"), RingMismatchError);
    CHECK_THROWS_AS(integrate(C(a, "h^2"), *b), RingMismatchError);
    // Structurally equal rings are interchangeable.
    CHECK(C(a, "h") + C(projective(2), "h") == C(a, "2*h"));
  }
  SUBCASE("unknown generator") { CHECK_THROWS_AS(C(projective(2), "q"), InputError); }
}

TEST_CASE("blow-up ring relations") {
  const RingPtr r = catalog::blowup_p2xp2_ring();
  // Pullbacks agree on E, and E satisfies the Keel quadratic relation with
  // the diagonal class h1^2 + h1 h2 + h2^2.
  CHECK(C(r, "(h1 - h2)*E").is_zero());
  CHECK(C(r, "E^2 - 3*h1*E + h1^2 + h1*h2 + h2^2").is_zero());
  CHECK(integrate(C(r, "h1^2*h2^2")) == 1);
  CHECK(integrate(C(r, "E^4")) == -6);
  CHECK(integrate(C(r, "E^2*h1^2")) == -1);
  CHECK(integrate(C(r, "E*h1^3")) == 0);
  // The diagonal class integrates against h1^2 to 1 (one point).
  CHECK(integrate(C(r, "(h1^2 + h1*h2 + h2^2)*h1^2")) == 1);
  // Standard monomials in each degree: Betti numbers 1, 3, 4, 3, 1 of
  // Bl_diag(P^2 x P^2) in even degrees 0..8 (P^2 x P^2 plus one P^1 bundle
  // over P^2 shifted by one).
  const std::vector<std::size_t> betti{1, 3, 4, 3, 1};
  for (int d = 0; d <= 8; d += 2) CHECK(r->standard_monomials(d).size() == betti[static_cast<std::size_t>(d / 2)]);
}

TEST_CASE("property: ring laws after normal form") {
  testing::Gen gen(2024);
  for (const RingPtr& r : sample_rings()) {
    for (int trial = 0; trial < 40; ++trial) {
      const GradedClass a = gen.element(r), b = gen.element(r), c = gen.element(r);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) - b == a);
    }
  }
}

TEST_CASE("property: normal_form is a projection") {
  testing::Gen gen(7);
  for (const RingPtr& r : sample_rings()) {
    for (int trial = 0; trial < 50; ++trial) {
      const Polynomial p = gen.polynomial(r->num_generators(), 5);
      // Keep only terms that are homogeneous in the grading.
      Polynomial hom = r->zero();
      for (const auto& [m, c] : p.terms()) {
        if (r->degree(m) == 4 || r->degree(m) == 6) hom.add_term(m, c);
      }
      const Polynomial once = r->normal_form(hom);
      CHECK(r->normal_form(once) == once);
      for (const auto& [m, c] : once.terms()) CHECK_FALSE(r->is_reducible(m));
    }
  }
}

TEST_CASE("property: 200 unit inversions round trip exactly") {
  testing::Gen gen(99);
  const auto rings = sample_rings();
  const GradedClass one_any = GradedClass::constant(rings[0], 1);
  for (int trial = 0; trial < 200; ++trial) {
    const RingPtr& r = rings[static_cast<std::size_t>(trial) % rings.size()];
    const GradedClass x = gen.unit(r);
    const GradedClass inv = invert_unit(x);
    CHECK(x * inv == GradedClass::constant(r, 1));
    CHECK(inv * x == GradedClass::constant(r, 1));
  }
  (void)one_any;
}

TEST_CASE("property: integration is linear") {
  testing::Gen gen(5);
  for (const RingPtr& r : sample_rings()) {
    for (int trial = 0; trial < 50; ++trial) {
      const GradedClass x = gen.element(r), y = gen.element(r);
      const Rational alpha = gen.rational(), beta = gen.rational();
      CHECK(integrate(alpha * x + beta * y) == alpha * integrate(x) + beta * integrate(y));
    }
  }
}

TEST_CASE("property: homogeneous parts sum back to the class") {
  testing::Gen gen(17);
  for (const RingPtr& r : sample_rings()) {
    for (int trial = 0; trial < 50; ++trial) {
      const GradedClass x = gen.element(r);
      GradedClass sum(r);
      for (int d = 0; d <= r->top_degree(); d += 2) {
        const GradedClass part = homogeneous_part(x, d);
        CHECK(part.is_homogeneous_of_degree(d));
        sum += part;
      }
      CHECK(sum == x);
    }
  }
}

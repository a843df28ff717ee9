#include "logbott/graded_ring.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "logbott/errors.hpp"

namespace logbott {

RingPresentation::RingPresentation(std::vector<Generator> generators, std::vector<RewriteRule> rules,
                                   int top_degree, IntegrationTable integration_table)
    : generators_(std::move(generators)),
      rules_(std::move(rules)),
      top_degree_(top_degree),
      integration_table_(std::move(integration_table)) {
  names_.reserve(generators_.size());
  for (const auto& g : generators_) names_.push_back(g.name);
  validate();
  check_confluence();
}

int RingPresentation::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * generators_[i].degree;
  return d;
}

bool RingPresentation::precedes(const Monomial& a, const Monomial& b) const {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

const RewriteRule* RingPresentation::find_rule(const Monomial& m) const {
  for (const auto& rule : rules_) {
    if (divides(rule.lead, m)) return &rule;
  }
  return nullptr;
}

bool RingPresentation::is_reducible(const Monomial& m) const { return find_rule(m) != nullptr; }

void RingPresentation::validate() const {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.name.empty() || !seen.insert(g.name).second) {
      throw InputError("generator names must be non-empty and distinct ('" + g.name + "')");
    }
    if (g.degree <= 0 || g.degree % 2 != 0) {
      throw InputError("generator '" + g.name + "' must have positive even degree, got " +
                       std::to_string(g.degree));
    }
  }
  if (top_degree_ < 0 || top_degree_ % 2 != 0) {
    throw InputError("top degree must be a nonnegative even integer");
  }
  const std::size_t n = generators_.size();
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const auto& rule = rules_[r];
    const std::string where = "rewrite rule " + std::to_string(r) + " (" +
                              Polynomial::term(rule.lead, 1).to_string(names_) + " -> " +
                              rule.rhs.to_string(names_) + ")";
    if (rule.lead.size() != n || rule.rhs.num_vars() != n) {
      throw InputError(where + ": arity does not match the generator list");
    }
    if (logbott::total_degree(rule.lead) == 0) throw InputError(where + ": constant lead monomial");
    const int d = degree(rule.lead);
    for (const auto& [m, c] : rule.rhs.terms()) {
      if (degree(m) != d) throw InputError(where + ": not degree-homogeneous");
      if (!precedes(m, rule.lead)) {
        throw InputError(where + ": right-hand side does not precede the lead monomial");
      }
    }
  }
  for (const auto& [m, value] : integration_table_) {
    const std::string mono = m.size() == n ? Polynomial::term(m, 1).to_string(names_) : "?";
    if (m.size() != n) throw InputError("integration table monomial has wrong arity");
    if (degree(m) != top_degree_) {
      throw InputError("integration table monomial " + mono + " is not of top degree");
    }
    if (is_reducible(m)) throw InputError("integration table monomial " + mono + " is not in normal form");
  }
}

void RingPresentation::check_confluence() const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    for (std::size_t j = i + 1; j < rules_.size(); ++j) {
      const auto& a = rules_[i];
      const auto& b = rules_[j];
      const Monomial lcm = monomial_lcm(a.lead, b.lead);
      if (lcm == monomial_product(a.lead, b.lead)) continue;  // coprime leads always join
      if (degree(lcm) > top_degree_) continue;
      const Polynomial via_a = Polynomial::term(monomial_quotient(lcm, a.lead), 1) * a.rhs;
      const Polynomial via_b = Polynomial::term(monomial_quotient(lcm, b.lead), 1) * b.rhs;
      const Polynomial residual = normal_form(via_a - via_b);
      if (!residual.is_zero()) {
        throw ConfluenceError("critical pair of rules " + std::to_string(i) + " and " +
                              std::to_string(j) + " at " +
                              Polynomial::term(lcm, 1).to_string(names_) +
                              " does not join; residual " + residual.to_string(names_));
      }
    }
  }
}

Polynomial RingPresentation::normal_form(const Polynomial& p) const {
  const std::size_t n = generators_.size();
  if (p.num_vars() != n) {
    throw InputError("polynomial over " + std::to_string(p.num_vars()) + " variables used in a ring with " +
                     std::to_string(n) + " generators");
  }
  std::map<Monomial, Rational, Order> work(Order{this});
  auto accumulate = [&](const Monomial& m, const Rational& c) {
    if (degree(m) > top_degree_) return;
    auto [it, inserted] = work.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) work.erase(it);
    }
  };
  for (const auto& [m, c] : p.terms()) accumulate(m, c);

  Polynomial result(n);
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Monomial m = top->first;
    const Rational c = top->second;
    work.erase(top);
    const RewriteRule* rule = find_rule(m);
    if (rule == nullptr) {
      result.add_term(m, c);
      continue;
    }
    const Monomial cofactor = monomial_quotient(m, rule->lead);
    for (const auto& [rm, rc] : rule->rhs.terms()) accumulate(monomial_product(cofactor, rm), c * rc);
  }
  return result;
}

Polynomial RingPresentation::generator(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown generator '" + std::string(name) + "'");
  return Polynomial::variable(names_.size(), static_cast<std::size_t>(it - names_.begin()));
}

Polynomial RingPresentation::parse(std::string_view text) const { return parse_polynomial(text, names_); }

std::vector<Monomial> RingPresentation::standard_monomials(int target) const {
  std::vector<Monomial> out;
  const std::size_t n = generators_.size();
  Monomial m(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == n) {
      if (remaining == 0 && !is_reducible(m)) out.push_back(m);
      return;
    }
    for (int e = 0; e * generators_[i].degree <= remaining; ++e) {
      m[i] = e;
      rec(i + 1, remaining - e * generators_[i].degree);
    }
    m[i] = 0;
  };
  if (target >= 0 && target <= top_degree_) rec(0, target);
  std::sort(out.begin(), out.end(), Order{this});
  return out;
}

bool operator==(const RingPresentation& a, const RingPresentation& b) {
  return a.generators_ == b.generators_ && a.rules_ == b.rules_ && a.top_degree_ == b.top_degree_ &&
         a.integration_table_ == b.integration_table_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Polynomial normal_form(const Polynomial& p, const RingPresentation& ring) { return ring.normal_form(p); }

// ---------------------------------------------------------------------------

GradedClass GradedClass::from_polynomial(RingPtr ring, const Polynomial& p) {
  GradedClass x(std::move(ring));
  x.assign(p);
  return x;
}

GradedClass GradedClass::constant(RingPtr ring, const Rational& c) {
  const Polynomial p = ring->constant(c);
  return from_polynomial(std::move(ring), p);
}

GradedClass GradedClass::parse(RingPtr ring, std::string_view text) {
  const Polynomial p = ring->parse(text);
  return from_polynomial(std::move(ring), p);
}

void GradedClass::assign(const Polynomial& p) {
  if (!ring_) throw InputError("graded class has no ambient ring");
  parts_.clear();
  const Polynomial reduced = ring_->normal_form(p);
  for (const auto& [m, c] : reduced.terms()) {
    auto [it, inserted] = parts_.try_emplace(ring_->degree(m), ring_->num_generators());
    it->second.add_term(m, c);
  }
}

Rational GradedClass::degree_zero_coefficient() const {
  const auto it = parts_.find(0);
  return it == parts_.end() ? Rational(0) : it->second.constant_term();
}

bool GradedClass::is_homogeneous_of_degree(int d) const {
  return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first == d);
}

Polynomial GradedClass::to_polynomial() const {
  Polynomial p(ring_ ? ring_->num_generators() : 0);
  for (const auto& [d, part] : parts_) p += part;
  return p;
}

std::string GradedClass::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (auto it = parts_.begin(); it != parts_.end(); ++it) {
    std::string piece = ring_->format(it->second);
    if (!out.empty()) {
      if (piece.front() == '-') {
        out += " - " + piece.substr(1);
        continue;
      }
      out += " + ";
    }
    out += piece;
  }
  return out;
}

void GradedClass::check_ring(const GradedClass& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatchError("graded classes live in different rings");
}

GradedClass& GradedClass::operator+=(const GradedClass& other) {
  check_ring(other);
  for (const auto& [d, part] : other.parts_) {
    auto [it, inserted] = parts_.try_emplace(d, part);
    if (!inserted) {
      it->second += part;
      if (it->second.is_zero()) parts_.erase(it);
    }
  }
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& other) { return *this += -other; }

GradedClass& GradedClass::operator*=(const GradedClass& other) {
  check_ring(other);
  Polynomial product(ring_->num_generators());
  for (const auto& [da, pa] : parts_) {
    for (const auto& [db, pb] : other.parts_) {
      if (da + db <= ring_->top_degree()) product += pa * pb;
    }
  }
  assign(product);
  return *this;
}

GradedClass& GradedClass::operator*=(const Rational& c) {
  if (c == 0) {
    parts_.clear();
    return *this;
  }
  for (auto& [d, part] : parts_) part *= c;
  return *this;
}

bool operator==(const GradedClass& a, const GradedClass& b) {
  return same_ring(a.ring_, b.ring_) && a.parts_ == b.parts_;
}

GradedClass GradedClass::pow(unsigned exponent) const {
  GradedClass result = constant(ring_, 1);
  for (unsigned i = 0; i < exponent; ++i) {
    result *= *this;
    if (result.is_zero()) break;
  }
  return result;
}

GradedClass homogeneous_part(const GradedClass& x, int d) {
  if (d < 0 || d % 2 != 0) {
    throw InputError("homogeneous degree must be a nonnegative even integer, got " + std::to_string(d));
  }
  GradedClass result(x.ring());
  const auto it = x.parts().find(d);
  if (it != x.parts().end()) result += GradedClass::from_polynomial(x.ring(), it->second);
  return result;
}

GradedClass invert_unit(const GradedClass& x) {
  const Rational c0 = x.degree_zero_coefficient();
  if (c0 == 0) throw NonInvertibleError("class " + x.to_string() + " has zero degree-0 part");
  const Rational inv_c0 = 1 / c0;
  // x = c0 (1 + eta), x^{-1} = c0^{-1} (1 - eta + eta^2 - ...)
  GradedClass eta = x * inv_c0 - GradedClass::constant(x.ring(), 1);
  GradedClass term = GradedClass::constant(x.ring(), 1);
  GradedClass sum = term;
  const GradedClass minus_eta = -eta;
  while (true) {
    term *= minus_eta;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum * inv_c0;
}

Rational integrate(const GradedClass& x, const RingPresentation& ring) {
  if (!x.ring() || (x.ring().get() != &ring && !(*x.ring() == ring))) throw RingMismatchError("class integrated against a different ring");
  const auto it = x.parts().find(ring.top_degree());
  if (it == x.parts().end()) return 0;
  Rational total(0);
  for (const auto& [m, c] : it->second.terms()) {
    const auto entry = ring.integration_table().find(m);
    if (entry == ring.integration_table().end()) {
      throw PresentationIncompleteError("no integration value for top-degree monomial " +
                                        Polynomial::term(m, 1).to_string(ring.generator_names()));
    }
    total += c * entry->second;
  }
  return total;
}

Rational integrate(const GradedClass& x) {
  if (!x.ring()) throw InputError("graded class has no ambient ring");
  return integrate(x, *x.ring());
}

}  // namespace logbott

#include "logbott/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "logbott/errors.hpp"

namespace logbott {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial monomial_quotient(const Monomial& m, const Monomial& d) {
  Monomial r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] - d[i];
  return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw InputError("variable index out of range");
  Monomial m(num_vars, 0);
  m[index] = 1;
  return term(std::move(m), Rational(1));
}

Polynomial Polynomial::term(Monomial m, const Rational& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && logbott::total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(num_vars_, 0)); }

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, logbott::total_degree(m));
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != num_vars_) {
    throw InputError("monomial has " + std::to_string(m.size()) + " exponents, expected " +
                     std::to_string(num_vars_));
  }
  if (std::any_of(m.begin(), m.end(), [](int e) { return e < 0; })) {
    throw InputError("negative exponent in monomial");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (num_vars_ != other.num_vars_) {
    throw InputError("polynomials over " + std::to_string(num_vars_) + " and " +
                     std::to_string(other.num_vars_) + " variables cannot be combined");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  check_compatible(other);
  Polynomial result(num_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) result.add_term(monomial_product(ma, mb), ca * cb);
  }
  *this = std::move(result);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(num_vars_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= num_vars_) throw InputError("derivative variable out of range");
  Polynomial result(num_vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    --dm[var];
    result.add_term(dm, c * m[var]);
  }
  return result;
}

Polynomial Polynomial::restrict_to_zero(std::span<const std::size_t> vars) const {
  Polynomial result(num_vars_);
  for (const auto& [m, c] : terms_) {
    if (std::none_of(vars.begin(), vars.end(), [&](std::size_t v) { return m.at(v) != 0; })) {
      result.add_term(m, c);
    }
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw InputError("evaluation point has wrong dimension");
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (m[i] != 0) t *= power(point[i], static_cast<unsigned>(m[i]));
    }
    sum += t;
  }
  return sum;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> point) const {
  if (point.size() != num_vars_) throw InputError("evaluation point has wrong dimension");
  std::complex<double> sum(0.0, 0.0);
  for (const auto& [m, c] : terms_) {
    std::complex<double> t(c.get_d(), 0.0);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (magnitude != 1 || logbott::total_degree(m) == 0) {
      out << logbott::to_string(magnitude);
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) out << '*';
      out << (i < names.size() ? names[i] : "z" + std::to_string(i + 1));
      if (m[i] > 1) out << '^' << m[i];
      wrote = true;
    }
  }
  return out.str();
}

std::vector<std::string> default_names(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i + 1));
  return names;
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::span<const std::string> names)
      : text_(text), names_(names) {}

  Polynomial parse() {
    Polynomial result = sum();
    skip_space();
    if (!at_end()) fail(peek() == ')' ? "unbalanced ')'" : "expected '+' or '-'");
    return result;
  }

 private:
  Polynomial sum() {
    Polynomial result(names_.size());
    skip_space();
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = (take() == '-');
    result += signed_term(negate);
    while (true) {
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      result += signed_term(take() == '-');
    }
    return result;
  }

  Polynomial exponent(const Polynomial& base) {
    skip_space();
    if (peek() != '^') return base;
    take();
    skip_space();
    std::size_t estart = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (estart == pos_) fail("expected exponent");
    return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(estart, pos_ - estart)))));
  }

  Polynomial signed_term(bool negate) {
    Polynomial t = factor();
    while (true) {
      skip_space();
      if (peek() != '*') break;
      take();
      t *= factor();
    }
    if (negate) t *= Rational(-1);
    return t;
  }

  Polynomial factor() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    if (peek() == '(') {
      take();
      Polynomial inner = sum();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      take();
      return exponent(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      return Polynomial::constant(names_.size(), parse_rational(text_.substr(start, pos_ - start)));
    }
    if (!is_name_char(peek())) fail("unexpected character");
    std::size_t start = pos_;
    while (!at_end() && is_name_char(peek())) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw InputError("unknown generator '" + name + "'");
    return exponent(Polynomial::variable(names_.size(), static_cast<std::size_t>(it - names_.begin())));
  }

  static bool is_name_char(char ch) {
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_' ||
           std::isdigit(static_cast<unsigned char>(ch));
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names) {
  return PolynomialParser(text, names).parse();
}

}  // namespace logbott

#include "monocurve/polynomial.hpp"

namespace monocurve {

Polynomial::Polynomial(const Monomial& mono, const Rational& coeff) : p_(mono.p()) {
  add_term(mono, coeff);
}

Polynomial Polynomial::binomial(const Monomial& lhs, const Monomial& rhs) {
  Polynomial f(lhs);
  f.add_term(rhs, -1);
  return f;
}

void Polynomial::check_same_ring(int other_p) const {
  if (other_p != p_) {
    throw DimensionError("polynomials over different rings (p=" + std::to_string(p_) + " vs p=" +
                         std::to_string(other_p) + ")");
  }
}

Rational Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& mono, const Rational& coeff) {
  check_same_ring(mono.p());
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_ring(other.p_);
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_ring(other.p_);
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  r *= -1;
  return r;
}

void Polynomial::add_scaled_product(const Rational& coeff, const Monomial& mono,
                                    const Polynomial& other) {
  check_same_ring(other.p_);
  if (coeff == 0) return;
  for (const auto& [m, c] : other.terms_) add_term(mono * m, coeff * c);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.get_str() + ")*" + mono.to_string();
  }
  return out;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
Polynomial operator*(Polynomial lhs, const Rational& scalar) { return lhs *= scalar; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.p() != rhs.p()) throw DimensionError("polynomials over different rings");
  Polynomial out(lhs.p());
  for (const auto& [mono, c] : lhs.terms()) out.add_scaled_product(c, mono, rhs);
  return out;
}

Polynomial operator*(const Monomial& mono, const Polynomial& poly) {
  Polynomial out(poly.p());
  out.add_scaled_product(1, mono, poly);
  return out;
}

}  // namespace monocurve

#pragma once

#include "monocurve/monomial.hpp"
#include "monocurve/rational.hpp"

#include <map>
#include <string>

namespace monocurve {

/// Sparse polynomial over Q in X_1, ..., X_p, X_0.
///
/// Terms are keyed by the storage order of Monomial; the ring order lives in
/// MonomialOrder. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(int p) : p_(p) {}
  Polynomial(const Monomial& mono, const Rational& coeff = 1);

  /// mono_a - mono_b.
  static Polynomial binomial(const Monomial& lhs, const Monomial& rhs);

  int p() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of mono (0 if absent).
  Rational coefficient(const Monomial& mono) const;
  void add_term(const Monomial& mono, const Rational& coeff);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial operator-() const;

  /// this += coeff * mono * other, the division step.
  void add_scaled_product(const Rational& coeff, const Monomial& mono, const Polynomial& other);

  bool operator==(const Polynomial&) const = default;

  /// Terms in storage order; use format() in polyring.hpp for ring order.
  std::string to_string() const;

 private:
  void check_same_ring(int other_p) const;

  int p_ = 0;
  TermMap terms_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
Polynomial operator*(Polynomial lhs, const Rational& scalar);
Polynomial operator*(const Monomial& mono, const Polynomial& poly);

}  // namespace monocurve

#pragma once

#include "monocurve/generators.hpp"
#include "monocurve/polyring.hpp"

#include <compare>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace monocurve {

/// A monomial of the free module M: X^alpha * e.
struct ModuleMonomial {
  Monomial mono;
  BasisSymbol symbol;

  auto operator<=>(const ModuleMonomial&) const = default;
  bool operator==(const ModuleMonomial&) const = default;
};

/// Finite Q-combination of module monomials over the basis {Psi(b,j)} u {Phi(i,j)}.
class ModuleElement {
 public:
  using TermMap = std::map<ModuleMonomial, Rational>;

  ModuleElement() = default;
  explicit ModuleElement(int p) : p_(p) {}

  int p() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const ModuleMonomial& term, const Rational& coeff);
  /// Adds coeff * mono * e, dropping symbols outside the valid index ranges
  /// (Phi with an index outside [1, p-1], Psi outside [0, p-b]). Phi indices
  /// are symmetrized first.
  void add(const CurveParams& params, const Rational& coeff, const Monomial& mono,
           BasisSymbol symbol);
  /// Adds poly * e, same dropping rule.
  void add(const CurveParams& params, const Polynomial& poly, BasisSymbol symbol);

  ModuleElement& operator+=(const ModuleElement& other);
  ModuleElement& operator-=(const ModuleElement& other);
  ModuleElement& operator*=(const Rational& scalar);
  /// this += coeff * mono * other.
  void add_scaled_product(const Rational& coeff, const Monomial& mono, const ModuleElement& other);

  bool operator==(const ModuleElement&) const = default;

 private:
  int p_ = 0;
  TermMap terms_;
};

ModuleElement operator*(const Polynomial& poly, const ModuleElement& elem);

/// varpi(X^a Psi(b,i)) = X^a X_p^a X_{b+i}; varpi(X^a Phi(i,j)) = X^a X_i X_j.
Monomial varpi(const CurveParams& params, const Monomial& mono, const BasisSymbol& symbol);
inline Monomial varpi(const CurveParams& params, const ModuleMonomial& term) {
  return varpi(params, term.mono, term.symbol);
}

/// Ranking used when varpi-images tie: Psi(b,i) > Psi(b,j) for i < j,
/// any Psi > any Phi, Phi(i,j) > Phi(i',j') for (j, i) > (j', i').
std::strong_ordering compare_symbols(const BasisSymbol& lhs, const BasisSymbol& rhs);

/// The order >_M: varpi-images under >_R, then compare_symbols.
class ModuleOrder {
 public:
  explicit ModuleOrder(CurveParams params) : ring_(std::move(params)) {}

  const MonomialOrder& ring_order() const { return ring_; }
  const CurveParams& params() const { return ring_.params(); }

  std::strong_ordering compare(const ModuleMonomial& lhs, const ModuleMonomial& rhs) const;

 private:
  MonomialOrder ring_;
};

struct ModuleTerm {
  ModuleMonomial monomial;
  Rational coeff;
};

ModuleTerm leading_term(const ModuleOrder& order, const ModuleElement& elem);
std::vector<ModuleTerm> sorted_terms(const ModuleOrder& order, const ModuleElement& elem);
std::string format(const ModuleOrder& order, const ModuleElement& elem);

/// sum coeff * X^alpha * (generator of e); the t-degree is dropped.
Polynomial phi_map(const CurveParams& params, const ModuleElement& elem);

/// A(i; b, j), i in [1, p], j in [0, p-b-1].
ModuleElement build_A(const CurveParams& params, int i, int j);
/// B(i, j), 1 <= i <= j <= p-1 (arguments canonicalized).
ModuleElement build_B(const CurveParams& params, int i, int j);
/// L(l; i, j), l, i, j in [1, p-1], i <= j, l < j.
ModuleElement build_L(const CurveParams& params, int l, int i, int j);

struct LabeledSyzygy {
  std::string name;  // "A(3;1,0)", "B(1,2)", "L(1;2,2)"
  ModuleElement elem;
  ModuleMonomial underlined;  // the leading term claimed by construction
};

struct SyzygySet {
  int p = 0;
  int b = 0;
  std::map<std::pair<int, int>, ModuleElement> A;
  std::map<std::pair<int, int>, ModuleElement> B;
  std::map<std::tuple<int, int, int>, ModuleElement> L;

  std::size_t size() const { return A.size() + B.size() + L.size(); }
  /// A, then B, then L, each in index order.
  std::vector<LabeledSyzygy> all() const;
  std::vector<ModuleElement> elements() const;
};

SyzygySet build_G_hat(const CurveParams& params);

/// The explicit leading-term set of the closed-form syzygies:
/// X_i X_j Psi(b,p-b), X_l Phi(i,j) (l < j), X_l Psi(b,j) (l in [1,p], j < p-b).
std::vector<ModuleMonomial> expected_leading_terms_G_hat(const CurveParams& params);

struct ModuleDivision {
  ModuleElement remainder;
  std::vector<Polynomial> quotients;
};

/// A term X^a e is reducible by a basis element with leading term X^c e (same
/// symbol) when X^c divides X^a. Same deterministic strategy as normal_form.
ModuleDivision module_normal_form(const ModuleOrder& order, const ModuleElement& elem,
                                  std::span<const ModuleElement> basis);

/// Cancels the leading terms of f and g; requires a shared leading symbol.
ModuleElement s_vector(const ModuleOrder& order, const ModuleElement& f, const ModuleElement& g);

/// Coefficient vector over `gens` (aligned with labels) to a module element.
ModuleElement to_module_element(const CurveParams& params, std::span<const LabeledGenerator> gens,
                                std::span<const Polynomial> coefficients);

}  // namespace monocurve

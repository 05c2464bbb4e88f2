#pragma once

#include "monocurve/polynomial.hpp"
#include "monocurve/semigroup.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace monocurve {

class ZeroPolynomialError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The weighted order >_R on monomials of R.
///
/// f > g iff w(f) > w(g), or the weights tie and the right-most non-zero entry
/// of exps(f) - exps(g), in tuple order (a_1, ..., a_p, a_0), is negative.
class MonomialOrder {
 public:
  explicit MonomialOrder(CurveParams params);

  const CurveParams& params() const { return params_; }
  std::int64_t weight(const Monomial& mono) const;

  std::strong_ordering compare(const Monomial& lhs, const Monomial& rhs) const;
  bool greater(const Monomial& lhs, const Monomial& rhs) const { return compare(lhs, rhs) > 0; }

 private:
  CurveParams params_;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Throws ZeroPolynomialError on 0.
Term leading_term(const MonomialOrder& order, const Polynomial& f);
Monomial leading_monomial(const MonomialOrder& order, const Polynomial& f);

/// Terms sorted descending under the order.
std::vector<Term> sorted_terms(const MonomialOrder& order, const Polynomial& f);

/// Human-readable, descending: "X1*X2 - X3*X0".
std::string format(const MonomialOrder& order, const Polynomial& f);

struct Division {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

/// Multivariate division: f = sum quotients[k] * basis[k] + remainder.
///
/// Always reduces the largest reducible term by the first basis element (in
/// list order) whose leading monomial divides it, so results are reproducible.
Division normal_form(const MonomialOrder& order, const Polynomial& f,
                     std::span<const Polynomial> basis);

Polynomial s_polynomial(const MonomialOrder& order, const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis (monic, inter-reduced), sorted descending by leading monomial.
std::vector<Polynomial> buchberger(const MonomialOrder& order, std::span<const Polynomial> gens);

/// A relation sum coefficients[k] * gens[k] = 0 harvested from the S-pair (first, second).
struct PairSyzygy {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<Polynomial> coefficients;
};

/// A pair whose S-polynomial left a non-zero remainder.
struct PairFailure {
  std::size_t first = 0;
  std::size_t second = 0;
  Polynomial s_poly;
  Polynomial remainder;
};

struct SchreyerResult {
  std::vector<PairSyzygy> syzygies;
  std::vector<PairFailure> failures;
};

/// Reduces the S-polynomial of every pair of `gens` (coprime leading terms
/// included) modulo `gens`. When gens is a Groebner basis every remainder is
/// zero and the recorded relations generate its first syzygy module.
SchreyerResult schreyer_syzygies(const MonomialOrder& order, std::span<const Polynomial> gens);

/// Image under X_k -> T^{m_k}; exponent of T -> coefficient, zeros pruned.
using UnivariatePolynomial = std::map<std::int64_t, Rational>;
UnivariatePolynomial eta_eval(const CurveParams& params, const Polynomial& f);

}  // namespace monocurve

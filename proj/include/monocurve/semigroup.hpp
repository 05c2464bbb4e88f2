#pragma once

#include "monocurve/monomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace monocurve {

/// Base of every rejection raised while validating curve parameters.
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GcdError : public ParamError {
 public:
  using ParamError::ParamError;
};

class HypothesisError : public ParamError {
 public:
  using ParamError::ParamError;
};

class NotMinimalError : public ParamError {
 public:
  NotMinimalError(int index, std::vector<std::int64_t> representation, const std::string& what);

  /// The generator m_index that lies in the semigroup of the others.
  int index() const { return index_; }
  /// Coefficients c_0..c_p with c_index = 0 and sum c_k m_k = m_index.
  const std::vector<std::int64_t>& representation() const { return representation_; }

 private:
  int index_;
  std::vector<std::int64_t> representation_;
};

/// Arithmetic sequence m_i = m0 + i*d, i in [0, p], with m0 = a*p + b.
///
/// Only obtainable through make_params, which enforces p >= 2, d >= 1,
/// a >= 1, b in [1, p], gcd(m0, d) = 1 and minimality of {m_0, ..., m_p}.
class CurveParams {
 public:
  int p() const { return p_; }
  std::int64_t m0() const { return m0_; }
  std::int64_t d() const { return d_; }
  std::int64_t a() const { return a_; }
  int b() const { return b_; }
  std::int64_t generator(int i) const { return generators_[static_cast<std::size_t>(i)]; }
  std::span<const std::int64_t> generators() const { return generators_; }

  std::string to_string() const;

  bool operator==(const CurveParams&) const = default;

 private:
  friend CurveParams make_params(std::int64_t m0, std::int64_t d, int p);

  int p_ = 0;
  std::int64_t m0_ = 0;
  std::int64_t d_ = 0;
  std::int64_t a_ = 0;
  int b_ = 0;
  std::vector<std::int64_t> generators_;
};

CurveParams make_params(std::int64_t m0, std::int64_t d, int p);

/// Membership of x in the semigroup generated by `gens`, with one witness
/// (coefficient per generator) when x is representable.
struct Membership {
  bool member = false;
  std::vector<std::int64_t> witness;
};

/// Coin-style DP over [0, x] with back-pointers.
Membership semigroup_contains(std::span<const std::int64_t> gens, std::int64_t x);
Membership semigroup_contains(const CurveParams& params, std::int64_t x);

/// Solution of m*m_p = n*m_0 + m_i or n*m_0 = m*m_p + m_i.
struct MultipleRelation {
  std::int64_t m = 0;
  std::int64_t n = 0;
  int i = 0;
  bool operator==(const MultipleRelation&) const = default;
};

/// Smallest m >= 1 with m*m_p = n*m_0 + m_i, n >= 1, 0 <= i < p; by search.
MultipleRelation min_multiple_of_mp(const CurveParams& params);

/// Smallest n >= 1 with n*m_0 = m*m_p + m_i, m >= 1, 0 < i <= p; by search.
MultipleRelation min_multiple_of_m0(const CurveParams& params);

/// Sum of exponent(k) * m_k.
std::int64_t weight(const CurveParams& params, const Monomial& mono);

}  // namespace monocurve

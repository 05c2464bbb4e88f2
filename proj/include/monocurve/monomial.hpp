#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace monocurve {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Monomial in X_1, ..., X_p, X_0.
///
/// Exponents are stored in the tuple order (a_1, ..., a_p, a_0): the exponent
/// of X_0 sits in the last slot. Accessors taking a *variable index* k in
/// [0, p] hide that layout; `raw()` exposes it.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  /// The constant monomial 1 in p+1 variables.
  explicit Monomial(int p);
  /// From raw tuple order (a_1, ..., a_p, a_0).
  Monomial(std::vector<Exponent> raw_exponents);

  static Monomial one(int p) { return Monomial(p); }
  static Monomial variable(int p, int k, Exponent power = 1);
  /// Product of X_k^e over the given (k, e) pairs.
  static Monomial of(int p, std::initializer_list<std::pair<int, Exponent>> factors);

  int p() const { return static_cast<int>(exps_.size()) - 1; }
  std::size_t num_vars() const { return exps_.size(); }

  Exponent exponent(int k) const { return exps_[slot(k)]; }
  void set_exponent(int k, Exponent e) { exps_[slot(k)] = e; }
  std::span<const Exponent> raw() const { return exps_; }

  std::uint64_t total_degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);

  /// Lexicographic on the raw tuple. Only a storage order, not the ring order.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  /// "1", "X1^2*X3", "X0^4".
  std::string to_string() const;

 private:
  std::size_t slot(int k) const;
  void check_same_ring(const Monomial& other) const;

  std::vector<Exponent> exps_;
};

}  // namespace monocurve

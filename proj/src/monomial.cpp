#include "monocurve/monomial.hpp"
#include "monocurve/rational.hpp"

#include <algorithm>
#include <numeric>

namespace monocurve {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

Monomial::Monomial(int p) {
  if (p < 1) throw DimensionError("monomial needs p >= 1");
  exps_.assign(static_cast<std::size_t>(p) + 1, 0);
}

Monomial::Monomial(std::vector<Exponent> raw_exponents) : exps_(std::move(raw_exponents)) {
  if (exps_.size() < 2) throw DimensionError("monomial needs at least two variables");
}

Monomial Monomial::variable(int p, int k, Exponent power) {
  Monomial m(p);
  m.set_exponent(k, power);
  return m;
}

Monomial Monomial::of(int p, std::initializer_list<std::pair<int, Exponent>> factors) {
  Monomial m(p);
  for (auto [k, e] : factors) m.exps_[m.slot(k)] += e;
  return m;
}

std::size_t Monomial::slot(int k) const {
  const int pp = p();
  if (k < 0 || k > pp) {
    throw DimensionError("variable index " + std::to_string(k) + " outside [0," +
                         std::to_string(pp) + "]");
  }
  return k == 0 ? static_cast<std::size_t>(pp) : static_cast<std::size_t>(k - 1);
}

void Monomial::check_same_ring(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) {
    throw DimensionError("monomials over different numbers of variables");
  }
}

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  check_same_ring(other);
  for (std::size_t s = 0; s < exps_.size(); ++s) {
    if (exps_[s] > other.exps_[s]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same_ring(other);
  Monomial r = *this;
  for (std::size_t s = 0; s < exps_.size(); ++s) r.exps_[s] = std::max(exps_[s], other.exps_[s]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  check_same_ring(other);
  Monomial r = *this;
  for (std::size_t s = 0; s < exps_.size(); ++s) r.exps_[s] = std::min(exps_[s], other.exps_[s]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  check_same_ring(other);
  for (std::size_t s = 0; s < exps_.size(); ++s) {
    if (exps_[s] != 0 && other.exps_[s] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) {
    throw std::domain_error(divisor.to_string() + " does not divide " + to_string());
  }
  Monomial r = *this;
  for (std::size_t s = 0; s < exps_.size(); ++s) r.exps_[s] -= divisor.exps_[s];
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  check_same_ring(other);
  for (std::size_t s = 0; s < exps_.size(); ++s) exps_[s] += other.exps_[s];
  return *this;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

std::string Monomial::to_string() const {
  std::string out;
  const int pp = p();
  auto emit = [&](int k) {
    const Exponent e = exponent(k);
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += 'X' + std::to_string(k);
    if (e > 1) out += '^' + std::to_string(e);
  };
  for (int k = 1; k <= pp; ++k) emit(k);
  emit(0);
  return out.empty() ? "1" : out;
}

}  // namespace monocurve

#include "monocurve/semigroup.hpp"

#include <numeric>
#include <sstream>

namespace monocurve {

NotMinimalError::NotMinimalError(int index, std::vector<std::int64_t> representation,
                                 const std::string& what)
    : ParamError(what), index_(index), representation_(std::move(representation)) {}

std::string CurveParams::to_string() const {
  std::ostringstream os;
  os << "m0=" << m0_ << " d=" << d_ << " p=" << p_ << " (a=" << a_ << ", b=" << b_
     << ", generators=";
  for (std::size_t k = 0; k < generators_.size(); ++k) os << (k ? "," : "") << generators_[k];
  os << ")";
  return os.str();
}

Membership semigroup_contains(std::span<const std::int64_t> gens, std::int64_t x) {
  Membership result;
  if (x < 0) return result;
  result.witness.assign(gens.size(), 0);
  if (x == 0) {
    result.member = true;
    return result;
  }
  // last[v] = index of the generator used last to reach v, -1 if unreachable.
  std::vector<int> last(static_cast<std::size_t>(x) + 1, -1);
  std::vector<char> reach(static_cast<std::size_t>(x) + 1, 0);
  reach[0] = 1;
  for (std::int64_t v = 1; v <= x; ++v) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::int64_t g = gens[k];
      if (g > 0 && g <= v && reach[static_cast<std::size_t>(v - g)]) {
        reach[static_cast<std::size_t>(v)] = 1;
        last[static_cast<std::size_t>(v)] = static_cast<int>(k);
        break;
      }
    }
  }
  if (!reach[static_cast<std::size_t>(x)]) {
    result.witness.clear();
    return result;
  }
  result.member = true;
  for (std::int64_t v = x; v > 0;) {
    const int k = last[static_cast<std::size_t>(v)];
    ++result.witness[static_cast<std::size_t>(k)];
    v -= gens[static_cast<std::size_t>(k)];
  }
  return result;
}

Membership semigroup_contains(const CurveParams& params, std::int64_t x) {
  return semigroup_contains(params.generators(), x);
}

CurveParams make_params(std::int64_t m0, std::int64_t d, int p) {
  if (p < 2) throw HypothesisError("p must be at least 2 (got " + std::to_string(p) + ")");
  if (d < 1) throw HypothesisError("d must be at least 1 (got " + std::to_string(d) + ")");
  if (m0 < 1) throw HypothesisError("m0 must be positive (got " + std::to_string(m0) + ")");
  if (std::gcd(m0, d) != 1) {
    throw GcdError("gcd(m0,d) must be 1 (gcd(" + std::to_string(m0) + "," + std::to_string(d) +
                   ") = " + std::to_string(std::gcd(m0, d)) + ")");
  }

  CurveParams params;
  params.p_ = p;
  params.m0_ = m0;
  params.d_ = d;
  params.a_ = (m0 - 1) / p;
  params.b_ = static_cast<int>(m0 - params.a_ * p);
  if (params.a_ < 1) {
    throw HypothesisError("m0 = a*p + b needs a >= 1, i.e. m0 > p (m0=" + std::to_string(m0) +
                          ", p=" + std::to_string(p) + ")");
  }
  for (int i = 0; i <= p; ++i) params.generators_.push_back(m0 + i * d);

  for (int i = 0; i <= p; ++i) {
    std::vector<std::int64_t> others;
    for (int k = 0; k <= p; ++k) {
      if (k != i) others.push_back(params.generators_[static_cast<std::size_t>(k)]);
    }
    auto rep = semigroup_contains(others, params.generator(i));
    if (rep.member) {
      std::vector<std::int64_t> full(static_cast<std::size_t>(p) + 1, 0);
      for (int k = 0, s = 0; k <= p; ++k) {
        if (k != i) full[static_cast<std::size_t>(k)] = rep.witness[static_cast<std::size_t>(s++)];
      }
      std::ostringstream os;
      os << "generators are not minimal: m_" << i << " = " << params.generator(i) << " =";
      bool first = true;
      for (int k = 0; k <= p; ++k) {
        if (full[static_cast<std::size_t>(k)] == 0) continue;
        os << (first ? " " : " + ") << full[static_cast<std::size_t>(k)] << "*m_" << k;
        first = false;
      }
      throw NotMinimalError(i, std::move(full), os.str());
    }
  }
  return params;
}

MultipleRelation min_multiple_of_mp(const CurveParams& params) {
  const int p = params.p();
  const std::int64_t m0 = params.m0();
  const std::int64_t mp = params.generator(p);
  // Some m <= m0 always works (m*p - i = q*m0 has a solution with q >= 1).
  for (std::int64_t m = 1; m <= m0 + 1; ++m) {
    for (int i = 0; i < p; ++i) {
      const std::int64_t rest = m * mp - params.generator(i);
      if (rest >= m0 && rest % m0 == 0) return {m, rest / m0, i};
    }
  }
  throw std::logic_error("min_multiple_of_mp: search exhausted for " + params.to_string());
}

MultipleRelation min_multiple_of_m0(const CurveParams& params) {
  const int p = params.p();
  const std::int64_t mp = params.generator(p);
  for (std::int64_t n = 1; n <= mp + params.a() + params.d() + 2; ++n) {
    for (int i = 1; i <= p; ++i) {
      const std::int64_t rest = n * params.m0() - params.generator(i);
      if (rest >= mp && rest % mp == 0) return {rest / mp, n, i};
    }
  }
  throw std::logic_error("min_multiple_of_m0: search exhausted for " + params.to_string());
}

std::int64_t weight(const CurveParams& params, const Monomial& mono) {
  if (mono.p() != params.p()) throw DimensionError("monomial/params dimension mismatch");
  std::int64_t w = 0;
  for (int k = 0; k <= params.p(); ++k) {
    w += static_cast<std::int64_t>(mono.exponent(k)) * params.generator(k);
  }
  return w;
}

}  // namespace monocurve

#include "monocurve/polyring.hpp"

#include <algorithm>
#include <utility>

namespace monocurve {

MonomialOrder::MonomialOrder(CurveParams params) : params_(std::move(params)) {}

std::int64_t MonomialOrder::weight(const Monomial& mono) const {
  return monocurve::weight(params_, mono);
}

std::strong_ordering MonomialOrder::compare(const Monomial& lhs, const Monomial& rhs) const {
  if (lhs.p() != params_.p() || rhs.p() != params_.p()) {
    throw DimensionError("monomial/order dimension mismatch");
  }
  const std::int64_t wl = weight(lhs);
  const std::int64_t wr = weight(rhs);
  if (wl != wr) return wl <=> wr;
  // Right-most non-zero entry of lhs - rhs in tuple order; negative means lhs is larger.
  const auto l = lhs.raw();
  const auto r = rhs.raw();
  for (std::size_t s = l.size(); s-- > 0;) {
    if (l[s] != r[s]) return l[s] < r[s] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

Term leading_term(const MonomialOrder& order, const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError("leading term of the zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it) {
    if (order.greater(it->first, best->first)) best = it;
  }
  return {best->first, best->second};
}

Monomial leading_monomial(const MonomialOrder& order, const Polynomial& f) {
  return leading_term(order, f).mono;
}

std::vector<Term> sorted_terms(const MonomialOrder& order, const Polynomial& f) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& [mono, c] : f.terms()) out.push_back({mono, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& x, const Term& y) { return order.greater(x.mono, y.mono); });
  return out;
}

std::string format(const MonomialOrder& order, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : sorted_terms(order, f)) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mag != 1 || mono.is_one()) out += mag.get_str() + (mono.is_one() ? "" : "*");
    if (!mono.is_one()) out += mono.to_string();
  }
  return out;
}

Division normal_form(const MonomialOrder& order, const Polynomial& f,
                     std::span<const Polynomial> basis) {
  const int p = order.params().p();
  std::vector<Term> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) leads.push_back(leading_term(order, g));

  Division out{Polynomial(p), std::vector<Polynomial>(basis.size(), Polynomial(p))};
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term lt = leading_term(order, rest);
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!leads[k].mono.divides(lt.mono)) continue;
      const Monomial q = lt.mono / leads[k].mono;
      const Rational c = lt.coeff / leads[k].coeff;
      out.quotients[k].add_term(q, c);
      rest.add_scaled_product(-c, q, basis[k]);
      reduced = true;
      break;
    }
    if (!reduced) {
      out.remainder.add_term(lt.mono, lt.coeff);
      rest.add_term(lt.mono, -lt.coeff);
    }
  }
  return out;
}

Polynomial s_polynomial(const MonomialOrder& order, const Polynomial& f, const Polynomial& g) {
  const Term lf = leading_term(order, f);
  const Term lg = leading_term(order, g);
  const Monomial l = lf.mono.lcm(lg.mono);
  Polynomial s(f.p());
  s.add_scaled_product(1 / lf.coeff, l / lf.mono, f);
  s.add_scaled_product(-1 / lg.coeff, l / lg.mono, g);
  return s;
}

namespace {

Polynomial make_monic(const MonomialOrder& order, Polynomial f) {
  const Rational lc = leading_term(order, f).coeff;
  f *= 1 / lc;
  return f;
}

}  // namespace

std::vector<Polynomial> buchberger(const MonomialOrder& order, std::span<const Polynomial> gens) {
  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    if (!g.is_zero()) basis.push_back(make_monic(order, g));
  }
  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(leading_monomial(order, g));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }

  while (!pairs.empty()) {
    // Normal selection: the pair with the smallest lcm.
    auto pick = pairs.begin();
    Monomial pick_lcm = leads[pick->first].lcm(leads[pick->second]);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = leads[it->first].lcm(leads[it->second]);
      if (order.greater(pick_lcm, l)) {
        pick = it;
        pick_lcm = std::move(l);
      }
    }
    const auto [i, j] = *pick;
    pairs.erase(pick);
    if (leads[i].coprime(leads[j])) continue;

    Polynomial r = normal_form(order, s_polynomial(order, basis[i], basis[j]), basis).remainder;
    if (r.is_zero()) continue;
    r = make_monic(order, std::move(r));
    const std::size_t n = basis.size();
    for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, n);
    leads.push_back(leading_monomial(order, r));
    basis.push_back(std::move(r));
  }

  // Minimalize: drop members whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_leads;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t m = 0; m < basis.size() && !redundant; ++m) {
      if (m == k || !leads[m].divides(leads[k])) continue;
      redundant = leads[m] != leads[k] || m < k;
    }
    if (!redundant) {
      minimal.push_back(basis[k]);
      minimal_leads.push_back(leads[k]);
    }
  }

  // Inter-reduce the tails.
  std::vector<Polynomial> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t m = 0; m < minimal.size(); ++m) {
      if (m != k) others.push_back(minimal[m]);
    }
    Polynomial tail = minimal[k];
    tail.add_term(minimal_leads[k], -1);
    Polynomial g = normal_form(order, tail, others).remainder;
    g.add_term(minimal_leads[k], 1);
    reduced.push_back(std::move(g));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& x, const Polynomial& y) {
    return order.greater(leading_monomial(order, x), leading_monomial(order, y));
  });
  return reduced;
}

SchreyerResult schreyer_syzygies(const MonomialOrder& order, std::span<const Polynomial> gens) {
  const int p = order.params().p();
  std::vector<Term> leads;
  for (const auto& g : gens) leads.push_back(leading_term(order, g));

  SchreyerResult out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Monomial l = leads[i].mono.lcm(leads[j].mono);
      const Monomial qi = l / leads[i].mono;
      const Monomial qj = l / leads[j].mono;
      const Rational ci = 1 / leads[i].coeff;
      const Rational cj = -1 / leads[j].coeff;

      Polynomial s(p);
      s.add_scaled_product(ci, qi, gens[i]);
      s.add_scaled_product(cj, qj, gens[j]);
      Division div = normal_form(order, s, gens);
      if (!div.remainder.is_zero()) {
        out.failures.push_back({i, j, std::move(s), std::move(div.remainder)});
        continue;
      }
      PairSyzygy syz{i, j, std::vector<Polynomial>(gens.size(), Polynomial(p))};
      for (std::size_t k = 0; k < gens.size(); ++k) syz.coefficients[k] -= div.quotients[k];
      syz.coefficients[i].add_term(qi, ci);
      syz.coefficients[j].add_term(qj, cj);
      out.syzygies.push_back(std::move(syz));
    }
  }
  return out;
}

UnivariatePolynomial eta_eval(const CurveParams& params, const Polynomial& f) {
  UnivariatePolynomial out;
  for (const auto& [mono, c] : f.terms()) {
    auto& slot = out[weight(params, mono)];
    slot += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace monocurve

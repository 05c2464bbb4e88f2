#include "monocurve/syzygy.hpp"

#include <algorithm>

namespace monocurve {

namespace {

Monomial var(const CurveParams& params, int k, Monomial::Exponent e = 1) {
  return Monomial::variable(params.p(), k, e);
}

Monomial::Exponent exp_of(std::int64_t e) { return static_cast<Monomial::Exponent>(e); }

void check_module_ring(int lhs, int rhs) {
  if (lhs != rhs) throw DimensionError("module elements over different rings");
}

}  // namespace

void ModuleElement::add_term(const ModuleMonomial& term, const Rational& coeff) {
  check_module_ring(p_, term.mono.p());
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(term, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void ModuleElement::add(const CurveParams& params, const Rational& coeff, const Monomial& mono,
                        BasisSymbol symbol) {
  if (symbol.is_phi()) symbol = BasisSymbol::phi(symbol.i, symbol.j);
  if (!in_range(params, symbol)) return;
  add_term({mono, symbol}, coeff);
}

void ModuleElement::add(const CurveParams& params, const Polynomial& poly, BasisSymbol symbol) {
  for (const auto& [mono, c] : poly.terms()) add(params, c, mono, symbol);
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& other) {
  check_module_ring(p_, other.p_);
  for (const auto& [t, c] : other.terms_) add_term(t, c);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& other) {
  check_module_ring(p_, other.p_);
  for (const auto& [t, c] : other.terms_) add_term(t, -c);
  return *this;
}

ModuleElement& ModuleElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= scalar;
  return *this;
}

void ModuleElement::add_scaled_product(const Rational& coeff, const Monomial& mono,
                                       const ModuleElement& other) {
  check_module_ring(p_, other.p_);
  if (coeff == 0) return;
  for (const auto& [t, c] : other.terms_) add_term({mono * t.mono, t.symbol}, coeff * c);
}

ModuleElement operator*(const Polynomial& poly, const ModuleElement& elem) {
  ModuleElement out(elem.p());
  for (const auto& [mono, c] : poly.terms()) out.add_scaled_product(c, mono, elem);
  return out;
}

Monomial varpi(const CurveParams& params, const Monomial& mono, const BasisSymbol& symbol) {
  if (!in_range(params, symbol)) {
    throw IndexError("basis symbol " + symbol.to_string(params.b()) + " out of range");
  }
  if (symbol.is_psi()) {
    return mono * var(params, params.p(), exp_of(params.a())) * var(params, params.b() + symbol.j);
  }
  return mono * var(params, symbol.i) * var(params, symbol.j);
}

std::strong_ordering compare_symbols(const BasisSymbol& lhs, const BasisSymbol& rhs) {
  if (lhs.is_psi() && rhs.is_psi()) return rhs.j <=> lhs.j;
  if (lhs.is_psi() != rhs.is_psi()) {
    return lhs.is_psi() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (lhs.j != rhs.j) return lhs.j <=> rhs.j;
  return lhs.i <=> rhs.i;
}

std::strong_ordering ModuleOrder::compare(const ModuleMonomial& lhs,
                                          const ModuleMonomial& rhs) const {
  const auto by_image = ring_.compare(varpi(params(), lhs), varpi(params(), rhs));
  if (by_image != 0) return by_image;
  return compare_symbols(lhs.symbol, rhs.symbol);
}

ModuleTerm leading_term(const ModuleOrder& order, const ModuleElement& elem) {
  if (elem.is_zero()) throw ZeroPolynomialError("leading term of the zero module element");
  auto best = elem.terms().begin();
  for (auto it = std::next(best); it != elem.terms().end(); ++it) {
    if (order.compare(it->first, best->first) > 0) best = it;
  }
  return {best->first, best->second};
}

std::vector<ModuleTerm> sorted_terms(const ModuleOrder& order, const ModuleElement& elem) {
  std::vector<ModuleTerm> out;
  for (const auto& [t, c] : elem.terms()) out.push_back({t, c});
  std::sort(out.begin(), out.end(), [&](const ModuleTerm& x, const ModuleTerm& y) {
    return order.compare(x.monomial, y.monomial) > 0;
  });
  return out;
}

std::string format(const ModuleOrder& order, const ModuleElement& elem) {
  if (elem.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : sorted_terms(order, elem)) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (mag != 1) out += mag.get_str() + "*";
    if (!t.mono.is_one()) out += t.mono.to_string() + "*";
    out += t.symbol.to_string(order.params().b());
  }
  return out;
}

Polynomial phi_map(const CurveParams& params, const ModuleElement& elem) {
  Polynomial out(params.p());
  std::map<BasisSymbol, Polynomial> images;
  for (const auto& [t, c] : elem.terms()) {
    auto it = images.find(t.symbol);
    if (it == images.end()) it = images.emplace(t.symbol, generator_for(params, t.symbol)).first;
    out.add_scaled_product(c, t.mono, it->second);
  }
  return out;
}

ModuleElement build_A(const CurveParams& params, int i, int j) {
  const int p = params.p();
  const int b = params.b();
  if (i < 1 || i > p || j < 0 || j > p - b - 1) {
    throw IndexError("A(" + std::to_string(i) + ";b," + std::to_string(j) +
                     ") needs i in [1,p], j in [0,p-b-1]");
  }
  const int e = epsilon(i, b + j, p);
  const Monomial x0_ad = var(params, 0, exp_of(params.a() + params.d()));
  ModuleElement h(p);
  h.add(params, 1, var(params, i), BasisSymbol::psi(j));
  h.add(params, -1, var(params, b + i + j - e), BasisSymbol::psi(e - b));
  h.add(params, -1, var(params, p, exp_of(params.a())), BasisSymbol::phi(i, b + j));
  h.add(params, 1, x0_ad, BasisSymbol::phi(i, j));
  h.add(params, -1, x0_ad, BasisSymbol::phi(b + i + j - p, p - b));
  return h;
}

ModuleElement build_B(const CurveParams& params, int i, int j) {
  const int p = params.p();
  if (i > j) std::swap(i, j);
  if (i < 1 || j > p - 1) {
    throw IndexError("B(" + std::to_string(i) + "," + std::to_string(j) +
                     ") needs indices in [1,p-1]");
  }
  const BasisSymbol theta = BasisSymbol::psi(p - params.b());
  ModuleElement h(p);
  h.add(params, build_phi(params, i, j), theta);
  h.add(params, -build_psi(params, p - params.b()), BasisSymbol::phi(i, j));
  return h;
}

ModuleElement build_L(const CurveParams& params, int l, int i, int j) {
  const int p = params.p();
  const auto in = [p](int k) { return k >= 1 && k <= p - 1; };
  if (!in(l) || !in(i) || !in(j) || i > j || l >= j) {
    throw IndexError("L(" + std::to_string(l) + ";" + std::to_string(i) + "," +
                     std::to_string(j) + ") needs l,i,j in [1,p-1], i <= j, l < j");
  }
  const int t_ij = tau(i, j, p);
  const int t_il = tau(i, l, p);
  ModuleElement h(p);
  h.add(params, 1, var(params, l), BasisSymbol::phi(i, j));
  h.add(params, -1, var(params, j), BasisSymbol::phi(i, l));
  h.add(params, 1, var(params, t_ij), BasisSymbol::phi(i + j - t_ij, l));
  h.add(params, -1, var(params, t_il), BasisSymbol::phi(i + l - t_il, j));
  return h;
}

std::vector<LabeledSyzygy> SyzygySet::all() const {
  std::vector<LabeledSyzygy> out;
  const auto x = [this](int k) { return Monomial::variable(p, k); };
  for (const auto& [key, h] : A) {
    const auto [i, j] = key;
    out.push_back({"A(" + std::to_string(i) + ";" + std::to_string(b) + "," + std::to_string(j) +
                       ")",
                   h, {x(i), BasisSymbol::psi(j)}});
  }
  for (const auto& [key, h] : B) {
    const auto [i, j] = key;
    out.push_back({"B(" + std::to_string(i) + "," + std::to_string(j) + ")", h,
                   {x(i) * x(j), BasisSymbol::psi(p - b)}});
  }
  for (const auto& [key, h] : L) {
    const auto [l, i, j] = key;
    out.push_back({"L(" + std::to_string(l) + ";" + std::to_string(i) + "," + std::to_string(j) +
                       ")",
                   h, {x(l), BasisSymbol::phi(i, j)}});
  }
  return out;
}

std::vector<ModuleElement> SyzygySet::elements() const {
  std::vector<ModuleElement> out;
  for (auto& s : all()) out.push_back(std::move(s.elem));
  return out;
}

SyzygySet build_G_hat(const CurveParams& params) {
  const int p = params.p();
  SyzygySet set;
  set.p = p;
  set.b = params.b();
  for (int i = 1; i <= p; ++i) {
    for (int j = 0; j <= p - params.b() - 1; ++j) set.A.emplace(std::pair{i, j}, build_A(params, i, j));
  }
  for (int j = 1; j <= p - 1; ++j) {
    for (int i = 1; i <= j; ++i) set.B.emplace(std::pair{i, j}, build_B(params, i, j));
  }
  for (int j = 1; j <= p - 1; ++j) {
    for (int i = 1; i <= j; ++i) {
      for (int l = 1; l < j; ++l) set.L.emplace(std::tuple{l, i, j}, build_L(params, l, i, j));
    }
  }
  return set;
}

std::vector<ModuleMonomial> expected_leading_terms_G_hat(const CurveParams& params) {
  const int p = params.p();
  const int b = params.b();
  std::vector<ModuleMonomial> out;
  for (int l = 1; l <= p; ++l) {
    for (int j = 0; j <= p - b - 1; ++j) out.push_back({var(params, l), BasisSymbol::psi(j)});
  }
  for (int j = 1; j <= p - 1; ++j) {
    for (int i = 1; i <= j; ++i) {
      out.push_back({var(params, i) * var(params, j), BasisSymbol::psi(p - b)});
    }
  }
  for (int j = 1; j <= p - 1; ++j) {
    for (int i = 1; i <= j; ++i) {
      for (int l = 1; l < j; ++l) out.push_back({var(params, l), BasisSymbol::phi(i, j)});
    }
  }
  return out;
}

ModuleDivision module_normal_form(const ModuleOrder& order, const ModuleElement& elem,
                                  std::span<const ModuleElement> basis) {
  const int p = order.params().p();
  std::vector<ModuleTerm> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) leads.push_back(leading_term(order, g));

  ModuleDivision out{ModuleElement(p), std::vector<Polynomial>(basis.size(), Polynomial(p))};
  ModuleElement rest = elem;
  while (!rest.is_zero()) {
    const ModuleTerm lt = leading_term(order, rest);
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto& lead = leads[k].monomial;
      if (lead.symbol != lt.monomial.symbol || !lead.mono.divides(lt.monomial.mono)) continue;
      const Monomial q = lt.monomial.mono / lead.mono;
      const Rational c = lt.coeff / leads[k].coeff;
      out.quotients[k].add_term(q, c);
      rest.add_scaled_product(-c, q, basis[k]);
      reduced = true;
      break;
    }
    if (!reduced) {
      out.remainder.add_term(lt.monomial, lt.coeff);
      rest.add_term(lt.monomial, -lt.coeff);
    }
  }
  return out;
}

ModuleElement s_vector(const ModuleOrder& order, const ModuleElement& f, const ModuleElement& g) {
  const ModuleTerm lf = leading_term(order, f);
  const ModuleTerm lg = leading_term(order, g);
  if (lf.monomial.symbol != lg.monomial.symbol) {
    throw std::invalid_argument("s_vector needs leading terms on the same basis symbol");
  }
  const Monomial l = lf.monomial.mono.lcm(lg.monomial.mono);
  ModuleElement s(f.p());
  s.add_scaled_product(1 / lf.coeff, l / lf.monomial.mono, f);
  s.add_scaled_product(-1 / lg.coeff, l / lg.monomial.mono, g);
  return s;
}

ModuleElement to_module_element(const CurveParams& params, std::span<const LabeledGenerator> gens,
                                std::span<const Polynomial> coefficients) {
  if (gens.size() != coefficients.size()) {
    throw DimensionError("coefficient vector length differs from generator count");
  }
  ModuleElement out(params.p());
  for (std::size_t k = 0; k < gens.size(); ++k) out.add(params, coefficients[k], gens[k].label);
  return out;
}

}  // namespace monocurve

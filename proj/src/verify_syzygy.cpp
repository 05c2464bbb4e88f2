#include "monocurve/serialize.hpp"
#include "monocurve/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

namespace monocurve {

namespace {

std::string term_text(const CurveParams& params, const ModuleMonomial& t) {
  return (t.mono.is_one() ? "" : t.mono.to_string() + "*") + t.symbol.to_string(params.b());
}

std::vector<BasisSymbol> all_symbols(const CurveParams& params) {
  std::vector<BasisSymbol> out;
  for (int j = 0; j <= params.p() - params.b(); ++j) out.push_back(BasisSymbol::psi(j));
  for (int j = 1; j <= params.p() - 1; ++j) {
    for (int i = 1; i <= j; ++i) out.push_back(BasisSymbol::phi(i, j));
  }
  return out;
}

bool in_leading_module(const ModuleMonomial& t, std::span<const ModuleMonomial> leads) {
  return std::any_of(leads.begin(), leads.end(), [&](const ModuleMonomial& l) {
    return l.symbol == t.symbol && l.mono.divides(t.mono);
  });
}

}  // namespace

VerificationReport verify_groebner_G_hat_with(const CurveParams& params,
                                              std::span<const LabeledSyzygy> basis) {
  const ModuleOrder order(params);
  VerificationReport report(params);
  std::vector<ModuleElement> elems;
  for (const auto& s : basis) elems.push_back(s.elem);

  {
    CheckResult check = CheckResult::pass(
        "syzygy.kernel", std::to_string(basis.size()) + " members map to 0");
    for (const auto& s : basis) {
      const Polynomial image = phi_map(params, s.elem);
      if (s.elem.is_zero() || !image.is_zero()) {
        check = CheckResult::fail("syzygy.kernel", s.name + " is not a non-zero relation",
                                  json{{"member", to_json(order, s.elem)},
                                       {"image", to_json(order.ring_order(), image)}});
        break;
      }
    }
    report.add(std::move(check));
    if (!report.checks.back().passed) return report;
  }

  std::vector<ModuleTerm> leads;
  for (const auto& e : elems) leads.push_back(leading_term(order, e));

  {
    CheckResult check = CheckResult::pass("syzygy.underlined_terms",
                                          "computed leading term equals the constructed one");
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (leads[k].monomial != basis[k].underlined) {
        check = CheckResult::fail(
            "syzygy.underlined_terms", basis[k].name + " leads with " +
                                           term_text(params, leads[k].monomial) + ", expected " +
                                           term_text(params, basis[k].underlined),
            json{{"member", to_json(order, basis[k].elem)}});
        break;
      }
    }
    report.add(std::move(check));
  }

  {
    CheckResult check = CheckResult::pass("syzygy.s_vectors");
    std::size_t count = 0;
    for (std::size_t i = 0; i < elems.size() && check.passed; ++i) {
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        if (leads[i].monomial.symbol != leads[j].monomial.symbol) continue;
        ++count;
        const ModuleElement s = s_vector(order, elems[i], elems[j]);
        const auto div = module_normal_form(order, s, elems);
        if (!div.remainder.is_zero()) {
          check = CheckResult::fail("syzygy.s_vectors",
                                    "S-vector of " + basis[i].name + " and " + basis[j].name +
                                        " leaves a non-zero remainder",
                                    json{{"s_vector", to_json(order, s)},
                                         {"remainder", to_json(order, div.remainder)}});
          break;
        }
      }
    }
    if (check.passed) check.detail = std::to_string(count) + " S-vectors reduce to 0";
    report.add(std::move(check));
  }

  {
    const GeneratorSet g_prime = build_G_prime(params);
    const auto polys = g_prime.polys();
    const SchreyerResult oracle = schreyer_syzygies(order.ring_order(), polys);
    CheckResult check = CheckResult::pass("syzygy.schreyer_completeness");
    if (!oracle.failures.empty()) {
      check = CheckResult::fail("syzygy.schreyer_completeness",
                                "the Schreyer oracle found an S-polynomial of G' not reducing to 0");
    }
    for (const auto& syz : oracle.syzygies) {
      if (!check.passed) break;
      const ModuleElement h = to_module_element(params, g_prime.members, syz.coefficients);
      const auto div = module_normal_form(order, h, elems);
      if (!div.remainder.is_zero()) {
        check = CheckResult::fail(
            "syzygy.schreyer_completeness",
            "syzygy from the pair (" + g_prime.members[syz.first].label.to_string(params.b()) + ", " +
                g_prime.members[syz.second].label.to_string(params.b()) +
                ") does not reduce to 0",
            json{{"syzygy", to_json(order, h)}, {"remainder", to_json(order, div.remainder)}});
      }
    }
    if (check.passed) {
      check.detail = std::to_string(oracle.syzygies.size()) + " oracle syzygies reduce to 0";
    }
    report.add(std::move(check));
  }

  {
    CheckResult check = CheckResult::pass("syzygy.minimality", "no leading term divides another");
    for (std::size_t i = 0; i < leads.size() && check.passed; ++i) {
      for (std::size_t j = 0; j < leads.size(); ++j) {
        const auto& li = leads[i].monomial;
        const auto& lj = leads[j].monomial;
        if (i == j || li.symbol != lj.symbol || !li.mono.divides(lj.mono)) continue;
        check = CheckResult::fail("syzygy.minimality",
                                  basis[i].name + " leading term divides that of " + basis[j].name,
                                  json{{"divisor", term_text(params, li)},
                                       {"dividend", term_text(params, lj)}});
        break;
      }
    }
    report.add(std::move(check));
  }
  return report;
}

VerificationReport verify_groebner_G_hat(const CurveParams& params) {
  const SyzygySet set = build_G_hat(params);
  const auto members = set.all();
  VerificationReport report = verify_groebner_G_hat_with(params, members);

  const ModuleOrder order(params);
  std::vector<ModuleMonomial> actual;
  for (const auto& s : members) actual.push_back(leading_term(order, s.elem).monomial);
  auto expected = expected_leading_terms_G_hat(params);
  std::sort(actual.begin(), actual.end());
  std::sort(expected.begin(), expected.end());
  if (actual == expected) {
    report.add(CheckResult::pass("syzygy.leading_term_set",
                                 std::to_string(actual.size()) +
                                     " leading terms match the explicit description"));
  } else {
    json exp = json::array(), act = json::array();
    for (const auto& t : expected) exp.push_back(term_text(params, t));
    for (const auto& t : actual) act.push_back(term_text(params, t));
    report.add(CheckResult::fail("syzygy.leading_term_set",
                                 "leading terms differ from the explicit description",
                                 json{{"expected", exp}, {"actual", act}}));
  }
  return report;
}

namespace {

void enumerate_monomials(int p, std::span<const int> vars, int bound, std::size_t pos,
                         Monomial& current, const std::function<void(const Monomial&)>& visit) {
  if (pos == vars.size()) {
    visit(current);
    return;
  }
  for (int e = 0; e <= bound; ++e) {
    current.set_exponent(vars[pos], static_cast<Monomial::Exponent>(e));
    enumerate_monomials(p, vars, bound, pos + 1, current, visit);
  }
  current.set_exponent(vars[pos], 0);
}

/// Visits module monomials on `symbol` outside <leads>, exponents <= bound, pruned.
void enumerate_standard(const std::vector<ModuleMonomial>& leads, const BasisSymbol& symbol,
                        std::vector<Monomial::Exponent>& raw, std::size_t slot, int bound,
                        const std::function<void(const ModuleMonomial&)>& visit) {
  if (slot == raw.size()) {
    visit({Monomial(raw), symbol});
    return;
  }
  for (int e = 0; e <= bound; ++e) {
    raw[slot] = static_cast<Monomial::Exponent>(e);
    if (in_leading_module({Monomial(raw), symbol}, leads)) break;
    enumerate_standard(leads, symbol, raw, slot + 1, bound, visit);
  }
  raw[slot] = 0;
}

enum class ExcludedCase { PowerOfX0, X0TimesXi, XpTimesXi, PhiNoSmallVar, Mixed, None };

ExcludedCase classify_excluded(const CurveParams& params, const ModuleMonomial& t) {
  const int p = params.p();
  const Monomial& m = t.mono;
  if (t.symbol.is_phi()) {
    for (int l = 1; l < t.symbol.j; ++l) {
      if (m.exponent(l) != 0) return ExcludedCase::None;
    }
    return ExcludedCase::PhiNoSmallVar;
  }
  const auto others_zero = [&](std::initializer_list<int> keep) {
    for (int k = 0; k <= p; ++k) {
      if (std::find(keep.begin(), keep.end(), k) == keep.end() && m.exponent(k) != 0) return false;
    }
    return true;
  };
  if (others_zero({0})) return ExcludedCase::PowerOfX0;
  if (t.symbol.j != p - params.b()) return ExcludedCase::None;
  for (int i = 0; i <= p; ++i) {
    Monomial rest = m;
    if (rest.exponent(i) == 0) continue;
    rest.set_exponent(i, rest.exponent(i) - 1);
    bool x0_only = true, xp_only = true;
    for (int k = 0; k <= p; ++k) {
      if (k != 0 && rest.exponent(k) != 0) x0_only = false;
      if (k != p && rest.exponent(k) != 0) xp_only = false;
    }
    if (x0_only) return ExcludedCase::X0TimesXi;
    if (xp_only) return ExcludedCase::XpTimesXi;
  }
  // X0^m * Xp^n * Xi^e with m, n >= 1, e in {0, 1}.
  int middle = 0;
  for (int k = 1; k <= p - 1; ++k) {
    if (m.exponent(k) == 0) continue;
    if (m.exponent(k) > 1 || middle != 0) return ExcludedCase::None;
    middle = k;
  }
  if (m.exponent(0) >= 1 && m.exponent(p) >= 1) return ExcludedCase::Mixed;
  return ExcludedCase::None;
}

}  // namespace

VerificationReport verify_excluded_leading_forms(const CurveParams& params, int bound) {
  if (bound < 2) throw std::invalid_argument("excluded-form bound must be at least 2");
  const int p = params.p();
  const int b = params.b();
  const ModuleOrder order(params);
  VerificationReport report(params);

  std::vector<ModuleMonomial> leads;
  for (const auto& e : build_G_hat(params).elements()) {
    leads.push_back(leading_term(order, e).monomial);
  }

  const auto x = [p](int k, int e = 1) {
    return Monomial::variable(p, k, static_cast<Monomial::Exponent>(e));
  };
  const BasisSymbol theta = BasisSymbol::psi(p - b);
  std::size_t members = 0;
  std::optional<CheckResult> failure;
  const auto visit = [&](const char* name, const ModuleMonomial& t) {
    ++members;
    if (!failure && in_leading_module(t, leads)) {
      failure = CheckResult::fail("excluded_forms.not_in_lt",
                                  std::string(name) + " member lies in <LT(G^)>",
                                  json{{"term", term_text(params, t)}});
    }
  };
  for (int k = 0; k <= bound; ++k) {
    for (int i = 0; i <= p - b; ++i) visit("X0^k*Psi(b,i)", {x(0, k), BasisSymbol::psi(i)});
    for (int i = 0; i <= p; ++i) {
      visit("X0^k*Xi*Psi(b,p-b)", {x(0, k) * x(i), theta});
      visit("Xp^k*Xi*Psi(b,p-b)", {x(p, k) * x(i), theta});
    }
  }
  for (int j = 1; j <= p - 1; ++j) {
    std::vector<int> vars{0};
    for (int k = j; k <= p; ++k) vars.push_back(k);
    for (int i = 1; i <= j; ++i) {
      Monomial current(p);
      enumerate_monomials(p, vars, bound, 0, current, [&](const Monomial& m) {
        visit("X^a*Phi(i,j), no X_l (0<l<j)", {m, BasisSymbol::phi(i, j)});
      });
    }
  }
  report.add(failure ? *failure
                     : CheckResult::pass("excluded_forms.not_in_lt",
                                         std::to_string(members) + " family members (exponents <= " +
                                             std::to_string(bound) + ") avoid <LT(G^)>"));

  {
    std::map<ExcludedCase, std::size_t> counts;
    std::size_t standard = 0;
    CheckResult check = CheckResult::pass("excluded_forms.coverage");
    for (const auto& symbol : all_symbols(params)) {
      std::vector<Monomial::Exponent> raw(static_cast<std::size_t>(p) + 1, 0);
      enumerate_standard(leads, symbol, raw, 0, bound, [&](const ModuleMonomial& t) {
        ++standard;
        const auto c = classify_excluded(params, t);
        ++counts[c];
        if (c == ExcludedCase::None && check.passed) {
          check = CheckResult::fail("excluded_forms.coverage",
                                    "module monomial outside <LT(G^)> fits no family",
                                    json{{"term", term_text(params, t)}});
        }
      });
    }
    if (check.passed) {
      std::ostringstream os;
      os << standard << " module monomials outside <LT(G^)>: "
         << counts[ExcludedCase::PowerOfX0] << " X0^k*Psi, " << counts[ExcludedCase::X0TimesXi]
         << " X0^k*Xi*Psi(b,p-b), " << counts[ExcludedCase::XpTimesXi] << " Xp^k*Xi*Psi(b,p-b), "
         << counts[ExcludedCase::PhiNoSmallVar] << " X^a*Phi(i,j); "
         << counts[ExcludedCase::Mixed]
         <<  " of the form X0^m*Xp^n*Xi^e*Psi(b,p-b) (m,n>=1, e<=1) lie outside the four listed cases";
      check.detail = os.str();
    }
    report.add(std::move(check));
  }
  return report;
}

VerificationReport verify_varpi_leading_monomial(const CurveParams& params, int samples,
                                                 std::uint64_t seed) {
  const int p = params.p();
  const MonomialOrder order(params);
  VerificationReport report(params);
  const auto symbols = all_symbols(params);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> exponent(0, 4);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);

  CheckResult check = CheckResult::pass("syzygy.varpi_leading_monomial",
                                        std::to_string(samples) + " random single-term elements");
  for (int s = 0; s < samples; ++s) {
    std::vector<Monomial::Exponent> raw(static_cast<std::size_t>(p) + 1);
    for (auto& e : raw) e = static_cast<Monomial::Exponent>(exponent(rng));
    const ModuleMonomial term{Monomial(raw), symbols[pick(rng)]};
    ModuleElement f(p);
    f.add_term(term, 1);
    const Monomial expected = varpi(params, term);
    const Monomial actual = leading_monomial(order, phi_map(params, f));
    if (expected != actual) {
      check = CheckResult::fail("syzygy.varpi_leading_monomial",
                                "varpi differs from LM(phi_map) for " + term_text(params, term),
                                json{{"varpi", expected.to_string()}, {"lm", actual.to_string()}});
      break;
    }
  }
  report.add(std::move(check));
  return report;
}

VerificationReport verify_all(const CurveParams& params, const VerifyOptions& options) {
  VerificationReport report(params);
  report.append(verify_groebner_G_prime(params));
  report.append(verify_minimality(params, options.minimality_closure));
  report.append(verify_ideal_equality(params));
  report.append(verify_standard_monomials(params, options.bound));
  report.append(verify_cardinalities(params));
  if (options.syzygies) {
    report.append(verify_groebner_G_hat(params));
    report.append(verify_excluded_leading_forms(params, options.bound));
    report.append(verify_varpi_leading_monomial(params, options.samples, options.seed));
  }
  return report;
}

}  // namespace monocurve

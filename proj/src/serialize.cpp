#include "monocurve/serialize.hpp"

#include <stdexcept>

namespace monocurve {

json to_json(const CurveParams& params) {
  return {{"m0", params.m0()}, {"d", params.d()},           {"p", params.p()},
          {"a", params.a()},   {"b", params.b()},           {"generators", params.generators()}};
}

CurveParams params_from_json(const json& j) {
  return make_params(j.at("m0").get<std::int64_t>(), j.at("d").get<std::int64_t>(),
                     j.at("p").get<int>());
}

namespace {

json expo_json(const Monomial& mono) {
  json out = json::array();
  for (auto e : mono.raw()) out.push_back(e);
  return out;
}

Monomial expo_from_json(int p, const json& j) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(p) + 1) {
    throw DimensionError("\"expo\" must list exactly p+1 = " + std::to_string(p + 1) +
                         " exponents");
  }
  std::vector<Monomial::Exponent> raw;
  for (const auto& e : j) {
    const auto v = e.get<std::int64_t>();
    if (v < 0) throw std::invalid_argument("negative exponent in \"expo\"");
    raw.push_back(static_cast<Monomial::Exponent>(v));
  }
  return Monomial(std::move(raw));
}

}  // namespace

json to_json(const MonomialOrder& order, const Polynomial& poly) {
  json out = json::array();
  for (const auto& [mono, c] : sorted_terms(order, poly)) {
    out.push_back({{"coeff", to_string(c)}, {"expo", expo_json(mono)}});
  }
  return out;
}

Polynomial polynomial_from_json(int p, const json& j) {
  Polynomial out(p);
  for (const auto& term : j) {
    out.add_term(expo_from_json(p, term.at("expo")),
                 parse_rational(term.at("coeff").get<std::string>()));
  }
  return out;
}

json to_json(const BasisSymbol& symbol) {
  if (symbol.is_psi()) return {{"kind", "Psi"}, {"j", symbol.j}};
  return {{"kind", "Phi"}, {"i", symbol.i}, {"j", symbol.j}};
}

BasisSymbol symbol_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "Psi") return BasisSymbol::psi(j.at("j").get<int>());
  if (kind == "Phi") return BasisSymbol::phi(j.at("i").get<int>(), j.at("j").get<int>());
  throw std::invalid_argument("unknown basis kind '" + kind + "'");
}

json to_json(const ModuleOrder& order, const ModuleElement& elem) {
  json out = json::array();
  for (const auto& [t, c] : sorted_terms(order, elem)) {
    out.push_back(
        {{"coeff", to_string(c)}, {"expo", expo_json(t.mono)}, {"basis", to_json(t.symbol)}});
  }
  return out;
}

ModuleElement module_element_from_json(int p, const json& j) {
  ModuleElement out(p);
  for (const auto& term : j) {
    out.add_term({expo_from_json(p, term.at("expo")), symbol_from_json(term.at("basis"))},
                 parse_rational(term.at("coeff").get<std::string>()));
  }
  return out;
}

json to_json(const CheckResult& check, const CurveParams& params) {
  json out = {{"check", check.check},
              {"params", to_json(params)},
              {"status", check.passed ? "pass" : "fail"},
              {"detail", check.detail}};
  if (!check.witness.is_null()) out["witness"] = check.witness;
  return out;
}

json to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c, report.params));
  return {{"params", to_json(report.params)},
          {"status", report.passed() ? "pass" : "fail"},
          {"checks", std::move(checks)}};
}

json generators_to_json(const CurveParams& params) {
  const MonomialOrder order(params);
  json g_prime = json::array();
  for (const auto& g : build_G_prime(params).members) {
    const Term lt = leading_term(order, g.poly);
    g_prime.push_back({{"label", g.label.to_string(params.b())},
                       {"basis", to_json(g.label)},
                       {"poly", to_json(order, g.poly)},
                       {"text", format(order, g.poly)},
                       {"leading", lt.mono.to_string()}});
  }
  json g_patil = json::array();
  for (const auto& g : build_G_patil(params)) {
    g_patil.push_back({{"label", g.name},
                       {"poly", to_json(order, g.poly)},
                       {"text", format(order, g.poly)},
                       {"leading", leading_monomial(order, g.poly).to_string()}});
  }
  return {{"params", to_json(params)}, {"G_prime", std::move(g_prime)}, {"G", std::move(g_patil)}};
}

json syzygies_to_json(const CurveParams& params) {
  const ModuleOrder order(params);
  const SyzygySet set = build_G_hat(params);
  json members = json::array();
  for (const auto& s : set.all()) {
    const ModuleTerm lt = leading_term(order, s.elem);
    members.push_back({{"label", s.name},
                       {"element", to_json(order, s.elem)},
                       {"text", format(order, s.elem)},
                       {"leading", (lt.monomial.mono.is_one() ? "" : lt.monomial.mono.to_string() + "*") +
                                       lt.monomial.symbol.to_string(params.b())}});
  }
  return {{"params", to_json(params)},
          {"counts",
           {{"A", set.A.size()}, {"B", set.B.size()}, {"L", set.L.size()}, {"total", set.size()}}},
          {"members", std::move(members)}};
}

}  // namespace monocurve

#include "monocurve/serialize.hpp"
#include "monocurve/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace monocurve {

namespace {

std::vector<Monomial> leading_monomials(const MonomialOrder& order,
                                        std::span<const Polynomial> polys) {
  std::vector<Monomial> out;
  for (const auto& f : polys) out.push_back(leading_monomial(order, f));
  return out;
}

bool divisible_by_any(const Monomial& m, std::span<const Monomial> leads) {
  return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
}

std::string triple(std::int64_t x, std::int64_t y, std::int64_t z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

}  // namespace

VerificationReport verify_groebner_set(const CurveParams& params,
                                       std::span<const Polynomial> gens) {
  const MonomialOrder order(params);
  VerificationReport report(params);

  for (const auto& g : gens) {
    if (g.is_zero()) {
      report.add(CheckResult::fail("groebner.in_ideal", "zero generator"));
      return report;
    }
  }

  {
    CheckResult check = CheckResult::pass(
        "groebner.in_ideal", std::to_string(gens.size()) + " generators have zero eta-image");
    for (const auto& g : gens) {
      if (!eta_eval(params, g).empty()) {
        check = CheckResult::fail("groebner.in_ideal", "generator not in the curve ideal",
                                  json{{"generator", to_json(order, g)}});
        break;
      }
    }
    report.add(std::move(check));
  }

  {
    const SchreyerResult pairs = schreyer_syzygies(order, gens);
    const std::size_t n = gens.size();
    if (pairs.failures.empty()) {
      report.add(CheckResult::pass("groebner.s_polynomials",
                                   std::to_string(n * (n - 1) / 2) + " S-polynomials reduce to 0"));
    } else {
      const auto& f = pairs.failures.front();
      report.add(CheckResult::fail(
          "groebner.s_polynomials",
          std::to_string(pairs.failures.size()) + " S-polynomials leave a non-zero remainder",
          json{{"pair", {f.first, f.second}},
               {"first", to_json(order, gens[f.first])},
               {"second", to_json(order, gens[f.second])},
               {"s_polynomial", to_json(order, f.s_poly)},
               {"remainder", to_json(order, f.remainder)}}));
    }
  }

  const auto leads = leading_monomials(order, gens);
  {
    const auto reduced = buchberger(order, gens);
    const auto reduced_leads = leading_monomials(order, reduced);
    CheckResult check = CheckResult::pass(
        "groebner.buchberger_closure",
        "reduced basis has " + std::to_string(reduced.size()) +
            " members; leading ideals agree");
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      if (!divisible_by_any(reduced_leads[k], leads)) {
        check = CheckResult::fail("groebner.buchberger_closure",
                                  "Buchberger produced a leading monomial outside <LT(gens)>",
                                  json{{"element", to_json(order, reduced[k])}});
        break;
      }
    }
    if (check.passed) {
      for (const auto& l : leads) {
        if (!divisible_by_any(l, reduced_leads)) {
          check = CheckResult::fail("groebner.buchberger_closure",
                                    "leading monomial " + l.to_string() +
                                        " not in the reduced basis' leading ideal");
          break;
        }
      }
    }
    report.add(std::move(check));
  }

  {
    auto expected = expected_leading_monomials_G_prime(params);
    auto actual = leads;
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    if (expected == actual) {
      report.add(CheckResult::pass("groebner.leading_terms",
                                   "LT set equals {X_i X_j} u {X_{b+i} X_p^a}"));
    } else {
      json exp = json::array(), act = json::array();
      for (const auto& m : expected) exp.push_back(m.to_string());
      for (const auto& m : actual) act.push_back(m.to_string());
      report.add(CheckResult::fail("groebner.leading_terms",
                                   "leading monomials differ from the explicit description",
                                   json{{"expected", exp}, {"actual", act}}));
    }
  }
  return report;
}

VerificationReport verify_groebner_G_prime(const CurveParams& params) {
  const auto polys = build_G_prime(params).polys();
  return verify_groebner_set(params, polys);
}

VerificationReport verify_minimality_set(const CurveParams& params,
                                         std::span<const Polynomial> gens, bool closure) {
  const MonomialOrder order(params);
  VerificationReport report(params);
  const auto leads = leading_monomials(order, gens);

  {
    CheckResult check = CheckResult::pass(
        "minimality.leading_terms",
        std::to_string(gens.size() * (gens.size() - 1) / 2) + " pairs, no divisibility");
    for (std::size_t i = 0; i < gens.size() && check.passed; ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (i == j || !leads[i].divides(leads[j])) continue;
        check = CheckResult::fail(
            "minimality.leading_terms",
            leads[i].to_string() + " divides " + leads[j].to_string(),
            json{{"divisor", to_json(order, gens[i])}, {"dividend", to_json(order, gens[j])}});
        break;
      }
    }
    report.add(std::move(check));
  }

  if (closure) {
    CheckResult check = CheckResult::pass("minimality.non_redundant",
                                          "no member lies in the ideal of the others");
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::vector<Polynomial> others;
      for (std::size_t m = 0; m < gens.size(); ++m) {
        if (m != k) others.push_back(gens[m]);
      }
      if (others.empty()) break;
      const auto gb = buchberger(order, others);
      if (normal_form(order, gens[k], gb).remainder.is_zero()) {
        check = CheckResult::fail("minimality.non_redundant",
                                  "member reduces to 0 modulo the others",
                                  json{{"member", to_json(order, gens[k])}});
        break;
      }
    }
    report.add(std::move(check));
  }
  return report;
}

VerificationReport verify_minimality(const CurveParams& params, bool closure) {
  const auto polys = build_G_prime(params).polys();
  return verify_minimality_set(params, polys, closure);
}

namespace {

enum class StandardFamily { PowerOfXpTimesXi, PowerOfX0TimesXi, X0AndXp, SmallIndex, Mixed, None };

/// Shape of a monomial against the standard-monomial families of G'.
StandardFamily classify_standard(const CurveParams& params, const Monomial& f) {
  const int p = params.p();
  const std::int64_t a = params.a();
  const std::int64_t m = f.exponent(0);
  const std::int64_t n = f.exponent(p);
  int middle = 0;
  for (int k = 1; k <= p - 1; ++k) {
    const auto e = f.exponent(k);
    if (e == 0) continue;
    if (e > 1 || middle != 0) return StandardFamily::None;
    middle = k;
  }
  if (middle == 0) return n <= a ? StandardFamily::X0AndXp : StandardFamily::None;
  if (m == 0 && n >= 1 && n <= a - 1) return StandardFamily::PowerOfXpTimesXi;
  if (n == 0) return StandardFamily::PowerOfX0TimesXi;
  if (m == 0 && n >= 1 && n <= a && middle < params.b()) return StandardFamily::SmallIndex;
  const std::int64_t cap = middle < params.b() ? a : a - 1;
  if (m >= 1 && n >= 1 && n <= cap) return StandardFamily::Mixed;
  return StandardFamily::None;
}

void enumerate_outside(const std::vector<Monomial>& leads, Monomial& current, std::size_t slot,
                       int bound, std::vector<Monomial>& out) {
  if (divisible_by_any(current, leads)) return;
  if (slot == current.num_vars()) {
    out.push_back(current);
    return;
  }
  std::vector<Monomial::Exponent> raw(current.raw().begin(), current.raw().end());
  for (int e = 0; e <= bound; ++e) {
    raw[slot] = static_cast<Monomial::Exponent>(e);
    Monomial next(raw);
    if (divisible_by_any(next, leads)) break;  // larger exponents stay divisible
    enumerate_outside(leads, next, slot + 1, bound, out);
  }
}

}  // namespace

VerificationReport verify_standard_monomials(const CurveParams& params, int bound) {
  if (bound < 2) throw std::invalid_argument("standard-monomial bound must be at least 2");
  const MonomialOrder order(params);
  VerificationReport report(params);
  const auto polys = build_G_prime(params).polys();
  const auto leads = leading_monomials(order, polys);

  std::vector<Monomial> standard;
  Monomial start(params.p());
  enumerate_outside(leads, start, 0, bound, standard);

  {
    std::map<StandardFamily, std::size_t> counts;
    CheckResult check = CheckResult::pass("standard_monomials.shape");
    for (const auto& f : standard) {
      const auto family = classify_standard(params, f);
      ++counts[family];
      if (family == StandardFamily::None) {
        check = CheckResult::fail("standard_monomials.shape",
                                  "standard monomial outside every family",
                                  json{{"monomial", f.to_string()}});
        break;
      }
    }
    if (check.passed) {
      std::ostringstream os;
      os << standard.size() << " standard monomials (exponents <= " << bound << "): "
         << counts[StandardFamily::PowerOfXpTimesXi] << " Xp^m*Xi (m<=a-1), "
         << counts[StandardFamily::PowerOfX0TimesXi] << " X0^m*Xi, "
         << counts[StandardFamily::X0AndXp] << " X0^m*Xp^n (n<=a), "
         << counts[StandardFamily::SmallIndex] << " Xp^m*Xi (i<b, m<=a); "
         << counts[StandardFamily::Mixed]
         << " of the form X0^m*Xp^n*Xi (m,n>=1) lie outside the four listed families";
      check.detail = os.str();
    }
    report.add(std::move(check));
  }

  {
    CheckResult check = CheckResult::pass("standard_monomials.distinct_eta");
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < standard.size() && check.passed; ++i) {
      for (std::size_t j = i + 1; j < standard.size(); ++j) {
        ++pairs;
        if (eta_eval(params, Polynomial::binomial(standard[i], standard[j])).empty()) {
          check = CheckResult::fail(
              "standard_monomials.distinct_eta", "two standard monomials share an eta-image",
              json{{"f", standard[i].to_string()}, {"g", standard[j].to_string()}});
          break;
        }
      }
    }
    if (check.passed) {
      check.detail = std::to_string(pairs) + " pairs of distinct standard monomials, none in the ideal";
    }
    report.add(std::move(check));
  }
  return report;
}

VerificationReport verify_ideal_equality(const CurveParams& params) {
  const MonomialOrder order(params);
  VerificationReport report(params);
  const GeneratorSet g_prime = build_G_prime(params);
  const auto prime_polys = g_prime.polys();
  const auto patil = build_G_patil(params);
  std::vector<Polynomial> patil_polys;
  for (const auto& g : patil) patil_polys.push_back(g.poly);

  {
    CheckResult check = CheckResult::pass("ideal.G_in_G_prime",
                                          "every member of G reduces to 0 modulo G'");
    for (const auto& g : patil) {
      if (!normal_form(order, g.poly, prime_polys).remainder.is_zero()) {
        check = CheckResult::fail("ideal.G_in_G_prime", g.name + " does not reduce to 0",
                                  json{{"member", to_json(order, g.poly)}});
        break;
      }
    }
    report.add(std::move(check));
  }
  {
    const auto gb = buchberger(order, patil_polys);
    CheckResult check = CheckResult::pass("ideal.G_prime_in_G",
                                          "every member of G' reduces to 0 modulo a basis of <G>");
    for (const auto& g : g_prime.members) {
      if (!normal_form(order, g.poly, gb).remainder.is_zero()) {
        check = CheckResult::fail("ideal.G_prime_in_G",
                                  g.label.to_string(params.b()) + " does not reduce to 0",
                                  json{{"member", to_json(order, g.poly)}});
        break;
      }
    }
    report.add(std::move(check));
  }
  if (patil.size() == g_prime.members.size()) {
    report.add(CheckResult::pass("ideal.cardinality",
                                 "|G| = |G'| = " + std::to_string(patil.size())));
  } else {
    report.add(CheckResult::fail("ideal.cardinality", "|G| = " + std::to_string(patil.size()) +
                                                          ", |G'| = " +
                                                          std::to_string(g_prime.members.size())));
  }

  {
    const int p = params.p();
    const int b = params.b();
    std::map<std::string, Polynomial> by_name;
    for (const auto& g : patil) by_name.emplace(g.name, g.poly);
    const auto idx = [](int i, int j) {
      return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    std::vector<std::pair<std::string, Polynomial>> residues;  // each must vanish
    for (int j = 1; j <= p - 2; ++j) {
      for (int i = 1; i <= j; ++i) {
        Polynomial r = by_name.at("xi" + idx(i, j)) - build_phi(params, i, j);
        if (i + j >= p) r += by_name.at("phi_" + std::to_string(i + j - p));
        residues.emplace_back("xi" + idx(i, j), std::move(r));
      }
    }
    for (int i = 0; i <= p - 2; ++i) {
      residues.emplace_back("phi_" + std::to_string(i),
                            by_name.at("phi_" + std::to_string(i)) - build_phi(params, i + 1, p - 1));
    }
    for (int j = 0; j <= p - b - 1; ++j) {
      residues.emplace_back("psi" + idx(b, j), by_name.at("psi" + idx(b, j)) - build_psi(params, j));
    }
    residues.emplace_back("theta", by_name.at("theta") - build_psi(params, p - b));

    CheckResult check = CheckResult::pass(
        "ideal.rewriting_identities",
        std::to_string(residues.size()) + " identities between G and G' hold exactly");
    for (const auto& [name, r] : residues) {
      if (!r.is_zero()) {
        check = CheckResult::fail("ideal.rewriting_identities", "identity for " + name + " fails",
                                  json{{"residue", to_json(order, r)}});
        break;
      }
    }
    report.add(std::move(check));
  }
  return report;
}

VerificationReport verify_cardinalities(const CurveParams& params) {
  VerificationReport report(params);
  const int p = params.p();
  const int b = params.b();

  // Index-range enumeration over a box strictly larger than every range.
  std::size_t enum_a = 0, enum_b = 0, enum_l = 0;
  for (int i = -1; i <= p + 1; ++i) {
    for (int j = -1; j <= p + 1; ++j) {
      if (i >= 1 && i <= p && j >= 0 && j <= p - b - 1) ++enum_a;
      if (i >= 1 && j <= p - 1 && i <= j) ++enum_b;
      for (int l = -1; l <= p + 1; ++l) {
        if (l >= 1 && i >= 1 && j <= p - 1 && i <= j && l < j) ++enum_l;
      }
    }
  }
  std::int64_t l_formula = 0;
  for (int j = 2; j <= p - 1; ++j) l_formula += static_cast<std::int64_t>(j) * (j - 1);
  const std::int64_t pp = p;

  const auto g_prime = build_G_prime(params);
  const auto patil = build_G_patil(params);
  const auto g_hat = build_G_hat(params);

  struct Row {
    const char* name;
    std::int64_t built;
    std::int64_t formula;
    std::int64_t enumerated;
  };
  const Row rows[] = {
      {"G'", static_cast<std::int64_t>(g_prime.members.size()), pp * (pp - 1) / 2 + (pp - b + 1),
       static_cast<std::int64_t>(enum_b) + (p - b + 1)},
      {"G", static_cast<std::int64_t>(patil.size()), pp * (pp - 1) / 2 + (pp - b + 1),
       static_cast<std::int64_t>(g_prime.members.size())},
      {"A", static_cast<std::int64_t>(g_hat.A.size()), pp * (pp - b),
       static_cast<std::int64_t>(enum_a)},
      {"B", static_cast<std::int64_t>(g_hat.B.size()), pp * (pp - 1) / 2,
       static_cast<std::int64_t>(enum_b)},
      {"L", static_cast<std::int64_t>(g_hat.L.size()), l_formula,
       static_cast<std::int64_t>(enum_l)},
      {"G^", static_cast<std::int64_t>(g_hat.size()), pp * (pp - b) + pp * (pp - 1) / 2 + l_formula,
       static_cast<std::int64_t>(enum_a + enum_b + enum_l)},
  };
  std::ostringstream detail;
  json witness = json::array();
  bool ok = true;
  for (const auto& r : rows) {
    detail << "|" << r.name << "|=" << r.built << " ";
    if (r.built != r.formula || r.built != r.enumerated) {
      ok = false;
      witness.push_back(
          {{"set", r.name}, {"built", r.built}, {"formula", r.formula}, {"enumerated", r.enumerated}});
    }
  }
  report.add(ok ? CheckResult::pass("cardinality.counts", detail.str())
                : CheckResult::fail("cardinality.counts", detail.str(), witness));
  return report;
}

VerificationReport verify_semigroup_relations(const CurveParams& params) {
  VerificationReport report(params);
  const int p = params.p();
  const std::int64_t a = params.a();
  const std::int64_t d = params.d();
  const int b = params.b();

  {
    CheckResult check = CheckResult::pass("semigroup.weight_identities",
                                          "generator weights distinct; sum identities hold");
    const auto fail = [&](const std::string& what) {
      check = CheckResult::fail("semigroup.weight_identities", what);
    };
    for (int i = 0; i <= p && check.passed; ++i) {
      for (int j = i + 1; j <= p; ++j) {
        if (params.generator(i) == params.generator(j)) {
          fail("w(X" + std::to_string(i) + ") == w(X" + std::to_string(j) + ")");
          break;
        }
      }
    }
    for (int i = 1; i <= p - 1 && check.passed; ++i) {
      for (int j = 1; j <= p - 1; ++j) {
        const std::int64_t lhs = params.generator(i) + params.generator(j);
        const std::int64_t rhs = i + j < p ? params.generator(0) + params.generator(i + j)
                                           : params.generator(p) + params.generator(i + j - p);
        if (lhs != rhs) {
          fail("sum identity fails at i=" + std::to_string(i) + ", j=" + std::to_string(j));
          break;
        }
      }
    }
    report.add(std::move(check));
  }

  {
    const auto found = min_multiple_of_mp(params);
    const MultipleRelation closed{a + 1, a + d, p - b};
    const std::string text = "search (m,n,i)=" + triple(found.m, found.n, found.i) +
                             ", closed form (a+1,a+d,p-b)=" + triple(closed.m, closed.n, closed.i);
    report.add(found == closed ? CheckResult::pass("semigroup.min_multiple_of_mp", text)
                               : CheckResult::fail("semigroup.min_multiple_of_mp", text));
  }
  {
    const auto found = min_multiple_of_m0(params);
    const MultipleRelation stated{a, a + d, b};
    const MultipleRelation shifted{a, a + d + 1, b};
    std::string text = "search (n,m,i)=" + triple(found.n, found.m, found.i) +
                       ", stated form (a+d,a,b)=" + triple(stated.n, stated.m, stated.i);
    text += found == shifted ? "; search agrees with (a+d+1,a,b)"
                             : "; search also differs from (a+d+1,a,b)";
    report.add(found == stated
                   ? CheckResult::pass("semigroup.min_multiple_of_m0", text)
                   : CheckResult::fail("semigroup.min_multiple_of_m0", text,
                                       json{{"n", found.n}, {"m", found.m}, {"i", found.i}}));
  }
  return report;
}

}  // namespace monocurve

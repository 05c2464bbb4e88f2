#include "monocurve/generators.hpp"
#include "monocurve/polyring.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace monocurve;
using monocurve::testing::params_7_1_3;
using monocurve::testing::sweep;

namespace {

Monomial X(int p, std::initializer_list<std::pair<int, Monomial::Exponent>> f) {
  return Monomial::of(p, f);
}

Monomial random_monomial(std::mt19937_64& rng, int p, Monomial::Exponent max_e) {
  std::uniform_int_distribution<Monomial::Exponent> e(0, max_e);
  Monomial m(p);
  for (int k = 0; k <= p; ++k) m.set_exponent(k, e(rng));
  return m;
}

// Reference comparison written straight from the definition, on (weight, exponent tuple).
int reference_compare(const CurveParams& c, const Monomial& f, const Monomial& g) {
  const auto wf = weight(c, f), wg = weight(c, g);
  if (wf != wg) return wf > wg ? 1 : -1;
  std::vector<long> diff;
  for (int k = 1; k <= c.p(); ++k) diff.push_back(long(f.exponent(k)) - long(g.exponent(k)));
  diff.push_back(long(f.exponent(0)) - long(g.exponent(0)));
  for (auto it = diff.rbegin(); it != diff.rend(); ++it) {
    if (*it != 0) return *it < 0 ? 1 : -1;
  }
  return 0;
}

bool in_leading_ideal(std::span<const Monomial> leads, const Monomial& m) {
  return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
}

}  // namespace

TEST(Monomial, StorageOrderPutsX0Last) {
  const auto m = X(3, {{0, 4}, {1, 1}, {3, 2}});
  EXPECT_EQ(std::vector<Monomial::Exponent>(m.raw().begin(), m.raw().end()),
            (std::vector<Monomial::Exponent>{1, 0, 2, 4}));
  EXPECT_EQ(m.to_string(), "X1*X3^2*X0^4");
  EXPECT_EQ(Monomial::one(3).to_string(), "1");
}

TEST(Monomial, DivisionAndLcm) {
  const auto f = X(3, {{1, 2}, {0, 1}});
  const auto g = X(3, {{1, 1}, {2, 1}});
  EXPECT_EQ(f.lcm(g), X(3, {{1, 2}, {2, 1}, {0, 1}}));
  EXPECT_EQ(f.gcd(g), X(3, {{1, 1}}));
  EXPECT_FALSE(f.coprime(g));
  EXPECT_TRUE(X(3, {{1, 1}}).coprime(X(3, {{2, 3}})));
  EXPECT_EQ(f.lcm(g) / g, X(3, {{1, 1}, {0, 1}}));
  EXPECT_THROW(g / f, std::domain_error);
  EXPECT_THROW(f * X(2, {{1, 1}}), DimensionError);
}

TEST(CompareR, Examples) {
  const MonomialOrder ord(params_7_1_3());
  EXPECT_TRUE(ord.compare(X(3, {{1, 1}, {2, 1}}), X(3, {{3, 1}, {0, 1}})) > 0);
  EXPECT_TRUE(ord.compare(X(3, {{1, 2}, {0, 1}}), X(3, {{1, 2}, {0, 1}})) == 0);
  EXPECT_TRUE(ord.compare(X(3, {{2, 1}, {3, 2}}), X(3, {{1, 1}, {0, 3}})) > 0);
}

TEST(CompareR, MatchesReferenceTotalAndMultiplicative) {
  std::mt19937_64 rng(11);
  for (const auto& c : sweep(5, 2, 3)) {
    const MonomialOrder ord(c);
    for (int trial = 0; trial < 200; ++trial) {
      const auto f = random_monomial(rng, c.p(), 3);
      const auto g = random_monomial(rng, c.p(), 3);
      const auto h = random_monomial(rng, c.p(), 2);
      const auto cmp = ord.compare(f, g);
      ASSERT_EQ(cmp > 0 ? 1 : cmp < 0 ? -1 : 0, reference_compare(c, f, g));
      ASSERT_EQ(cmp == 0, f == g);
      ASSERT_EQ(ord.compare(g, f), 0 <=> cmp);
      ASSERT_EQ(ord.compare(f * h, g * h), cmp);
      if (!h.is_one()) ASSERT_TRUE(ord.compare(f * h, f) > 0);
    }
  }
}

TEST(CompareR, EqualWeightClassesAreFinite) {
  // A strictly decreasing chain from a fixed start must stop: every monomial below has a smaller
  // or equal weight, and each weight class is finite.
  const auto c = params_7_1_3();
  const MonomialOrder ord(c);
  std::vector<Monomial> all;
  for (Monomial::Exponent e1 = 0; e1 <= 3; ++e1)
    for (Monomial::Exponent e2 = 0; e2 <= 3; ++e2)
      for (Monomial::Exponent e3 = 0; e3 <= 3; ++e3)
        for (Monomial::Exponent e0 = 0; e0 <= 3; ++e0) all.push_back(Monomial({e1, e2, e3, e0}));
  std::sort(all.begin(), all.end(), [&](const auto& f, const auto& g) { return ord.greater(f, g); });
  EXPECT_TRUE(all.back().is_one());
  for (std::size_t k = 1; k < all.size(); ++k) {
    ASSERT_GE(ord.weight(all[k - 1]), ord.weight(all[k]));
  }
}

TEST(Polynomial, Arithmetic) {
  const auto x1 = Polynomial(X(3, {{1, 1}}));
  const auto x2 = Polynomial(X(3, {{2, 1}}));
  const auto x0 = Polynomial(X(3, {{0, 1}}));
  EXPECT_EQ((x1 - x0) + (x0 - x2), x1 - x2);
  EXPECT_TRUE(((x1 - x0) * Polynomial(3)).is_zero());
  EXPECT_TRUE(((x1 - x0) * Rational(0)).is_zero());

  const auto c = params_7_1_3();
  const auto phi11 = build_phi(c, 1, 1);
  const auto prod = phi11 * Polynomial(X(3, {{3, 1}}));
  Polynomial expected(3);
  expected.add_term(X(3, {{1, 2}, {3, 1}}), 1);
  expected.add_term(X(3, {{2, 1}, {3, 1}, {0, 1}}), -1);
  EXPECT_EQ(prod, expected);

  const auto half = (x1 - x2) * Rational(1, 2);
  EXPECT_EQ(half.coefficient(X(3, {{2, 1}})), Rational(-1, 2));
  EXPECT_THROW(x1 + Polynomial(X(2, {{1, 1}})), DimensionError);
}

TEST(LeadingTerm, Examples) {
  const auto c = params_7_1_3();
  const MonomialOrder ord(c);
  const auto lt = leading_term(ord, build_phi(c, 1, 2));
  EXPECT_EQ(lt.mono, X(3, {{1, 1}, {2, 1}}));
  EXPECT_EQ(lt.coeff, 1);
  const auto lt_psi = leading_term(ord, build_psi(c, 0));
  EXPECT_EQ(lt_psi.mono, X(3, {{1, 1}, {3, 2}}));
  EXPECT_EQ(lt_psi.coeff, 1);
  const auto single = leading_term(ord, Polynomial(X(3, {{0, 1}}), 5));
  EXPECT_EQ(single.mono, X(3, {{0, 1}}));
  EXPECT_EQ(single.coeff, 5);
  EXPECT_THROW(leading_term(ord, Polynomial(3)), ZeroPolynomialError);
}

TEST(NormalForm, Examples) {
  const auto c = params_7_1_3();
  const MonomialOrder ord(c);
  const auto phi12 = build_phi(c, 1, 2);
  const std::vector<Polynomial> self{phi12};
  const auto div = normal_form(ord, phi12, self);
  EXPECT_TRUE(div.remainder.is_zero());
  EXPECT_EQ(div.quotients[0], Polynomial(Monomial::one(3)));

  const auto gens = build_G_prime(c).polys();
  std::vector<Monomial> leads;
  for (const auto& g : gens) leads.push_back(leading_monomial(ord, g));
  const Polynomial f(X(3, {{1, 1}, {2, 1}, {3, 1}}));
  const auto r = normal_form(ord, f, gens);
  for (const auto& [m, coeff] : r.remainder.terms()) EXPECT_FALSE(in_leading_ideal(leads, m));
  Polynomial rebuilt = r.remainder;
  for (std::size_t k = 0; k < gens.size(); ++k) rebuilt += r.quotients[k] * gens[k];
  EXPECT_EQ(rebuilt, f);

  EXPECT_TRUE(normal_form(ord, Polynomial(3), gens).remainder.is_zero());
}

TEST(NormalForm, DivisionIdentityAndIdempotence) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const auto& c : sweep(4, 2, 3)) {
    const MonomialOrder ord(c);
    const auto gens = build_G_prime(c).polys();
    std::vector<Monomial> leads;
    for (const auto& g : gens) leads.push_back(leading_monomial(ord, g));
    for (int trial = 0; trial < 20; ++trial) {
      Polynomial f(c.p());
      for (int t = 0; t < 4; ++t) f.add_term(random_monomial(rng, c.p(), 3), coeff(rng));
      const auto div = normal_form(ord, f, gens);
      Polynomial rebuilt = div.remainder;
      for (std::size_t k = 0; k < gens.size(); ++k) rebuilt += div.quotients[k] * gens[k];
      ASSERT_EQ(rebuilt, f);
      for (const auto& [m, cf] : div.remainder.terms()) ASSERT_FALSE(in_leading_ideal(leads, m));
      ASSERT_EQ(normal_form(ord, div.remainder, gens).remainder, div.remainder);
      // Same eta-image: f and its remainder differ by an element of the ideal.
      ASSERT_EQ(eta_eval(c, f), eta_eval(c, div.remainder));
    }
  }
}

TEST(SPolynomial, SelfIsZero) {
  const auto c = params_7_1_3();
  const MonomialOrder ord(c);
  for (const auto& g : build_G_prime(c).polys()) EXPECT_TRUE(s_polynomial(ord, g, g).is_zero());
}

TEST(Buchberger, Principal) {
  const MonomialOrder ord(params_7_1_3());
  const std::vector<Polynomial> gens{Polynomial(X(3, {{1, 1}}))};
  EXPECT_EQ(buchberger(ord, gens), gens);
  const std::vector<Polynomial> scaled{Polynomial(X(3, {{1, 1}}), 4)};
  EXPECT_EQ(buchberger(ord, scaled), gens);
}

TEST(Buchberger, GPrimeAddsNoLeadingMonomial) {
  const auto c = params_7_1_3();
  const MonomialOrder ord(c);
  const auto gens = build_G_prime(c).polys();
  std::vector<Monomial> leads;
  for (const auto& g : gens) leads.push_back(leading_monomial(ord, g));
  const auto basis = buchberger(ord, gens);
  std::set<Monomial> got;
  for (const auto& g : basis) {
    const auto lt = leading_term(ord, g);
    EXPECT_EQ(lt.coeff, 1);
    EXPECT_TRUE(in_leading_ideal(leads, lt.mono));
    got.insert(lt.mono);
  }
  EXPECT_EQ(got, std::set<Monomial>(leads.begin(), leads.end()));
}

TEST(Buchberger, IsReduced) {
  for (const auto& c : sweep(4, 2, 3)) {
    const MonomialOrder ord(c);
    const auto basis = buchberger(ord, build_G_prime(c).polys());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      for (std::size_t m = 0; m < basis.size(); ++m) {
        if (m == k) continue;
        const auto lead = leading_monomial(ord, basis[m]);
        for (const auto& [mono, cf] : basis[k].terms()) ASSERT_FALSE(lead.divides(mono));
      }
    }
    for (std::size_t k = 1; k < basis.size(); ++k) {
      ASSERT_TRUE(ord.greater(leading_monomial(ord, basis[k - 1]), leading_monomial(ord, basis[k])));
    }
  }
}

TEST(Buchberger, IndependentOfInputOrder) {
  std::mt19937_64 rng(3);
  for (const auto& c : sweep(4, 2, 3)) {
    SCOPED_TRACE(c.to_string());
    const MonomialOrder ord(c);
    auto gens = build_G_prime(c).polys();
    const auto reference = buchberger(ord, gens);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(gens.begin(), gens.end(), rng);
      ASSERT_EQ(buchberger(ord, gens), reference);
    }
    // Scaling and an extra ideal member do not change the reduced basis.
    auto extended = gens;
    extended[0] *= Rational(-3, 2);
    extended.push_back(gens[1] * Polynomial(X(c.p(), {{0, 2}})) + gens[0]);
    ASSERT_EQ(buchberger(ord, extended), reference);
  }
}

TEST(Buchberger, NonBinomialInput) {
  // A small ideal whose reduced basis needs non-unit coefficients along the way.
  const MonomialOrder ord(params_7_1_3());
  Polynomial f(3), g(3);
  f.add_term(X(3, {{1, 2}}), 2);
  f.add_term(X(3, {{2, 1}, {0, 1}}), 3);
  g.add_term(X(3, {{1, 1}, {2, 1}}), 1);
  g.add_term(X(3, {{0, 1}, {3, 1}}), -5);
  const std::vector<Polynomial> gens{f, g};
  const auto basis = buchberger(ord, gens);
  for (const auto& h : gens) EXPECT_TRUE(normal_form(ord, h, basis).remainder.is_zero());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      EXPECT_TRUE(normal_form(ord, s_polynomial(ord, basis[i], basis[j]), basis).remainder.is_zero());
    }
  }
}

TEST(Schreyer, SyzygiesAreRelations) {
  const auto c = params_7_1_3();
  const MonomialOrder ord(c);
  const auto gens = build_G_prime(c).polys();
  const auto result = schreyer_syzygies(ord, gens);
  EXPECT_TRUE(result.failures.empty());
  EXPECT_EQ(result.syzygies.size(), gens.size() * (gens.size() - 1) / 2);
  for (const auto& syz : result.syzygies) {
    Polynomial sum(3);
    for (std::size_t k = 0; k < gens.size(); ++k) sum += syz.coefficients[k] * gens[k];
    EXPECT_TRUE(sum.is_zero());
  }
}

TEST(EtaEval, Examples) {
  const auto c = params_7_1_3();
  EXPECT_TRUE(eta_eval(c, build_phi(c, 1, 2)).empty());
  EXPECT_EQ(eta_eval(c, Polynomial(X(3, {{1, 1}}))), (UnivariatePolynomial{{8, 1}}));
  EXPECT_TRUE(eta_eval(c, build_psi(c, 2)).empty());
}

TEST(EtaEval, VanishesOnGenerators) {
  for (const auto& c : sweep(6, 3, 5)) {
    SCOPED_TRACE(c.to_string());
    for (const auto& g : build_G_prime(c).members) {
      ASSERT_TRUE(eta_eval(c, g.poly).empty());
      const auto terms = g.poly.terms();
      ASSERT_EQ(terms.size(), 2u);
      ASSERT_EQ(weight(c, terms.begin()->first), weight(c, std::next(terms.begin())->first));
    }
    for (const auto& g : build_G_patil(c)) ASSERT_TRUE(eta_eval(c, g.poly).empty()) << g.name;
  }
}

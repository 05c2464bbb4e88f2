#include "monocurve/generators.hpp"

#include <algorithm>

namespace monocurve {

int epsilon(int i, int j, int p) { return i + j < p ? i + j : p; }
int tau(int i, int j, int p) { return i + j < p ? 0 : p; }

BasisSymbol BasisSymbol::phi(int i, int j) {
  if (i > j) std::swap(i, j);
  return {Kind::Phi, i, j};
}

std::string BasisSymbol::to_string(int b) const {
  if (is_psi()) return "Psi(" + std::to_string(b) + "," + std::to_string(j) + ")";
  return "Phi(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool in_range(const CurveParams& params, const BasisSymbol& symbol) {
  const int p = params.p();
  if (symbol.is_psi()) return symbol.j >= 0 && symbol.j <= p - params.b();
  return symbol.i >= 1 && symbol.i <= symbol.j && symbol.j <= p - 1;
}

namespace {

Monomial var(const CurveParams& params, int k, Monomial::Exponent e = 1) {
  return Monomial::variable(params.p(), k, e);
}

Monomial::Exponent exp_of(std::int64_t e) { return static_cast<Monomial::Exponent>(e); }

}  // namespace

Polynomial build_phi(const CurveParams& params, int i, int j) {
  const int p = params.p();
  if (i < 1 || i > p - 1 || j < 1 || j > p - 1) {
    throw IndexError("phi(" + std::to_string(i) + "," + std::to_string(j) +
                     ") needs indices in [1," + std::to_string(p - 1) + "]");
  }
  if (i > j) std::swap(i, j);
  const int e = epsilon(i, j, p);
  return Polynomial::binomial(var(params, i) * var(params, j),
                              var(params, e) * var(params, i + j - e));
}

Polynomial build_psi(const CurveParams& params, int i) {
  const int p = params.p();
  const int b = params.b();
  if (i < 0 || i > p - b) {
    throw IndexError("psi(b," + std::to_string(i) + ") needs i in [0," + std::to_string(p - b) +
                     "]");
  }
  return Polynomial::binomial(var(params, b + i) * var(params, p, exp_of(params.a())),
                              var(params, i) * var(params, 0, exp_of(params.a() + params.d())));
}

Polynomial generator_for(const CurveParams& params, const BasisSymbol& symbol) {
  return symbol.is_psi() ? build_psi(params, symbol.j) : build_phi(params, symbol.i, symbol.j);
}

std::size_t GeneratorSet::phi_count() const {
  return static_cast<std::size_t>(std::count_if(
      members.begin(), members.end(), [](const auto& g) { return g.label.is_phi(); }));
}

std::size_t GeneratorSet::psi_count() const { return members.size() - phi_count(); }

std::vector<Polynomial> GeneratorSet::polys() const {
  std::vector<Polynomial> out;
  out.reserve(members.size());
  for (const auto& g : members) out.push_back(g.poly);
  return out;
}

const Polynomial& GeneratorSet::at(const BasisSymbol& label) const {
  for (const auto& g : members) {
    if (g.label == label) return g.poly;
  }
  throw IndexError("no generator labelled " + label.to_string(0));
}

GeneratorSet build_G_prime(const CurveParams& params) {
  const int p = params.p();
  GeneratorSet set;
  for (int i = 0; i <= p - params.b(); ++i) {
    set.members.push_back({BasisSymbol::psi(i), build_psi(params, i)});
  }
  for (int j = 1; j <= p - 1; ++j) {
    for (int i = 1; i <= j; ++i) {
      set.members.push_back({BasisSymbol::phi(i, j), build_phi(params, i, j)});
    }
  }
  return set;
}

std::vector<PatilGenerator> build_G_patil(const CurveParams& params) {
  const int p = params.p();
  const int b = params.b();
  const auto a = exp_of(params.a());
  const auto ad = exp_of(params.a() + params.d());
  const auto idx = [](int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };

  std::vector<PatilGenerator> out;
  for (int j = 1; j <= p - 2; ++j) {
    for (int i = 1; i <= j; ++i) {
      const Monomial lead = var(params, i) * var(params, j);
      const Monomial rhs = i + j <= p - 1 ? var(params, i + j) * var(params, 0)
                                          : var(params, i + j + 1 - p) * var(params, p - 1);
      out.push_back({"xi" + idx(i, j), Polynomial::binomial(lead, rhs)});
    }
  }
  for (int i = 0; i <= p - 2; ++i) {
    out.push_back({"phi_" + std::to_string(i),
                   Polynomial::binomial(var(params, i + 1) * var(params, p - 1),
                                        var(params, i) * var(params, p))});
  }
  for (int j = 0; j <= p - b - 1; ++j) {
    out.push_back({"psi" + idx(b, j), Polynomial::binomial(var(params, b + j) * var(params, p, a),
                                                           var(params, j) * var(params, 0, ad))});
  }
  out.push_back({"theta", Polynomial::binomial(var(params, p, a + 1),
                                               var(params, p - b) * var(params, 0, ad))});
  return out;
}

std::vector<Monomial> expected_leading_monomials_G_prime(const CurveParams& params) {
  const int p = params.p();
  std::vector<Monomial> out;
  for (int j = 1; j <= p - 1; ++j) {
    for (int i = 1; i <= j; ++i) out.push_back(var(params, i) * var(params, j));
  }
  for (int i = 0; i <= p - params.b(); ++i) {
    out.push_back(var(params, params.b() + i) * var(params, p, exp_of(params.a())));
  }
  return out;
}

}  // namespace monocurve

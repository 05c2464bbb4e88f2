#pragma once

#include "monocurve/polyring.hpp"
#include "monocurve/semigroup.hpp"

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monocurve {

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// epsilon(i, j) = i + j if i + j < p, else p.
int epsilon(int i, int j, int p);
/// tau(i, j) = 0 if i + j < p, else p.
int tau(int i, int j, int p);

/// Label of a member of G' and, equally, a basis symbol of the free module:
/// Psi(b, j) with j in [0, p-b], or Phi(i, j) with 1 <= i <= j <= p-1.
struct BasisSymbol {
  enum class Kind { Psi, Phi };

  Kind kind = Kind::Psi;
  int i = 0;  // unused for Psi
  int j = 0;

  static BasisSymbol psi(int j) { return {Kind::Psi, 0, j}; }
  /// Canonicalizes to i <= j; no range check.
  static BasisSymbol phi(int i, int j);

  bool is_psi() const { return kind == Kind::Psi; }
  bool is_phi() const { return kind == Kind::Phi; }

  /// Storage order only (Psi before Phi, then indices).
  auto operator<=>(const BasisSymbol&) const = default;
  bool operator==(const BasisSymbol&) const = default;

  std::string to_string(int b) const;
};

/// Range check against params: Psi j in [0, p-b]; Phi 1 <= i <= j <= p-1.
bool in_range(const CurveParams& params, const BasisSymbol& symbol);

/// phi(i, j) = X_i X_j - X_eps X_{i+j-eps}. Index 0 is X_0. Throws IndexError
/// unless i, j in [1, p-1].
Polynomial build_phi(const CurveParams& params, int i, int j);

/// psi(b, i) = X_{b+i} X_p^a - X_i X_0^{a+d}. Throws IndexError unless i in [0, p-b].
Polynomial build_psi(const CurveParams& params, int i);

/// The generator behind a basis symbol.
Polynomial generator_for(const CurveParams& params, const BasisSymbol& symbol);

struct LabeledGenerator {
  BasisSymbol label;
  Polynomial poly;
};

/// G': every phi(i, j), i <= j, and every psi(b, i).
///
/// Members are ordered Psi(b,0..p-b) then Phi by (j, i); this order is also
/// the index order of Schreyer syzygies built from polys().
struct GeneratorSet {
  std::vector<LabeledGenerator> members;

  std::size_t phi_count() const;
  std::size_t psi_count() const;
  std::vector<Polynomial> polys() const;
  const Polynomial& at(const BasisSymbol& label) const;
};

GeneratorSet build_G_prime(const CurveParams& params);

/// Member of the classical minimal generating set G (Y = X_p).
struct PatilGenerator {
  std::string name;  // "xi(1,2)", "phi_0", "psi(1,0)", "theta"
  Polynomial poly;
};

/// xi(i,j) for 1 <= i <= j <= p-2, phi_i for i in [0, p-2],
/// psi(b, j) for j in [0, p-b-1], and theta.
std::vector<PatilGenerator> build_G_patil(const CurveParams& params);

/// The explicit leading-monomial set {X_i X_j} u {X_{b+i} X_p^a} of G'.
std::vector<Monomial> expected_leading_monomials_G_prime(const CurveParams& params);

}  // namespace monocurve

#pragma once

#include "monocurve/generators.hpp"
#include "monocurve/polyring.hpp"
#include "monocurve/report.hpp"
#include "monocurve/syzygy.hpp"

#include <nlohmann/json.hpp>

namespace monocurve {

using nlohmann::json;

/// {"m0", "d", "p", "a", "b", "generators"}.
json to_json(const CurveParams& params);
/// Reads m0/d/p and re-validates through make_params.
CurveParams params_from_json(const json& j);

/// [{"coeff": "num/den", "expo": [a_1, ..., a_p, a_0]}, ...] descending under >_R.
json to_json(const MonomialOrder& order, const Polynomial& poly);
/// Inverse of the above; every "expo" must have p+1 entries.
Polynomial polynomial_from_json(int p, const json& j);

json to_json(const BasisSymbol& symbol);
BasisSymbol symbol_from_json(const json& j);

/// [{"coeff", "expo", "basis": {"kind": "Psi", "j"} | {"kind": "Phi", "i", "j"}}, ...]
/// descending under >_M.
json to_json(const ModuleOrder& order, const ModuleElement& elem);
ModuleElement module_element_from_json(int p, const json& j);

/// {"check", "params", "status": "pass"|"fail", "detail", "witness"?}.
json to_json(const CheckResult& check, const CurveParams& params);
/// {"params", "status", "checks": [...]}.
json to_json(const VerificationReport& report);

/// Generators dump: params, G' (label, polynomial, leading term) and G.
json generators_to_json(const CurveParams& params);
/// Syzygy dump: params, counts, and every member of the closed-form set with its leading term.
json syzygies_to_json(const CurveParams& params);

}  // namespace monocurve

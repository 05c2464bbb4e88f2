#pragma once

#include "monocurve/semigroup.hpp"

#include <vector>

namespace monocurve::testing {

inline CurveParams params_7_1_3() { return make_params(7, 1, 3); }
inline CurveParams params_8_3_2() { return make_params(8, 3, 2); }

// Every valid parameter set with p in [2,max_p], a in [1,max_a], b in [1,p], d in [1,max_d].
inline std::vector<CurveParams> sweep(int max_p, int max_a, int max_d) {
  std::vector<CurveParams> out;
  for (int p = 2; p <= max_p; ++p) {
    for (int a = 1; a <= max_a; ++a) {
      for (int b = 1; b <= p; ++b) {
        for (int d = 1; d <= max_d; ++d) {
          try {
            out.push_back(make_params(static_cast<std::int64_t>(a) * p + b, d, p));
          } catch (const ParamError&) {
          }
        }
      }
    }
  }
  return out;
}

}  // namespace monocurve::testing

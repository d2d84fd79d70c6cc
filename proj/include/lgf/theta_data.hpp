#pragma once

// JSON form of JacobianSpectralData. Complex numbers are [re, im] pairs,
// vectors are arrays of pairs, B is a row-major array of g*g pairs:
//
//   {
//     "genus": 2,
//     "B": [[re, im], ...],              // g*g entries, row-major
//     "K": [[re, im], ...],              // g entries
//     "delta_P": [...], "delta_Q": [...],
//     "A_gamma": [[[re, im], ...], ...], // g vectors of g entries
//     "b_periods_P": [...],              // optional
//     "b_periods_Q": [...],              // optional
//     "samples": [                       // optional
//       {"abel": [...], "int_omega_P": [re, im], "int_omega_Q": [re, im]}
//     ]
//   }

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "lgf/theta.hpp"

namespace lgf::theta {

// Throws DataError on malformed input, ConvergenceError if Im B is not
// positive definite, DataError if B is not symmetric or the declared
// b-periods violate the relation b-period = 2 pi i Delta (to 1e-9).
JacobianSpectralData data_from_json(const nlohmann::json& j);
nlohmann::json data_to_json(const JacobianSpectralData& data);

JacobianSpectralData load_data(const std::string& path);

}  // namespace lgf::theta

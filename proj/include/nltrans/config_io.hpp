#pragma once

#include <string>

#include "nltrans/dynamics.hpp"

namespace nltrans {

/// Parse and validate a JSON run configuration. Unknown keys are
/// rejected. Throws ParseError for malformed JSON (with position) and
/// ValidationError (naming the field) for semantic violations.
///
/// Schema:
/// {
///   "model": "arctan" | "viscous" | "cccf" | "porous",
///   "nu": <float>,            // required iff model == "viscous"
///   "m": <int>,               // required iff model == "porous"
///   "n": <even int >= 8>,
///   "t_end": <float > 0>,
///   "cfl": <float in (0,1]>,          // optional, default 0.5
///   "snap_every": <float >= 0>,
///   "dealias": <bool>,                // optional, default true
///   "diag_sym_every": <float >= 0>,   // optional, default 0 (never)
///   "initial": {
///     "mean": <float>,
///     "modes": [{"k": <int >= 1>, "cos_amp": <float>, "sin_amp": <float>}],
///     "values": [<float> x n],        // optional, replaces mean+modes
///     "mollify_eps": <float >= 0>     // optional
///   }
/// }
SimConfig parse_config(const std::string& text);

/// Inverse of parse_config (used by tests and for echoing configs).
std::string config_to_json(const SimConfig& config);

} // namespace nltrans

#pragma once

#include <string>

#include "salkit/action.hpp"

namespace salkit {

// {"dimension": n, "normals": [[...], ...]} or
// {"family": "braid"|"center_of_mass", "n": n, "l": l}
Arrangement arrangement_from_json_text(const std::string& text);
std::string arrangement_to_json_text(const Arrangement& arr);

// CW complex dump: cells with ids, dims, generating (F, C) sign-vector
// strings, covectors, and signed boundary lists.
std::string cw_to_json_text(const CWData& cw);

// Quotient complex dump: per-dimension generator labels and boundary
// matrices as integer-mod-p arrays (with the integer lift alongside).
std::string quotient_to_json_text(const TwistedQuotientComplex& q, const SalvettiPipeline& pl);

} // namespace salkit

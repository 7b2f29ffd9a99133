#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "kzaut/autgroup.hpp"
#include "kzaut/matrix.hpp"
#include "kzaut/transcript.hpp"

namespace kzaut {

// Transcript text, one factor per line, 1-based indices:
//   E i j <poly>     I + poly e_ij
//   D u_1 ... u_n    diagonal units
//   S i j            interchange (accepted on input; printing expands it)

std::string transcript_to_text(const Transcript& t);
Transcript transcript_from_text(std::string_view text, const RingPtr& ring, std::size_t dim);

// Automorphism factors, 1-based:
//   A i j <a(z)> <b(z)>   x_j -> x_j + a(z) x_i b(z)
//   AS u_1 ... u_n        scaling
std::string auto_factors_to_text(const std::vector<AutoFactor>& factors, const Algebra& alg);

/// Rows as "[ a  b ]" with columns padded to a common width.
std::string matrix_to_text(const PolyMatrix& m);

nlohmann::json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const nlohmann::json& j, const RingPtr& ring);

/// {"dim", "ring", "field", "factors": [{"type": "E", "i", "j", "poly"} | {"type": "D", "units"}]}
nlohmann::json transcript_to_json(const Transcript& t);
/// Inverse of transcript_to_json; also accepts {"type": "S", "i", "j"}.
Transcript transcript_from_json(const nlohmann::json& j);

nlohmann::json auto_factors_to_json(const std::vector<AutoFactor>& factors, const Algebra& alg);

}  // namespace kzaut

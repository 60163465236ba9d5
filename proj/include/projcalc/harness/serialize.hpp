#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "projcalc/report.hpp"
#include "projcalc/star_ring.hpp"

namespace projcalc::harness {

using nlohmann::json;

inline constexpr std::string_view kSchema = "projcalc/1";

// {"schema":"projcalc/1","backend":"exact"|"float","rows":n,"cols":n,"data":[[entry,...],...]}
// Exact entries are strings in GaussianRational text form; float entries are
// {"re": x, "im": y}.
json to_json(const exact::ExactMatrix& m);
json to_json(const floating::FloatMatrix& m);

using AnyMatrix = std::variant<exact::ExactMatrix, floating::FloatMatrix>;

BackendKind backend_of(const json& matrix);
BackendKind parse_backend(std::string_view name);
AnyMatrix matrix_from_json(const json& j);
exact::ExactMatrix exact_matrix_from_json(const json& j);
floating::FloatMatrix float_matrix_from_json(const json& j);

template <StarRingBackend B>
typename B::Matrix matrix_from_json_as(const json& j) {
  if constexpr (B::kind == BackendKind::exact) {
    return exact_matrix_from_json(j);
  } else {
    return float_matrix_from_json(j);
  }
}

// {"schema":"projcalc/1","p":<matrix>,"q":<matrix>}
template <class Matrix>
json pair_to_json(const Matrix& p, const Matrix& q) {
  return json{{"schema", kSchema}, {"p", to_json(p)}, {"q", to_json(q)}};
}

// FNV-1a 64 over the compact dump, as 16 hex digits.
std::string fingerprint(const json& j);

json to_json(const TheoremReport& r);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace projcalc::harness

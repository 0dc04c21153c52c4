#pragma once

// JSON and text forms of elements and reports.
//
// Element text accepted by the parsers: a JSON object as produced by
// to_json, a bare forest "(1,2);3", or a sum such as "[(1,2);3] - 2*[1;2;3]"
// (dual terms may carry a trailing '*').

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "bessel/boperad.hpp"
#include "bessel/dual.hpp"
#include "bessel/element.hpp"

namespace bessel::io {

using json = nlohmann::json;

json to_json(const LabelSet& labels);
json to_json(const Element& x);
json to_json(const DualElement& x);
json to_json(const TensorElement& x);
json to_json(const dual::RankReport& r);
json to_json(const dual::ShapeReport& r);

Element element_from_json(const json& j);
DualElement dual_from_json(const json& j);
TensorElement tensor_from_json(const json& j);
dual::RankReport rank_report_from_json(const json& j);

Element parse_element(std::string_view text);
DualElement parse_dual(std::string_view text);

}  // namespace bessel::io

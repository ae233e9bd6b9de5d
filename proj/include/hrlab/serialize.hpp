#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hrlab/hodge_riemann.hpp"
#include "hrlab/pairings.hpp"
#include "hrlab/positivity.hpp"

namespace hrlab {

using Json = nlohmann::ordered_json;

// Serialization is strict both ways: readers reject unknown or missing
// fields, writers emit a fixed field order.

Json form_to_json(const Form& f);
Form form_from_json(const Json& j);

Json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& j);

Json decomposition_to_json(const StrongPositivityDecomposition& d);
StrongPositivityDecomposition decomposition_from_json(const Json& j);

Json end_valued_form_to_json(const EndValuedForm& f);
EndValuedForm end_valued_form_from_json(const Json& j);

Json curvature_tensor_to_json(const CurvatureTensor& r);
CurvatureTensor curvature_tensor_from_json(const Json& j);

Json hr_report_to_json(const HRReport& rep);

// Reject keys outside `allowed`; `context` names the object in errors.
void check_keys(const Json& j, const std::vector<std::string>& allowed,
                const std::string& context);

// Render with a fixed layout and floats at 17 significant digits, so equal
// values serialize to identical bytes.
std::string dump_deterministic(const Json& j, int indent = 2);

}  // namespace hrlab

#pragma once

// JSON wire formats. Elasticity tensors are accepted either as
// {"voigt": [[6x6]]} or {"components": [81 row-major numbers]}; invariant
// vectors serialize as ordered arrays of {name, value, degree}.

#include <nlohmann/json.hpp>
#include <string>

#include "ela/binary_forms.hpp"
#include "ela/elasticity.hpp"
#include "ela/genericity.hpp"
#include "ela/invariants.hpp"
#include "ela/separation.hpp"

namespace ela {

using Json = nlohmann::ordered_json;

Json to_json(const InvariantVector& v);
Json to_json(const HarmonicDecomposition& dec);
Json to_json(const GenericityReport& rep);
Json to_json(const CompareResult& res);
Json to_json(const BinaryForm& f);
Json to_json(const Rotation& g);

/// {"voigt": [[...]]} representation.
Json voigt_json(const ElasticityTensor& e);

/// Accepts {"voigt": ...} or {"components": ...}; FormatError otherwise.
ElasticityTensor elasticity_from_json(const nlohmann::json& j);

BinaryForm binary_form_from_json(const nlohmann::json& j);

/// Reads a tensor file: JSON (either representation) or a plain-text
/// whitespace-separated 6x6 matrix.
ElasticityTensor read_elasticity_file(const std::string& path);

}  // namespace ela

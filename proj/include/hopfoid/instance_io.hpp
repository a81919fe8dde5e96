#pragma once

#include <string>

#include <json.hpp>

#include "hopfoid/catalog.hpp"

namespace hopfoid {

/// Instance file layout (JSON). Matrices are lists of [row, col, "p/q"]
/// triples sorted by (row, col); vectors are lists of [index, "p/q"]. Column
/// j of a multiplication table is the product of basis pair (j / n, j % n).
///
///   format "hopfoid-instance", field "Q", name, description
///   hopf: labels, mult, unit, comult, counit, antipode
///   left_yd: labels, mult, unit, action, coaction
///   right_yd (optional, same keys), phi and phi_inv (optional)
///   perturbations: [{name, description, expected_failures,
///                    antipode?, left_action?, left_coaction?, tau_identity?}]
///
/// Without right_yd the right structure is derived from the left one through
/// phi (identity when absent).
nlohmann::ordered_json instance_to_json(const InstanceDescriptor& d);
std::string serialize_instance(const InstanceDescriptor& d);

/// Structural validation only. Throws ParseError (with a location such as
/// "hopf.mult[3]") for malformed content and DimensionMismatch for indices or
/// sizes that do not fit.
InstanceDescriptor parse_instance(const std::string& text);
InstanceDescriptor instance_from_json(const nlohmann::ordered_json& j);

}  // namespace hopfoid

#pragma once

#include <memory>
#include <string>
#include <variant>

#include "interference/exposure.hpp"
#include "interference/lim_model.hpp"

namespace interference {

using Model = std::variant<ExposureOutcomeModel, LimModel>;

/// Parses a model file:
///   {"kind":"exposure","spec":{"family":"..."},"coeffs":[[...],...]}
///   {"kind":"lim","beta":[[b1,b2,b3],...]}
/// Families needing a network (stratified, arbitrary) and every "lim" model
/// require `net`; for the others, n is inferred from the coefficient table
/// when no network is given. Throws DataError on malformed content.
Model load_model_json(const std::string& text, std::shared_ptr<const Network> net = nullptr);

Model load_model_file(const std::string& path, std::shared_ptr<const Network> net = nullptr);

std::string save_model_json(const Model& model);

/// Unified evaluation across the two model kinds.
std::vector<double> evaluate_outcomes(const Model& model, const Intervention& z);

}  // namespace interference

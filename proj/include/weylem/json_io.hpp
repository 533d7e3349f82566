#pragma once

#include "weylem/scenario.hpp"

#include <json.hpp>

namespace weylem::io {

using ordered_json = nlohmann::ordered_json;

Scalar parse_scalar(const std::string& s);
std::string scalar_str(const Scalar& s);

/// psi as a JSON object: point encoding -> weight coefficient vector.
ring::WeightFunction parse_psi(const ordered_json& j, int rank);
ordered_json psi_json(const ring::WeightFunction& psi);

ordered_json fold_json(const Scenario& sc);
/// Basis labels and nonzero structure constants of a truncated algebra.
ordered_json ema_json(const ema::TruncatedEMA& E);
ordered_json character_json(const std::map<lie::Weight, int>& ch);
ordered_json module_json(const weylmod::WeightModule& W);
ordered_json descriptor_json(const weylalg::SymAlgebraDescriptor& d);

} // namespace weylem::io

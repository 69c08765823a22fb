// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "maskquorum/constructions.hpp"
#include "maskquorum/quorum_system.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace maskquorum
{

// Specs are single-key objects naming the construction, e.g.
//   {"MGrid": {"side": 7, "b": 3}}
//   {"Composed": {"outer": {"FPP": {"q": 2}}, "inner": {...}}}
// Malformed input throws ParameterError.
nlohmann::json specToJson(ConstructionSpec const& spec);
ConstructionSpec specFromJson(nlohmann::json const& j);
ConstructionSpec parseSpec(std::string const& text);

// load is written with enough digits to round-trip exactly.
nlohmann::json paramsToJson(SystemParams const& params);
SystemParams paramsFromJson(nlohmann::json const& j);

} // namespace maskquorum

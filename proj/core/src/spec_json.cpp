// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "maskquorum/spec_json.hpp"
#include "maskquorum/errors.hpp"

#include <type_traits>

namespace maskquorum
{

using nlohmann::json;

namespace
{

std::int64_t
intField(json const& obj, char const* name)
{
    auto it = obj.find(name);
    if (it == obj.end())
    {
        throw ParameterError(std::string("missing field '") + name + "'");
    }
    if (!it->is_number_integer())
    {
        throw ParameterError(std::string("field '") + name +
                             "' must be an integer");
    }
    return it->get<std::int64_t>();
}

void
expectFields(json const& obj, std::initializer_list<char const*> names)
{
    if (!obj.is_object())
    {
        throw ParameterError("construction body must be an object");
    }
    for (auto const& [key, value] : obj.items())
    {
        bool known = false;
        for (auto n : names)
        {
            known = known || key == n;
        }
        if (!known)
        {
            throw ParameterError("unknown field '" + key + "'");
        }
    }
}

} // namespace

json
specToJson(ConstructionSpec const& spec)
{
    return std::visit(
        [](auto const& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, MGridSpec>)
            {
                return {{"MGrid", {{"side", s.side}, {"b", s.b}}}};
            }
            else if constexpr (std::is_same_v<T, ThresholdSpec>)
            {
                return {{"Threshold", {{"k", s.k}, {"ell", s.ell}}}};
            }
            else if constexpr (std::is_same_v<T, RTSpec>)
            {
                return {{"RT", {{"k", s.k}, {"ell", s.ell}, {"h", s.h}}}};
            }
            else if constexpr (std::is_same_v<T, FPPSpec>)
            {
                return {{"FPP", {{"q", s.q}}}};
            }
            else if constexpr (std::is_same_v<T, BoostFPPSpec>)
            {
                return {{"BoostFPP", {{"q", s.q}, {"b", s.b}}}};
            }
            else if constexpr (std::is_same_v<T, MPathSpec>)
            {
                return {{"MPath", {{"side", s.side}, {"b", s.b}}}};
            }
            else
            {
                return {{"Composed",
                         {{"outer", specToJson(*s.outer)},
                          {"inner", specToJson(*s.inner)}}}};
            }
        },
        spec.value);
}

ConstructionSpec
specFromJson(json const& j)
{
    if (!j.is_object() || j.size() != 1)
    {
        throw ParameterError("a spec is an object with exactly one key naming "
                             "the construction");
    }
    auto const& name = j.begin().key();
    auto const& body = j.begin().value();
    if (name == "MGrid")
    {
        expectFields(body, {"side", "b"});
        return {MGridSpec{intField(body, "side"), intField(body, "b")}};
    }
    if (name == "Threshold")
    {
        expectFields(body, {"k", "ell"});
        return {ThresholdSpec{intField(body, "k"), intField(body, "ell")}};
    }
    if (name == "RT")
    {
        expectFields(body, {"k", "ell", "h"});
        return {RTSpec{intField(body, "k"), intField(body, "ell"),
                       intField(body, "h")}};
    }
    if (name == "FPP")
    {
        expectFields(body, {"q"});
        return {FPPSpec{intField(body, "q")}};
    }
    if (name == "BoostFPP")
    {
        expectFields(body, {"q", "b"});
        return {BoostFPPSpec{intField(body, "q"), intField(body, "b")}};
    }
    if (name == "MPath")
    {
        expectFields(body, {"side", "b"});
        return {MPathSpec{intField(body, "side"), intField(body, "b")}};
    }
    if (name == "Composed")
    {
        expectFields(body, {"outer", "inner"});
        if (!body.contains("outer") || !body.contains("inner"))
        {
            throw ParameterError("Composed needs 'outer' and 'inner'");
        }
        return ConstructionSpec::composed(specFromJson(body["outer"]),
                                          specFromJson(body["inner"]));
    }
    throw ParameterError("unknown construction '" + name + "'");
}

ConstructionSpec
parseSpec(std::string const& text)
{
    json j;
    try
    {
        j = json::parse(text);
    }
    catch (json::parse_error const& e)
    {
        throw ParameterError(std::string("spec is not valid JSON: ") + e.what());
    }
    return specFromJson(j);
}

json
paramsToJson(SystemParams const& p)
{
    return {{"n", p.n},       {"c", p.c}, {"iMin", p.iMin}, {"aMin", p.aMin},
            {"b", p.b},       {"f", p.f}, {"load", p.load}};
}

SystemParams
paramsFromJson(json const& j)
{
    if (!j.is_object())
    {
        throw ParameterError("params must be an object");
    }
    SystemParams p;
    p.n = intField(j, "n");
    p.c = intField(j, "c");
    p.iMin = intField(j, "iMin");
    p.aMin = intField(j, "aMin");
    p.b = intField(j, "b");
    p.f = intField(j, "f");
    auto it = j.find("load");
    if (it == j.end() || !it->is_number())
    {
        throw ParameterError("field 'load' must be a number");
    }
    p.load = it->get<double>();
    return p;
}

} // namespace maskquorum

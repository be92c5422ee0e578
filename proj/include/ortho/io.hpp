#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ortho/circumcenter.hpp"
#include "ortho/detectors.hpp"
#include "ortho/norm.hpp"
#include "ortho/orthocentric.hpp"

namespace ortho::io {

using Json = nlohmann::ordered_json;

/// {"kind":"lp","p":2.0} | {"kind":"lp","p":"inf"} | {"kind":"polygonal","vertices":[[1,1],...]}.
/// Throws ConfigError on any schema or validity problem.
NormSpec parse_norm(const Json& j);
Json to_json(const NormSpec& spec);

Vec2 parse_point(const Json& j, const std::string& what);
Json to_json(const Vec2& v);

/// All fields, with an explicit null for an unset lambda.
Json to_json(const OrthocentricConfig& cfg);
Json to_json(const CircumcenterSet& set);
Json to_json(const DetectorReport& report);

/// name,max,mean,n,excluded rows, one per detector.
void write_csv(std::ostream& os, const DetectorReport& report);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ortho::io

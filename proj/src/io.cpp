#include "ortho/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ortho/errors.hpp"

namespace ortho::io {

Vec2 parse_point(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError(what + ": expected a point [x, y]");
  }
  const Vec2 v{j[0].get<double>(), j[1].get<double>()};
  if (!v.finite()) throw ConfigError(what + ": non-finite coordinate");
  return v;
}

Json to_json(const Vec2& v) { return Json::array({v.x, v.y}); }

NormSpec parse_norm(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ConfigError("norm: expected an object with a string \"kind\"");
  }
  const auto kind = j["kind"].get<std::string>();
  if (kind == "lp") {
    if (!j.contains("p")) throw ConfigError("norm: lp needs \"p\"");
    const auto& p = j["p"];
    if (p.is_string()) {
      const auto s = p.get<std::string>();
      if (s == "inf" || s == "infinity") return NormSpec::lp(kInf);
      throw ConfigError("norm: \"p\" must be a number or \"inf\"");
    }
    if (!p.is_number()) throw ConfigError("norm: \"p\" must be a number or \"inf\"");
    return NormSpec::lp(p.get<double>());
  }
  if (kind == "polygonal") {
    if (!j.contains("vertices") || !j["vertices"].is_array()) {
      throw ConfigError("norm: polygonal needs a \"vertices\" array");
    }
    std::vector<Vec2> v;
    for (const auto& e : j["vertices"]) v.push_back(parse_point(e, "norm vertex"));
    return NormSpec::polygonal(std::move(v));
  }
  throw ConfigError("norm: unknown kind \"" + kind + "\"");
}

Json to_json(const NormSpec& spec) {
  Json j;
  switch (spec.kind()) {
    case NormSpec::Kind::lp:
      j["kind"] = "lp";
      if (spec.p() == kInf) {
        j["p"] = "inf";
      } else {
        j["p"] = spec.p();
      }
      break;
    case NormSpec::Kind::polygonal: {
      j["kind"] = "polygonal";
      Json vs = Json::array();
      for (const auto& v : spec.vertices()) vs.push_back(to_json(v));
      j["vertices"] = std::move(vs);
      break;
    }
    case NormSpec::Kind::custom:
      j["kind"] = "custom";
      j["name"] = spec.id();
      break;
  }
  return j;
}

Json to_json(const OrthocentricConfig& c) {
  Json j;
  const char* xs[] = {"x1", "x2", "x3", "x4"};
  const char* ps[] = {"p1", "p2", "p3", "p4"};
  for (int i = 0; i < 4; ++i) j[xs[i]] = to_json(c.x[i]);
  for (int i = 0; i < 4; ++i) j[ps[i]] = to_json(c.p[i]);
  j["m1"] = to_json(c.m[0]);
  j["m2"] = to_json(c.m[1]);
  j["m3"] = to_json(c.m[2]);
  j["d1"] = to_json(c.d[0]);
  j["d2"] = to_json(c.d[1]);
  j["d3"] = to_json(c.d[2]);
  j["q"] = to_json(c.q);
  j["g"] = to_json(c.g);
  j["g1"] = to_json(c.g1);
  j["lambda"] = c.lambda ? Json(*c.lambda) : Json(nullptr);
  j["degenerate"] = c.degenerate;
  j["certified"] = c.certified;
  return j;
}

Json to_json(const CircumcenterSet& set) {
  Json j;
  Json centers = Json::array();
  for (std::size_t i = 0; i < set.size(); ++i) {
    centers.push_back({{"center", to_json(set.centers[i])},
                       {"radius", set.radius_at[i]},
                       {"residual", set.residual_at[i]}});
  }
  j["centers"] = std::move(centers);
  j["possibly_continuum"] = set.possibly_continuum;
  j["degenerate_collinear"] = set.degenerate_collinear;
  j["starts"] = set.starts;
  j["converged"] = set.converged;
  return j;
}

Json to_json(const DetectorReport& r) {
  Json j;
  j["norm"] = r.norm_id;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["failed"] = r.failed;
  Json ds = Json::array();
  for (const auto& d : r.detectors) {
    ds.push_back({{"name", d.name},
                  {"max", d.max},
                  {"mean", d.mean},
                  {"n", d.n},
                  {"excluded", d.excluded},
                  {"worst_sample", d.worst_sample}});
  }
  j["detectors"] = std::move(ds);
  j["consistent_with_euclidean"] = consistent_with_euclidean(r);
  return j;
}

void write_csv(std::ostream& os, const DetectorReport& r) {
  os << "name,max,mean,n,excluded\n";
  char buf[64];
  for (const auto& d : r.detectors) {
    os << d.name << ',';
    std::snprintf(buf, sizeof buf, "%.17g", d.max);
    os << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", d.mean);
    os << buf << ',' << d.n << ',' << d.excluded << '\n';
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace ortho::io

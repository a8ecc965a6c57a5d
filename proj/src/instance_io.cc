// Copyright 2026 The Inspection Game Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "inspection/instance_io.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "json.hpp"

namespace inspection {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& error) {
    throw ValidationError(std::string("malformed JSON: ") + error.what());
  }
}

const Json& Member(const Json& object, const std::string& key,
                   const std::string& where) {
  const auto it = object.find(key);
  if (it == object.end()) Fail(where, "missing field \"" + key + "\"");
  return *it;
}

std::string AsString(const Json& value, const std::string& where) {
  if (!value.is_string()) Fail(where, "expected a string");
  return value.get<std::string>();
}

double AsNumber(const Json& value, const std::string& where) {
  if (!value.is_number()) Fail(where, "expected a number");
  return value.get<double>();
}

int AsInt(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) Fail(where, "expected an integer");
  const auto x = value.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() ||
      x > std::numeric_limits<int>::max()) {
    Fail(where, "integer out of range");
  }
  return static_cast<int>(x);
}

const Json& AsArray(const Json& value, const std::string& where) {
  if (!value.is_array()) Fail(where, "expected an array");
  return value;
}

const Json& AsObject(const Json& value, const std::string& where) {
  if (!value.is_object()) Fail(where, "expected an object");
  return value;
}

std::vector<std::string> NameList(const Json& value, const std::string& where) {
  std::vector<std::string> names;
  std::size_t i = 0;
  for (const Json& item : AsArray(value, where)) {
    const std::string path = where + "/" + std::to_string(i++);
    std::string name = AsString(item, path);
    if (name.empty()) Fail(path, "empty name");
    names.push_back(std::move(name));
  }
  return names;
}

std::map<std::string, int> IndexOf(const std::vector<std::string>& names) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    index.emplace(names[i], static_cast<int>(i));
  }
  return index;
}

std::vector<double> NumberList(const Json& value, const std::string& where,
                               std::size_t arity) {
  std::vector<double> out;
  std::size_t i = 0;
  for (const Json& item : AsArray(value, where)) {
    out.push_back(AsNumber(item, where + "/" + std::to_string(i++)));
  }
  if (arity != 0 && out.size() != arity) {
    Fail(where, "expected " + std::to_string(arity) + " numbers");
  }
  return out;
}

Geometry ParseGeometry(const Json& value) {
  const std::string where = "/geometry";
  AsObject(value, where);
  Geometry geometry;
  geometry.radius = AsNumber(Member(value, "radius", where), where + "/radius");
  const Json& seed = Member(value, "seed", where);
  if (!seed.is_number_unsigned()) Fail(where + "/seed", "expected an unsigned integer");
  geometry.seed = seed.get<std::uint64_t>();
  geometry.rng = AsString(Member(value, "rng", where), where + "/rng");
  std::size_t i = 0;
  for (const Json& item :
       AsArray(Member(value, "locations", where), where + "/locations")) {
    const auto xy =
        NumberList(item, where + "/locations/" + std::to_string(i++), 2);
    geometry.locations.push_back({xy[0], xy[1]});
  }
  i = 0;
  for (const Json& item :
       AsArray(Member(value, "components", where), where + "/components")) {
    const auto ab =
        NumberList(item, where + "/components/" + std::to_string(i++), 4);
    geometry.components.push_back({{ab[0], ab[1]}, {ab[2], ab[3]}});
  }
  return geometry;
}

Json GeometryJson(const Geometry& geometry) {
  Json out = Json::object();
  out["radius"] = geometry.radius;
  out["seed"] = geometry.seed;
  out["rng"] = geometry.rng;
  out["locations"] = Json::array();
  for (const Point& p : geometry.locations) {
    out["locations"].push_back({p.x, p.y});
  }
  out["components"] = Json::array();
  for (const Segment& s : geometry.components) {
    out["components"].push_back({s.a.x, s.a.y, s.b.x, s.b.y});
  }
  return out;
}

Json FiniteOrNull(double x) {
  return std::isfinite(x) ? Json(x) : Json(nullptr);
}

double NumberOrInfinity(const Json& value, const std::string& where) {
  if (value.is_null()) return std::numeric_limits<double>::infinity();
  return AsNumber(value, where);
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  const Json root = ParseJson(text);
  AsObject(root, "/");
  std::vector<std::string> locations =
      NameList(Member(root, "locations", "/"), "/locations");
  std::vector<std::string> components =
      NameList(Member(root, "components", "/"), "/components");
  const auto location_index = IndexOf(locations);
  const auto component_index = IndexOf(components);

  std::vector<std::vector<int>> monitoring(locations.size());
  const Json& monitoring_json =
      AsObject(Member(root, "monitoring", "/"), "/monitoring");
  for (const auto& [name, list] : monitoring_json.items()) {
    const std::string where = "/monitoring/" + name;
    const auto v = location_index.find(name);
    if (v == location_index.end()) Fail(where, "unknown location " + name);
    for (const std::string& component : NameList(list, where)) {
      const auto e = component_index.find(component);
      if (e == component_index.end()) {
        Fail(where, "unknown component " + component);
      }
      monitoring[v->second].push_back(e->second);
    }
  }

  std::vector<double> p(locations.size(),
                        std::numeric_limits<double>::quiet_NaN());
  const Json& p_json = AsObject(Member(root, "p", "/"), "/p");
  for (const auto& [name, value] : p_json.items()) {
    const std::string where = "/p/" + name;
    const auto v = location_index.find(name);
    if (v == location_index.end()) Fail(where, "unknown location " + name);
    p[v->second] = AsNumber(value, where);
  }
  for (std::size_t v = 0; v < locations.size(); ++v) {
    if (std::isnan(p[v])) {
      Fail("/p", "missing detection probability for location " + locations[v]);
    }
  }

  const int r_d = AsInt(Member(root, "r_D", "/"), "/r_D");
  const int r_a = AsInt(Member(root, "r_A", "/"), "/r_A");
  std::optional<Geometry> geometry;
  if (const auto it = root.find("geometry"); it != root.end()) {
    geometry = ParseGeometry(*it);
  }
  return Instance::Create(std::move(locations), std::move(components),
                          std::move(monitoring), std::move(p), r_d, r_a,
                          std::move(geometry));
}

std::string SerializeInstance(const Instance& instance) {
  const auto& locations = instance.location_names();
  const auto& components = instance.component_names();
  Json root = Json::object();
  root["locations"] = locations;
  root["components"] = components;
  Json monitoring = Json::object();
  Json p = Json::object();
  for (int v = 0; v < instance.num_locations(); ++v) {
    Json list = Json::array();
    for (int e : instance.monitoring(v)) list.push_back(components[e]);
    monitoring[locations[v]] = std::move(list);
    p[locations[v]] = instance.p(v);
  }
  root["monitoring"] = std::move(monitoring);
  root["p"] = std::move(p);
  root["r_D"] = instance.r_d();
  root["r_A"] = instance.r_a();
  if (instance.geometry()) root["geometry"] = GeometryJson(*instance.geometry());
  return root.dump(2) + "\n";
}

std::string SerializeResult(const Instance& instance,
                            const EquilibriumResult& result,
                            bool include_timing) {
  const auto& locations = instance.location_names();
  Json root = Json::object();
  root["method"] = result.method;
  root["value"] = result.value;
  Json sigma = Json::array();
  for (const DefenderAtom& atom : result.sigma_d.support) {
    Json set = Json::array();
    for (int v : atom.set.members) set.push_back(locations.at(v));
    sigma.push_back({{"set", std::move(set)}, {"prob", atom.prob}});
  }
  root["sigma_D"] = std::move(sigma);
  root["rho_A"] = result.rho_a;

  const Certificates& c = result.certificates;
  Json certificates = Json::object();
  certificates["attacker_best_response"] = c.attacker_best_response;
  if (c.defender_best_response) {
    certificates["defender_best_response"] = *c.defender_best_response;
    certificates["defender_best_response_kind"] =
        c.defender_exact ? "exact" : "bound";
  }
  certificates["alpha"] = FiniteOrNull(result.alpha);
  certificates["epsilon"] = result.epsilon;
  certificates["guaranteed"] = result.guaranteed;
  root["certificates"] = std::move(certificates);

  Json diagnostics = Json::object();
  diagnostics["iterations"] = result.iterations;
  diagnostics["columns"] = result.columns;
  if (result.regret) diagnostics["regret"] = *result.regret;
  if (result.regret_bound) {
    diagnostics["regret_bound"] = FiniteOrNull(*result.regret_bound);
  }
  if (include_timing) diagnostics["wall_ms"] = result.wall_ms;
  root["diagnostics"] = std::move(diagnostics);
  return root.dump(2) + "\n";
}

EquilibriumResult ParseResult(std::string_view text, const Instance& instance) {
  const Json root = ParseJson(text);
  AsObject(root, "/");
  const auto location_index = IndexOf(instance.location_names());
  EquilibriumResult result;

  std::size_t i = 0;
  for (const Json& atom :
       AsArray(Member(root, "sigma_D", "/"), "/sigma_D")) {
    const std::string where = "/sigma_D/" + std::to_string(i++);
    AsObject(atom, where);
    std::vector<int> members;
    for (const std::string& name :
         NameList(Member(atom, "set", where), where + "/set")) {
      const auto v = location_index.find(name);
      if (v == location_index.end()) {
        Fail(where + "/set", "unknown location " + name);
      }
      members.push_back(v->second);
    }
    result.sigma_d.support.push_back(
        {DetectorSet(std::move(members)),
         AsNumber(Member(atom, "prob", where), where + "/prob")});
  }
  if (const auto it = root.find("method"); it != root.end()) {
    result.method = AsString(*it, "/method");
  }
  if (const auto it = root.find("value"); it != root.end()) {
    result.value = AsNumber(*it, "/value");
  }
  if (const auto it = root.find("rho_A"); it != root.end()) {
    result.rho_a = NumberList(*it, "/rho_A", 0);
  }
  if (const auto it = root.find("certificates"); it != root.end()) {
    const std::string where = "/certificates";
    AsObject(*it, where);
    Certificates& c = result.certificates;
    for (const auto& [key, value] : it->items()) {
      const std::string path = where + "/" + key;
      if (key == "attacker_best_response") {
        c.attacker_best_response = AsNumber(value, path);
      } else if (key == "defender_best_response") {
        c.defender_best_response = AsNumber(value, path);
      } else if (key == "defender_best_response_kind") {
        const std::string kind = AsString(value, path);
        if (kind != "exact" && kind != "bound") {
          Fail(path, "expected \"exact\" or \"bound\"");
        }
        c.defender_exact = kind == "exact";
      } else if (key == "alpha") {
        result.alpha = NumberOrInfinity(value, path);
      } else if (key == "epsilon") {
        result.epsilon = AsNumber(value, path);
      } else if (key == "guaranteed") {
        if (!value.is_boolean()) Fail(path, "expected a boolean");
        result.guaranteed = value.get<bool>();
      }
    }
  }
  if (const auto it = root.find("diagnostics"); it != root.end()) {
    const std::string where = "/diagnostics";
    AsObject(*it, where);
    for (const auto& [key, value] : it->items()) {
      const std::string path = where + "/" + key;
      if (key == "iterations") {
        result.iterations = AsInt(value, path);
      } else if (key == "columns") {
        result.columns = AsInt(value, path);
      } else if (key == "regret") {
        result.regret = AsNumber(value, path);
      } else if (key == "regret_bound") {
        result.regret_bound = NumberOrInfinity(value, path);
      } else if (key == "wall_ms") {
        result.wall_ms = AsNumber(value, path);
      }
    }
  }
  return result;
}

std::vector<double> ParseVector(std::string_view text) {
  const Json root = ParseJson(text);
  if (root.is_object()) return NumberList(Member(root, "rho_A", "/"), "/rho_A", 0);
  return NumberList(root, "", 0);
}

std::string SerializeVector(const std::vector<double>& values) {
  return Json(values).dump() + "\n";
}

namespace {

class UnitRandom {
 public:
  explicit UnitRandom(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) from the top 53 bits of one draw.
  double Next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Between(double lo, double hi) { return lo + (hi - lo) * Next(); }
  Point NextPoint() {
    const double x = Next();
    return {x, Next()};
  }

 private:
  std::mt19937_64 engine_;
};

double DistanceToSegment(const Point& p, const Segment& s) {
  const double dx = s.b.x - s.a.x;
  const double dy = s.b.y - s.a.y;
  const double length2 = dx * dx + dy * dy;
  double t = 0.0;
  if (length2 > 0.0) {
    t = std::clamp(((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / length2, 0.0,
                   1.0);
  }
  return std::hypot(p.x - (s.a.x + t * dx), p.y - (s.a.y + t * dy));
}

// Segments start anywhere in the square and run in a random direction for a
// random length, clipped to the square.
Segment NextSegment(UnitRandom& random) {
  constexpr double kMinLength = 0.02;
  constexpr double kMaxLength = 0.1;
  const Point a = random.NextPoint();
  const double angle = random.Between(0.0, 2.0 * std::acos(-1.0));
  const double length = random.Between(kMinLength, kMaxLength);
  const Point b{std::clamp(a.x + length * std::cos(angle), 0.0, 1.0),
                std::clamp(a.y + length * std::sin(angle), 0.0, 1.0)};
  return {a, b};
}

}  // namespace

Instance GenerateGeometric(const GeneratorParams& params) {
  const int n = params.num_locations;
  const int m = params.num_components;
  if (n < 1 || m < 1) {
    throw ValidationError("generator needs at least one location and component");
  }
  if (!(params.radius > 0.0)) {
    throw ValidationError("generator radius must be positive");
  }
  if (!(params.p_low > 0.0 && params.p_low <= params.p_high &&
        params.p_high <= 1.0)) {
    throw ValidationError("generator needs 0 < p_low <= p_high <= 1");
  }
  if (!(params.r_a_fraction > 0.0)) {
    throw ValidationError("generator r_A fraction must be positive");
  }
  if (params.max_retries < 1) {
    throw ValidationError("generator needs max_retries >= 1");
  }

  UnitRandom random(params.seed);
  Geometry geometry;
  geometry.radius = params.radius;
  geometry.seed = params.seed;
  geometry.rng = std::string(kGeneratorRng);
  for (int v = 0; v < n; ++v) geometry.locations.push_back(random.NextPoint());

  auto covered = [&](const Segment& s) {
    for (const Point& p : geometry.locations) {
      if (DistanceToSegment(p, s) <= params.radius) return true;
    }
    return false;
  };
  for (int e = 0; e < m; ++e) {
    int attempts = 0;
    Segment segment = NextSegment(random);
    while (!covered(segment)) {
      if (++attempts >= params.max_retries) {
        throw GenerationError("component " + std::to_string(e + 1) +
                              " stayed unmonitored after " +
                              std::to_string(params.max_retries) + " draws");
      }
      segment = NextSegment(random);
    }
    geometry.components.push_back(segment);
  }

  auto sees_anything = [&](const Point& p) {
    for (const Segment& s : geometry.components) {
      if (DistanceToSegment(p, s) <= params.radius) return true;
    }
    return false;
  };
  // A location that sees nothing covers no component, so moving it cannot
  // leave a component unmonitored.
  for (int v = 0; v < n; ++v) {
    int attempts = 0;
    while (!sees_anything(geometry.locations[v])) {
      if (++attempts >= params.max_retries) {
        throw GenerationError("location " + std::to_string(v + 1) +
                              " monitors nothing after " +
                              std::to_string(params.max_retries) + " draws");
      }
      geometry.locations[v] = random.NextPoint();
    }
  }

  std::vector<std::string> location_names;
  std::vector<std::string> component_names;
  for (int v = 0; v < n; ++v) location_names.push_back("v" + std::to_string(v + 1));
  for (int e = 0; e < m; ++e) component_names.push_back("e" + std::to_string(e + 1));
  std::vector<std::vector<int>> monitoring(n);
  for (int v = 0; v < n; ++v) {
    for (int e = 0; e < m; ++e) {
      if (DistanceToSegment(geometry.locations[v], geometry.components[e]) <=
          params.radius) {
        monitoring[v].push_back(e);
      }
    }
  }
  std::vector<double> p(n);
  for (int v = 0; v < n; ++v) p[v] = random.Between(params.p_low, params.p_high);

  const int r_a = std::min(
      m, std::max(1, static_cast<int>(std::ceil(params.r_a_fraction * m))));
  const int r_d = params.r_d.value_or(
      std::min(n, std::max(1, static_cast<int>(std::ceil(0.1 * n)))));
  return Instance::Create(std::move(location_names), std::move(component_names),
                          std::move(monitoring), std::move(p), r_d, r_a,
                          std::move(geometry));
}

}  // namespace inspection

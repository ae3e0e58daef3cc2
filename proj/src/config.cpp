/*
 * Copyright (c) 2026, polarnav contributors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "polarnav/errors.hpp"
#include "polarnav/harness.hpp"
#include "text_util.hpp"

namespace polarnav {

namespace {

double parse_number(std::string_view key, std::string_view value, int line) {
  double out = 0.0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size() || !std::isfinite(out)) {
    std::ostringstream os;
    os << "line " << line << ": '" << key << "' expects a finite number, got '" << value << "'";
    throw ConfigError(os.str());
  }
  return out;
}

using Setter = std::function<void(ScenarioConfig&, std::string_view key, std::string_view value, int line)>;

Setter number_field(double ScenarioConfig::*field) {
  return [field](ScenarioConfig& c, std::string_view k, std::string_view v, int line) {
    c.*field = parse_number(k, v, line);
  };
}

Setter earth_field(double EarthModel::*field) {
  return [field](ScenarioConfig& c, std::string_view k, std::string_view v, int line) {
    c.earth.*field = parse_number(k, v, line);
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table{
      {"name",
       [](ScenarioConfig& c, std::string_view, std::string_view v, int line) {
         if (v.empty() || v.find_first_of(" \t/\\,") != std::string_view::npos) {
           std::ostringstream os;
           os << "line " << line << ": name must be a non-empty token without spaces, "
              << "commas or path separators";
           throw ConfigError(os.str());
         }
         c.name = std::string(v);
       }},
      {"path_kind",
       [](ScenarioConfig& c, std::string_view, std::string_view v, int line) {
         if (v == "meridian") {
           c.path_kind = PathKind::kMeridian;
         } else if (v == "parallel") {
           c.path_kind = PathKind::kParallel;
         } else {
           std::ostringstream os;
           os << "line " << line << ": path_kind must be 'meridian' or 'parallel', got '" << v
              << "'";
           throw ConfigError(os.str());
         }
       }},
      {"lon0_deg", number_field(&ScenarioConfig::lon0_deg)},
      {"lat0_deg", number_field(&ScenarioConfig::lat0_deg)},
      {"h0", number_field(&ScenarioConfig::h0)},
      {"speed", number_field(&ScenarioConfig::speed)},
      {"duration", number_field(&ScenarioConfig::duration)},
      {"imu_rate", number_field(&ScenarioConfig::imu_rate)},
      {"gnss_rate", number_field(&ScenarioConfig::gnss_rate)},
      {"equatorial_radius", earth_field(&EarthModel::equatorial_radius)},
      {"eccentricity_sq", earth_field(&EarthModel::eccentricity_sq)},
      {"rotation_rate", earth_field(&EarthModel::rotation_rate)},
      {"gravity_magnitude", earth_field(&EarthModel::gravity_magnitude)},
  };
  return table;
}

}  // namespace

const char* to_string(PathKind kind) {
  return kind == PathKind::kMeridian ? "meridian" : "parallel";
}

ScenarioConfig parse_scenario_config(const std::string& text) {
  ScenarioConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view sv(raw);
    if (const auto hash = sv.find('#'); hash != std::string_view::npos) sv = sv.substr(0, hash);
    sv = detail::trim(sv);
    if (sv.empty()) continue;

    const auto eq = sv.find('=');
    if (eq == std::string_view::npos) {
      std::ostringstream os;
      os << "line " << line << ": expected 'key = value'";
      throw ConfigError(os.str());
    }
    const std::string_view key = detail::trim(sv.substr(0, eq));
    const std::string_view value = detail::trim(sv.substr(eq + 1));

    const auto it = setters().find(key);
    if (it == setters().end()) {
      std::ostringstream os;
      os << "line " << line << ": unknown key '" << key << "'";
      throw ConfigError(os.str());
    }
    if (!seen.emplace(key).second) {
      std::ostringstream os;
      os << "line " << line << ": duplicate key '" << key << "'";
      throw ConfigError(os.str());
    }
    it->second(cfg, key, value, line);
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_config(buf.str());
}

std::string format_scenario_config(const ScenarioConfig& cfg) {
  using detail::format_double;
  std::ostringstream os;
  os << "name = " << cfg.name << '\n'
     << "path_kind = " << to_string(cfg.path_kind) << '\n'
     << "lon0_deg = " << format_double(cfg.lon0_deg) << '\n'
     << "lat0_deg = " << format_double(cfg.lat0_deg) << '\n'
     << "h0 = " << format_double(cfg.h0) << '\n'
     << "speed = " << format_double(cfg.speed) << '\n'
     << "duration = " << format_double(cfg.duration) << '\n'
     << "imu_rate = " << format_double(cfg.imu_rate) << '\n'
     << "gnss_rate = " << format_double(cfg.gnss_rate) << '\n'
     << "equatorial_radius = " << format_double(cfg.earth.equatorial_radius) << '\n'
     << "eccentricity_sq = " << format_double(cfg.earth.eccentricity_sq) << '\n'
     << "rotation_rate = " << format_double(cfg.earth.rotation_rate) << '\n'
     << "gravity_magnitude = " << format_double(cfg.earth.gravity_magnitude) << '\n';
  return os.str();
}

}  // namespace polarnav

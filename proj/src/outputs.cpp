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

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polarnav/errors.hpp"
#include "polarnav/harness.hpp"
#include "text_util.hpp"

namespace polarnav {

namespace {

using detail::format_double;
using nlohmann::ordered_json;

ordered_json config_json(const ScenarioConfig& cfg) {
  return ordered_json{
      {"name", cfg.name},
      {"path_kind", to_string(cfg.path_kind)},
      {"lon0_deg", cfg.lon0_deg},
      {"lat0_deg", cfg.lat0_deg},
      {"h0", cfg.h0},
      {"speed", cfg.speed},
      {"duration", cfg.duration},
      {"imu_rate", cfg.imu_rate},
      {"gnss_rate", cfg.gnss_rate},
      {"equatorial_radius", cfg.earth.equatorial_radius},
      {"eccentricity_sq", cfg.earth.eccentricity_sq},
      {"rotation_rate", cfg.earth.rotation_rate},
      {"gravity_magnitude", cfg.earth.gravity_magnitude},
  };
}

std::string stem(const RunReport& r) {
  return r.scenario + "_" + to_string(r.mechanization);
}

std::filesystem::path write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
  return path;
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir))
    throw IoError("cannot create output directory '" + dir.string() + "'");
}

}  // namespace

std::string format_run_csv(const RunReport& report) {
  std::ostringstream os;
  os << kRunCsvHeader << '\n';
  for (const auto& r : report.series) {
    os << format_double(r.t) << ',' << format_double(r.pos_err) << ',' << format_double(r.vel_err)
       << ',' << format_double(r.lat_deg) << ',' << format_double(r.lon_deg) << ','
       << format_double(r.height) << ',' << (r.singular ? "singular" : "ok") << '\n';
  }
  return os.str();
}

std::string format_axes_csv(const RunReport& report) {
  std::ostringstream os;
  os << kAxesCsvHeader << '\n';
  for (const auto& r : report.series) {
    os << format_double(r.t) << ',' << format_double(r.pos_err_ecef.x()) << ','
       << format_double(r.pos_err_ecef.y()) << ',' << format_double(r.pos_err_ecef.z()) << '\n';
  }
  return os.str();
}

std::string format_run_summary_json(const RunReport& report) {
  ordered_json j{
      {"scenario", report.scenario},
      {"mechanization", to_string(report.mechanization)},
      {"max_pos_err_m", report.summary.max_pos_err},
      {"final_pos_err_m", report.summary.final_pos_err},
      {"singular_at_s", nullptr},
      {"config", config_json(report.config)},
  };
  if (report.summary.singular_at) j["singular_at_s"] = *report.summary.singular_at;
  return j.dump(2) + "\n";
}

std::string format_plot_script(const std::vector<RunReport>& reports) {
  if (reports.empty()) return {};
  const std::string& scenario = reports.front().scenario;
  std::ostringstream os;
  os << "# gnuplot script: gnuplot " << scenario << ".gp\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set terminal pngcairo size 1200,500\n"
     << "set grid\n\n"
     << "set output '" << scenario << "_pos_err.png'\n"
     << "set xlabel 'time (s)'\n"
     << "set ylabel 'position error (m)'\n"
     << "plot ";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) os << ", \\\n     ";
    os << "'" << stem(reports[i]) << ".csv' using 1:2 with lines title '"
       << to_string(reports[i].mechanization) << "'";
  }
  os << "\n\nset output '" << scenario << "_track.png'\n"
     << "set xlabel 'longitude (deg)'\n"
     << "set ylabel 'latitude (deg)'\n"
     << "plot ";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) os << ", \\\n     ";
    os << "'" << stem(reports[i]) << ".csv' using 5:4 with points pt 7 ps 0.3 title '"
       << to_string(reports[i].mechanization) << "'";
  }
  os << "\n";
  return os.str();
}

std::string format_alignment_csv(const AlignmentReport& report) {
  std::ostringstream os;
  os << kAlignCsvHeader << '\n';
  for (const auto& r : report.series) {
    os << format_double(r.t) << ','
       << (r.attitude_error_deg ? format_double(*r.attitude_error_deg) : std::string()) << ','
       << format_double(r.quality) << ',' << r.n_pairs << ',' << to_string(r.status) << '\n';
  }
  return os.str();
}

std::string format_alignment_summary_json(const AlignmentReport& report) {
  const AlignmentRecord& last = report.final();
  ordered_json j{
      {"scenario", report.scenario},
      {"duration_s", report.duration},
      {"status", to_string(last.status)},
      {"attitude_error_deg", nullptr},
      {"quality", last.quality},
      {"n_pairs", last.n_pairs},
      {"config", config_json(report.config)},
  };
  if (last.attitude_error_deg) j["attitude_error_deg"] = *last.attitude_error_deg;
  return j.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_run_outputs(const std::filesystem::path& dir,
                                                     const std::vector<RunReport>& reports) {
  ensure_dir(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& r : reports) {
    const std::string s = stem(r);
    written.push_back(write_file(dir / (s + ".csv"), format_run_csv(r)));
    written.push_back(write_file(dir / (s + "_axes.csv"), format_axes_csv(r)));
    written.push_back(write_file(dir / (s + "_summary.json"), format_run_summary_json(r)));
  }
  if (!reports.empty())
    written.push_back(
        write_file(dir / (reports.front().scenario + ".gp"), format_plot_script(reports)));
  return written;
}

std::vector<std::filesystem::path> write_alignment_outputs(const std::filesystem::path& dir,
                                                           const AlignmentReport& report) {
  ensure_dir(dir);
  return {write_file(dir / (report.scenario + "_align.csv"), format_alignment_csv(report)),
          write_file(dir / (report.scenario + "_align_summary.json"),
                     format_alignment_summary_json(report))};
}

}  // namespace polarnav

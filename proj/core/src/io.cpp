#include "skembed/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "skembed/errors.hpp"
#include "skembed/simulate.hpp"

namespace skembed {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write file: " + path);
  out << content;
}

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string artifact_to_json(const DomainArtifact& artifact) {
  nlohmann::ordered_json j;
  j["n_coeffs"] = artifact.n_coeffs;
  j["a"] = artifact.a;
  auto boundary = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < artifact.theta.size(); ++i) {
    boundary.push_back({artifact.theta[i], artifact.x[i], artifact.y[i]});
  }
  j["boundary"] = boundary;
  j["p"] = artifact.p_target;
  j["diagnostics"] = {
      {"parseval_Etau", artifact.diagnostics.parseval_etau},
      {"hardy_p_norm_estimate", artifact.diagnostics.hardy_p_norm_estimate},
      {"symmetry_ok", artifact.diagnostics.symmetry_ok},
      {"delta_convex_ok", artifact.diagnostics.delta_convex_ok},
      {"simple_ok", artifact.diagnostics.simple_ok},
  };
  j["support_unbounded"] = artifact.support_unbounded;
  j["provenance"] = {
      {"measure_hash", artifact.measure_hash},
      {"measure", artifact.measure_json},
      {"n_coeffs", artifact.n_coeffs},
      {"grid", artifact.grid_size},
  };
  return j.dump(2) + "\n";
}

DomainArtifact artifact_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument,
         std::string("artifact JSON parse error: ") + e.what());
  }
  DomainArtifact artifact;
  try {
    artifact.n_coeffs = j.at("n_coeffs").get<std::size_t>();
    artifact.a = j.at("a").get<std::vector<double>>();
    for (const auto& row : j.at("boundary")) {
      artifact.theta.push_back(row.at(0).get<double>());
      artifact.x.push_back(row.at(1).get<double>());
      artifact.y.push_back(row.at(2).get<double>());
    }
    artifact.p_target = j.at("p").get<double>();
    const auto& d = j.at("diagnostics");
    artifact.diagnostics.parseval_etau = d.at("parseval_Etau").get<double>();
    artifact.diagnostics.hardy_p_norm_estimate =
        d.at("hardy_p_norm_estimate").get<double>();
    artifact.diagnostics.symmetry_ok = d.at("symmetry_ok").get<bool>();
    artifact.diagnostics.delta_convex_ok = d.at("delta_convex_ok").get<bool>();
    artifact.diagnostics.simple_ok = d.at("simple_ok").get<bool>();
    artifact.support_unbounded = j.at("support_unbounded").get<bool>();
    if (j.contains("provenance")) {
      artifact.measure_hash =
          j["provenance"].value("measure_hash", std::string());
      artifact.measure_json = j["provenance"].value("measure", std::string());
      artifact.grid_size = j["provenance"].value("grid", std::size_t{0});
    }
    if (artifact.grid_size == 0) artifact.grid_size = artifact.theta.size();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument,
         std::string("artifact JSON missing field: ") + e.what());
  }
  return artifact;
}

std::string boundary_to_csv(const DomainArtifact& artifact) {
  std::ostringstream csv;
  csv << "theta,x,y\n";
  for (std::size_t i = 0; i < artifact.theta.size(); ++i) {
    csv << format_double(artifact.theta[i]) << ','
        << format_double(artifact.x[i]) << ',' << format_double(artifact.y[i])
        << '\n';
  }
  return csv.str();
}

std::string curve_to_svg(const std::vector<std::array<double, 2>>& pts) {
  double lo_x = pts[0][0], hi_x = lo_x, lo_y = pts[0][1], hi_y = lo_y;
  for (const auto& p : pts) {
    lo_x = std::min(lo_x, p[0]);
    hi_x = std::max(hi_x, p[0]);
    lo_y = std::min(lo_y, p[1]);
    hi_y = std::max(hi_y, p[1]);
  }
  const double w = std::max(hi_x - lo_x, 1e-9);
  const double h = std::max(hi_y - lo_y, 1e-9);
  const double margin = 0.05 * std::max(w, h);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << format_double(lo_x - margin) << ' ' << format_double(-hi_y - margin)
      << ' ' << format_double(w + 2 * margin) << ' '
      << format_double(h + 2 * margin) << "\">\n";
  svg << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\""
      << format_double(0.002 * std::max(w, h)) << "\" points=\"";
  for (const auto& p : pts) {
    svg << format_double(p[0]) << ',' << format_double(-p[1]) << ' ';
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

std::string samples_to_csv(const ExitSampleSet& samples) {
  std::ostringstream csv;
  csv << "backend,stream_id,exit_x,exit_y,exit_time,n_steps\n";
  const char* name = backend_name(samples.backend);
  for (const auto& r : samples.records) {
    csv << name << ',' << r.stream_id << ',' << format_double(r.exit_x) << ','
        << format_double(r.exit_y) << ',' << format_double(r.exit_time) << ','
        << r.n_steps << '\n';
  }
  return csv.str();
}

std::string density_to_csv(const std::vector<double>& param,
                           const std::vector<double>& value) {
  std::ostringstream csv;
  csv << "param,value\n";
  for (std::size_t i = 0; i < param.size(); ++i) {
    csv << format_double(param[i]) << ',' << format_double(value[i]) << '\n';
  }
  return csv.str();
}

std::string density_to_svg(const std::vector<double>& param,
                           const std::vector<double>& value) {
  std::vector<std::array<double, 2>> pts;
  pts.reserve(param.size());
  double vmax = 0.0;
  for (double v : value) vmax = std::max(vmax, std::abs(v));
  for (std::size_t i = 0; i < param.size(); ++i) {
    pts.push_back({param[i], value[i]});
  }
  double lo_x = pts[0][0], hi_x = pts.back()[0];
  std::ostringstream svg;
  const double w = std::max(hi_x - lo_x, 1e-9);
  const double h = std::max(vmax, 1e-9);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << format_double(lo_x) << ' ' << format_double(-1.05 * h) << ' '
      << format_double(w) << ' ' << format_double(1.1 * h) << "\">\n";
  svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\""
      << format_double(0.002 * std::max(w, h)) << "\" points=\"";
  for (const auto& p : pts) {
    svg << format_double(p[0]) << ',' << format_double(-p[1]) << ' ';
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

BoundaryCurve curve_from_csv(const std::string& text) {
  BoundaryCurve curve;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (std::isalpha(static_cast<unsigned char>(line[0]))) continue;  // header
    double x = 0.0, y = 0.0;
    if (std::sscanf(line.c_str(), "%lf,%lf", &x, &y) != 2) {
      fail(ErrorCode::InvalidArgument, "curve CSV parse error: " + line);
    }
    curve.pts.push_back({x, y});
  }
  if (curve.pts.size() < 3) {
    fail(ErrorCode::InvalidArgument, "curve CSV needs >= 3 vertices");
  }
  if (curve.pts.front() == curve.pts.back()) curve.pts.pop_back();
  return curve;
}

std::string curve_to_csv(const BoundaryCurve& curve) {
  std::ostringstream csv;
  csv << "x,y\n";
  for (const auto& p : curve.pts) {
    csv << format_double(p[0]) << ',' << format_double(p[1]) << '\n';
  }
  return csv.str();
}

}  // namespace skembed

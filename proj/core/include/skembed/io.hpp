#ifndef SKEMBED_IO_HPP
#define SKEMBED_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "skembed/construction.hpp"
#include "skembed/geometry.hpp"

namespace skembed {

struct ExitSampleSet;

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// 64-bit FNV-1a, hex encoded; used for provenance hashes in manifests.
std::string fnv1a64_hex(std::string_view data);

// Round-trip exact decimal for CSV output.
std::string format_double(double v);

std::string artifact_to_json(const DomainArtifact& artifact);
DomainArtifact artifact_from_json(const std::string& text);

// CSV with header "theta,x,y".
std::string boundary_to_csv(const DomainArtifact& artifact);

// SVG polyline of a closed curve (display only).
std::string curve_to_svg(const std::vector<std::array<double, 2>>& pts);

// CSV with header "backend,stream_id,exit_x,exit_y,exit_time,n_steps".
std::string samples_to_csv(const ExitSampleSet& samples);

// CSV with header "param,value".
std::string density_to_csv(const std::vector<double>& param,
                           const std::vector<double>& value);

// SVG plot of a sampled function.
std::string density_to_svg(const std::vector<double>& param,
                           const std::vector<double>& value);

// Standalone curve CSV: one "x,y" pair per line, closed implicitly.
BoundaryCurve curve_from_csv(const std::string& text);
std::string curve_to_csv(const BoundaryCurve& curve);

}  // namespace skembed

#endif  // SKEMBED_IO_HPP

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "msr/point.hpp"
#include "msr/solver.hpp"

namespace msr {

// Instance file: one point per line, coordinates separated by commas and/or
// whitespace, '#' starts a comment line, dimension inferred from the first
// data line. Mixed widths and non-finite values are hard errors carrying the
// line number.
std::vector<Point> parse_points(std::istream& in);
std::vector<Point> load_points(const std::string& path);

// Machine-readable solve/oracle result. elapsed_ms is the only field allowed
// to differ between identical runs.
struct ResultDocument {
  std::string solver;
  int k = 0;
  int n = 0;
  int dim = 0;
  double total_cost = 0.0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  struct ClusterEntry {
    std::optional<Point> center;  // nullopt for an empty cluster
    double radius = 0.0;
    std::vector<int> member_indices;
  };
  std::vector<ClusterEntry> clusters;
};

ResultDocument make_result_document(const std::string& solver, const Clustering& clustering,
                                    int dim, std::uint64_t seed, double elapsed_ms);

nlohmann::json to_json(const ResultDocument& doc);
ResultDocument result_document_from_json(const nlohmann::json& j);
std::string to_text(const ResultDocument& doc);

// Structural checks: member indices partition 0..n-1 and total_cost matches
// the summed radii. Throws InvalidInputError on violation.
void validate_result_document(const ResultDocument& doc);

// Planar rendering: cluster disks, points, and the winning separator lines.
// viewBox fits the enclosing ball with a 5% margin, y axis flipped to screen
// convention.
std::string render_svg(std::span<const Point> points, const Clustering& clustering);

}  // namespace msr

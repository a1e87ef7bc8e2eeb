#include "msr/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "msr/meb.hpp"
#include "msr/tolerances.hpp"

namespace msr {

namespace {

bool parse_double(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);  // from_chars rejects '+'
  if (token.empty()) return false;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::vector<Point> parse_points(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  int lineno = 0;
  int dim = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;

    double coords[kMaxDim];
    int count = 0;
    std::size_t pos = start;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ',' ||
                                   line[pos] == '\r'))
        ++pos;
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != ',' &&
             line[end] != '\r')
        ++end;
      const std::string_view token(line.data() + pos, end - pos);
      if (count == kMaxDim)
        throw UnsupportedDimensionError("line " + std::to_string(lineno) +
                                        ": more than " + std::to_string(kMaxDim) + " coordinates");
      double value = 0.0;
      if (!parse_double(token, value))
        throw ParseError(lineno, "cannot parse coordinate '" + std::string(token) + "'");
      if (!std::isfinite(value))
        throw ParseError(lineno, "non-finite coordinate '" + std::string(token) + "'");
      coords[count++] = value;
      pos = end;
    }
    if (count == 0) continue;
    if (dim == -1) {
      if (count < kMinDim)
        throw UnsupportedDimensionError("line " + std::to_string(lineno) +
                                        ": unsupported dimension " + std::to_string(count));
      dim = count;
    } else if (count != dim) {
      throw ParseError(lineno, "expected " + std::to_string(dim) + " coordinates, got " +
                                   std::to_string(count));
    }
    Point p = Point::zero(dim);
    for (int c = 0; c < dim; ++c) p[c] = coords[c];
    points.push_back(p);
  }
  return points;
}

std::vector<Point> load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_points(in);
}

ResultDocument make_result_document(const std::string& solver, const Clustering& clustering,
                                    int dim, std::uint64_t seed, double elapsed_ms) {
  ResultDocument doc;
  doc.solver = solver;
  doc.k = clustering.k;
  doc.n = static_cast<int>(clustering.assignment.size());
  doc.dim = dim;
  doc.total_cost = clustering.cost;
  doc.seed = seed;
  doc.elapsed_ms = elapsed_ms;
  doc.clusters.resize(clustering.balls.size());
  for (std::size_t g = 0; g < clustering.balls.size(); ++g) {
    const Ball& b = clustering.balls[g];
    doc.clusters[g].radius = b.cost();
    if (!b.is_empty()) doc.clusters[g].center = b.center;
  }
  for (std::size_t i = 0; i < clustering.assignment.size(); ++i)
    doc.clusters[static_cast<std::size_t>(clustering.assignment[i])].member_indices.push_back(
        static_cast<int>(i));
  return doc;
}

nlohmann::json to_json(const ResultDocument& doc) {
  nlohmann::json j;
  j["solver"] = doc.solver;
  j["k"] = doc.k;
  j["n"] = doc.n;
  j["dim"] = doc.dim;
  j["total_cost"] = doc.total_cost;
  j["seed"] = doc.seed;
  j["elapsed_ms"] = doc.elapsed_ms;
  j["clusters"] = nlohmann::json::array();
  for (const auto& cluster : doc.clusters) {
    nlohmann::json c;
    if (cluster.center) {
      auto coords = nlohmann::json::array();
      for (double v : cluster.center->coords()) coords.push_back(v);
      c["center"] = coords;
    } else {
      c["center"] = nullptr;
    }
    c["radius"] = cluster.radius;
    c["member_indices"] = cluster.member_indices;
    j["clusters"].push_back(c);
  }
  return j;
}

ResultDocument result_document_from_json(const nlohmann::json& j) {
  ResultDocument doc;
  doc.solver = j.at("solver").get<std::string>();
  doc.k = j.at("k").get<int>();
  doc.n = j.at("n").get<int>();
  doc.dim = j.at("dim").get<int>();
  doc.total_cost = j.at("total_cost").get<double>();
  doc.seed = j.at("seed").get<std::uint64_t>();
  doc.elapsed_ms = j.at("elapsed_ms").get<double>();
  for (const auto& c : j.at("clusters")) {
    ResultDocument::ClusterEntry entry;
    if (!c.at("center").is_null()) {
      const auto& coords = c.at("center");
      Point p = Point::zero(static_cast<int>(coords.size()));
      for (std::size_t i = 0; i < coords.size(); ++i) p[static_cast<int>(i)] = coords[i].get<double>();
      entry.center = p;
    }
    entry.radius = c.at("radius").get<double>();
    entry.member_indices = c.at("member_indices").get<std::vector<int>>();
    doc.clusters.push_back(std::move(entry));
  }
  return doc;
}

std::string to_text(const ResultDocument& doc) {
  std::ostringstream out;
  out << "solver: " << doc.solver << "\n";
  out << "k: " << doc.k << "  n: " << doc.n << "  dim: " << doc.dim << "\n";
  out << "seed: " << doc.seed << "\n";
  out << "total_cost: " << format_double(doc.total_cost) << "\n";
  out << "elapsed_ms: " << format_double(doc.elapsed_ms) << "\n";
  for (std::size_t g = 0; g < doc.clusters.size(); ++g) {
    const auto& cluster = doc.clusters[g];
    out << "cluster " << g << ": ";
    if (cluster.center) {
      out << "center (";
      for (int c = 0; c < cluster.center->dim(); ++c) {
        if (c) out << ", ";
        out << format_double((*cluster.center)[c]);
      }
      out << ") radius " << format_double(cluster.radius);
    } else {
      out << "empty";
    }
    out << " members " << cluster.member_indices.size();
    out << " [";
    for (std::size_t i = 0; i < cluster.member_indices.size(); ++i) {
      if (i) out << " ";
      out << cluster.member_indices[i];
    }
    out << "]\n";
  }
  return out.str();
}

void validate_result_document(const ResultDocument& doc) {
  std::vector<int> seen(static_cast<std::size_t>(doc.n), 0);
  double sum = 0.0;
  for (const auto& cluster : doc.clusters) {
    sum += cluster.radius;
    for (int idx : cluster.member_indices) {
      if (idx < 0 || idx >= doc.n)
        throw InvalidInputError("result document: member index out of range");
      ++seen[static_cast<std::size_t>(idx)];
    }
  }
  for (int count : seen)
    if (count != 1) throw InvalidInputError("result document: member indices do not partition 0..n-1");
  if (std::abs(sum - doc.total_cost) > 1e-12 * std::max(1.0, std::abs(doc.total_cost)))
    throw InvalidInputError("result document: total_cost does not match summed radii");
}

std::string render_svg(std::span<const Point> points, const Clustering& clustering) {
  // Fit the view to the enclosing ball with a 5% margin; world y is negated
  // so the picture is not mirrored in screen coordinates.
  double cx = 0.0, cy = 0.0, r = 1.0;
  if (!points.empty()) {
    const Ball b = meb(points).ball;
    cx = b.center[0];
    cy = b.center[1];
    r = b.radius > 0 ? b.radius : 1.0;
  }
  const double half = r * 1.05;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << format_double(cx - half) << " " << format_double(-cy - half) << " "
      << format_double(2 * half) << " " << format_double(2 * half) << "\">\n";

  static const char* kFills[] = {"#e4572e", "#17bebb", "#76b041"};
  for (std::size_t g = 0; g < clustering.balls.size(); ++g) {
    const Ball& b = clustering.balls[g];
    if (b.is_empty()) continue;
    out << "  <circle cx=\"" << format_double(b.center[0]) << "\" cy=\""
        << format_double(-b.center[1]) << "\" r=\"" << format_double(b.radius)
        << "\" fill=\"" << kFills[g % 3] << "\" fill-opacity=\"0.25\" stroke=\""
        << kFills[g % 3] << "\" stroke-width=\"" << format_double(half / 200) << "\"/>\n";
  }

  for (const Separator& sep : clustering.separators) {
    const double ux = sep.direction.unit[0];
    const double uy = sep.direction.unit[1];
    const double px = sep.offset * ux;
    const double py = sep.offset * uy;
    const double ext = 3 * half;
    out << "  <line x1=\"" << format_double(px - ext * -uy) << "\" y1=\""
        << format_double(-(py - ext * ux)) << "\" x2=\"" << format_double(px + ext * -uy)
        << "\" y2=\"" << format_double(-(py + ext * ux)) << "\" stroke=\"#333333\""
        << " stroke-width=\"" << format_double(half / 300) << "\" stroke-dasharray=\""
        << format_double(half / 40) << "\"/>\n";
  }

  const double dot_r = half / 120;
  for (const Point& p : points)
    out << "  <circle cx=\"" << format_double(p[0]) << "\" cy=\"" << format_double(-p[1])
        << "\" r=\"" << format_double(dot_r) << "\" fill=\"#1a1a1a\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace msr

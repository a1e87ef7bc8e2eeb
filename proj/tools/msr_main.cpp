#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "msr/instances.hpp"
#include "msr/io.hpp"
#include "msr/oracle.hpp"
#include "msr/solver.hpp"
#include "msr/timing.hpp"

namespace {

struct CommonOptions {
  int k = 2;
  std::string input;
  std::uint64_t seed = msr::kDefaultSeed;
  std::string format = "json";
};

msr::Clustering run_solver(int k, const std::vector<msr::Point>& points, std::uint64_t seed) {
  switch (k) {
    case 1: return msr::solve_msr1(points, seed);
    case 2: return msr::solve_msr2(points, seed);
    default: return msr::solve_msr3(points, seed);
  }
}

void emit_document(const msr::ResultDocument& doc, const std::string& format,
                   const nlohmann::json& extra = {}) {
  // Re-parse and re-validate everything we are about to print.
  nlohmann::json j = msr::to_json(doc);
  msr::validate_result_document(msr::result_document_from_json(j));
  if (format == "text") {
    std::cout << msr::to_text(doc);
    return;
  }
  for (auto& [key, value] : extra.items()) j[key] = value;
  std::cout << j.dump(2) << "\n";
}

int run_solve(const CommonOptions& opts, const std::string& svg_path) {
  const std::vector<msr::Point> points = msr::load_points(opts.input);
  const int dim = points.empty() ? 2 : points[0].dim();
  if (opts.k == 3 && dim != 2 && !points.empty())
    throw msr::UnsupportedDimensionError("unsupported dimension " + std::to_string(dim) +
                                         " for k=3");
  if (!svg_path.empty() && dim != 2)
    throw msr::UnsupportedDimensionError("svg output requires dimension 2");

  const auto t0 = std::chrono::steady_clock::now();
  const msr::Clustering clustering = run_solver(opts.k, points, opts.seed);
  const auto t1 = std::chrono::steady_clock::now();
  const double elapsed = std::chrono::duration<double, std::milli>(t1 - t0).count();

  static const char* kNames[] = {"", "msr1-meb", "msr2-sweep", "msr3-sweep"};
  const msr::ResultDocument doc =
      msr::make_result_document(kNames[opts.k], clustering, dim, opts.seed, elapsed);
  emit_document(doc, opts.format);

  if (!svg_path.empty()) {
    std::ofstream out(svg_path);
    if (!out) throw msr::InvalidInputError("cannot write '" + svg_path + "'");
    out << msr::render_svg(points, clustering);
  }
  return 0;
}

nlohmann::json lemma_to_json(const msr::LemmaReport& report) {
  nlohmann::json j;
  j["lemma_id"] = report.lemma_id;
  j["holds"] = report.holds;
  j["optimal_cost"] = report.optimal_cost;
  j["achieved_cost"] = report.achieved_cost;
  if (report.witness) {
    auto dir = nlohmann::json::array();
    for (double v : report.witness->direction.unit.coords()) dir.push_back(v);
    j["witness"] = {{"direction", dir}, {"split_index", report.witness->split_index}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

int run_oracle(const CommonOptions& opts, bool check_lemmas, bool force) {
  const std::vector<msr::Point> points = msr::load_points(opts.input);
  const int dim = points.empty() ? 2 : points[0].dim();
  if (opts.k == 3 && dim != 2 && !points.empty())
    throw msr::UnsupportedDimensionError("unsupported dimension " + std::to_string(dim) +
                                         " for k=3");

  msr::BruteOptions brute{.force = force, .seed = opts.seed};
  const auto t0 = std::chrono::steady_clock::now();
  const msr::Clustering clustering = msr::brute_msr(points, opts.k, brute);
  const auto t1 = std::chrono::steady_clock::now();
  const double elapsed = std::chrono::duration<double, std::milli>(t1 - t0).count();

  const msr::ResultDocument doc =
      msr::make_result_document("brute-force", clustering, dim, opts.seed, elapsed);

  nlohmann::json extra;
  std::vector<msr::LemmaReport> reports;
  if (check_lemmas) {
    reports.push_back(msr::check_disjoint_optimum(points, opts.k, opts.input, brute));
    if (opts.k >= 2) reports.push_back(msr::check_separator_lemma(points, opts.k, opts.input, brute));
    auto lemmas = nlohmann::json::array();
    for (const auto& report : reports) lemmas.push_back(lemma_to_json(report));
    extra["lemmas"] = lemmas;
  }
  emit_document(doc, opts.format, extra);
  if (opts.format == "text") {
    for (const auto& report : reports)
      std::cout << "lemma " << report.lemma_id << ": " << (report.holds ? "holds" : "VIOLATED")
                << " (optimal " << report.optimal_cost << ", achieved " << report.achieved_cost
                << ")\n";
  }
  for (const auto& report : reports)
    if (!report.holds) return 1;
  return 0;
}

std::vector<int> parse_sizes(const std::string& list) {
  std::vector<int> sizes;
  std::size_t pos = 0;
  while (pos < list.size()) {
    std::size_t end = list.find(',', pos);
    if (end == std::string::npos) end = list.size();
    const std::string token = list.substr(pos, end - pos);
    if (!token.empty()) {
      std::size_t caret = token.find('^');
      long value = 0;
      if (caret != std::string::npos) {
        const long base = std::stol(token.substr(0, caret));
        const long exp = std::stol(token.substr(caret + 1));
        value = 1;
        for (long e = 0; e < exp; ++e) value *= base;
      } else {
        value = std::stol(token);
      }
      if (value <= 0) throw msr::InvalidInputError("sizes must be positive");
      sizes.push_back(static_cast<int>(value));
    }
    pos = end + 1;
  }
  if (sizes.empty()) throw msr::InvalidInputError("no sizes given");
  return sizes;
}

int run_bench(const CommonOptions& opts, const std::string& sizes_list, const std::string& dist,
              int trials, int dim) {
  const std::vector<int> sizes = parse_sizes(sizes_list);
  msr::InstanceSpec spec;
  spec.dim = dim;
  spec.dist = msr::parse_distribution(dist);
  spec.seed = opts.seed;

  std::printf("bench k=%d dist=%s dim=%d trials=%d seed=%llu\n", opts.k, dist.c_str(), dim, trials,
              static_cast<unsigned long long>(opts.seed));
  std::printf("%10s %14s %12s %12s %16s\n", "n", "median_ms", "min_ms", "max_ms", "cost");
  std::vector<double> xs, ys;
  for (int n : sizes) {
    spec.n = n;
    const msr::TimingResult t = msr::time_solver(opts.k, spec, trials);
    std::printf("%10d %14.3f %12.3f %12.3f %16.9g\n", n, t.median_ms, t.min_ms, t.max_ms, t.cost);
    std::fflush(stdout);
    xs.push_back(static_cast<double>(n));
    ys.push_back(t.median_ms);
  }
  if (xs.size() >= 2) {
    const msr::LogLogFit fit = msr::fit_loglog(xs, ys);
    std::printf("loglog_slope %.4f  r_squared %.4f\n", fit.slope, fit.r_squared);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact min-sum-radius clustering for k in {1,2,3}"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string svg_path;
  bool check_lemmas = false;
  bool force = false;
  std::string sizes = "1024,4096,16384";
  std::string dist = "uniform";
  int trials = 3;
  int dim = 2;

  CLI::App* solve = app.add_subcommand("solve", "solve an instance exactly");
  solve->add_option("--k", opts.k, "number of clusters")->check(CLI::Range(1, 3))->required();
  solve->add_option("--input", opts.input, "instance file")->required();
  solve->add_option("--seed", opts.seed, "rng seed");
  solve->add_option("--format", opts.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  solve->add_option("--svg", svg_path, "write an SVG rendering (dim 2 only)");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->add_option("--k", opts.k, "number of clusters")->check(CLI::Range(1, 3))->required();
  oracle->add_option("--input", opts.input, "instance file")->required();
  oracle->add_option("--seed", opts.seed, "rng seed");
  oracle->add_option("--format", opts.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  oracle->add_flag("--check-lemmas", check_lemmas, "also run the structural lemma checks");
  oracle->add_flag("--force", force, "override the size guard");

  CLI::App* bench = app.add_subcommand("bench", "scaling measurements");
  bench->add_option("--k", opts.k, "number of clusters")->check(CLI::Range(1, 3))->required();
  bench->add_option("--sizes", sizes, "comma-separated instance sizes (2^E accepted)");
  bench->add_option("--dist", dist, "point distribution");
  bench->add_option("--trials", trials, "timed trials per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", opts.seed, "rng seed");
  bench->add_option("--dim", dim, "ambient dimension");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(opts, svg_path);
    if (oracle->parsed()) return run_oracle(opts, check_lemmas, force);
    return run_bench(opts, sizes, dist, trials, dim);
  } catch (const msr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const msr::UnsupportedDimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const msr::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const msr::DimensionMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const msr::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

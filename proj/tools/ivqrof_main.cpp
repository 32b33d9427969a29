#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ivqrof/error.hpp"
#include "ivqrof/io.hpp"
#include "ivqrof/pipeline.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_invalid = 2;
constexpr int exit_numeric = 3;

struct Overrides {
  std::optional<double> q, p, alpha, lambda, theta;
  std::optional<std::string> mode;
  std::optional<int> similarity_decimals;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--q", o.q, "rung parameter (inferred when neither file nor flag sets it)");
  cmd->add_option("--p", o.p, "Yager parameter");
  cmd->add_option("--alpha", o.alpha, "score weight on the lower bounds (beta = 1 - alpha)");
  cmd->add_option("--lambda", o.lambda, "WSM share in the WASPAS blend");
  cmd->add_option("--theta", o.theta, "CIS mixing weight");
  cmd->add_option("--mode", o.mode, "attribute-weight distance: nis, pis or cis");
  cmd->add_option("--similarity-decimals", o.similarity_decimals, "round similarities before the expert weights");
}

void apply(const Overrides& o, ivqrof::SolveParams& p) {
  if (o.q) p.q = *o.q;
  if (o.p) p.p = *o.p;
  if (o.alpha) p.alpha = *o.alpha;
  if (o.lambda) p.lambda = *o.lambda;
  if (o.theta) p.theta = *o.theta;
  if (o.mode) p.mode = ivqrof::parse_distance_mode(*o.mode);
  if (o.similarity_decimals) p.similarity_decimals = *o.similarity_decimals;
}

double parse_double(const std::string& s, const std::string& axis) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ivqrof::parameter_error(axis + ": \"" + s + "\" is not a number");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

// "2,3,5" or "start:stop:step" (stop included when hit within rounding)
std::vector<double> parse_axis(const std::string& text, const std::string& axis) {
  if (text.empty()) return {};
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ivqrof::parameter_error(axis + ": range must be start:stop:step");
    const double start = parse_double(parts[0], axis);
    const double stop = parse_double(parts[1], axis);
    const double step = parse_double(parts[2], axis);
    if (!(step > 0.0) || stop < start) throw ivqrof::parameter_error(axis + ": need step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 10000) throw ivqrof::parameter_error(axis + ": range has more than 10000 points");
    std::vector<double> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_double(part, axis));
  return out;
}

int report(const std::exception& e, int code) {
  std::cerr << "ivqrof: " << e.what() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval-valued q-rung orthopair fuzzy group decision making"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  unsigned threads = 1;
  int verbose = 0;
  bool quiet = false;
  Overrides over;

  auto* solve_cmd = app.add_subcommand("solve", "rank the alternatives of a problem file");
  solve_cmd->add_option("input", input, "problem JSON")->required();
  solve_cmd->add_option("-o,--output", output, "write the full result JSON here");
  solve_cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  solve_cmd->add_flag("-v,--verbose", verbose, "more tables (repeat for all stages)");
  solve_cmd->add_flag("--quiet", quiet, "print nothing on success");
  add_overrides(solve_cmd, over);

  std::string ax_q, ax_p, ax_alpha, ax_lambda, ax_theta, ax_modes, series;
  auto* sweep_cmd = app.add_subcommand("sweep", "solve over a parameter grid and check ranking stability");
  sweep_cmd->add_option("input", input, "problem JSON")->required();
  sweep_cmd->add_option("-o,--output", output, "write the sweep JSON here");
  sweep_cmd->add_option("--series", series, "write one CSV row per grid point and alternative here");
  sweep_cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  sweep_cmd->add_flag("--quiet", quiet, "print nothing on success");
  sweep_cmd->add_option("--q-values", ax_q, "list a,b,c or range start:stop:step");
  sweep_cmd->add_option("--p-values", ax_p, "list or range");
  sweep_cmd->add_option("--alpha-values", ax_alpha, "list or range");
  sweep_cmd->add_option("--lambda-values", ax_lambda, "list or range");
  sweep_cmd->add_option("--theta-values", ax_theta, "list or range");
  sweep_cmd->add_option("--modes", ax_modes, "comma-separated distance modes");
  add_overrides(sweep_cmd, over);

  auto* validate_cmd = app.add_subcommand("validate", "parse and validate a problem file");
  validate_cmd->add_option("input", input, "problem JSON")->required();
  validate_cmd->add_flag("--quiet", quiet, "print nothing on success");
  add_overrides(validate_cmd, over);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    ivqrof::GroupProblem g = ivqrof::load_problem(input);
    apply(over, g.params);
    ivqrof::validate(g);

    if (validate_cmd->parsed()) {
      const auto rung = ivqrof::resolve_rung(g);
      if (!quiet) {
        std::cout << input << ": ok, " << g.k() << " experts, " << g.m() << " alternatives, " << g.n()
                  << " attributes, inferred q = " << rung.inferred << ", effective q = " << rung.q << "\n";
      }
      return exit_ok;
    }

    const ivqrof::SolveOptions opts{threads};

    if (solve_cmd->parsed()) {
      const auto res = ivqrof::solve(g, opts);
      if (!output.empty()) ivqrof::write_files_atomically({{output, ivqrof::serialize_result(g, res)}});
      if (!quiet) std::cout << ivqrof::format_solve_report(g, res, verbose);
      return exit_ok;
    }

    ivqrof::SweepAxes axes;
    axes.q = parse_axis(ax_q, "--q-values");
    axes.p = parse_axis(ax_p, "--p-values");
    axes.alpha = parse_axis(ax_alpha, "--alpha-values");
    axes.lambda = parse_axis(ax_lambda, "--lambda-values");
    axes.theta = parse_axis(ax_theta, "--theta-values");
    if (!ax_modes.empty()) {
      for (const auto& m : split(ax_modes, ',')) axes.modes.push_back(ivqrof::parse_distance_mode(m));
    }
    const auto rep = ivqrof::sweep(g, axes, opts);
    const std::string csv = ivqrof::sweep_series_csv(g, rep);
    std::vector<std::pair<std::filesystem::path, std::string>> files;
    if (!output.empty()) files.emplace_back(output, ivqrof::serialize_sweep(g, rep));
    if (!series.empty()) files.emplace_back(series, csv);
    ivqrof::write_files_atomically(files);
    if (!quiet) {
      if (series.empty()) std::cout << csv;
      std::cout << rep.points.size() << " grid points, ranking "
                << (rep.stable ? "stable" : "changes at point " + std::to_string(*rep.first_divergence)) << ": "
                << ivqrof::ranking_line(g, rep.points.front().scores, rep.points.front().ranking) << "\n";
    }
    return exit_ok;
  } catch (const ivqrof::numeric_error& e) {
    return report(e, exit_numeric);
  } catch (const ivqrof::error& e) {
    return report(e, exit_invalid);
  } catch (const std::exception& e) {
    return report(e, exit_numeric);
  }
}

#ifndef IVQROF_IO_HPP_
#define IVQROF_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ivqrof/pipeline.hpp"

namespace ivqrof {

inline constexpr const char* problem_version = "ivqrof-problem/1";
inline constexpr const char* result_version = "ivqrof-result/1";
inline constexpr const char* sweep_version = "ivqrof-sweep/1";

// JSON problem document -> validated GroupProblem. Syntax errors carry the
// line and column, semantic errors the expert/row/column coordinates.
GroupProblem parse_problem(std::string_view document);
GroupProblem load_problem(const std::filesystem::path& path);
std::string serialize_problem(const GroupProblem& problem);

std::string serialize_result(const GroupProblem& problem, const RankingResult& result);
std::string serialize_sweep(const GroupProblem& problem, const SensitivityReport& report);
// one row per (grid point, alternative)
std::string sweep_series_csv(const GroupProblem& problem, const SensitivityReport& report);

// "y2 > y1 > y3", equal scores joined with " = "
std::string ranking_line(const GroupProblem& problem, const std::vector<double>& scores,
                         const std::vector<std::size_t>& order);

// staged tables; verbosity 0 = weights and scores, 1 = case-study tables, 2 = everything
std::string format_solve_report(const GroupProblem& problem, const RankingResult& result, int verbosity);

DistanceMode parse_distance_mode(std::string_view text);

// Writes every file to a temporary sibling first and renames only when all
// writes succeeded, so a failure leaves no partial output behind.
void write_files_atomically(const std::vector<std::pair<std::filesystem::path, std::string>>& files);

std::string read_file(const std::filesystem::path& path);

}  // namespace ivqrof

#endif

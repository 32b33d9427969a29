#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fixtures.hpp"
#include "ivqrof/error.hpp"
#include "ivqrof/io.hpp"
#include "ivqrof/pipeline.hpp"

using namespace ivqrof;
using fixtures::n4;

namespace {

std::string minimal(const std::string& cells, const std::string& extra = "") {
  return R"({"version": "ivqrof-problem/1", )" + extra + R"("experts": [{"matrix": )" + cells + "}]}";
}

template <typename E>
std::string error_of(const std::string& doc) {
  try {
    parse_problem(doc);
  } catch (const E& e) {
    return e.what();
  }
  return "<no error>";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("problem files survive a serialize and parse round trip") {
  const auto g = fixtures::case_study();
  CHECK(g.k() == 5);
  CHECK(g.m() == 5);
  CHECK(g.n() == 5);
  CHECK(g.params.q == 3.0);
  CHECK(g.params.similarity_decimals == 2);
  const auto text = serialize_problem(g);
  const auto back = parse_problem(text);
  CHECK(back == g);
  CHECK(serialize_problem(back) == text);
}

TEST_CASE("defaults fill in names, polarity and parameters") {
  const auto g = parse_problem(minimal("[[[0.1, 0.2, 0.3, 0.4], [0.2, 0.3, 0.1, 0.2]]]"));
  CHECK(g.alternatives == std::vector<std::string>{"y1"});
  CHECK(g.attributes[1].name == "C2");
  CHECK(g.attributes[1].polarity == Polarity::benefit);
  CHECK(g.expert_names == std::vector<std::string>{"e1"});
  CHECK(g.params == SolveParams{});
}

TEST_CASE("the negative ideal alone is a valid problem at q = 1") {
  const auto g = parse_problem(minimal("[[[0, 0, 1, 1]]]"));
  CHECK(g.experts[0](0, 0) == negative_ideal);
  CHECK(resolve_rung(g).inferred == 1);
}

TEST_CASE("parse errors are located") {
  const std::string syntax = "{\n  \"version\": \"ivqrof-problem/1\",,\n}";
  const auto s = error_of<parse_error>(syntax);
  CHECK(contains(s, "syntax error"));
  CHECK(contains(s, "line 2"));
  CHECK(contains(error_of<parse_error>(minimal("[[[0.1, 0.2, 0.3, 0.4]]]", R"("colour": 1, )")),
                 "unknown key \"colour\""));
  CHECK(contains(error_of<parse_error>(minimal("[[[0.1, 0.2, 0.3, 0.4]]]", R"("parameters": {"r": 2}, )")),
                 "parameters: unknown key \"r\""));
  CHECK(contains(error_of<parse_error>(minimal("[[[0.1, 0.2, 0.3, 0.4]]]",
                                               R"("attributes": [{"name": "C1", "polarity": "gain"}], )")),
                 "attribute 1.polarity"));
  CHECK(contains(error_of<parse_error>(minimal("[[[0.1, 0.2, 0.3, 0.4]], [[0.1, 0.2, 0.3, 0.4], [0, 0, 1, 1]]]")),
                 "expert 1, row 2: has 2 cells, expected 1"));
  CHECK(contains(error_of<parse_error>(minimal("[[[0.1, 0.2, 0.3]]]")), "expert 1, row 1, col 1"));
  CHECK(contains(error_of<parse_error>(minimal("[[[0.1, \"x\", 0.3, 0.4]]]")), "expected a number"));
  CHECK(contains(error_of<validity_error>(minimal("[[[0.1, 0.2, 0.3, 0.4], [0.5, 0.4, 0.1, 0.2]]]")),
                 "expert 1, row 1, col 2: mu_lo"));
  CHECK(contains(error_of<parse_error>(R"({"version": "ivqrof-problem/9", "experts": []})"), "version"));
  CHECK(contains(error_of<parse_error>(R"({"version": "ivqrof-problem/1"})"), "missing \"experts\""));
  CHECK(contains(error_of<parse_error>(minimal("[[[0.1, 0.2, 0.3, 0.4]]]", R"("alternatives": ["a", "b"], )")),
                 "2 alternative names for 1"));
  CHECK(contains(error_of<parameter_error>(minimal("[[[0.1, 0.2, 0.3, 0.4]]]", R"("parameters": {"alpha": 0}, )")),
                 "alpha"));
}

TEST_CASE("a missing file names its path") {
  try {
    load_problem("/nonexistent/problem.json");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(contains(e.what(), "/nonexistent/problem.json"));
  }
}

TEST_CASE("result files carry full-precision doubles") {
  const auto g = fixtures::case_study();
  const auto res = solve(g);
  const auto text = serialize_result(g, res);
  CHECK(serialize_result(g, solve(g, {4})) == text);
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["version"] == result_version);
  CHECK(doc["q_inferred"] == 2);
  for (std::size_t i = 0; i < 5; ++i) CHECK(doc["scores"][i].get<double>() == res.scores[i]);
  for (std::size_t j = 0; j < 5; ++j) CHECK(doc["weights"][j].get<double>() == res.weights[j]);
  const auto& r0 = doc["r"][0];
  CHECK(r0[0].get<double>() == res.r[0].mu.lo);
  CHECK(r0[3].get<double>() == res.r[0].nu.hi);
  CHECK(doc["ranking"] == nlohmann::json::array({"y2", "y1", "y3", "y4", "y5"}));
  CHECK(doc["printed"]["ranking"] == "y2 > y1 > y3 > y4 > y5");
  CHECK(doc["printed"]["dm_weights_4dp"][3][0] == "0.2045");
}

TEST_CASE("sweep series has one row per point and alternative") {
  const auto g = fixtures::case_study();
  SweepAxes axes;
  axes.q = {3.0, 4.0};
  axes.modes = {DistanceMode::nis, DistanceMode::pis};
  const auto rep = sweep(g, axes);
  const auto csv = sweep_series_csv(g, rep);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "point,q,p,alpha,lambda,theta,mode,alternative,score,rank");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 20);
  CHECK(contains(csv, "\n0,3,2,0.5,0.5,0.5,nis,y1,"));
  const auto doc = nlohmann::json::parse(serialize_sweep(g, rep));
  CHECK(doc["points"].size() == 4);
  CHECK(doc["stable"] == true);
  CHECK(doc["first_divergence"].is_null());
}

TEST_CASE("ranking lines join equal scores") {
  auto g = make_problem({DecisionMatrix(make_matrix({{n4(0.1, 0.2, 0.3, 0.4)},
                                                      {n4(0.1, 0.2, 0.3, 0.4)},
                                                      {n4(0.5, 0.6, 0.1, 0.2)}}))});
  CHECK(ranking_line(g, {0.3, 0.3, 0.8}, {2, 0, 1}) == "y3 > y1 = y2");
}

TEST_CASE("distance modes parse by name") {
  CHECK(parse_distance_mode("nis") == DistanceMode::nis);
  CHECK(parse_distance_mode("pis") == DistanceMode::pis);
  CHECK(parse_distance_mode("cis") == DistanceMode::cis);
  CHECK_THROWS_AS(parse_distance_mode("NIS"), parameter_error);
}

TEST_CASE("report verbosity adds tables") {
  const auto g = fixtures::case_study();
  const auto res = solve(g);
  const auto r0 = format_solve_report(g, res, 0);
  const auto r1 = format_solve_report(g, res, 1);
  const auto r2 = format_solve_report(g, res, 2);
  CHECK(contains(r0, "Ranking: y2 > y1 > y3 > y4 > y5"));
  CHECK(r1.size() > r0.size());
  CHECK(r2.size() > r1.size());
}

TEST_CASE("atomic writes leave no partial files") {
  const auto dir = std::filesystem::temp_directory_path() / "ivqrof_io_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  write_files_atomically({{dir / "a.json", "{}\n"}, {dir / "b.csv", "x\n"}});
  CHECK(read_file(dir / "a.json") == "{}\n");
  CHECK(read_file(dir / "b.csv") == "x\n");
  CHECK_THROWS_AS(write_files_atomically({{dir / "c.json", "{}"}, {dir / "missing" / "d.json", "{}"}}), parse_error);
  CHECK_FALSE(std::filesystem::exists(dir / "c.json"));
  CHECK_FALSE(std::filesystem::exists(dir / "c.json.partial"));
  std::size_t count = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++count;
  CHECK(count == 2);
  std::filesystem::remove_all(dir);
}

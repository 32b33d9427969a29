#ifndef IVQROF_TESTS_FIXTURES_HPP_
#define IVQROF_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "ivqrof/io.hpp"
#include "ivqrof/matrix.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(IVQROF_DATA_DIR) + "/" + name; }

inline ivqrof::GroupProblem case_study() { return ivqrof::load_problem(data_path("case_study.json")); }

inline std::vector<std::vector<std::vector<ivqrof::IVqROFN>>> nested(const ivqrof::GroupProblem& g) {
  std::vector<std::vector<std::vector<ivqrof::IVqROFN>>> out;
  for (const auto& e : g.experts) {
    std::vector<std::vector<ivqrof::IVqROFN>> rows;
    for (std::size_t i = 0; i < e.rows(); ++i) rows.push_back(e.cells.row(i));
    out.push_back(rows);
  }
  return out;
}

inline ivqrof::IVqROFN n4(double a, double b, double c, double d) { return ivqrof::make_number(a, b, c, d); }

// two-expert worked example, expert A1 (rows y1..y4, attributes C1..C3)
inline ivqrof::DecisionMatrix small_a1() {
  return ivqrof::DecisionMatrix(ivqrof::make_matrix({
      {n4(.02, .14, .12, .93), n4(.54, .87, .02, .52), n4(.59, .82, .76, .79)},
      {n4(.13, .78, .11, .61), n4(.63, .78, .01, .36), n4(.08, .2, .38, .41)},
      {n4(.70, .90, .10, .20), n4(.09, .85, .65, .99), n4(.51, .87, .36, .59)},
      {n4(.01, .05, .04, .94), n4(.75, .90, .53, .76), n4(.19, .31, .01, .53)},
  }));
}

// expert A2 holds A1's rows rotated by one
inline ivqrof::DecisionMatrix small_a2() {
  const auto a1 = small_a1();
  ivqrof::Matrix<ivqrof::IVqROFN> cells(4, 3);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 3; ++j) cells(i, j) = a1((i + 1) % 4, j);
  }
  return ivqrof::DecisionMatrix(std::move(cells));
}

}  // namespace fixtures

#endif

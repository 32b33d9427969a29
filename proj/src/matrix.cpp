#include "ivqrof/matrix.hpp"

#include "ivqrof/error.hpp"

namespace ivqrof {

std::string to_string(Polarity p) { return p == Polarity::benefit ? "benefit" : "cost"; }

DecisionMatrix::DecisionMatrix(Matrix<IVqROFN> c)
    : cells(std::move(c)), polarity(cells.cols(), Polarity::benefit) {}

DecisionMatrix::DecisionMatrix(Matrix<IVqROFN> c, std::vector<Polarity> pol)
    : cells(std::move(c)), polarity(std::move(pol)) {
  if (polarity.size() != cells.cols()) {
    throw shape_error("polarity vector has " + std::to_string(polarity.size()) +
                      " entries for " + std::to_string(cells.cols()) + " attributes");
  }
}

Matrix<IVqROFN> make_matrix(const std::vector<std::vector<IVqROFN>>& rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m ? rows.front().size() : 0;
  Matrix<IVqROFN> out(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) {
      throw shape_error("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                        " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

}  // namespace ivqrof

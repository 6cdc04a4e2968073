#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ridematch/judgment.hpp"

namespace ridematch {

// Small dense row-major matrix; large enough for this domain (thousands of
// rows, ten columns).
struct Matrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double at(size_t r, size_t c) const { return data[r * cols + c]; }
  double& at(size_t r, size_t c) { return data[r * cols + c]; }
  std::span<const double> row(size_t r) const {
    return {data.data() + r * cols, cols};
  }
};

// Step 1: vector normalization, r_ij = x_ij / sqrt(sum_i x_ij^2). A column
// with zero norm maps to an all-zero column.
Matrix normalize(const Matrix& judgment);
Matrix normalize(const JudgmentMatrix& judgment);

// Step 2: v_ij = w_j * r_ij. Throws InvalidInputError on dimension mismatch.
Matrix weight_columns(const Matrix& normalized, std::span<const double> weights);

// Step 3: componentwise best and worst weighted values.
struct IdealSolutions {
  std::vector<double> positive;  // A*
  std::vector<double> negative;  // A-
};
IdealSolutions ideal_solutions(const Matrix& weighted);

// Step 4: Euclidean distances of every row from A* and A-.
struct Separations {
  std::vector<double> positive;  // S*
  std::vector<double> negative;  // S-
};
Separations separations(const Matrix& weighted, const IdealSolutions& ideals);

// Step 5: C*_i = S-_i / (S*_i + S-_i); 0.5 when both separations vanish
// (all alternatives identical on every weighted criterion).
std::vector<double> closeness(std::span<const double> sep_positive,
                              std::span<const double> sep_negative);

enum class RankMethod { topsis, wsm };

std::string_view to_string(RankMethod m);

// Scores plus the derived strict ranking, best candidate first. Ties break
// by ascending candidate identifier.
struct RankingResult {
  std::string evaluator_id;
  RankMethod method = RankMethod::topsis;
  std::map<std::string, double> scores;
  std::vector<std::string> preference_list;
};

// Intermediate values of one TOPSIS run, for trace dumps and golden tests.
struct TopsisTrace {
  Matrix normalized;
  Matrix weighted;
  std::vector<double> positive_ideal;
  std::vector<double> negative_ideal;
  std::vector<double> sep_positive;
  std::vector<double> sep_negative;
  std::vector<double> closeness;
};

// Full pipeline over a judgment matrix. Weights must cover exactly the
// matrix's criterion set.
RankingResult topsis_rank(const JudgmentMatrix& judgment,
                          const WeightVector& weights,
                          TopsisTrace* trace = nullptr);
RankingResult topsis_rank(const JudgmentMatrix& judgment,
                          std::span<const double> weights,
                          TopsisTrace* trace = nullptr);

// Weighted-sum baseline over the raw (un-normalized) judgment entries.
RankingResult wsm_rank(const JudgmentMatrix& judgment,
                       const WeightVector& weights);
RankingResult wsm_rank(const JudgmentMatrix& judgment,
                       std::span<const double> weights);

// Total weight of the criteria on which row_a strictly beats row_b.
double weight_superiority(std::span<const double> row_a,
                          std::span<const double> row_b,
                          std::span<const double> weights);
double weight_superiority(const JudgmentMatrix& judgment,
                          const std::string& candidate_a,
                          const std::string& candidate_b,
                          const WeightVector& weights);

}  // namespace ridematch

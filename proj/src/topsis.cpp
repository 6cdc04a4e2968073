#include "ridematch/topsis.hpp"

#include <algorithm>
#include <cmath>

#include "ridematch/errors.hpp"

namespace ridematch {

namespace {

Matrix as_matrix(const JudgmentMatrix& judgment) {
  Matrix m(judgment.rows(), judgment.cols());
  m.data = judgment.entries;
  return m;
}

// Weight per matrix column, keyed by criterion name so serialized matrices
// may carry their columns in any order.
std::vector<double> aligned_weights(const JudgmentMatrix& judgment,
                                    const WeightVector& weights) {
  if (judgment.criteria.size() != weights.criteria().size()) {
    throw InvalidInputError(
        "weight vector criterion set does not match the judgment matrix");
  }
  std::vector<double> w;
  w.reserve(judgment.criteria.size());
  std::vector<bool> seen(weights.criteria().size(), false);
  for (Criterion c : judgment.criteria) {
    double weight = weights.at(c);  // throws when c is not in the owner's set
    auto set = weights.criteria();
    size_t idx = static_cast<size_t>(
        std::find(set.begin(), set.end(), c) - set.begin());
    if (seen[idx]) {
      throw InvalidInputError("duplicate criterion column in judgment matrix");
    }
    seen[idx] = true;
    w.push_back(weight);
  }
  return w;
}

// Descending score, ties by ascending candidate identifier.
RankingResult rank_by_scores(const JudgmentMatrix& judgment, RankMethod method,
                             std::span<const double> scores) {
  RankingResult result;
  result.evaluator_id = judgment.evaluator_id;
  result.method = method;
  std::vector<size_t> order(judgment.rows());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return judgment.candidate_ids[a] < judgment.candidate_ids[b];
  });
  for (size_t i = 0; i < judgment.rows(); ++i) {
    result.scores[judgment.candidate_ids[i]] = scores[i];
  }
  result.preference_list.reserve(order.size());
  for (size_t i : order) {
    result.preference_list.push_back(judgment.candidate_ids[i]);
  }
  return result;
}

}  // namespace

std::string_view to_string(RankMethod m) {
  return m == RankMethod::topsis ? "topsis" : "wsm";
}

Matrix normalize(const Matrix& judgment) {
  if (judgment.rows == 0 || judgment.cols == 0) {
    throw EmptyInputError("normalize: empty matrix");
  }
  Matrix r(judgment.rows, judgment.cols);
  for (size_t j = 0; j < judgment.cols; ++j) {
    double sum_sq = 0.0;
    for (size_t i = 0; i < judgment.rows; ++i) {
      sum_sq += judgment.at(i, j) * judgment.at(i, j);
    }
    double norm = std::sqrt(sum_sq);
    for (size_t i = 0; i < judgment.rows; ++i) {
      r.at(i, j) = norm == 0.0 ? 0.0 : judgment.at(i, j) / norm;
    }
  }
  return r;
}

Matrix normalize(const JudgmentMatrix& judgment) {
  return normalize(as_matrix(judgment));
}

Matrix weight_columns(const Matrix& normalized,
                      std::span<const double> weights) {
  if (weights.size() != normalized.cols) {
    throw InvalidInputError("weight_columns: weight count " +
                            std::to_string(weights.size()) +
                            " does not match column count " +
                            std::to_string(normalized.cols));
  }
  Matrix v(normalized.rows, normalized.cols);
  for (size_t i = 0; i < normalized.rows; ++i) {
    for (size_t j = 0; j < normalized.cols; ++j) {
      v.at(i, j) = weights[j] * normalized.at(i, j);
    }
  }
  return v;
}

IdealSolutions ideal_solutions(const Matrix& weighted) {
  if (weighted.rows == 0) {
    throw EmptyInputError("ideal_solutions: empty matrix");
  }
  IdealSolutions ideals;
  ideals.positive.resize(weighted.cols);
  ideals.negative.resize(weighted.cols);
  for (size_t j = 0; j < weighted.cols; ++j) {
    double best = weighted.at(0, j);
    double worst = weighted.at(0, j);
    for (size_t i = 1; i < weighted.rows; ++i) {
      best = std::max(best, weighted.at(i, j));
      worst = std::min(worst, weighted.at(i, j));
    }
    ideals.positive[j] = best;
    ideals.negative[j] = worst;
  }
  return ideals;
}

Separations separations(const Matrix& weighted, const IdealSolutions& ideals) {
  if (ideals.positive.size() != weighted.cols ||
      ideals.negative.size() != weighted.cols) {
    throw InvalidInputError("separations: ideal vectors do not match matrix");
  }
  Separations sep;
  sep.positive.resize(weighted.rows);
  sep.negative.resize(weighted.rows);
  for (size_t i = 0; i < weighted.rows; ++i) {
    double d_pos = 0.0;
    double d_neg = 0.0;
    for (size_t j = 0; j < weighted.cols; ++j) {
      double dp = weighted.at(i, j) - ideals.positive[j];
      double dn = weighted.at(i, j) - ideals.negative[j];
      d_pos += dp * dp;
      d_neg += dn * dn;
    }
    sep.positive[i] = std::sqrt(d_pos);
    sep.negative[i] = std::sqrt(d_neg);
  }
  return sep;
}

std::vector<double> closeness(std::span<const double> sep_positive,
                              std::span<const double> sep_negative) {
  if (sep_positive.size() != sep_negative.size()) {
    throw InvalidInputError("closeness: separation vectors differ in length");
  }
  std::vector<double> c(sep_positive.size());
  for (size_t i = 0; i < c.size(); ++i) {
    double total = sep_positive[i] + sep_negative[i];
    // All alternatives identical on every weighted criterion: neither ideal
    // is closer, score the row 0.5.
    c[i] = total == 0.0 ? 0.5 : sep_negative[i] / total;
  }
  return c;
}

RankingResult topsis_rank(const JudgmentMatrix& judgment,
                          std::span<const double> weights,
                          TopsisTrace* trace) {
  if (judgment.rows() == 0) {
    throw EmptyInputError("topsis_rank: empty judgment matrix");
  }
  Matrix r = normalize(judgment);
  Matrix v = weight_columns(r, weights);
  IdealSolutions ideals = ideal_solutions(v);
  Separations sep = separations(v, ideals);
  std::vector<double> c = closeness(sep.positive, sep.negative);
  if (trace != nullptr) {
    trace->normalized = r;
    trace->weighted = v;
    trace->positive_ideal = ideals.positive;
    trace->negative_ideal = ideals.negative;
    trace->sep_positive = sep.positive;
    trace->sep_negative = sep.negative;
    trace->closeness = c;
  }
  return rank_by_scores(judgment, RankMethod::topsis, c);
}

RankingResult topsis_rank(const JudgmentMatrix& judgment,
                          const WeightVector& weights, TopsisTrace* trace) {
  return topsis_rank(judgment, aligned_weights(judgment, weights), trace);
}

RankingResult wsm_rank(const JudgmentMatrix& judgment,
                       std::span<const double> weights) {
  if (judgment.rows() == 0) {
    throw EmptyInputError("wsm_rank: empty judgment matrix");
  }
  if (weights.size() != judgment.cols()) {
    throw InvalidInputError("wsm_rank: weight count does not match columns");
  }
  std::vector<double> scores(judgment.rows(), 0.0);
  for (size_t i = 0; i < judgment.rows(); ++i) {
    for (size_t j = 0; j < judgment.cols(); ++j) {
      scores[i] += weights[j] * judgment.at(i, j);
    }
  }
  return rank_by_scores(judgment, RankMethod::wsm, scores);
}

RankingResult wsm_rank(const JudgmentMatrix& judgment,
                       const WeightVector& weights) {
  return wsm_rank(judgment, aligned_weights(judgment, weights));
}

double weight_superiority(std::span<const double> row_a,
                          std::span<const double> row_b,
                          std::span<const double> weights) {
  if (row_a.size() != row_b.size() || row_a.size() != weights.size()) {
    throw InvalidInputError(
        "weight_superiority: rows and weights must share the criterion set");
  }
  double total = 0.0;
  for (size_t j = 0; j < weights.size(); ++j) {
    if (row_a[j] > row_b[j]) {
      total += weights[j];
    }
  }
  return total;
}

double weight_superiority(const JudgmentMatrix& judgment,
                          const std::string& candidate_a,
                          const std::string& candidate_b,
                          const WeightVector& weights) {
  auto find_row = [&](const std::string& id) {
    auto it = std::find(judgment.candidate_ids.begin(),
                        judgment.candidate_ids.end(), id);
    if (it == judgment.candidate_ids.end()) {
      throw InvalidInputError("candidate " + id + " not in judgment matrix");
    }
    return static_cast<size_t>(it - judgment.candidate_ids.begin());
  };
  auto w = aligned_weights(judgment, weights);
  size_t a = find_row(candidate_a);
  size_t b = find_row(candidate_b);
  std::span<const double> entries(judgment.entries);
  return weight_superiority(entries.subspan(a * judgment.cols(), judgment.cols()),
                            entries.subspan(b * judgment.cols(), judgment.cols()),
                            w);
}

}  // namespace ridematch

#include "ridematch/assignment.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>

namespace ridematch {

namespace {

size_t index_of(const std::vector<std::string>& ids, const std::string& id,
                const char* what) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) {
    throw InvalidInputError(std::string("unknown ") + what + " " + id +
                            " in value matrix");
  }
  return static_cast<size_t>(it - ids.begin());
}

// Potential-based Hungarian algorithm (shortest augmenting rows) on a square
// cost matrix, minimizing. Returns the column assigned to each row.
std::vector<size_t> solve_square_min(const Matrix& cost) {
  const size_t n = cost.rows;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<size_t> p(n + 1, 0), way(n + 1, 0);
  for (size_t i = 1; i <= n; ++i) {
    p[0] = i;
    size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      size_t i0 = p[j0];
      size_t j1 = 0;
      double delta = kInf;
      for (size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost.at(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<size_t> row_to_col(n, 0);
  for (size_t j = 1; j <= n; ++j) {
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  }
  return row_to_col;
}

}  // namespace

double ValueMatrix::value_of(const std::string& driver,
                             const std::string& passenger) const {
  size_t col = index_of(drivers, driver, "driver");
  size_t row = index_of(passengers, passenger, "passenger");
  return values.at(row, col);
}

AssignmentResult max_weight_assignment(const ValueMatrix& values) {
  const size_t n_p = values.passengers.size();
  const size_t n_d = values.drivers.size();
  if (n_p == 0 && n_d == 0) {
    throw EmptyInputError("max_weight_assignment: both sides empty");
  }
  if (values.values.rows != n_p || values.values.cols != n_d) {
    throw InvalidInputError("value matrix dimensions do not match id lists");
  }

  AssignmentResult result;
  if (n_p == 0 || n_d == 0) {
    result.matching.unmatched_drivers = values.drivers;
    result.matching.unmatched_passengers = values.passengers;
    result.matching.normalize();
    return result;
  }

  // Square the instance with zero-value padding entries meaning "unmatched",
  // negate to minimize.
  const size_t n = std::max(n_p, n_d);
  Matrix cost(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      cost.at(i, j) = (i < n_p && j < n_d) ? -values.values.at(i, j) : 0.0;
    }
  }
  std::vector<size_t> row_to_col = solve_square_min(cost);

  std::set<std::string> matched_drivers, matched_passengers;
  for (size_t i = 0; i < n_p; ++i) {
    size_t j = row_to_col[i];
    if (j >= n_d) continue;  // padding column: passenger left unmatched
    result.objective += values.values.at(i, j);
    result.matching.pairs.emplace_back(values.drivers[j],
                                       values.passengers[i]);
    matched_drivers.insert(values.drivers[j]);
    matched_passengers.insert(values.passengers[i]);
  }
  for (const std::string& d : values.drivers) {
    if (!matched_drivers.contains(d)) {
      result.matching.unmatched_drivers.push_back(d);
    }
  }
  for (const std::string& p : values.passengers) {
    if (!matched_passengers.contains(p)) {
      result.matching.unmatched_passengers.push_back(p);
    }
  }
  result.matching.normalize();
  return result;
}

double matching_value(const ValueMatrix& values, const Matching& matching) {
  double total = 0.0;
  for (const auto& [d, p] : matching.pairs) {
    total += values.value_of(d, p);
  }
  return total;
}

namespace {

void enumerate_complete(const PreferenceProfileSet& profiles,
                        const std::vector<std::string>& smaller,
                        const std::vector<std::string>& larger,
                        bool smaller_is_drivers, size_t index,
                        std::vector<bool>& taken,
                        std::vector<std::pair<std::string, std::string>>& pairs,
                        std::vector<Matching>& stable) {
  if (index == smaller.size()) {
    Matching m = make_matching(profiles, pairs);
    if (find_blocking_pairs(profiles, m).empty()) {
      stable.push_back(std::move(m));
    }
    return;
  }
  for (size_t j = 0; j < larger.size(); ++j) {
    if (taken[j]) continue;
    taken[j] = true;
    if (smaller_is_drivers) {
      pairs.emplace_back(smaller[index], larger[j]);
    } else {
      pairs.emplace_back(larger[j], smaller[index]);
    }
    enumerate_complete(profiles, smaller, larger, smaller_is_drivers,
                       index + 1, taken, pairs, stable);
    pairs.pop_back();
    taken[j] = false;
  }
}

void enumerate_partial(const PreferenceProfileSet& profiles, size_t index,
                       std::set<std::string>& taken,
                       std::vector<std::pair<std::string, std::string>>& pairs,
                       std::vector<Matching>& stable) {
  if (index == profiles.drivers.size()) {
    Matching m = make_matching(profiles, pairs);
    if (find_blocking_pairs(profiles, m).empty()) {
      stable.push_back(std::move(m));
    }
    return;
  }
  const std::string& d = profiles.drivers[index];
  // Leave d unmatched.
  enumerate_partial(profiles, index + 1, taken, pairs, stable);
  // Or match d with any free, mutually acceptable passenger.
  const auto& d_list = profiles.driver_lists.at(d);
  for (const std::string& p : d_list) {
    if (taken.contains(p)) continue;
    const auto& p_list = profiles.passenger_lists.at(p);
    if (std::find(p_list.begin(), p_list.end(), d) == p_list.end()) continue;
    taken.insert(p);
    pairs.emplace_back(d, p);
    enumerate_partial(profiles, index + 1, taken, pairs, stable);
    pairs.pop_back();
    taken.erase(p);
  }
}

}  // namespace

std::vector<Matching> brute_force_stable(const PreferenceProfileSet& profiles) {
  profiles.validate();
  if (profiles.drivers.size() > kBruteForceLimit ||
      profiles.passengers.size() > kBruteForceLimit) {
    throw ResourceGuardError(
        "brute_force_stable refuses sides above " +
        std::to_string(kBruteForceLimit) + " (got " +
        std::to_string(profiles.drivers.size()) + "x" +
        std::to_string(profiles.passengers.size()) + ")");
  }

  std::vector<Matching> stable;
  std::vector<std::pair<std::string, std::string>> pairs;
  if (profiles.lists_complete()) {
    // Under complete lists every stable matching matches the whole smaller
    // side (an unmatched member on each side would block), so enumerating
    // full injections of the smaller side is exhaustive.
    bool smaller_is_drivers =
        profiles.drivers.size() <= profiles.passengers.size();
    const auto& smaller =
        smaller_is_drivers ? profiles.drivers : profiles.passengers;
    const auto& larger =
        smaller_is_drivers ? profiles.passengers : profiles.drivers;
    std::vector<bool> taken(larger.size(), false);
    enumerate_complete(profiles, smaller, larger, smaller_is_drivers, 0, taken,
                       pairs, stable);
  } else {
    std::set<std::string> taken;
    enumerate_partial(profiles, 0, taken, pairs, stable);
  }
  return stable;
}

double price_of_stability(const ValueMatrix& values, const Matching& stable) {
  double optimum = max_weight_assignment(values).objective;
  if (optimum == 0.0) {
    throw UndefinedMetricError(
        "price_of_stability undefined: optimal objective is zero");
  }
  double stable_value = matching_value(values, stable);
  return (optimum - stable_value) / optimum;
}

}  // namespace ridematch

#include "ridematch/matching.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>

namespace ridematch {

namespace {

using RankMap = std::unordered_map<std::string, size_t>;

// id -> 0-based position, per list owner.
std::unordered_map<std::string, RankMap> rank_tables(
    const std::map<std::string, std::vector<std::string>>& lists) {
  std::unordered_map<std::string, RankMap> ranks;
  ranks.reserve(lists.size());
  for (const auto& [owner, list] : lists) {
    RankMap& r = ranks[owner];
    r.reserve(list.size());
    for (size_t i = 0; i < list.size(); ++i) {
      r.emplace(list[i], i);
    }
  }
  return ranks;
}

void check_side_lists(const std::vector<std::string>& members,
                      const std::map<std::string, std::vector<std::string>>& lists,
                      const std::vector<std::string>& other_side,
                      const char* side_name) {
  std::set<std::string> member_set(members.begin(), members.end());
  if (member_set.size() != members.size()) {
    throw InvalidInputError(std::string(side_name) + ": duplicate identifier");
  }
  std::set<std::string> other_set(other_side.begin(), other_side.end());
  for (const std::string& id : members) {
    auto it = lists.find(id);
    if (it == lists.end()) {
      throw InvalidInputError(std::string(side_name) + " " + id +
                              " has no preference list");
    }
    std::set<std::string> seen;
    for (const std::string& target : it->second) {
      if (!other_set.contains(target)) {
        throw InvalidInputError(std::string(side_name) + " " + id +
                                " lists unknown id " + target);
      }
      if (!seen.insert(target).second) {
        throw InvalidInputError(std::string(side_name) + " " + id +
                                " lists " + target + " twice");
      }
    }
  }
  for (const auto& [owner, _] : lists) {
    if (!member_set.contains(owner)) {
      throw InvalidInputError(std::string("preference list for unknown ") +
                              side_name + " " + owner);
    }
  }
}

}  // namespace

void PreferenceProfileSet::validate() const {
  check_side_lists(drivers, driver_lists, passengers, "driver");
  check_side_lists(passengers, passenger_lists, drivers, "passenger");
}

bool PreferenceProfileSet::lists_complete() const {
  for (const std::string& d : drivers) {
    auto it = driver_lists.find(d);
    if (it == driver_lists.end() || it->second.size() != passengers.size()) {
      return false;
    }
  }
  for (const std::string& p : passengers) {
    auto it = passenger_lists.find(p);
    if (it == passenger_lists.end() || it->second.size() != drivers.size()) {
      return false;
    }
  }
  return true;
}

std::optional<std::string> Matching::partner_of_driver(
    const std::string& d) const {
  for (const auto& [driver, passenger] : pairs) {
    if (driver == d) return passenger;
  }
  return std::nullopt;
}

std::optional<std::string> Matching::partner_of_passenger(
    const std::string& p) const {
  for (const auto& [driver, passenger] : pairs) {
    if (passenger == p) return driver;
  }
  return std::nullopt;
}

void Matching::normalize() {
  std::sort(pairs.begin(), pairs.end());
  std::sort(unmatched_drivers.begin(), unmatched_drivers.end());
  std::sort(unmatched_passengers.begin(), unmatched_passengers.end());
}

Matching make_matching(const PreferenceProfileSet& profiles,
                       std::vector<std::pair<std::string, std::string>> pairs) {
  std::set<std::string> drivers(profiles.drivers.begin(),
                                profiles.drivers.end());
  std::set<std::string> passengers(profiles.passengers.begin(),
                                   profiles.passengers.end());
  std::set<std::string> used_drivers, used_passengers;
  for (const auto& [d, p] : pairs) {
    if (!drivers.contains(d)) {
      throw InvalidInputError("matching references unknown driver " + d);
    }
    if (!passengers.contains(p)) {
      throw InvalidInputError("matching references unknown passenger " + p);
    }
    if (!used_drivers.insert(d).second) {
      throw InvalidInputError("driver " + d + " matched twice");
    }
    if (!used_passengers.insert(p).second) {
      throw InvalidInputError("passenger " + p + " matched twice");
    }
  }
  Matching m;
  m.pairs = std::move(pairs);
  for (const std::string& d : profiles.drivers) {
    if (!used_drivers.contains(d)) m.unmatched_drivers.push_back(d);
  }
  for (const std::string& p : profiles.passengers) {
    if (!used_passengers.contains(p)) m.unmatched_passengers.push_back(p);
  }
  m.normalize();
  return m;
}

namespace {

// Deferred acceptance over index arrays. Proposer i walks down its list;
// each receiver holds the best proposer seen so far by its own ranking.
// The outcome is proposer-optimal regardless of processing order; proposers
// are taken in ascending identifier order so traces are deterministic.
Matching run_deferred_acceptance(const PreferenceProfileSet& profiles,
                                 ProposingSide side,
                                 std::vector<ProposalEvent>* trace) {
  profiles.validate();
  if (!profiles.lists_complete()) {
    throw InvalidInputError(
        "deferred acceptance requires complete preference lists");
  }

  const bool drivers_propose = side == ProposingSide::drivers;
  const std::vector<std::string>& proposers =
      drivers_propose ? profiles.drivers : profiles.passengers;
  const std::vector<std::string>& receivers =
      drivers_propose ? profiles.passengers : profiles.drivers;
  const auto& proposer_lists =
      drivers_propose ? profiles.driver_lists : profiles.passenger_lists;
  const auto& receiver_lists =
      drivers_propose ? profiles.passenger_lists : profiles.driver_lists;

  std::vector<std::string> proposers_sorted(proposers);
  std::sort(proposers_sorted.begin(), proposers_sorted.end());

  auto receiver_rank = rank_tables(receiver_lists);

  // held[r] = current proposer engaged to receiver r.
  std::unordered_map<std::string, std::string> held;
  std::unordered_map<std::string, size_t> next_choice;
  std::vector<std::string> free_stack(proposers_sorted.rbegin(),
                                      proposers_sorted.rend());

  auto log = [&](ProposalEvent::Kind kind, const std::string& proposer,
                 const std::string& target) {
    if (trace != nullptr) trace->push_back({kind, proposer, target});
  };

  while (!free_stack.empty()) {
    std::string proposer = free_stack.back();
    free_stack.pop_back();
    const std::vector<std::string>& list = proposer_lists.at(proposer);
    size_t& idx = next_choice[proposer];
    while (idx < list.size()) {
      const std::string target = list[idx++];
      log(ProposalEvent::Kind::propose, proposer, target);
      auto held_it = held.find(target);
      if (held_it == held.end()) {
        held.emplace(target, proposer);
        log(ProposalEvent::Kind::engage, proposer, target);
        break;
      }
      const RankMap& ranks = receiver_rank.at(target);
      if (ranks.at(proposer) < ranks.at(held_it->second)) {
        std::string displaced = held_it->second;
        held_it->second = proposer;
        log(ProposalEvent::Kind::reject, displaced, target);
        log(ProposalEvent::Kind::engage, proposer, target);
        free_stack.push_back(displaced);
        break;
      }
      log(ProposalEvent::Kind::reject, proposer, target);
    }
    // A proposer that exhausts its list stays unmatched.
  }

  Matching m;
  std::set<std::string> matched_proposers;
  for (const auto& [receiver, proposer] : held) {
    matched_proposers.insert(proposer);
    if (drivers_propose) {
      m.pairs.emplace_back(proposer, receiver);
    } else {
      m.pairs.emplace_back(receiver, proposer);
    }
  }
  for (const std::string& p : proposers) {
    if (!matched_proposers.contains(p)) {
      (drivers_propose ? m.unmatched_drivers : m.unmatched_passengers)
          .push_back(p);
    }
  }
  for (const std::string& r : receivers) {
    if (!held.contains(r)) {
      (drivers_propose ? m.unmatched_passengers : m.unmatched_drivers)
          .push_back(r);
    }
  }
  m.normalize();
  return m;
}

}  // namespace

Matching deferred_acceptance(const PreferenceProfileSet& profiles,
                             ProposingSide side,
                             std::vector<ProposalEvent>* trace) {
  return run_deferred_acceptance(profiles, side, trace);
}

Matching gale_shapley(const PreferenceProfileSet& profiles,
                      std::vector<ProposalEvent>* trace) {
  if (profiles.drivers.size() != profiles.passengers.size()) {
    throw InfeasibleError(
        "gale_shapley supports equal sets only (got " +
        std::to_string(profiles.drivers.size()) + " drivers, " +
        std::to_string(profiles.passengers.size()) + " passengers)");
  }
  return run_deferred_acceptance(profiles, ProposingSide::drivers, trace);
}

Matching sm_match(const PreferenceProfileSet& profiles,
                  std::vector<ProposalEvent>* trace) {
  if (profiles.drivers.empty() || profiles.passengers.empty()) {
    Matching m;
    m.unmatched_drivers = profiles.drivers;
    m.unmatched_passengers = profiles.passengers;
    m.normalize();
    return m;
  }
  // The smaller set proposes and gets its optimal stable matching; drivers
  // propose on equal sets so SM coincides with the equal-sets baseline.
  ProposingSide side = profiles.passengers.size() < profiles.drivers.size()
                           ? ProposingSide::passengers
                           : ProposingSide::drivers;
  return run_deferred_acceptance(profiles, side, trace);
}

Matching driver_optimal(const PreferenceProfileSet& profiles,
                        std::vector<ProposalEvent>* trace) {
  return run_deferred_acceptance(profiles, ProposingSide::drivers, trace);
}

Matching passenger_optimal(const PreferenceProfileSet& profiles,
                           std::vector<ProposalEvent>* trace) {
  return run_deferred_acceptance(profiles, ProposingSide::passengers, trace);
}

std::vector<BlockingPair> find_blocking_pairs(
    const PreferenceProfileSet& profiles, const Matching& matching) {
  profiles.validate();

  std::unordered_map<std::string, std::string> driver_partner,
      passenger_partner;
  std::set<std::string> drivers(profiles.drivers.begin(),
                                profiles.drivers.end());
  std::set<std::string> passengers(profiles.passengers.begin(),
                                   profiles.passengers.end());
  for (const auto& [d, p] : matching.pairs) {
    if (!drivers.contains(d) || !passengers.contains(p)) {
      throw InvalidInputError("matching references unknown identifiers: (" +
                              d + ", " + p + ")");
    }
    if (!driver_partner.emplace(d, p).second ||
        !passenger_partner.emplace(p, d).second) {
      throw InvalidInputError("matching pairs a member twice");
    }
  }

  auto driver_rank = rank_tables(profiles.driver_lists);
  auto passenger_rank = rank_tables(profiles.passenger_lists);

  // Strictly prefers `other` to the current partner; an unmatched member
  // prefers any listed partner, and nobody it does not list.
  auto prefers = [](const RankMap& ranks,
                    const std::unordered_map<std::string, std::string>& partner,
                    const std::string& self, const std::string& other) {
    auto other_rank = ranks.find(other);
    if (other_rank == ranks.end()) return false;  // not acceptable
    auto current = partner.find(self);
    if (current == partner.end()) return true;  // unmatched
    auto current_rank = ranks.find(current->second);
    if (current_rank == ranks.end()) {
      // Matched to someone off-list; any listed partner beats that.
      return true;
    }
    return other_rank->second < current_rank->second;
  };

  std::vector<BlockingPair> blocking;
  for (const std::string& d : profiles.drivers) {
    const RankMap& d_ranks = driver_rank.at(d);
    auto d_current = driver_partner.find(d);
    for (const std::string& p : profiles.passengers) {
      if (d_current != driver_partner.end() && d_current->second == p) {
        continue;  // matched together
      }
      // Acceptable pair: each lists the other.
      if (!d_ranks.contains(p)) continue;
      const RankMap& p_ranks = passenger_rank.at(p);
      if (!p_ranks.contains(d)) continue;
      if (prefers(d_ranks, driver_partner, d, p) &&
          prefers(p_ranks, passenger_partner, p, d)) {
        BlockingPair bp;
        bp.driver = d;
        bp.passenger = p;
        if (d_current != driver_partner.end()) {
          bp.driver_current = d_current->second;
        }
        if (auto it = passenger_partner.find(p); it != passenger_partner.end()) {
          bp.passenger_current = it->second;
        }
        blocking.push_back(std::move(bp));
      }
    }
  }
  return blocking;
}

FormulationReport verify_formulation(const PreferenceProfileSet& profiles,
                                     const Matching& matching) {
  FormulationReport report;
  std::set<std::string> drivers(profiles.drivers.begin(),
                                profiles.drivers.end());
  std::set<std::string> passengers(profiles.passengers.begin(),
                                   profiles.passengers.end());
  std::set<std::string> used_drivers, used_passengers;
  bool bounds_ok = true;
  bool ids_ok = true;
  for (const auto& [d, p] : matching.pairs) {
    if (!drivers.contains(d) || !passengers.contains(p)) ids_ok = false;
    if (!used_drivers.insert(d).second) bounds_ok = false;
    if (!used_passengers.insert(p).second) bounds_ok = false;
  }
  if (!ids_ok) {
    report.violations.push_back(
        "matching references identifiers outside the instance");
  }
  if (!bounds_ok) {
    report.violations.push_back(
        "one-partner bounds violated: a member appears in several pairs");
  }

  // Acceptability: a matched pair must list each other.
  bool acceptable_ok = true;
  for (const auto& [d, p] : matching.pairs) {
    auto d_list = profiles.driver_lists.find(d);
    auto p_list = profiles.passenger_lists.find(p);
    bool d_lists_p =
        d_list != profiles.driver_lists.end() &&
        std::find(d_list->second.begin(), d_list->second.end(), p) !=
            d_list->second.end();
    bool p_lists_d =
        p_list != profiles.passenger_lists.end() &&
        std::find(p_list->second.begin(), p_list->second.end(), d) !=
            p_list->second.end();
    if (!d_lists_p || !p_lists_d) acceptable_ok = false;
  }
  if (!acceptable_ok) {
    report.violations.push_back(
        "acceptability violated: a matched pair is not mutually listed");
  }

  if (ids_ok && bounds_ok) {
    report.blocking_pairs = find_blocking_pairs(profiles, matching);
    if (!report.blocking_pairs.empty()) {
      report.violations.push_back(
          "stability violated: " +
          std::to_string(report.blocking_pairs.size()) + " blocking pair(s)");
    }
  }

  report.ok = report.violations.empty();
  return report;
}

}  // namespace ridematch

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ridematch/errors.hpp"

namespace ridematch {

// Two-sided preference instance. A pair (d,p) is acceptable only when each
// lists the other; the deferred-acceptance algorithms additionally require
// complete lists on both sides.
struct PreferenceProfileSet {
  std::vector<std::string> drivers;
  std::vector<std::string> passengers;
  std::map<std::string, std::vector<std::string>> driver_lists;
  std::map<std::string, std::vector<std::string>> passenger_lists;

  // Structural checks: every member has a list entry, no repeats within a
  // list, every listed id belongs to the other side. Throws
  // InvalidInputError on violation.
  void validate() const;

  // True when every member ranks every member of the other side.
  bool lists_complete() const;
};

// Partial one-to-one matching with the unmatched members explicit.
// Pairs are kept sorted by driver id so serialized output is deterministic.
struct Matching {
  std::vector<std::pair<std::string, std::string>> pairs;  // (driver, passenger)
  std::vector<std::string> unmatched_drivers;
  std::vector<std::string> unmatched_passengers;

  std::optional<std::string> partner_of_driver(const std::string& d) const;
  std::optional<std::string> partner_of_passenger(const std::string& p) const;

  // Canonical form: pairs and unmatched sets sorted.
  void normalize();
  bool operator==(const Matching& other) const = default;
};

// Builds a Matching from driver->passenger pairs over the given instance,
// deriving the unmatched sets. Throws InvalidInputError for unknown ids or
// a member appearing twice.
Matching make_matching(const PreferenceProfileSet& profiles,
                       std::vector<std::pair<std::string, std::string>> pairs);

struct BlockingPair {
  std::string driver;
  std::string passenger;
  std::optional<std::string> driver_current;     // empty = unmatched
  std::optional<std::string> passenger_current;  // empty = unmatched

  bool operator==(const BlockingPair& other) const = default;
};

enum class ProposingSide { drivers, passengers };

// Proposal/rejection event log of one deferred-acceptance run.
struct ProposalEvent {
  enum class Kind { propose, engage, reject };
  Kind kind;
  std::string proposer;
  std::string target;
};

// Deferred acceptance with the chosen side proposing. Requires complete
// lists; proposers are processed in ascending identifier order and each
// proposes down its list, so the event log is deterministic. Returns the
// proposer-optimal stable matching; members of the larger side that exhaust
// their lists stay unmatched.
Matching deferred_acceptance(const PreferenceProfileSet& profiles,
                             ProposingSide side,
                             std::vector<ProposalEvent>* trace = nullptr);

// Equal-sets baseline, drivers proposing. Throws InfeasibleError when
// |D| != |P| (the compared prior work only supports equal sets).
Matching gale_shapley(const PreferenceProfileSet& profiles,
                      std::vector<ProposalEvent>* trace = nullptr);

// Minimum-choice stable solution: the smaller set proposes and receives its
// optimal stable matching; exactly ||D|-|P|| members of the larger side end
// unmatched. Drivers propose on equal sets, making this coincide with the
// gale_shapley baseline there.
Matching sm_match(const PreferenceProfileSet& profiles,
                  std::vector<ProposalEvent>* trace = nullptr);

// Deferred acceptance with the named side proposing regardless of set sizes.
Matching driver_optimal(const PreferenceProfileSet& profiles,
                        std::vector<ProposalEvent>* trace = nullptr);
Matching passenger_optimal(const PreferenceProfileSet& profiles,
                           std::vector<ProposalEvent>* trace = nullptr);

// Every acceptable pair (d,p) not matched together where d strictly prefers
// p to its current partner (or is unmatched) and vice versa. Supports
// incomplete lists; an agent never blocks with someone it does not list.
// Empty result iff the matching is stable.
std::vector<BlockingPair> find_blocking_pairs(
    const PreferenceProfileSet& profiles, const Matching& matching);

// Constraint-by-constraint verification of a matching against the instance:
// one-partner bounds per side, acceptability, and stability (no blocking
// pair). The report lists each violated constraint family.
struct FormulationReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::vector<BlockingPair> blocking_pairs;
};
FormulationReport verify_formulation(const PreferenceProfileSet& profiles,
                                     const Matching& matching);

}  // namespace ridematch

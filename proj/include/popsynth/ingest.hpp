#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "popsynth/marginals.hpp"

namespace popsynth {

// Total persons the household marginal implies. Sizes 1-7 contribute
// size x count; 8+ households contribute 8 each, plus `eight_plus_surplus`
// extra persons dealt round-robin across all 8+ households.
std::int64_t implied_person_total(const HouseholdMarginal& h, int eight_plus_surplus = 0);

// Member requirement per household-category cell under the same convention.
std::array<std::int64_t, HouseholdCategory::kCellCount>
member_requirement_by_cell(const HouseholdMarginal& h, int eight_plus_surplus = 0);

struct CleanReport {
  std::string sa2;
  std::int64_t person_total_before = 0;
  std::int64_t person_total_after = 0;
  std::int64_t implied_total = 0;
  std::array<std::int64_t, PersonCategory::kCellCount> cell_deltas{}; // after - before
  std::vector<std::string> applied_rules;

  bool unchanged() const { return applied_rules.empty(); }
};

struct CleanResult {
  PersonMarginal persons;
  AgePyramid ages;
  CleanReport report;
};

// Stage-1 reconciliation. The household marginal is the reference and is
// never modified; person counts and the age pyramid are adjusted so that
//   (1) the person total equals implied_person_total(h),
//   (2) married males equal married females, both enough for the couples
//       the household data requires,
//   (3) lone persons match lone-person households exactly,
//   (4) group members match the group-household member requirement exactly,
//   (5) lone parents cover the one-parent primary families,
//   (6) children cover the couple-with-children plus one-parent primaries,
//   (7) relatives cover two per other-family primary.
// Deficits are repaired by proportional increase inside the affected
// relationship stratum; the overall total is balanced last by proportional
// scaling with largest-remainder rounding. The pyramid is rescaled per bin.
CleanResult clean(const PersonMarginal& p, const HouseholdMarginal& h,
                  const AgePyramid& a, int eight_plus_surplus = 0);

// Post-condition predicate suite for `clean`; returns human-readable
// violations (empty = all constraints hold).
std::vector<std::string> check_clean_postconditions(const PersonMarginal& p,
                                                    const HouseholdMarginal& h,
                                                    const AgePyramid& a,
                                                    int eight_plus_surplus = 0);

} // namespace popsynth

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "popsynth/schema.hpp"

namespace popsynth {

// Joint person-level marginal for one SA2, dense over the 128 category cells.
struct PersonMarginal {
  std::string sa2;
  std::array<std::int64_t, PersonCategory::kCellCount> counts{};

  std::int64_t total() const;
  std::int64_t& at(const PersonCategory& c) { return counts[c.index()]; }
  std::int64_t at(const PersonCategory& c) const { return counts[c.index()]; }
};

// Household-level marginal for one SA2, dense over the 112 cells.
struct HouseholdMarginal {
  std::string sa2;
  std::array<std::int64_t, HouseholdCategory::kCellCount> counts{};

  std::int64_t total() const;
  std::int64_t& at(const HouseholdCategory& c) { return counts[c.index()]; }
  std::int64_t at(const HouseholdCategory& c) const { return counts[c.index()]; }

  std::int64_t households_with_primary(FamilyType t) const;
  std::int64_t family_household_total() const;
  std::int64_t lone_person_households() const;
  std::int64_t group_households() const;
};

// Single-year age counts, 0..100 (100 = 100+).
struct AgePyramid {
  std::string sa2;
  static constexpr int kAges = 101;
  std::array<std::int64_t, kAges> counts{};

  std::int64_t total() const;
  std::int64_t bin_total(AgeBin bin) const;
};

// Household counts by (SA1, composition) within one SA2.
struct Sa1Marginal {
  std::string sa2;
  std::vector<std::string> sa1_codes; // sorted, unique
  // counts[sa1_index][composition_index]
  std::vector<std::array<std::int64_t, HouseholdComposition::kCount>> counts;

  std::int64_t composition_total(int comp_index) const;
};

// Per-SA2 collections keyed by area code (sorted for deterministic iteration).
using PersonMarginalSet = std::map<std::string, PersonMarginal>;
using HouseholdMarginalSet = std::map<std::string, HouseholdMarginal>;
using AgePyramidSet = std::map<std::string, AgePyramid>;
using Sa1MarginalSet = std::map<std::string, Sa1Marginal>;

// CSV ingestion. Formats (UTF-8, LF):
//   persons:    sa2,sex,age_bin,rel_status,count
//   households: sa2,size,composition,count
//   ages:       sa2,age,count
//   sa1:        sa2,sa1,composition,count
// Invalid categories with zero count are dropped; with nonzero count they are
// a ValidationError. Negative counts are a ValidationError.
PersonMarginalSet parse_person_marginals(const std::string& path);
HouseholdMarginalSet parse_household_marginals(const std::string& path);
AgePyramidSet parse_age_pyramids(const std::string& path);
Sa1MarginalSet parse_sa1_marginals(const std::string& path);

void write_person_marginals(const PersonMarginalSet& set, const std::string& path);
void write_household_marginals(const HouseholdMarginalSet& set, const std::string& path);
void write_age_pyramids(const AgePyramidSet& set, const std::string& path);
void write_sa1_marginals(const Sa1MarginalSet& set, const std::string& path);

} // namespace popsynth

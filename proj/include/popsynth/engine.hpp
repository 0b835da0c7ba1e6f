#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "popsynth/marginals.hpp"
#include "popsynth/rng.hpp"
#include "popsynth/schema.hpp"

namespace popsynth {

// Tunable population heuristics. Defaults follow the method's published
// choices; everything is configurable from the CLI.
struct Heuristics {
  int parent_child_gap_min = 15;
  int parent_child_gap_max = 45;
  // Allowed partner age-bin offsets, female bin minus male bin.
  std::vector<int> couple_partner_bin_offsets = {0, -1};
  // Probability that a non-primary couple eligible for a child receives one.
  double nonprimary_couple_child_prob = 0.5;
  std::uint64_t rng_seed = 0;
  // Extra persons dealt round-robin to 8+ households (0 = each counts as 8).
  int eight_plus_surplus = 0;
  // Stochastic draw retry bound before the deterministic fallback kicks in.
  int retry_limit = 100;
};

// Probability that a non-primary family's main relationship is marital,
// parental, or other; derived from the primary-family mix.
struct Rho {
  double marital = 0.0;
  double parental = 0.0;
  double other = 0.0;
};

Rho compute_rho(const HouseholdMarginal& h);

// Counters surfaced in run_report.csv. `fallbacks` aggregates every place a
// bounded retry gave up and a deterministic repair was applied.
struct SynthReport {
  std::string sa2;
  std::int64_t persons = 0;
  std::int64_t families = 0;
  std::int64_t households = 0;
  std::int64_t extras_created = 0;
  std::int64_t unmatched_lone_parents = 0;
  std::int64_t rho_fallbacks = 0;
  std::int64_t gap_fallbacks = 0;
  std::int64_t replacement_age_draws = 0;
  std::int64_t reattributed_leftovers = 0;
  double elapsed_ms = 0.0;

  std::int64_t fallbacks() const {
    return unmatched_lone_parents + rho_fallbacks + gap_fallbacks +
           reattributed_leftovers;
  }
};

// Persons pending assignment, bucketed by age bin so that both age-descending
// walks and uniform feasible draws stay cheap.
class PersonPool {
public:
  void push(std::int32_t id, AgeBin bin) { buckets_[bin.index].push_back(id); ++size_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // Oldest-bin-first, insertion order within a bin.
  std::int32_t pop_front_desc();
  // Oldest feasible bin first; feasible[b] gates bin b. Returns kNoId if none.
  std::int32_t pop_front_desc_feasible(const std::array<bool, 8>& feasible);
  // Uniform over all pooled persons in feasible bins. Returns kNoId if none.
  std::int32_t pop_random_feasible(const std::array<bool, 8>& feasible, Rng& rng);
  std::int32_t pop_random(Rng& rng);
  std::int64_t count_feasible(const std::array<bool, 8>& feasible) const;

  std::deque<std::int32_t>& bucket(int bin) { return buckets_[bin]; }
  const std::deque<std::int32_t>& bucket(int bin) const { return buckets_[bin]; }
  void drain_to(std::vector<std::int32_t>& out);

private:
  std::array<std::deque<std::int32_t>, AgeBin::kCount> buckets_{};
  std::size_t size_ = 0;
};

// Mid-synthesis mutable state for one SA2.
struct PoolSet {
  std::string sa2;
  std::vector<PersonRecord> persons;
  std::vector<FamilyRecord> families;     // entries with household == kNoId and
                                          // no members are disassembled husks
  std::vector<HouseholdRecord> households;

  PersonPool married_males;
  PersonPool married_females;
  PersonPool lone_parents;
  PersonPool children; // U15Child + Student + O15Child
  PersonPool relatives;
  PersonPool group_members;
  PersonPool lone_persons;

  // Attribute-free extras (from the person-count shortfall).
  std::deque<std::int32_t> extras_blank;
  // Extras that kept sex/age after their relationship status was nullified.
  PersonPool extras_by_bin[kSexCount];
  std::size_t extras_size() const;

  std::vector<std::int32_t> basic_couples;
  std::vector<std::int32_t> basic_one_parent;
  std::vector<std::int32_t> basic_couple_with_child;
  std::vector<std::int32_t> basic_other;

  std::vector<std::int32_t> incomplete_households;
  std::vector<std::int32_t> completed_households;
};

// True when the bin-midpoint age gap lies inside [gap_min, gap_max].
bool parent_child_bins_ok(AgeBin parent, AgeBin child, const Heuristics& heur);

// Bins a child may occupy given one or two parent bins.
std::array<bool, 8> feasible_child_bins(AgeBin parent, const Heuristics& heur);
std::array<bool, 8> feasible_child_bins(AgeBin father, AgeBin mother,
                                        const Heuristics& heur);

// Stage 1 (S2-S3): instantiate persons per the marginal and route to pools;
// the household-implied shortfall becomes attribute-free extras.
void create_persons(const PersonMarginal& p, const HouseholdMarginal& h,
                    const Heuristics& heur, PoolSet& pools, SynthReport& report);

// Stage 2 (S4-S7).
void form_one_parent_units(PoolSet& pools, const Heuristics& heur, SynthReport& report);
void form_couples(PoolSet& pools, const Heuristics& heur);
void form_couple_with_child_units(PoolSet& pools, const HouseholdMarginal& h,
                                  const Heuristics& heur, Rng& rng);
void form_other_family_units(PoolSet& pools, const HouseholdMarginal& h, Rng& rng);

// Stage 3 (S8-S11).
void create_households(const HouseholdMarginal& h, const Heuristics& heur, PoolSet& pools);
void fill_lone_and_group(PoolSet& pools);
void assign_primary_families(PoolSet& pools);

// Stage 4 selection criteria (a)-(d) for adding a non-primary family of type
// `ft` to an incomplete household.
bool nonprimary_eligibility(const HouseholdRecord& hh, FamilyType ft,
                            const HouseholdComposition& comp);

// Stage 4 (S12-S20).
void assign_leftover_one_parent_units(PoolSet& pools, Rng& rng);
void assign_leftover_couples(PoolSet& pools, const Heuristics& heur, Rng& rng);
void fill_remaining_nonprimary(PoolSet& pools, const Rho& rho, const PersonMarginal& p,
                               const Heuristics& heur, Rng& rng, SynthReport& report);

// Stage 5 (S21-S25).
void complete_with_children(PoolSet& pools, const Heuristics& heur, Rng& rng);
void convert_leftovers_to_extras(PoolSet& pools);
void fill_with_extras(PoolSet& pools, const PersonMarginal& p, const Heuristics& heur,
                      Rng& rng, SynthReport& report);
void fill_with_relatives(PoolSet& pools);

// Final step: draw each person's age in years from the pyramid, restricted to
// the person's bin, honouring parent-child gaps where possible.
void assign_ages(PoolSet& pools, const AgePyramid& pyramid, const Heuristics& heur,
                 Rng& rng, SynthReport& report);

struct SynthesisResult {
  Population population;
  SynthReport report;
};

// Runs all stages for one SA2 on cleaned inputs. Deterministic for a fixed
// Heuristics::rng_seed. Throws FeasibilityError with stage context.
SynthesisResult synthesize_sa2(const PersonMarginal& p, const HouseholdMarginal& h,
                               const AgePyramid& pyramid, const Heuristics& heur);

} // namespace popsynth

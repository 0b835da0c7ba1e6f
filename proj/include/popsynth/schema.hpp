#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace popsynth {

// ---------------------------------------------------------------------------
// Person-level category space: 2 sexes x 8 age bins x 8 relationship statuses.
// ---------------------------------------------------------------------------

enum class Sex : std::uint8_t { Male = 0, Female = 1 };

inline constexpr int kSexCount = 2;

enum class RelStatus : std::uint8_t {
  Married = 0,
  LoneParent,
  U15Child,
  Student,
  O15Child,
  Relative,
  GroupHousehold,
  LonePerson,
};

inline constexpr int kRelCount = 8;

namespace detail {
inline constexpr std::array<int, 8> kAgeBinLo = {0, 15, 25, 40, 55, 70, 85, 100};
inline constexpr std::array<int, 8> kAgeBinHi = {14, 24, 39, 54, 69, 84, 99, 100};
} // namespace detail

// One of the eight age brackets; 100+ is collapsed to the single year 100.
struct AgeBin {
  std::uint8_t index = 0;

  static constexpr int kCount = 8;

  constexpr int lo() const { return detail::kAgeBinLo[index]; }
  constexpr int hi() const { return detail::kAgeBinHi[index]; }
  constexpr double mid() const { return 0.5 * (lo() + hi()); }
  constexpr bool contains(int age_years) const {
    return age_years >= lo() && age_years <= hi();
  }

  friend constexpr bool operator==(AgeBin a, AgeBin b) { return a.index == b.index; }
  friend constexpr bool operator!=(AgeBin a, AgeBin b) { return a.index != b.index; }
  friend constexpr bool operator<(AgeBin a, AgeBin b) { return a.index < b.index; }
};

// Bin containing the given age in years (0..100; 100 means 100+).
AgeBin age_bin_of(int age_years);

struct PersonCategory {
  Sex sex = Sex::Male;
  AgeBin age{};
  RelStatus rel = RelStatus::Married;

  static constexpr int kCellCount = kSexCount * AgeBin::kCount * kRelCount; // 128

  constexpr int index() const {
    return (static_cast<int>(sex) * AgeBin::kCount + age.index) * kRelCount +
           static_cast<int>(rel);
  }
  static constexpr PersonCategory from_index(int i) {
    return PersonCategory{static_cast<Sex>(i / (AgeBin::kCount * kRelCount)),
                          AgeBin{static_cast<std::uint8_t>((i / kRelCount) % AgeBin::kCount)},
                          static_cast<RelStatus>(i % kRelCount)};
  }

  friend constexpr bool operator==(const PersonCategory& a, const PersonCategory& b) {
    return a.index() == b.index();
  }
};

// Of the 128 cells exactly 90 are valid:
//  - under-15s can only be U15Child or Relative,
//  - U15Child is confined to the 0-14 bin,
//  - Student is confined to the 15-24 bin.
bool is_valid_person_category(const PersonCategory& c);

inline constexpr int kValidPersonCategoryCount = 90;

// ---------------------------------------------------------------------------
// Household-level category space: 8 sizes x 14 compositions.
// ---------------------------------------------------------------------------

enum class FamilyType : std::uint8_t {
  CoupleOnly = 0,
  CoupleWithChildren,
  OneParent,
  OtherFamily,
};

inline constexpr int kFamilyTypeCount = 4;

enum class HouseholdKind : std::uint8_t { LonePersonHH = 0, GroupHH, FamilyHH };

struct HouseholdComposition {
  HouseholdKind kind = HouseholdKind::LonePersonHH;
  std::uint8_t family_count = 0;                 // 1..3, FamilyHH only
  FamilyType primary_family = FamilyType::CoupleOnly; // FamilyHH only

  static constexpr int kCount = 14; // lone + group + 3 counts x 4 types

  constexpr int index() const {
    switch (kind) {
    case HouseholdKind::LonePersonHH: return 0;
    case HouseholdKind::GroupHH: return 1;
    case HouseholdKind::FamilyHH:
      return 2 + (family_count - 1) * kFamilyTypeCount +
             static_cast<int>(primary_family);
    }
    return 0;
  }
  static constexpr HouseholdComposition from_index(int i) {
    if (i == 0) return {HouseholdKind::LonePersonHH, 0, FamilyType::CoupleOnly};
    if (i == 1) return {HouseholdKind::GroupHH, 0, FamilyType::CoupleOnly};
    const int f = i - 2;
    return {HouseholdKind::FamilyHH, static_cast<std::uint8_t>(f / kFamilyTypeCount + 1),
            static_cast<FamilyType>(f % kFamilyTypeCount)};
  }

  friend constexpr bool operator==(const HouseholdComposition& a,
                                   const HouseholdComposition& b) {
    return a.index() == b.index();
  }
};

struct HouseholdCategory {
  std::uint8_t size = 1;          // 1..8; 8 denotes the open class 8+
  HouseholdComposition composition{};

  static constexpr int kCellCount = 8 * HouseholdComposition::kCount; // 112
  static constexpr int kOpenSizeClass = 8;

  constexpr int index() const {
    return (size - 1) * HouseholdComposition::kCount + composition.index();
  }
  static constexpr HouseholdCategory from_index(int i) {
    return {static_cast<std::uint8_t>(i / HouseholdComposition::kCount + 1),
            HouseholdComposition::from_index(i % HouseholdComposition::kCount)};
  }

  friend constexpr bool operator==(const HouseholdCategory& a, const HouseholdCategory& b) {
    return a.index() == b.index();
  }
};

// Fewest persons a household of this composition can hold.
int min_household_size(const HouseholdComposition& comp);

// Valid iff size fits the composition's minimum (lone-person households are
// exactly size 1). Exactly 65 of the 112 cells are valid.
bool is_valid_household_category(const HouseholdCategory& c);

inline constexpr int kValidHouseholdCategoryCount = 65;

// ---------------------------------------------------------------------------
// Output entity model. Records reference each other by per-SA2 integer ids
// (the row index); ids are rendered as "SA2:P#" / "SA2:F#" / "SA2:H#" on write.
// ---------------------------------------------------------------------------

inline constexpr std::int32_t kNoId = -1;

struct PersonRecord {
  std::int32_t id = kNoId;
  std::int16_t age_years = -1; // 0..100 once assigned; 100 denotes 100+
  AgeBin age_bin{};
  Sex sex = Sex::Male;
  std::optional<RelStatus> rel{}; // empty only for attribute-free extras
  std::int32_t family = kNoId;
  std::int32_t household = kNoId;
  std::int32_t partner = kNoId;
  std::int32_t father = kNoId;
  std::int32_t mother = kNoId;
  std::vector<std::int32_t> children;
  std::vector<std::int32_t> relatives;
};

struct FamilyRecord {
  std::int32_t id = kNoId;
  FamilyType type = FamilyType::CoupleOnly;
  std::int32_t household = kNoId;
  std::vector<std::int32_t> members;
};

struct HouseholdRecord {
  std::int32_t id = kNoId;
  HouseholdCategory category{};
  std::int32_t target_size = 0; // resolved member requirement (8+ may exceed 8)
  std::vector<std::int32_t> families; // primary first
  std::vector<std::int32_t> members;
  std::string sa1;        // set by the spatial stage
  std::string address_id; // set by the spatial stage
};

struct Population {
  std::string sa2;
  std::vector<PersonRecord> persons;
  std::vector<FamilyRecord> families;
  std::vector<HouseholdRecord> households;
};

// ---------------------------------------------------------------------------
// Label vocabularies used by every file format.
// ---------------------------------------------------------------------------

std::string_view to_label(Sex s);
std::string_view to_label(RelStatus r);
std::string_view to_label(AgeBin b);
std::string_view to_label(FamilyType t);
std::string to_label(const HouseholdComposition& comp);
std::string size_label(int size); // "1".."7", "8+"

std::optional<Sex> sex_from_label(std::string_view s);
std::optional<RelStatus> rel_from_label(std::string_view s);
std::optional<AgeBin> age_bin_from_label(std::string_view s);
std::optional<FamilyType> family_type_from_label(std::string_view s);
std::optional<HouseholdComposition> composition_from_label(std::string_view s);
std::optional<int> size_from_label(std::string_view s);

bool is_child_status(RelStatus r);

} // namespace popsynth

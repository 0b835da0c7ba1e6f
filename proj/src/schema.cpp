#include "popsynth/schema.hpp"

namespace popsynth {

namespace {

constexpr std::array<std::string_view, 8> kAgeLabels = {
    "0-14", "15-24", "25-39", "40-54", "55-69", "70-84", "85-99", "100+"};

constexpr std::array<std::string_view, kRelCount> kRelLabels = {
    "Married",  "LoneParent",     "U15Child",  "Student",
    "O15Child", "Relative",       "GroupHousehold", "LonePerson"};

constexpr std::array<std::string_view, kFamilyTypeCount> kFamilyLabels = {
    "CoupleOnly", "CoupleWithChildren", "OneParent", "OtherFamily"};

} // namespace

AgeBin age_bin_of(int age_years) {
  for (std::uint8_t i = 0; i < AgeBin::kCount; ++i) {
    if (AgeBin{i}.contains(age_years)) return AgeBin{i};
  }
  return AgeBin{AgeBin::kCount - 1};
}

bool is_valid_person_category(const PersonCategory& c) {
  const bool under15 = c.age.index == 0;
  if (under15 && c.rel != RelStatus::U15Child && c.rel != RelStatus::Relative)
    return false;
  if (c.rel == RelStatus::U15Child && !under15) return false;
  if (c.rel == RelStatus::Student && c.age.index != 1) return false;
  return true;
}

int min_household_size(const HouseholdComposition& comp) {
  switch (comp.kind) {
  case HouseholdKind::LonePersonHH: return 1;
  case HouseholdKind::GroupHH: return 2;
  case HouseholdKind::FamilyHH: {
    const int base = comp.primary_family == FamilyType::CoupleWithChildren ? 3 : 2;
    return base + 2 * (comp.family_count - 1);
  }
  }
  return 1;
}

bool is_valid_household_category(const HouseholdCategory& c) {
  if (c.composition.kind == HouseholdKind::LonePersonHH) return c.size == 1;
  return c.size >= min_household_size(c.composition);
}

std::string_view to_label(Sex s) { return s == Sex::Male ? "Male" : "Female"; }

std::string_view to_label(RelStatus r) { return kRelLabels[static_cast<int>(r)]; }

std::string_view to_label(AgeBin b) { return kAgeLabels[b.index]; }

std::string_view to_label(FamilyType t) { return kFamilyLabels[static_cast<int>(t)]; }

std::string to_label(const HouseholdComposition& comp) {
  switch (comp.kind) {
  case HouseholdKind::LonePersonHH: return "LonePersonHH";
  case HouseholdKind::GroupHH: return "GroupHH";
  case HouseholdKind::FamilyHH:
    return std::to_string(comp.family_count) + "F-" +
           std::string(to_label(comp.primary_family));
  }
  return {};
}

std::string size_label(int size) {
  return size >= HouseholdCategory::kOpenSizeClass ? "8+" : std::to_string(size);
}

std::optional<Sex> sex_from_label(std::string_view s) {
  if (s == "Male") return Sex::Male;
  if (s == "Female") return Sex::Female;
  return std::nullopt;
}

std::optional<RelStatus> rel_from_label(std::string_view s) {
  for (int i = 0; i < kRelCount; ++i) {
    if (s == kRelLabels[i]) return static_cast<RelStatus>(i);
  }
  return std::nullopt;
}

std::optional<AgeBin> age_bin_from_label(std::string_view s) {
  for (std::uint8_t i = 0; i < AgeBin::kCount; ++i) {
    if (s == kAgeLabels[i]) return AgeBin{i};
  }
  return std::nullopt;
}

std::optional<FamilyType> family_type_from_label(std::string_view s) {
  for (int i = 0; i < kFamilyTypeCount; ++i) {
    if (s == kFamilyLabels[i]) return static_cast<FamilyType>(i);
  }
  return std::nullopt;
}

std::optional<HouseholdComposition> composition_from_label(std::string_view s) {
  if (s == "LonePersonHH")
    return HouseholdComposition{HouseholdKind::LonePersonHH, 0, FamilyType::CoupleOnly};
  if (s == "GroupHH")
    return HouseholdComposition{HouseholdKind::GroupHH, 0, FamilyType::CoupleOnly};
  if (s.size() < 4 || s[1] != 'F' || s[2] != '-') return std::nullopt;
  if (s[0] < '1' || s[0] > '3') return std::nullopt;
  auto type = family_type_from_label(s.substr(3));
  if (!type) return std::nullopt;
  return HouseholdComposition{HouseholdKind::FamilyHH,
                              static_cast<std::uint8_t>(s[0] - '0'), *type};
}

std::optional<int> size_from_label(std::string_view s) {
  if (s == "8+") return 8;
  if (s.size() == 1 && s[0] >= '1' && s[0] <= '7') return s[0] - '0';
  return std::nullopt;
}

bool is_child_status(RelStatus r) {
  return r == RelStatus::U15Child || r == RelStatus::Student || r == RelStatus::O15Child;
}

} // namespace popsynth

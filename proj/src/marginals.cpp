#include "popsynth/marginals.hpp"

#include <algorithm>
#include <numeric>

#include "popsynth/csv.hpp"
#include "popsynth/errors.hpp"

namespace popsynth {

namespace {

std::string row_context(const std::string& path, std::size_t line_no) {
  return path + ":" + std::to_string(line_no);
}

} // namespace

std::int64_t PersonMarginal::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::int64_t HouseholdMarginal::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::int64_t HouseholdMarginal::households_with_primary(FamilyType t) const {
  std::int64_t n = 0;
  for (int i = 0; i < HouseholdCategory::kCellCount; ++i) {
    const auto cat = HouseholdCategory::from_index(i);
    if (cat.composition.kind == HouseholdKind::FamilyHH &&
        cat.composition.primary_family == t) {
      n += counts[i];
    }
  }
  return n;
}

std::int64_t HouseholdMarginal::family_household_total() const {
  std::int64_t n = 0;
  for (int i = 0; i < HouseholdCategory::kCellCount; ++i) {
    if (HouseholdCategory::from_index(i).composition.kind == HouseholdKind::FamilyHH) {
      n += counts[i];
    }
  }
  return n;
}

std::int64_t HouseholdMarginal::lone_person_households() const {
  std::int64_t n = 0;
  for (int i = 0; i < HouseholdCategory::kCellCount; ++i) {
    if (HouseholdCategory::from_index(i).composition.kind == HouseholdKind::LonePersonHH) {
      n += counts[i];
    }
  }
  return n;
}

std::int64_t HouseholdMarginal::group_households() const {
  std::int64_t n = 0;
  for (int i = 0; i < HouseholdCategory::kCellCount; ++i) {
    if (HouseholdCategory::from_index(i).composition.kind == HouseholdKind::GroupHH) {
      n += counts[i];
    }
  }
  return n;
}

std::int64_t AgePyramid::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::int64_t AgePyramid::bin_total(AgeBin bin) const {
  std::int64_t n = 0;
  for (int a = bin.lo(); a <= bin.hi(); ++a) n += counts[a];
  return n;
}

std::int64_t Sa1Marginal::composition_total(int comp_index) const {
  std::int64_t n = 0;
  for (const auto& row : counts) n += row[comp_index];
  return n;
}

PersonMarginalSet parse_person_marginals(const std::string& path) {
  PersonMarginalSet set;
  csv::for_each_row(path, "sa2,sex,age_bin,rel_status,count", [&](const csv::Row& row) {
    const std::string ctx = row_context(path, row.line_no);
    const auto sex = sex_from_label(row.fields[1]);
    if (!sex) throw ParseError(ctx + ": unknown sex '" + std::string(row.fields[1]) + "'");
    const auto bin = age_bin_from_label(row.fields[2]);
    if (!bin) throw ParseError(ctx + ": unknown age_bin '" + std::string(row.fields[2]) + "'");
    const auto rel = rel_from_label(row.fields[3]);
    if (!rel) throw ParseError(ctx + ": unknown rel_status '" + std::string(row.fields[3]) + "'");
    const std::int64_t count = csv::parse_count(row.fields[4], ctx);
    if (count < 0) throw ValidationError(ctx + ": negative count");

    const PersonCategory cat{*sex, *bin, *rel};
    if (!is_valid_person_category(cat)) {
      if (count == 0) return; // zero-count invalid cells are silently dropped
      throw ValidationError(ctx + ": invalid person category (" +
                            std::string(to_label(*sex)) + "," + std::string(to_label(*bin)) +
                            "," + std::string(to_label(*rel)) + ") with nonzero count");
    }
    auto& marginal = set[std::string(row.fields[0])];
    marginal.sa2 = std::string(row.fields[0]);
    marginal.counts[cat.index()] += count;
  });
  return set;
}

HouseholdMarginalSet parse_household_marginals(const std::string& path) {
  HouseholdMarginalSet set;
  csv::for_each_row(path, "sa2,size,composition,count", [&](const csv::Row& row) {
    const std::string ctx = row_context(path, row.line_no);
    const auto size = size_from_label(row.fields[1]);
    if (!size) throw ParseError(ctx + ": unknown size '" + std::string(row.fields[1]) + "'");
    const auto comp = composition_from_label(row.fields[2]);
    if (!comp) throw ParseError(ctx + ": unknown composition '" + std::string(row.fields[2]) + "'");
    const std::int64_t count = csv::parse_count(row.fields[3], ctx);
    if (count < 0) throw ValidationError(ctx + ": negative count");

    const HouseholdCategory cat{static_cast<std::uint8_t>(*size), *comp};
    if (!is_valid_household_category(cat)) {
      if (count == 0) return;
      throw ValidationError(ctx + ": invalid household category (size " +
                            size_label(*size) + ", " + to_label(*comp) +
                            ") with nonzero count");
    }
    auto& marginal = set[std::string(row.fields[0])];
    marginal.sa2 = std::string(row.fields[0]);
    marginal.counts[cat.index()] += count;
  });
  return set;
}

AgePyramidSet parse_age_pyramids(const std::string& path) {
  AgePyramidSet set;
  csv::for_each_row(path, "sa2,age,count", [&](const csv::Row& row) {
    const std::string ctx = row_context(path, row.line_no);
    const std::int64_t age = csv::parse_count(row.fields[1], ctx);
    if (age < 0 || age >= AgePyramid::kAges) {
      throw ValidationError(ctx + ": age out of range 0-100");
    }
    const std::int64_t count = csv::parse_count(row.fields[2], ctx);
    if (count < 0) throw ValidationError(ctx + ": negative count");
    auto& pyramid = set[std::string(row.fields[0])];
    pyramid.sa2 = std::string(row.fields[0]);
    pyramid.counts[age] += count;
  });
  return set;
}

Sa1MarginalSet parse_sa1_marginals(const std::string& path) {
  struct Cell {
    std::string sa1;
    int comp = 0;
    std::int64_t count = 0;
  };
  std::map<std::string, std::vector<Cell>> raw;
  csv::for_each_row(path, "sa2,sa1,composition,count", [&](const csv::Row& row) {
    const std::string ctx = row_context(path, row.line_no);
    const auto comp = composition_from_label(row.fields[2]);
    if (!comp) throw ParseError(ctx + ": unknown composition '" + std::string(row.fields[2]) + "'");
    const std::int64_t count = csv::parse_count(row.fields[3], ctx);
    if (count < 0) throw ValidationError(ctx + ": negative count");
    raw[std::string(row.fields[0])].push_back(
        {std::string(row.fields[1]), comp->index(), count});
  });

  Sa1MarginalSet set;
  for (auto& [sa2, cells] : raw) {
    Sa1Marginal m;
    m.sa2 = sa2;
    for (const auto& cell : cells) m.sa1_codes.push_back(cell.sa1);
    std::sort(m.sa1_codes.begin(), m.sa1_codes.end());
    m.sa1_codes.erase(std::unique(m.sa1_codes.begin(), m.sa1_codes.end()),
                      m.sa1_codes.end());
    m.counts.assign(m.sa1_codes.size(), {});
    for (const auto& cell : cells) {
      const auto it = std::lower_bound(m.sa1_codes.begin(), m.sa1_codes.end(), cell.sa1);
      m.counts[it - m.sa1_codes.begin()][cell.comp] += cell.count;
    }
    set.emplace(sa2, std::move(m));
  }
  return set;
}

void write_person_marginals(const PersonMarginalSet& set, const std::string& path) {
  csv::Writer out(path);
  out.line("sa2,sex,age_bin,rel_status,count");
  for (const auto& [sa2, m] : set) {
    for (int i = 0; i < PersonCategory::kCellCount; ++i) {
      if (m.counts[i] == 0) continue;
      const auto cat = PersonCategory::from_index(i);
      std::string line = sa2;
      line += ',';
      line += to_label(cat.sex);
      line += ',';
      line += to_label(cat.age);
      line += ',';
      line += to_label(cat.rel);
      line += ',';
      line += std::to_string(m.counts[i]);
      out.line(line);
    }
  }
}

void write_household_marginals(const HouseholdMarginalSet& set, const std::string& path) {
  csv::Writer out(path);
  out.line("sa2,size,composition,count");
  for (const auto& [sa2, m] : set) {
    for (int i = 0; i < HouseholdCategory::kCellCount; ++i) {
      if (m.counts[i] == 0) continue;
      const auto cat = HouseholdCategory::from_index(i);
      std::string line = sa2;
      line += ',';
      line += size_label(cat.size);
      line += ',';
      line += to_label(cat.composition);
      line += ',';
      line += std::to_string(m.counts[i]);
      out.line(line);
    }
  }
}

void write_age_pyramids(const AgePyramidSet& set, const std::string& path) {
  csv::Writer out(path);
  out.line("sa2,age,count");
  for (const auto& [sa2, pyramid] : set) {
    for (int a = 0; a < AgePyramid::kAges; ++a) {
      if (pyramid.counts[a] == 0) continue;
      out.line(sa2 + "," + std::to_string(a) + "," + std::to_string(pyramid.counts[a]));
    }
  }
}

void write_sa1_marginals(const Sa1MarginalSet& set, const std::string& path) {
  csv::Writer out(path);
  out.line("sa2,sa1,composition,count");
  for (const auto& [sa2, m] : set) {
    for (std::size_t s = 0; s < m.sa1_codes.size(); ++s) {
      for (int c = 0; c < HouseholdComposition::kCount; ++c) {
        if (m.counts[s][c] == 0) continue;
        out.line(sa2 + "," + m.sa1_codes[s] + "," +
                 to_label(HouseholdComposition::from_index(c)) + "," +
                 std::to_string(m.counts[s][c]));
      }
    }
  }
}

} // namespace popsynth

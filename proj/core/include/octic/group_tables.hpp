#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "octic/quartic.hpp"

namespace octic {

// Label 8Tj of a transitive subgroup of S8 (Butler-McKay numbering).
class GroupId {
 public:
  static constexpr std::array<int, 12> kKnownIndices{2, 3, 4, 5, 9, 10, 11, 18, 19, 20, 22, 29};

  // Throws PreconditionError for indices the tables do not cover.
  explicit GroupId(int index);
  // Parses "8T9".
  static GroupId parse(std::string_view label);

  int index() const { return index_; }
  std::string to_string() const { return "8T" + std::to_string(index_); }

  friend auto operator<=>(const GroupId&, const GroupId&) = default;

 private:
  int index_;
};

// Sorted multiset of orbit lengths on unordered pairs of roots.
using OrbitPattern = std::vector<int>;

// Formats {4,4,4,8,8} as "4^3,8^2".
std::string format_pattern(const OrbitPattern& pattern);
OrbitPattern parse_pattern(std::string_view text);

enum class DataMode {
  paper_sourced,       // only facts stated with the classification results
  external_augmented,  // adds standard transitive-group orders
};

std::string_view to_string(DataMode mode);

struct GroupInfo {
  GroupId id;
  OrbitPattern orbit_pattern;
  long order = 0;
  bool order_from_paper = false;
  bool in_a8 = false;
};

enum class FilterStage {
  subfield_parity,  // subfield content and discriminant filters only
  orbit_pattern,    // additionally filtered by the resolvent's quartic factors
};

class GroupTable {
 public:
  // Parses the plain-text table format; throws ParseError on malformed input.
  static GroupTable parse(std::string_view text);
  // The table compiled into the library.
  static const GroupTable& builtin();
  // Exact text the builtin table was parsed from.
  static std::string_view builtin_text();

  int format_version() const { return version_; }
  const std::vector<GroupInfo>& groups() const { return groups_; }
  const GroupInfo& info(GroupId id) const;
  std::vector<GroupId> candidates(QuarticGroup group, FilterStage stage) const;
  std::vector<GroupId> doubly_even_groups() const { return doubly_even_; }

 private:
  int version_ = 0;
  std::vector<GroupInfo> groups_;
  std::map<std::pair<QuarticGroup, FilterStage>, std::vector<GroupId>> candidates_;
  std::vector<GroupId> doubly_even_;
};

OrbitPattern orbit_pattern(GroupId id);

// Order of the group; in paper-sourced mode only where the literature states it.
std::optional<long> group_order(GroupId id, DataMode mode = DataMode::paper_sourced);

// Table rows of candidate groups for g(x^2) by the group of g. With
// pre_parity_filter the subfield/parity rows are returned verbatim, otherwise
// the lists left after the orbit-pattern filter.
std::vector<GroupId> possible_octic_groups(QuarticGroup group, bool pre_parity_filter);

// Every group that occurs for x^8 + a x^4 + b with b a square.
std::vector<GroupId> doubly_even_possible_groups();

}  // namespace octic

#include "octic/group_tables.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "octic/errors.hpp"
#include "octic/group_table_data.hpp"

namespace octic {

GroupId::GroupId(int index) : index_(index) {
  if (std::find(kKnownIndices.begin(), kKnownIndices.end(), index) == kKnownIndices.end()) {
    throw PreconditionError("unknown transitive group 8T" + std::to_string(index));
  }
}

GroupId GroupId::parse(std::string_view label) {
  if (!label.starts_with("8T")) throw ParseError("group label must look like 8T<j>: '" + std::string(label) + "'");
  int index = 0;
  const auto digits = label.substr(2);
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || end != digits.data() + digits.size()) {
    throw ParseError("group label must look like 8T<j>: '" + std::string(label) + "'");
  }
  return GroupId(index);
}

std::string format_pattern(const OrbitPattern& pattern) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pattern.size();) {
    std::size_t j = i;
    while (j < pattern.size() && pattern[j] == pattern[i]) ++j;
    if (i != 0) os << ',';
    os << pattern[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

QuarticGroup parse_quartic_group(std::string_view text) {
  if (text == "E4") return QuarticGroup::E4;
  if (text == "C4") return QuarticGroup::C4;
  if (text == "D4") return QuarticGroup::D4;
  throw ParseError("unknown quartic group '" + std::string(text) + "'");
}

}  // namespace

OrbitPattern parse_pattern(std::string_view text) {
  OrbitPattern pattern;
  for (auto piece : split(text, ',')) {
    const auto caret = piece.find('^');
    const int length = parse_int(piece.substr(0, caret));
    const int count = caret == std::string_view::npos ? 1 : parse_int(piece.substr(caret + 1));
    if (length <= 0 || count <= 0) throw ParseError("bad orbit pattern '" + std::string(text) + "'");
    pattern.insert(pattern.end(), static_cast<std::size_t>(count), length);
  }
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

std::string_view to_string(DataMode mode) {
  return mode == DataMode::paper_sourced ? "paper-sourced" : "external-augmented";
}

GroupTable GroupTable::parse(std::string_view text) {
  GroupTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> words;
    for (std::string w; fields >> w;) words.push_back(w);
    if (words.empty()) continue;
    const auto fail = [&](const std::string& why) {
      return ParseError("group table line " + std::to_string(line_no) + ": " + why);
    };
    if (words[0] == "format") {
      if (words.size() != 3 || words[1] != "octic-groups") throw fail("bad format line");
      table.version_ = parse_int(words[2]);
    } else if (words[0] == "group") {
      if (words.size() != 6) throw fail("group rows have 5 fields");
      GroupInfo info{GroupId::parse(words[1]), parse_pattern(words[2]), parse_int(words[3]), words[4] == "paper",
                     words[5] == "yes"};
      if (words[4] != "paper" && words[4] != "external") throw fail("order source must be paper or external");
      int total = 0;
      for (int len : info.orbit_pattern) total += len;
      if (total != 28) throw fail("orbit lengths of " + words[1] + " must sum to 28");
      table.groups_.push_back(std::move(info));
    } else if (words[0] == "candidates") {
      if (words.size() < 4) throw fail("candidate rows need a quartic group, a stage and groups");
      FilterStage stage;
      if (words[2] == "subfield_parity") {
        stage = FilterStage::subfield_parity;
      } else if (words[2] == "orbit_pattern") {
        stage = FilterStage::orbit_pattern;
      } else {
        throw fail("unknown filter stage '" + words[2] + "'");
      }
      auto& list = table.candidates_[{parse_quartic_group(words[1]), stage}];
      for (std::size_t i = 3; i < words.size(); ++i) list.push_back(GroupId::parse(words[i]));
    } else if (words[0] == "family") {
      if (words.size() < 3 || words[1] != "doubly_even") throw fail("unknown family row");
      for (std::size_t i = 2; i < words.size(); ++i) table.doubly_even_.push_back(GroupId::parse(words[i]));
    } else {
      throw fail("unknown row kind '" + words[0] + "'");
    }
  }
  if (table.version_ != 1) throw ParseError("unsupported group table format version");
  return table;
}

const GroupTable& GroupTable::builtin() {
  static const GroupTable table = parse(detail::kGroupTableText);
  return table;
}

std::string_view GroupTable::builtin_text() { return detail::kGroupTableText; }

const GroupInfo& GroupTable::info(GroupId id) const {
  for (const auto& g : groups_) {
    if (g.id == id) return g;
  }
  throw PreconditionError("group " + id.to_string() + " is not in the table");
}

std::vector<GroupId> GroupTable::candidates(QuarticGroup group, FilterStage stage) const {
  const auto it = candidates_.find({group, stage});
  if (it == candidates_.end()) return {};
  return it->second;
}

OrbitPattern orbit_pattern(GroupId id) { return GroupTable::builtin().info(id).orbit_pattern; }

std::optional<long> group_order(GroupId id, DataMode mode) {
  const auto& info = GroupTable::builtin().info(id);
  if (mode == DataMode::paper_sourced && !info.order_from_paper) return std::nullopt;
  return info.order;
}

std::vector<GroupId> possible_octic_groups(QuarticGroup group, bool pre_parity_filter) {
  return GroupTable::builtin().candidates(group,
                                          pre_parity_filter ? FilterStage::subfield_parity : FilterStage::orbit_pattern);
}

std::vector<GroupId> doubly_even_possible_groups() { return GroupTable::builtin().doubly_even_groups(); }

}  // namespace octic

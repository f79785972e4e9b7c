#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "octic/group_tables.hpp"
#include "octic/polynomial.hpp"
#include "octic/quartic.hpp"
#include "octic/rational.hpp"

namespace octic {

// One "is this rational a square" test made while classifying.
struct TraceEntry {
  std::string label;
  Rational value;
  bool in_q2 = false;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

// Ordered record of every square test a classification evaluated; enough to
// re-derive the verdict by hand.
class ConditionTrace {
 public:
  // Records the test and returns whether value is a rational square.
  bool test(std::string label, const Rational& value);

  const std::vector<TraceEntry>& entries() const { return entries_; }
  // Most recent entry with this label, if any.
  const TraceEntry* find(std::string_view label) const;

  friend bool operator==(const ConditionTrace&, const ConditionTrace&) = default;

 private:
  std::vector<TraceEntry> entries_;
};

// Status of an octic resolvent block R(x^2): irreducible, or split into two
// explicit quartics whose product is `octic`.
struct SplitStatus {
  std::string name;
  UniPoly octic;
  std::optional<std::pair<UniPoly, UniPoly>> factors;

  bool split() const { return factors.has_value(); }
};

// Exact group or honest candidate set, with its certificate.
struct Classification {
  std::vector<GroupId> groups;
  bool exact = false;
  QuarticGroup quartic_group = QuarticGroup::E4;
  ConditionTrace trace;
  // Names of resolvent blocks found to split (e.g. "R2(x^2)").
  std::vector<std::string> split_blocks;
  // Set when the candidate set was narrowed by the factorization oracle.
  std::optional<OrbitPattern> refined_by_pattern;

  GroupId group() const;
};

}  // namespace octic

#include "octic/classification.hpp"

#include "octic/errors.hpp"

namespace octic {

bool ConditionTrace::test(std::string label, const Rational& value) {
  const bool square = is_rational_square(value);
  entries_.push_back({std::move(label), value, square});
  return square;
}

const TraceEntry* ConditionTrace::find(std::string_view label) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->label == label) return &*it;
  }
  return nullptr;
}

GroupId Classification::group() const {
  if (!exact || groups.size() != 1) throw PreconditionError("classification is a candidate set, not a single group");
  return groups.front();
}

}  // namespace octic

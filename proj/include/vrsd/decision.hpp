#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vrsd/int_vec.hpp"

namespace vrsd {

// Answer of the exact decision check. When is_yes, the selected vectors sum
// to alpha * q for a positive rational alpha; pipelines that know candidate
// ids fill witness_ids.
struct DecisionOutcome {
  bool is_yes = false;
  std::optional<Rational> alpha;
  std::vector<std::string> witness_ids;
};

// Decides in exact integer arithmetic whether the selected vectors sum to a
// positive multiple of q, i.e. whether cos(sum, q) is exactly 1. Parallelism
// is the vanishing cross product; the positive dot product rules out the
// zero sum and the opposite direction.
inline DecisionOutcome decision_check(std::span<const IntVec2> selected,
                                      const IntVec2& q) {
  if (q.x == 0 && q.y == 0) throw ZeroQuery("decision_check: zero query vector");
  IntVec2 s;
  for (const auto& v : selected) s = s + v;
  DecisionOutcome out;
  if (cross(s, q) != 0) return out;
  if (dot(s, q) <= 0) return out;
  out.is_yes = true;
  out.alpha = (q.x != 0) ? Rational::make(s.x, q.x) : Rational::make(s.y, q.y);
  return out;
}

}  // namespace vrsd

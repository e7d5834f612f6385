#pragma once

#include <set>
#include <vector>

#include "crq/core.hpp"

// Brute-force reference answers. Everything here is a linear scan on purpose;
// these functions are the ground truth the index structures are tested
// against and must stay independent of them.

namespace crq::oracle {

inline std::size_t distinct_count(const std::vector<ColoredPoint>& points,
                                  const QueryRect& q) {
  std::set<color_t> colors;
  for (const auto& p : points)
    if (q.contains(p.x, p.y)) colors.insert(p.color);
  return colors.size();
}

inline bool emptiness(const std::vector<ColoredPoint>& points, color_t color,
                      const QueryRect& q) {
  for (const auto& p : points)
    if (p.color == color && q.contains(p.x, p.y)) return true;
  return false;
}

inline std::vector<std::size_t> stab(const std::vector<CanonicalBox>& boxes,
                                     const Point3& p) {
  std::vector<std::size_t> hit;
  for (std::size_t i = 0; i < boxes.size(); ++i)
    if (boxes[i].contains(p)) hit.push_back(i);
  return hit;
}

inline std::size_t dominance_count(const std::vector<Point3>& points,
                                   const Point3& p) {
  std::size_t cnt = 0;
  for (const auto& q : points)
    if (q.x <= p.x && q.y <= p.y && q.z <= p.z) ++cnt;
  return cnt;
}

}  // namespace crq::oracle

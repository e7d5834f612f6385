#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace crq {

using coord_t = std::int64_t;
using color_t = std::uint32_t;

// Open upper bound sentinel for half-open box ranges. All real coordinates
// (ranks or negated ranks) are far from the extremes, so plain < comparisons
// against the sentinel behave like comparisons against +infinity.
inline constexpr coord_t kCoordInf = std::numeric_limits<coord_t>::max();

struct EmptyDatasetError : std::invalid_argument {
  EmptyDatasetError() : std::invalid_argument("empty dataset") {}
};

// Exact decimal input coordinate: value = mant / 10^exp10. Covers the full
// 64-bit integer range (exp10 = 0) and finite decimal fractions without any
// floating-point rounding. Comparison cross-multiplies in 128 bits.
struct RawCoord {
  std::int64_t mant = 0;
  std::int32_t exp10 = 0;  // 0..18

  static RawCoord from_int(std::int64_t v) { return RawCoord{v, 0}; }

  friend bool operator==(const RawCoord& a, const RawCoord& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const RawCoord& a, const RawCoord& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const RawCoord& a, const RawCoord& b) {
    return compare(a, b) <= 0;
  }

  static int compare(const RawCoord& a, const RawCoord& b) {
    static constexpr __int128 pow10[19] = {
        (__int128)1e0,
        10,
        100,
        1000,
        10000,
        100000,
        1000000,
        10000000,
        100000000,
        1000000000,
        10000000000LL,
        100000000000LL,
        1000000000000LL,
        10000000000000LL,
        100000000000000LL,
        1000000000000000LL,
        10000000000000000LL,
        100000000000000000LL,
        1000000000000000000LL};
    __int128 lhs = (__int128)a.mant * pow10[b.exp10];
    __int128 rhs = (__int128)b.mant * pow10[a.exp10];
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }

  std::string to_string() const {
    std::string digits = std::to_string(mant < 0 ? -mant : mant);
    std::string out = mant < 0 ? "-" : "";
    if (exp10 == 0) return out + digits;
    if ((std::int32_t)digits.size() <= exp10)
      digits.insert(0, exp10 + 1 - digits.size(), '0');
    digits.insert(digits.size() - exp10, ".");
    return out + digits;
  }

  // Accepts [-+]digits[.digits]; no exponent notation. Returns false on
  // malformed text or when the mantissa would not fit 64 bits.
  static bool parse(const std::string& s, RawCoord& out) {
    std::size_t i = 0, n = s.size();
    bool neg = false;
    if (i < n && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    if (i >= n) return false;
    __int128 mant = 0;
    std::int32_t exp10 = 0;
    bool any_digit = false, in_frac = false;
    for (; i < n; ++i) {
      char c = s[i];
      if (c == '.') {
        if (in_frac) return false;
        in_frac = true;
        continue;
      }
      if (c < '0' || c > '9') return false;
      // Trailing fraction zeros are dropped so equal values normalize.
      mant = mant * 10 + (c - '0');
      if (in_frac) ++exp10;
      if (exp10 > 18) return false;
      if (mant > (__int128)std::numeric_limits<std::int64_t>::max() + (neg ? 1 : 0))
        return false;
      any_digit = true;
    }
    if (!any_digit) return false;
    while (exp10 > 0 && mant % 10 == 0) {
      mant /= 10;
      --exp10;
    }
    out.mant = neg ? (std::int64_t)(-mant) : (std::int64_t)mant;
    out.exp10 = exp10;
    return true;
  }
};

// Input-space point, before rank reduction.
struct RawPoint {
  RawCoord x, y;
  color_t color = 0;
};

// Input-space query rectangle [a,b] x [c,d]; a>b or c>d means empty.
struct RawRect {
  RawCoord a, b, c, d;
};

// Point after rank reduction: coordinates are integers, each axis a
// permutation of 1..n over the whole dataset.
struct ColoredPoint {
  coord_t x = 0;
  coord_t y = 0;
  color_t color = 0;

  friend bool operator==(const ColoredPoint& p, const ColoredPoint& q) {
    return p.x == q.x && p.y == q.y && p.color == q.color;
  }
};

// Closed rectangle in integer (rank) space; crossed ranges denote empty.
struct QueryRect {
  coord_t a = 0, b = 0, c = 0, d = 0;

  bool empty() const { return a > b || c > d; }
  bool contains(coord_t x, coord_t y) const {
    return a <= x && x <= b && c <= y && y <= d;
  }
};

struct Point3 {
  coord_t x = 0, y = 0, z = 0;
};

// Half-open 3D box [x1,inf) x [y1,y2) x [z1,z2); y2/z2 may be kCoordInf.
struct CanonicalBox {
  coord_t x1 = 0;
  coord_t y1 = 0, y2 = 0;
  coord_t z1 = 0, z2 = 0;
  color_t color = 0;

  bool contains(const Point3& p) const {
    return x1 <= p.x && y1 <= p.y && p.y < y2 && z1 <= p.z && p.z < z2;
  }
};

namespace detail {

// One axis of a rank-space map: strictly increasing distinct keys plus, per
// key, the last rank assigned to it (ties in the input share a key but get
// consecutive ranks).
template <class Key>
struct AxisMap {
  std::vector<Key> keys;            // distinct, strictly increasing
  std::vector<coord_t> last_rank;   // parallel; last_rank.back() == n

  void build_from_sorted(const std::vector<Key>& sorted_keys) {
    keys.clear();
    last_rank.clear();
    for (std::size_t i = 0; i < sorted_keys.size(); ++i) {
      if (keys.empty() || keys.back() < sorted_keys[i]) {
        keys.push_back(sorted_keys[i]);
        last_rank.push_back((coord_t)(i + 1));
      } else {
        last_rank.back() = (coord_t)(i + 1);
      }
    }
  }

  // Smallest rank whose key is >= k; n+1 when none.
  coord_t succ_rank(const Key& k) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it == keys.end()) return (coord_t)(last_rank.empty() ? 1 : last_rank.back() + 1);
    std::size_t i = (std::size_t)(it - keys.begin());
    return i == 0 ? 1 : last_rank[i - 1] + 1;
  }

  // Largest rank whose key is <= k; 0 when none.
  coord_t pred_rank(const Key& k) const {
    auto it = std::upper_bound(keys.begin(), keys.end(), k);
    if (it == keys.begin()) return 0;
    return last_rank[(std::size_t)(it - keys.begin()) - 1];
  }

  // Inverse of ranking for stored keys.
  const Key& key_at_rank(coord_t r) const {
    auto it = std::lower_bound(last_rank.begin(), last_rank.end(), r);
    if (it == last_rank.end()) throw std::out_of_range("rank out of range");
    return keys[(std::size_t)(it - last_rank.begin())];
  }
};

}  // namespace detail

struct RankSpaceMap {
  detail::AxisMap<RawCoord> x;
  detail::AxisMap<RawCoord> y;
};

// Maps points to rank space: each axis becomes exactly {1..n}, order
// preserved, ties broken by input index. Colors are untouched.
inline std::pair<std::vector<ColoredPoint>, RankSpaceMap> to_rank_space(
    const std::vector<RawPoint>& points) {
  if (points.empty()) throw EmptyDatasetError();
  const std::size_t n = points.size();
  std::vector<std::uint32_t> order(n);
  std::vector<ColoredPoint> out(n);
  RankSpaceMap map;

  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t i, std::uint32_t j) {
    int c = RawCoord::compare(points[i].x, points[j].x);
    return c != 0 ? c < 0 : i < j;
  });
  std::vector<RawCoord> sorted(n);
  for (std::size_t r = 0; r < n; ++r) {
    out[order[r]].x = (coord_t)(r + 1);
    sorted[r] = points[order[r]].x;
  }
  map.x.build_from_sorted(sorted);

  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t i, std::uint32_t j) {
    int c = RawCoord::compare(points[i].y, points[j].y);
    return c != 0 ? c < 0 : i < j;
  });
  for (std::size_t r = 0; r < n; ++r) {
    out[order[r]].y = (coord_t)(r + 1);
    sorted[r] = points[order[r]].y;
  }
  map.y.build_from_sorted(sorted);

  for (std::size_t i = 0; i < n; ++i) out[i].color = points[i].color;
  return {std::move(out), std::move(map)};
}

// A point lies in the original rectangle iff its rank image lies in the
// mapped rectangle; crossed outputs denote empty ranges.
inline QueryRect map_query(const RawRect& q, const RankSpaceMap& m) {
  QueryRect r;
  r.a = m.x.succ_rank(q.a);
  r.b = m.x.pred_rank(q.b);
  r.c = m.y.succ_rank(q.c);
  r.d = m.y.pred_rank(q.d);
  return r;
}

// Universal output unit of every stabbing/dominance backend: the first `len`
// entries of bottom list `list`.
struct PrefixRef {
  std::uint32_t list = 0;
  std::uint32_t len = 0;
};

inline std::size_t words_of_bytes(std::size_t bytes) { return (bytes + 7) / 8; }

template <class T>
std::size_t vector_words(const std::vector<T>& v) {
  return words_of_bytes(v.size() * sizeof(T));
}

}  // namespace crq

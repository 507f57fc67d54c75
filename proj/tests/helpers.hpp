#pragma once

#include <utility>
#include <vector>

#include "tripts/generate.hpp"
#include "tripts/geometry.hpp"

namespace tripts::testing {

inline Rational rat(long num, long den = 1) { return make_rational(num, den); }

inline PointSet points(std::vector<std::pair<long, long>> coords) {
    std::vector<std::pair<Rational, Rational>> rs;
    for (auto& [x, y] : coords) rs.emplace_back(rat(x), rat(y));
    return PointSet(std::move(rs));
}

inline Point pt(long x, long y, int id = -1) {
    return Point{ExactScalar(rat(x)), ExactScalar(rat(y)), id};
}

/// Widely separated points along a direction slightly off the 30-degree
/// bisector: every pair direction stays inside sextant A_1, so the theta
/// graph is a path and every interior vertex a cut vertex.
inline PointSet chain_points(int n) {
    std::vector<std::pair<Rational, Rational>> coords;
    for (int i = 0; i < n; ++i) {
        coords.emplace_back(rat(1000L * i), rat(577L * i + (i * i) % 7));
    }
    return PointSet(std::move(coords));
}

} // namespace tripts::testing

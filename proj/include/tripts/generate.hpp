#pragma once

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tripts/geometry.hpp"

namespace tripts {

/// n random points with rational coordinates on a resolution x resolution
/// grid scaled to [0,1)^2, rejection-sampled until the set is in general
/// position. Deterministic in the seed.
inline PointSet random_general_position(int n, unsigned long seed, int resolution = 1 << 12) {
    if (n < 1) throw std::invalid_argument("random_general_position: n must be >= 1");
    if (resolution < 1) throw std::invalid_argument("random_general_position: bad resolution");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(0, resolution - 1);
    std::vector<std::pair<Rational, Rational>> accepted;
    std::vector<Point> pts;
    long budget = 1000L * n;
    while (int(pts.size()) < n) {
        if (budget-- <= 0) {
            throw std::runtime_error(
                "random_general_position: resample budget exhausted; resolution too small");
        }
        Rational x = make_rational(coord(rng), resolution);
        Rational y = make_rational(coord(rng), resolution);
        Point cand{ExactScalar(x), ExactScalar(y), int(pts.size())};
        bool ok = true;
        for (const Point& p : pts) {
            if (p.x == cand.x && p.y == cand.y) {
                ok = false;
                break;
            }
            auto s = direction_signs(cand.x - p.x, cand.y - p.y);
            if (s[0] == 0 || s[1] == 0 || s[2] == 0) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        pts.push_back(cand);
        accepted.emplace_back(x, y);
    }
    PointSet ps(std::move(accepted));
    ps.mark_certified();
    return ps;
}

/// Reflect through the x-axis. The forbidden angle set {0, 60, 120} is closed
/// under the reflection, so certification is preserved; the reflection swaps
/// the roles of the down and up graphs.
inline PointSet reflect_x(const PointSet& ps) {
    std::vector<std::pair<Rational, Rational>> coords;
    coords.reserve(ps.size());
    for (const Point& p : ps) {
        coords.emplace_back(p.x.rational_part(), -p.y.rational_part());
    }
    PointSet out(std::move(coords));
    if (ps.certified_general_position()) out.mark_certified();
    return out;
}

} // namespace tripts

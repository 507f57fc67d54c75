#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tripts/exact.hpp"

namespace tripts {

struct Point {
    ExactScalar x;
    ExactScalar y;
    int id = -1;
};

/// Planar point set with contiguous ids. Duplicate coordinates are rejected
/// at construction; general-position certification is a separate, explicit
/// step (see general_position / certify below).
class PointSet {
public:
    PointSet() = default;

    explicit PointSet(std::vector<std::pair<Rational, Rational>> coords) {
        points_.reserve(coords.size());
        int id = 0;
        for (auto& [x, y] : coords) {
            points_.push_back(Point{ExactScalar(std::move(x)), ExactScalar(std::move(y)), id});
            ++id;
        }
        for (std::size_t i = 0; i < points_.size(); ++i) {
            for (std::size_t j = i + 1; j < points_.size(); ++j) {
                if (points_[i].x == points_[j].x && points_[i].y == points_[j].y) {
                    throw std::invalid_argument("PointSet: duplicate point at indices " +
                                                std::to_string(i) + " and " + std::to_string(j));
                }
            }
        }
    }

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool certified_general_position() const { return certified_; }
    void mark_certified() { certified_ = true; }

    friend bool operator==(const PointSet& l, const PointSet& r) {
        if (l.size() != r.size()) return false;
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (!(l[i].x == r[i].x && l[i].y == r[i].y)) return false;
        }
        return true;
    }

private:
    std::vector<Point> points_;
    bool certified_ = false;
};

struct GeneralPositionResult {
    bool ok = true;
    std::optional<std::pair<int, int>> violating_pair;
};

/// The three forbidden directions 0, 60 and 120 degrees, tested as exact
/// signs of dy, dy - sqrt(3)*dx and dy + sqrt(3)*dx.
inline std::array<int, 3> direction_signs(const ExactScalar& dx, const ExactScalar& dy) {
    ExactScalar s3dx = ExactScalar::sqrt3() * dx;
    return {dy.sign(), (dy - s3dx).sign(), (dy + s3dx).sign()};
}

inline GeneralPositionResult general_position(const PointSet& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            auto s = direction_signs(ps[j].x - ps[i].x, ps[j].y - ps[i].y);
            if (s[0] == 0 || s[1] == 0 || s[2] == 0) {
                return {false, std::make_pair(int(i), int(j))};
            }
        }
    }
    return {true, std::nullopt};
}

/// Certify and return the set; throws if a pair violates general position.
inline PointSet certify(PointSet ps) {
    auto r = general_position(ps);
    if (!r.ok) {
        throw std::invalid_argument("point set not in general position (pair " +
                                    std::to_string(r.violating_pair->first) + "," +
                                    std::to_string(r.violating_pair->second) + ")");
    }
    ps.mark_certified();
    return ps;
}

enum class ConeSign { positive, negative };

/// One of the six 60-degree sextants around a point, named as the positive
/// cone C_i or the negative (opposite) cone C-bar_i, i in {1,2,3}.
struct ConeIndex {
    ConeSign kind;
    int i; // 1..3

    ConeIndex opposite() const {
        return {kind == ConeSign::positive ? ConeSign::negative : ConeSign::positive, i};
    }
    friend bool operator==(const ConeIndex& l, const ConeIndex& r) {
        return l.kind == r.kind && l.i == r.i;
    }
    friend bool operator!=(const ConeIndex& l, const ConeIndex& r) { return !(l == r); }
};

/// Sextant A_1..A_6 of the direction (dx, dy), counted counterclockwise from
/// the positive x-axis. Throws if the direction lies on a sextant boundary
/// (forbidden under general position).
inline int sextant(const ExactScalar& dx, const ExactScalar& dy) {
    auto s = direction_signs(dx, dy);
    if (s[0] == 0 || s[1] == 0 || s[2] == 0) {
        throw std::domain_error("direction on a cone boundary (0/60/120 degrees)");
    }
    if (s[0] > 0) {
        if (s[1] < 0) return 1;
        return s[2] > 0 ? 2 : 3;
    }
    if (s[1] > 0) return 4;
    return s[2] < 0 ? 5 : 6;
}

inline ConeIndex cone_of_sextant(int a) {
    switch (a) {
        case 1: return {ConeSign::positive, 1}; // C_1
        case 3: return {ConeSign::positive, 2}; // C_2
        case 5: return {ConeSign::positive, 3}; // C_3
        case 4: return {ConeSign::negative, 1}; // C-bar_1 opposite A_1
        case 6: return {ConeSign::negative, 2}; // C-bar_2 opposite A_3
        case 2: return {ConeSign::negative, 3}; // C-bar_3 opposite A_5
        default: throw std::logic_error("bad sextant");
    }
}

/// Cone of `other` as seen from `apex`. Reciprocal: swapping the arguments
/// flips the cone kind and preserves i.
inline ConeIndex classify_cone(const Point& apex, const Point& other) {
    return cone_of_sextant(sextant(other.x - apex.x, other.y - apex.y));
}

/// Unit bisector direction of a cone, components in Q[sqrt(3)].
inline std::pair<ExactScalar, ExactScalar> cone_bisector(const ConeIndex& c) {
    const Rational half(1, 2);
    ExactScalar h3(Rational(0), half); // sqrt(3)/2
    ExactScalar h(half);
    switch (c.i) {
        case 1: // C_1 at 30 deg, C-bar_1 at 210 deg
            return c.kind == ConeSign::positive ? std::pair{h3, h} : std::pair{-h3, -h};
        case 2: // C_2 at 150 deg, C-bar_2 at 330 deg
            return c.kind == ConeSign::positive ? std::pair{-h3, h} : std::pair{h3, -h};
        case 3: // C_3 at 270 deg, C-bar_3 at 90 deg
            return c.kind == ConeSign::positive ? std::pair{ExactScalar(0), -ExactScalar(1)}
                                                : std::pair{ExactScalar(0), ExactScalar(1)};
        default: throw std::logic_error("bad cone index");
    }
}

/// Distance from `apex` to the orthogonal projection of `other` onto the
/// bisector of `cone`; requires classify_cone(apex, other) == cone.
inline ExactScalar projection_length(const Point& apex, const Point& other,
                                     const ConeIndex& cone) {
    if (classify_cone(apex, other) != cone) {
        throw std::invalid_argument("projection_length: point not in the given cone");
    }
    auto [ux, uy] = cone_bisector(cone);
    return (other.x - apex.x) * ux + (other.y - apex.y) * uy;
}

enum class Orientation { down, up };

/// Equilateral triangle with one horizontal side, stored as three support
/// values: the triangle is { v : <v, u_k> <= t_k }. For the down orientation
/// the outward normals are (0,1), (-s/2,-1/2), (s/2,-1/2) with s = sqrt(3)
/// (horizontal side on top, corner below); the up orientation negates them.
struct FixedTriangle {
    Orientation orientation;
    std::array<ExactScalar, 3> support;

    static std::array<std::pair<ExactScalar, ExactScalar>, 3> normals(Orientation o) {
        const Rational half(1, 2);
        ExactScalar h3(Rational(0), half);
        ExactScalar h(half);
        std::array<std::pair<ExactScalar, ExactScalar>, 3> n = {
            std::pair{ExactScalar(0), ExactScalar(1)},
            std::pair{-h3, -h},
            std::pair{h3, -h},
        };
        if (o == Orientation::up) {
            for (auto& [x, y] : n) {
                x = -x;
                y = -y;
            }
        }
        return n;
    }
};

inline ExactScalar dot(const std::pair<ExactScalar, ExactScalar>& u, const ExactScalar& x,
                       const ExactScalar& y) {
    return u.first * x + u.second * y;
}

/// Smallest fixed-orientation triangle containing both p and q:
/// t_k = max(<p, u_k>, <q, u_k>). Symmetric in p and q; degenerate when p == q.
inline FixedTriangle smallest_triangle(const Point& p, const Point& q, Orientation o) {
    auto n = FixedTriangle::normals(o);
    FixedTriangle t{o, {}};
    for (int k = 0; k < 3; ++k) {
        t.support[k] = max(dot(n[k], p.x, p.y), dot(n[k], q.x, q.y));
    }
    return t;
}

enum class ContainMode { closed, interior };

inline bool triangle_contains(const FixedTriangle& t, const Point& v,
                              ContainMode mode = ContainMode::closed) {
    auto n = FixedTriangle::normals(t.orientation);
    for (int k = 0; k < 3; ++k) {
        int s = (t.support[k] - dot(n[k], v.x, v.y)).sign();
        if (mode == ContainMode::closed ? s < 0 : s <= 0) return false;
    }
    return true;
}

/// Sign of the cross product (b-a) x (c-a): +1 when a,b,c make a left turn.
inline int orient2d(const Point& a, const Point& b, const Point& c) {
    ExactScalar v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v.sign();
}

namespace detail {
inline bool on_segment(const Point& a, const Point& b, const Point& p) {
    // assumes a, b, p collinear
    return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) && min(a.y, b.y) <= p.y &&
           p.y <= max(a.y, b.y);
}
} // namespace detail

/// True iff the closed segments ab and cd share a point that is not a shared
/// endpoint id. Callers exclude edges with a common endpoint beforehand.
inline bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient2d(a, b, c);
    int o2 = orient2d(a, b, d);
    int o3 = orient2d(c, d, a);
    int o4 = orient2d(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && detail::on_segment(a, b, c)) return true;
    if (o2 == 0 && detail::on_segment(a, b, d)) return true;
    if (o3 == 0 && detail::on_segment(c, d, a)) return true;
    if (o4 == 0 && detail::on_segment(c, d, b)) return true;
    return false;
}

} // namespace tripts

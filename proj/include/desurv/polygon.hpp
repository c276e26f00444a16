#pragma once

#include <vector>

namespace desurv {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Convex polygon, vertices in counter-clockwise order. An empty vector is
/// the empty set.
using Polygon = std::vector<Point2>;

/// Absolute area (shoelace formula).
double area(const Polygon& p);
double area(const std::vector<Polygon>& pieces);

Polygon rectangle(double cx, double cy, double half_x, double half_y);
/// Regular n-gon with the same area as the circle of radius r.
Polygon circle_polygon(double cx, double cy, double r, int n = 64);

/// Convex hull of a point set (Andrew's monotone chain), counter-clockwise.
Polygon convex_hull(std::vector<Point2> points);

/// Scales every vertex about a centre point.
Polygon scaled_about(const Polygon& p, Point2 centre, double k);

/// Part of p on the left of the directed line a -> b (Sutherland-Hodgman step).
Polygon clip_half_plane(const Polygon& p, Point2 a, Point2 b);
/// Intersection of a polygon with a convex counter-clockwise clip polygon.
Polygon clip_convex(const Polygon& subject, const Polygon& clip);
Polygon clip_to_rectangle(const Polygon& p, double xmin, double xmax, double ymin, double ymax);

/// a minus b, as disjoint convex pieces.
std::vector<Polygon> subtract_convex(const Polygon& a, const Polygon& b);
/// Every piece minus b.
std::vector<Polygon> subtract_convex(const std::vector<Polygon>& pieces, const Polygon& b);

/// True when the intersection has positive area.
bool overlaps(const Polygon& a, const Polygon& b);

}  // namespace desurv

#include "desurv/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace desurv {
namespace {

constexpr double kAreaEps = 1e-15;

double cross(Point2 o, Point2 a, Point2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

}  // namespace

double area(const Polygon& p) {
  if (p.size() < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point2& a = p[i];
    const Point2& b = p[(i + 1) % p.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return std::abs(0.5 * s);
}

double area(const std::vector<Polygon>& pieces) {
  double s = 0.0;
  for (const Polygon& p : pieces) s += area(p);
  return s;
}

Polygon rectangle(double cx, double cy, double half_x, double half_y) {
  return {{cx - half_x, cy - half_y}, {cx + half_x, cy - half_y}, {cx + half_x, cy + half_y}, {cx - half_x, cy + half_y}};
}

Polygon circle_polygon(double cx, double cy, double r, int n) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double rv = r * std::sqrt(two_pi / (n * std::sin(two_pi / n)));
  Polygon p;
  p.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double a = two_pi * k / n;
    p.push_back({cx + rv * std::cos(a), cy + rv * std::sin(a)});
  }
  return p;
}

Polygon convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  if (pts.size() < 3) return pts;
  Polygon h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0.0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

Polygon scaled_about(const Polygon& p, Point2 c, double k) {
  Polygon out;
  out.reserve(p.size());
  for (const Point2& v : p) out.push_back({c.x + k * (v.x - c.x), c.y + k * (v.y - c.y)});
  return out;
}

Polygon clip_half_plane(const Polygon& p, Point2 a, Point2 b) {
  Polygon out;
  if (p.empty()) return out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point2& cur = p[i];
    const Point2& nxt = p[(i + 1) % p.size()];
    const double dc = cross(a, b, cur), dn = cross(a, b, nxt);
    if (dc >= 0.0) out.push_back(cur);
    if ((dc >= 0.0) != (dn >= 0.0)) {
      const double t = dc / (dc - dn);
      out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  if (out.size() < 3 || area(out) <= kAreaEps) out.clear();
  return out;
}

Polygon clip_convex(const Polygon& subject, const Polygon& clip) {
  Polygon out = subject;
  for (std::size_t i = 0; i < clip.size() && !out.empty(); ++i) {
    out = clip_half_plane(out, clip[i], clip[(i + 1) % clip.size()]);
  }
  return out;
}

Polygon clip_to_rectangle(const Polygon& p, double xmin, double xmax, double ymin, double ymax) {
  return clip_convex(p, {{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}});
}

std::vector<Polygon> subtract_convex(const Polygon& a, const Polygon& b) {
  if (b.size() < 3 || !overlaps(a, b)) return {a};
  std::vector<Polygon> pieces;
  Polygon rest = a;
  for (std::size_t i = 0; i < b.size() && !rest.empty(); ++i) {
    const Point2& p = b[i];
    const Point2& q = b[(i + 1) % b.size()];
    Polygon outside = clip_half_plane(rest, q, p);
    if (!outside.empty()) pieces.push_back(std::move(outside));
    rest = clip_half_plane(rest, p, q);
  }
  return pieces;
}

std::vector<Polygon> subtract_convex(const std::vector<Polygon>& pieces, const Polygon& b) {
  std::vector<Polygon> out;
  for (const Polygon& p : pieces) {
    for (Polygon& r : subtract_convex(p, b)) out.push_back(std::move(r));
  }
  return out;
}

bool overlaps(const Polygon& a, const Polygon& b) { return area(clip_convex(a, b)) > kAreaEps; }

}  // namespace desurv

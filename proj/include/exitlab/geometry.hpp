#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <tuple>
#include <variant>
#include <vector>

#include "exitlab/common.hpp"

// Catalog of simply connected planar domains with membership tests, exact
// boundary-distance queries, and the local boundary linearization the
// sampler's bridge correction needs.

namespace exitlab {

inline constexpr double kPi = std::numbers::pi;

// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

enum class SchlichtMapId { Identity, Koebe, RotatedKoebe };

// Open disk of the given radius centered at the origin.
struct Disk {
  double radius = 1.0;
};

// {z : Re(z e^{-i normal_angle}) < offset}; normal_angle = 0 gives Re(z) < offset.
struct HalfPlane {
  double offset = 1.0;
  double normal_angle = 0.0;
};

// Plane minus the closed ray {s e^{i psi} : s >= alpha}; psi = pi gives the
// classical slit plane C \ (-inf, -alpha].
struct SlitPlane {
  double alpha = 0.25;
  double psi = kPi;
};

// {z != 0 : |arg(z e^{-i axis})| < half_angle}. The vertex is a boundary
// point, so paths never start there; canonical starts sit on the axis.
struct Wedge {
  double half_angle = kPi / 4.0;
  double axis = 0.0;
};

// Bounded star-shaped test domain {r e^{i phi} : r < base + amp cos(lobes phi)}.
// Requires 0 <= amp < base; the minimum boundary radius base - amp equals the
// origin-to-boundary distance.
struct StarLikeTest {
  double base = 0.9;
  double amp = 0.4;
  int lobes = 3;
};

// Image domain of a catalog Schlicht map; membership and distance delegate to
// the explicit image description (no numerical map inversion).
struct MappedDisk {
  SchlichtMapId map = SchlichtMapId::Koebe;
  double phase = 0.0;  // used by RotatedKoebe only
};

using DomainSpec =
    std::variant<Disk, HalfPlane, SlitPlane, Wedge, StarLikeTest, MappedDisk>;

// Local linearization of the boundary: nearest boundary point and the angle
// of the inward normal there.
struct BoundaryLine {
  Point foot;
  double inward_normal = 0.0;
};

// Explicit image of each catalog map. Images are themselves catalog domains,
// never MappedDisk, so delegation terminates.
inline DomainSpec mapped_image(SchlichtMapId id, double phase = 0.0) {
  switch (id) {
    case SchlichtMapId::Identity:
      return Disk{1.0};
    case SchlichtMapId::Koebe:
      return SlitPlane{0.25, kPi};
    case SchlichtMapId::RotatedKoebe:
      // e^{-i phase} k(e^{i phase} z) removes the ray at angle pi - phase.
      return SlitPlane{0.25, wrap_angle(kPi - phase)};
  }
  throw UnsupportedVariant("mapped_image: unknown map id");
}

namespace geo {

// Distance, nearest boundary point, and the unit inward normal of the local
// boundary line. Valid for interior z; dist > 0 there.
struct BoundaryQuery {
  double dist = 0.0;
  Point foot{};
  Point inward{};
};

// --- StarLikeTest support -------------------------------------------------
//
// The boundary curve is tabulated once per parameter set; near-boundary
// queries scan a provably sufficient angular window of the table and then
// project onto the local boundary segment. Far from the boundary only a
// conservative lower bound on the distance is needed (it feeds the step-size
// rule, which is capped anyway), so the scan can be skipped.

struct StarTable {
  StarLikeTest shape;
  int bins = 2048;
  std::vector<double> bx, by;
  double rho_min = 0.0, rho_max = 0.0, half_chord = 0.0;

  explicit StarTable(const StarLikeTest& s) : shape(s) {
    if (!(s.base > 0.0) || s.amp < 0.0 || !(s.amp < s.base) || s.lobes < 0)
      throw InvalidParameter("StarLikeTest: need 0 <= amp < base, lobes >= 0");
    bx.resize(bins);
    by.resize(bins);
    rho_min = s.base - s.amp;
    rho_max = s.base + s.amp;
    double max_chord2 = 0.0;
    for (int i = 0; i < bins; ++i) {
      const double phi = 2.0 * kPi * i / bins;
      const double r = rho(phi);
      bx[i] = r * std::cos(phi);
      by[i] = r * std::sin(phi);
      if (i > 0) {
        const double dx = bx[i] - bx[i - 1], dy = by[i] - by[i - 1];
        max_chord2 = std::max(max_chord2, dx * dx + dy * dy);
      }
    }
    half_chord = 0.5 * std::sqrt(max_chord2);
  }

  double rho(double phi) const { return shape.base + shape.amp * std::cos(shape.lobes * phi); }

  Point vertex(int i) const {
    const int k = ((i % bins) + bins) % bins;
    return {bx[k], by[k]};
  }

  // Exact nearest point among the two boundary segments adjacent to vertex i.
  std::pair<double, Point> project_near(Point z, int i) const {
    double best = kInf;
    Point foot{};
    for (int seg = i - 1; seg <= i; ++seg) {
      const Point a = vertex(seg), b = vertex(seg + 1);
      const Point ab = b - a;
      const double len2 = std::norm(ab);
      double s = len2 > 0.0 ? std::clamp(((z - a).real() * ab.real() + (z - a).imag() * ab.imag()) / len2, 0.0, 1.0)
                            : 0.0;
      const Point p = a + s * ab;
      const double d2 = std::norm(z - p);
      if (d2 < best) {
        best = d2;
        foot = p;
      }
    }
    return {std::sqrt(best), foot};
  }

  // Nearest boundary point found by scanning vertices in an angular window
  // of +-half_window radians around phi_center, then refining on segments.
  std::pair<double, Point> nearest_in_window(Point z, double phi_center,
                                             double half_window) const {
    const int c = int(std::floor(phi_center / (2.0 * kPi) * bins));
    const int w = std::min(bins / 2, int(std::ceil(half_window / (2.0 * kPi) * bins)) + 1);
    double best = kInf;
    int best_i = c;
    for (int i = c - w; i <= c + w; ++i) {
      const int k = ((i % bins) + bins) % bins;
      const double dx = z.real() - bx[k], dy = z.imag() - by[k];
      const double d2 = dx * dx + dy * dy;
      if (d2 < best) {
        best = d2;
        best_i = i;
      }
    }
    return project_near(z, best_i);
  }

  std::pair<double, Point> nearest(Point z) const {
    return nearest_in_window(z, std::arg(z), kPi);  // full-circle scan
  }
};

// Shared per-parameter-set tables; geometry functions are pure and may be
// called concurrently.
inline const StarTable& star_table(const StarLikeTest& s) {
  static std::mutex mu;
  static std::map<std::tuple<double, double, int>, std::unique_ptr<StarTable>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(s.base, s.amp, s.lobes);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<StarTable>(s)).first;
  return *it->second;
}

// --- membership -----------------------------------------------------------

inline bool contains(const Disk& d, Point z) { return std::abs(z) < d.radius - kGeomTol; }

inline bool contains(const HalfPlane& h, Point z) {
  const double proj = z.real() * std::cos(h.normal_angle) + z.imag() * std::sin(h.normal_angle);
  return proj < h.offset - kGeomTol;
}

// w-frame: rotate by e^{-i psi} so the slit is [alpha, inf) on the real axis.
inline Point slit_frame(const SlitPlane& s, Point z) {
  return z * std::polar(1.0, -s.psi);
}

inline bool contains(const SlitPlane& s, Point z) {
  const Point w = slit_frame(s, z);
  return !(std::abs(w.imag()) <= kGeomTol && w.real() >= s.alpha - kGeomTol);
}

inline bool contains(const Wedge& w, Point z) {
  if (std::abs(z) <= kGeomTol) return false;
  const double a = wrap_angle(std::arg(z) - w.axis);
  // angular tolerance scaled to an absolute distance tolerance
  return std::abs(a) < w.half_angle - kGeomTol / std::abs(z);
}

inline bool contains(const StarLikeTest& s, Point z) {
  const double r = std::abs(z);
  if (r <= kGeomTol) return true;
  return r < s.base + s.amp * std::cos(s.lobes * std::arg(z)) - kGeomTol;
}

inline bool contains_spec(const DomainSpec& d, Point z);

inline bool contains(const MappedDisk& m, Point z) {
  return contains_spec(mapped_image(m.map, m.phase), z);
}

inline bool contains_spec(const DomainSpec& d, Point z) {
  return std::visit([z](const auto& v) { return contains(v, z); }, d);
}

// --- boundary queries (no interiority precondition) ------------------------

inline BoundaryQuery query_raw(const Disk& d, Point z) {
  const double r = std::abs(z);
  Point foot = r > 0.0 ? Point(d.radius * z.real() / r, d.radius * z.imag() / r)
                       : Point(d.radius, 0.0);
  const Point in = r > 0.0 ? Point(-z.real() / r, -z.imag() / r) : Point(-1.0, 0.0);
  return {d.radius - r, foot, in};
}

inline BoundaryQuery query_raw(const HalfPlane& h, Point z) {
  const Point u = std::polar(1.0, h.normal_angle);
  const double proj = z.real() * u.real() + z.imag() * u.imag();
  return {h.offset - proj, z + (h.offset - proj) * u, -u};
}

inline BoundaryQuery query_raw(const SlitPlane& s, Point z) {
  const Point w = slit_frame(s, z);
  Point foot_w;
  if (w.real() >= s.alpha) {
    foot_w = Point(w.real(), 0.0);
  } else {
    foot_w = Point(s.alpha, 0.0);  // slit tip
  }
  const Point back = std::polar(1.0, s.psi);
  const Point foot = foot_w * back;
  const double dist = std::abs(z - foot);
  const Point in = dist > 0.0 ? (z - foot) / dist : Point(0.0, 1.0);
  return {dist, foot, in};
}

// Nearest point of the ray {s u : s >= 0} from p.
inline Point ray_foot(Point p, Point u) {
  const double s = std::max(0.0, p.real() * u.real() + p.imag() * u.imag());
  return s * u;
}

inline BoundaryQuery query_raw(const Wedge& w, Point z) {
  const Point rot = std::polar(1.0, -w.axis);
  const Point local = z * rot;
  const Point up = std::polar(1.0, w.half_angle);
  const Point un = std::conj(up);
  const Point fp = ray_foot(local, up);
  const Point fn = ray_foot(local, un);
  const double dp = std::abs(local - fp), dn = std::abs(local - fn);
  const Point foot_local = dp <= dn ? fp : fn;
  const double dist = std::min(dp, dn);
  const Point foot = foot_local * std::conj(rot);
  const Point in = dist > 0.0 ? (z - foot) / dist : std::polar(1.0, w.axis);
  return {dist, foot, in};
}

inline BoundaryQuery query_raw(const StarLikeTest& s, Point z) {
  auto [dist, foot] = star_table(s).nearest(z);
  const Point in = dist > 0.0 ? (z - foot) / dist : Point(-foot.real(), -foot.imag()) / std::abs(foot);
  return {dist, foot, in};
}

inline BoundaryQuery query_raw_spec(const DomainSpec& d, Point z);

inline BoundaryQuery query_raw(const MappedDisk& m, Point z) {
  return query_raw_spec(mapped_image(m.map, m.phase), z);
}

inline BoundaryQuery query_raw_spec(const DomainSpec& d, Point z) {
  return std::visit([z](const auto& v) { return query_raw(v, z); }, d);
}

// Depth of an exterior point past the boundary, used for the sub-step
// crossing-time interpolation. Approximate for StarLikeTest (radial depth).
inline double penetration(const Disk& d, Point z) { return std::max(0.0, std::abs(z) - d.radius); }
inline double penetration(const HalfPlane& h, Point z) {
  const double proj = z.real() * std::cos(h.normal_angle) + z.imag() * std::sin(h.normal_angle);
  return std::max(0.0, proj - h.offset);
}
inline double penetration(const SlitPlane&, Point) { return 0.0; }  // slit has empty exterior
inline double penetration(const Wedge& w, Point z) { return query_raw(w, z).dist; }
inline double penetration(const StarLikeTest& s, Point z) {
  const double r = std::abs(z);
  const double rho = r > 0.0 ? s.base + s.amp * std::cos(s.lobes * std::arg(z)) : s.base + s.amp;
  return std::max(0.0, r - rho);
}
inline double penetration(const MappedDisk& m, Point z) {
  return std::visit([z](const auto& v) { return penetration(v, z); }, mapped_image(m.map, m.phase));
}

// Nearest boundary point of an arbitrary point (projection onto the boundary).
inline Point project_boundary(const Disk& d, Point z) {
  const double r = std::abs(z);
  return r > 0.0 ? Point(d.radius * z.real() / r, d.radius * z.imag() / r) : Point(d.radius, 0.0);
}
inline Point project_boundary(const HalfPlane& h, Point z) { return query_raw(h, z).foot; }
inline Point project_boundary(const SlitPlane& s, Point z) { return query_raw(s, z).foot; }
inline Point project_boundary(const Wedge& w, Point z) {
  const Point rot = std::polar(1.0, -w.axis);
  const Point local = z * rot;
  const Point fp = ray_foot(local, std::polar(1.0, w.half_angle));
  const Point fn = ray_foot(local, std::polar(1.0, -w.half_angle));
  const Point f = std::abs(local - fp) <= std::abs(local - fn) ? fp : fn;
  return f * std::conj(rot);
}
inline Point project_boundary(const StarLikeTest& s, Point z) {
  const double r = std::abs(z);
  if (r == 0.0) return star_table(s).nearest(Point(1e-300, 0.0)).second;
  const double phi = std::arg(z);
  const double rho = s.base + s.amp * std::cos(s.lobes * phi);
  return std::polar(rho, phi);
}
inline Point project_boundary(const MappedDisk& m, Point z) {
  return std::visit([z](const auto& v) { return project_boundary(v, z); },
                    mapped_image(m.map, m.phase));
}

}  // namespace geo

// --- public operations ------------------------------------------------------

inline bool contains(const DomainSpec& d, Point z) { return geo::contains_spec(d, z); }

inline double boundary_distance(const DomainSpec& d, Point z) {
  if (!contains(d, z)) throw PointOutsideDomain("boundary_distance: point not interior");
  return geo::query_raw_spec(d, z).dist;
}

// d(V): distance from the origin to the boundary.
inline double d_origin(const DomainSpec& d) { return boundary_distance(d, Point(0.0, 0.0)); }

inline BoundaryLine nearest_boundary(const DomainSpec& d, Point z) {
  if (!contains(d, z)) throw PointOutsideDomain("nearest_boundary: point not interior");
  const auto q = geo::query_raw_spec(d, z);
  return {q.foot, std::atan2(q.inward.imag(), q.inward.real())};
}

// Angular measure of the largest subarc of domain ∩ {|z| = r}. Defined for
// the star-like catalog variants; non-increasing in r for each of them.
inline double arc_measure(const DomainSpec& d, double r) {
  if (!(r > 0.0)) throw InvalidParameter("arc_measure: need r > 0");
  if (std::holds_alternative<SlitPlane>(d)) {
    // A full circle minus at most one point always leaves one subarc of
    // measure 2*pi.
    return 2.0 * kPi;
  }
  if (const auto* w = std::get_if<Wedge>(&d)) return 2.0 * w->half_angle;
  if (const auto* s = std::get_if<StarLikeTest>(&d)) {
    if (r < s->base - s->amp) return 2.0 * kPi;
    if (s->lobes == 0 || s->amp == 0.0) return r < s->base + s->amp ? 2.0 * kPi : 0.0;
    if (r >= s->base + s->amp) return 0.0;
    // {phi : cos(lobes*phi) > (r - base)/amp} is `lobes` arcs of equal width.
    const double c = (r - s->base) / s->amp;
    return 2.0 * std::acos(std::clamp(c, -1.0, 1.0)) / s->lobes;
  }
  throw UnsupportedVariant("arc_measure: domain is not a star-like catalog variant");
}

// H(V) = sup{p > 0 : E[(T^V)^p] < inf}. Closed forms per variant; the
// star-like value comes from the limiting arc measure, which vanishes for the
// bounded test family, so all moments are finite there.
inline double hardy_number(const DomainSpec& d) {
  if (std::holds_alternative<Disk>(d)) return kInf;
  if (std::holds_alternative<HalfPlane>(d)) return 0.5;
  if (std::holds_alternative<SlitPlane>(d)) return 0.25;
  if (const auto* w = std::get_if<Wedge>(&d)) return kPi / (4.0 * w->half_angle);
  if (std::holds_alternative<StarLikeTest>(d)) {
    const double limit_arc = 0.0;  // bounded domain: arc_measure(r) = 0 for large r
    return limit_arc > 0.0 ? kPi / (2.0 * limit_arc) : kInf;
  }
  throw UnsupportedVariant("hardy_number: unsupported variant");
}

// Canonical star-like test family, parametrized by the origin-to-boundary
// distance d. Both members have min rho = d.
inline StarLikeTest star_three_lobes(double d) { return {1.8 * d, 0.8 * d, 3}; }
inline StarLikeTest star_cardioid(double d) { return {3.0 * d, 2.0 * d, 1}; }

}  // namespace exitlab

#pragma once

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <numbers>

#include "qlin/error.hpp"

namespace qlin::spectra {

// Closed arc on the projective line, parametrized by angle in [0, pi).
struct ProjectiveInterval {
  double center = 0.0;
  double radius = 0.0;
};

struct PingPongResult {
  bool certified = false;
  // attracting/repelling intervals for a, then for b
  std::array<ProjectiveInterval, 4> intervals{};
};

namespace detail {

inline constexpr double kHalfTurn = std::numbers::pi;

inline double wrap_angle(double t) {
  t = std::fmod(t, kHalfTurn);
  if (t < 0) t += kHalfTurn;
  return t;
}

inline double project(const Eigen::MatrixXd& m, double theta) {
  const double x = m(0, 0) * std::cos(theta) + m(0, 1) * std::sin(theta);
  const double y = m(1, 0) * std::cos(theta) + m(1, 1) * std::sin(theta);
  return wrap_angle(std::atan2(y, x));
}

inline double circ_dist(double s, double t) {
  const double d = std::fabs(wrap_angle(s) - wrap_angle(t));
  return std::min(d, kHalfTurn - d);
}

// Length of the counterclockwise arc from s to t.
inline double ccw_span(double s, double t) { return wrap_angle(t - s); }

inline bool in_interval(double theta, const ProjectiveInterval& iv, double margin) {
  return circ_dist(theta, iv.center) <= iv.radius - margin;
}

// Attracting fixed direction of a hyperbolic matrix on the projective line.
inline double attracting_angle(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  int top = 0;
  for (int i = 1; i < 2; ++i)
    if (std::abs(es.eigenvalues()[i]) > std::abs(es.eigenvalues()[top])) top = i;
  const Eigen::Vector2cd v = es.eigenvectors().col(top);
  return wrap_angle(std::atan2(v[1].real(), v[0].real()));
}

// The image of the closed arc complementary to `source` under m lies inside
// `target`, with a safety margin. The complement arc runs counterclockwise
// from source.center + source.radius to source.center - source.radius.
inline bool maps_complement_inside(const Eigen::MatrixXd& m, const ProjectiveInterval& source,
                                   const ProjectiveInterval& target, double margin) {
  const double u = wrap_angle(source.center + source.radius);
  const double v = wrap_angle(source.center - source.radius);
  const double mid = wrap_angle(u + ccw_span(u, v) / 2.0);
  const double iu = project(m, u);
  const double iv = project(m, v);
  const double imid = project(m, mid);
  if (!in_interval(iu, target, margin) || !in_interval(iv, target, margin) ||
      !in_interval(imid, target, margin))
    return false;
  // The image arc is whichever of the two arcs between iu and iv contains
  // the image of the midpoint; it must fit inside the target.
  const double arc_len =
      ccw_span(iu, imid) <= ccw_span(iu, iv) ? ccw_span(iu, iv) : ccw_span(iv, iu);
  return arc_len <= 2.0 * target.radius;
}

}  // namespace detail

// Searches for four pairwise disjoint closed intervals around the fixed
// directions of a^{+-1} and b^{+-1} such that each generator maps the
// complement of its repelling interval into its attracting interval. Success
// certifies that <a, b> plays ping-pong on the projective line (hence is
// free and convex cocompact); failure is merely "not certified".
inline PingPongResult ping_pong_certify(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  PingPongResult out;
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2)
    throw ValidationError("ping pong expects 2x2 matrices");
  if (std::abs(a.trace()) <= 2.0 || std::abs(b.trace()) <= 2.0) return out;

  const Eigen::MatrixXd ainv = a.inverse();
  const Eigen::MatrixXd binv = b.inverse();
  const std::array<double, 4> centers = {
      detail::attracting_angle(a), detail::attracting_angle(ainv),
      detail::attracting_angle(b), detail::attracting_angle(binv)};

  double min_gap = detail::kHalfTurn;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      min_gap = std::min(min_gap, detail::circ_dist(centers[i], centers[j]));
  if (min_gap < 1e-9) return out;  // coinciding fixed points

  const double margin = 1e-9;
  for (int step = 0; step < 60; ++step) {
    const double r = 0.49 * min_gap * std::pow(0.85, step);
    std::array<ProjectiveInterval, 4> iv;
    for (int i = 0; i < 4; ++i) iv[i] = ProjectiveInterval{centers[i], r};

    const bool ok = detail::maps_complement_inside(a, iv[1], iv[0], margin) &&
                    detail::maps_complement_inside(ainv, iv[0], iv[1], margin) &&
                    detail::maps_complement_inside(b, iv[3], iv[2], margin) &&
                    detail::maps_complement_inside(binv, iv[2], iv[3], margin);
    if (ok) {
      out.certified = true;
      out.intervals = iv;
      return out;
    }
  }
  return out;
}

}  // namespace qlin::spectra

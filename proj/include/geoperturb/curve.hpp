#pragma once

#include <cmath>
#include <vector>

#include "geoperturb/errors.hpp"
#include "geoperturb/finsler_field.hpp"
#include "geoperturb/metric_field.hpp"
#include "geoperturb/types.hpp"

namespace geoperturb {

// Discretized curve. Nodes are stored in unwrapped chart coordinates (a loop
// on a periodic chart ends at first node + one period vector); metric
// evaluations reduce internally. For a closed curve the stored last node is
// the congruent copy of the first.
struct CurveDiscrete {
  std::vector<Vec> nodes;
  std::vector<double> params;
  bool closed = false;

  int size() const { return static_cast<int>(nodes.size()); }
  double span() const { return params.back() - params.front(); }

  void validate(const ChartDomain& dom) const {
    if (size() < 3) fail(ErrorCode::TooFewNodes, "curve needs >= 3 nodes");
    if (params.size() != nodes.size())
      fail(ErrorCode::Precondition, "params/nodes size mismatch");
    for (size_t i = 1; i < params.size(); ++i)
      if (!(params[i] > params[i - 1]))
        fail(ErrorCode::Precondition, "params not strictly increasing");
    if (closed) {
      const Vec gap = dom.min_image(nodes.back() - nodes.front());
      if (gap.norm() > 1e-6) fail(ErrorCode::Precondition, "closed curve endpoints differ");
    }
  }

  bool uniform(double tol = 1e-9) const {
    const double h = params[1] - params[0];
    for (size_t i = 1; i + 1 < params.size(); ++i)
      if (std::abs((params[i + 1] - params[i]) - h) > tol * std::max(1.0, std::abs(h)))
        return false;
    return true;
  }

  // Node with index wrapped around a closed loop, shifted by the loop's
  // displacement vector so that coordinates stay unwrapped.
  Vec wrapped_node(int i) const {
    const int m = size() - 1;  // closed: nodes[m] == nodes[0] + shift
    if (!closed) return nodes[std::min(std::max(i, 0), m)];
    const Vec shift = nodes[m] - nodes[0];
    int k = i;
    double w = 0.0;
    while (k < 0) { k += m; w -= 1.0; }
    while (k >= m) { k -= m; w += 1.0; }
    return nodes[k] + w * shift;
  }
};

// 4th-order finite-difference velocities at every node (5-point stencils,
// one-sided at open ends). Requires uniform parameter spacing.
inline std::vector<Vec> node_velocities(const CurveDiscrete& c) {
  const int n = c.size();
  if (n < 7) fail(ErrorCode::TooFewNodes, "need >= 7 nodes for 4th-order stencils");
  if (!c.uniform()) fail(ErrorCode::Precondition, "stencils need uniform parameters");
  const double h = c.params[1] - c.params[0];
  std::vector<Vec> v(n);
  auto at = [&](int i) { return c.wrapped_node(i); };
  if (c.closed) {
    for (int i = 0; i < n; ++i)
      v[i] = (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) / (12.0 * h);
    return v;
  }
  for (int i = 2; i < n - 2; ++i)
    v[i] = (-c.nodes[i + 2] + 8.0 * c.nodes[i + 1] - 8.0 * c.nodes[i - 1] + c.nodes[i - 2]) /
           (12.0 * h);
  // one-sided 4th-order stencils at the ends
  auto fwd = [&](int i, int s) {
    return (-25.0 * c.nodes[i] + 48.0 * c.nodes[i + s] - 36.0 * c.nodes[i + 2 * s] +
            16.0 * c.nodes[i + 3 * s] - 3.0 * c.nodes[i + 4 * s]) /
           (12.0 * h * s);
  };
  v[0] = fwd(0, 1);
  v[1] = (-3.0 * c.nodes[0] - 10.0 * c.nodes[1] + 18.0 * c.nodes[2] - 6.0 * c.nodes[3] +
          c.nodes[4]) /
         (12.0 * h);
  v[n - 1] = fwd(n - 1, -1);
  v[n - 2] = -(-3.0 * c.nodes[n - 1] - 10.0 * c.nodes[n - 2] + 18.0 * c.nodes[n - 3] -
               6.0 * c.nodes[n - 4] + c.nodes[n - 5]) /
             (12.0 * h);
  return v;
}

struct LengthEnergy {
  double length = 0.0;
  double energy = 0.0;
};

namespace detail {

// Composite Simpson over uniform samples (3/8 rule patch for an odd tail).
inline double simpson(const std::vector<double>& w, double h) {
  const int n = static_cast<int>(w.size());
  if (n == 2) return 0.5 * h * (w[0] + w[1]);
  double s = 0.0;
  int last = n - 1;
  if ((n - 1) % 2 != 0) {
    // 3/8 rule on the final three intervals
    last = n - 4;
    s += 3.0 * h / 8.0 * (w[n - 4] + 3.0 * w[n - 3] + 3.0 * w[n - 2] + w[n - 1]);
  }
  for (int i = 0; i + 2 <= last; i += 2)
    s += h / 3.0 * (w[i] + 4.0 * w[i + 1] + w[i + 2]);
  return s;
}

template <typename SpeedFn>
LengthEnergy length_energy_impl(const CurveDiscrete& c, SpeedFn speed) {
  std::vector<double> w(c.size());
  const std::vector<Vec> vel = node_velocities(c);
  for (int i = 0; i < c.size(); ++i) w[i] = speed(c.nodes[i], vel[i]);
  const double h = c.params[1] - c.params[0];
  LengthEnergy le;
  le.length = simpson(w, h);
  std::vector<double> w2(w.size());
  for (size_t i = 0; i < w.size(); ++i) w2[i] = w[i] * w[i];
  le.energy = 0.5 * simpson(w2, h);
  return le;
}

}  // namespace detail

// Length int |c'| and energy 1/2 int |c'|^2 by node-wise 4th-order velocities
// and composite Simpson quadrature. 2 E * span >= L^2 with equality iff the
// speed is constant (Cauchy-Schwarz with nonnegative quadrature weights).
inline LengthEnergy curve_length(const MetricField& field, const CurveDiscrete& c) {
  c.validate(field.domain);
  return detail::length_energy_impl(
      c, [&](const Vec& x, const Vec& v) { return metric_norm(field, x, v); });
}

inline LengthEnergy curve_length(const FinslerField& field, const CurveDiscrete& c) {
  c.validate(field.domain);
  return detail::length_energy_impl(c, [&](const Vec& x, const Vec& v) { return field(x, v); });
}

// Uniformly sampled curve from a callable t -> point.
template <typename Fn>
CurveDiscrete sample_curve(Fn&& fn, double t0, double t1, int count, bool closed = false) {
  CurveDiscrete c;
  c.closed = closed;
  c.nodes.reserve(count);
  c.params.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double t = t0 + (t1 - t0) * static_cast<double>(i) / (count - 1);
    c.params.push_back(t);
    c.nodes.push_back(fn(t));
  }
  return c;
}

}  // namespace geoperturb

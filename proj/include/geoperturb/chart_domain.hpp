#pragma once

#include <cmath>
#include <string>

#include "geoperturb/errors.hpp"
#include "geoperturb/types.hpp"

namespace geoperturb {

// One coordinate chart. Axes may carry an optional period (flat-torus style);
// a periodic axis has no box constraint, coordinates live on R mod period.
struct ChartDomain {
  int dim = 0;
  Vec lo;      // per-axis lower bound (ignored on periodic axes)
  Vec hi;      // per-axis upper bound (ignored on periodic axes)
  Vec period;  // per-axis period, 0 = not periodic

  static ChartDomain box(const Vec& lo, const Vec& hi) {
    ChartDomain d;
    d.dim = static_cast<int>(lo.size());
    d.lo = lo;
    d.hi = hi;
    d.period = Vec::Zero(d.dim);
    d.validate();
    return d;
  }

  static ChartDomain torus(const Vec& periods) {
    ChartDomain d;
    d.dim = static_cast<int>(periods.size());
    d.lo = Vec::Zero(d.dim);
    d.hi = periods;
    d.period = periods;
    d.validate();
    return d;
  }

  void validate() const {
    if (dim < 2) fail(ErrorCode::DomainError, "chart dimension must be >= 2");
    for (int i = 0; i < dim; ++i) {
      if (period[i] < 0.0) fail(ErrorCode::DomainError, "negative period");
      if (period[i] == 0.0 && !(lo[i] < hi[i]))
        fail(ErrorCode::DomainError, "empty box on axis " + std::to_string(i));
    }
  }

  bool periodic(int axis) const { return period[axis] > 0.0; }

  // Canonical representative: periodic axes reduced into [0, period).
  Vec reduce(const Vec& x) const {
    Vec r = x;
    for (int i = 0; i < dim; ++i) {
      if (periodic(i)) {
        r[i] = std::fmod(r[i], period[i]);
        if (r[i] < 0.0) r[i] += period[i];
      }
    }
    return r;
  }

  // Shortest displacement congruent to dx (minimum image on periodic axes).
  Vec min_image(const Vec& dx) const {
    Vec r = dx;
    for (int i = 0; i < dim; ++i) {
      if (periodic(i)) {
        r[i] = std::remainder(r[i], period[i]);
      }
    }
    return r;
  }

  bool contains(const Vec& x, double margin = 0.0) const {
    for (int i = 0; i < dim; ++i) {
      if (periodic(i)) continue;
      if (x[i] < lo[i] + margin || x[i] > hi[i] - margin) return false;
    }
    return true;
  }

  Vec sample(Rng& rng) const {
    Vec x(dim);
    for (int i = 0; i < dim; ++i) {
      const double a = periodic(i) ? 0.0 : lo[i];
      const double b = periodic(i) ? period[i] : hi[i];
      std::uniform_real_distribution<double> ud(a, b);
      x[i] = ud(rng);
    }
    return x;
  }
};

}  // namespace geoperturb

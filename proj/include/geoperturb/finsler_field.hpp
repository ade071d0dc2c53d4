#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "geoperturb/errors.hpp"
#include "geoperturb/metric_field.hpp"
#include "geoperturb/types.hpp"

namespace geoperturb {

// A reversible Finsler metric on one chart: (point, vector) -> norm,
// positively 1-homogeneous in the vector argument.
struct FinslerField {
  ChartDomain domain;
  std::function<double(const Vec&, const Vec&)> f_fn;
  double inj = 1.0;
  std::string name = "finsler";

  int dim() const { return domain.dim; }

  double operator()(const Vec& x, const Vec& v) const {
    return f_fn(domain.reduce(x), v);
  }
};

// f(x,v) = sqrt(g_x(v,v)): the Finsler metric of a Riemannian one.
inline FinslerField riemannian_square(const MetricField& g) {
  FinslerField f;
  f.domain = g.domain;
  f.inj = g.inj;
  f.name = g.name + "-square";
  f.f_fn = [g](const Vec& x, const Vec& v) { return std::sqrt(v.dot(metric_eval(g, x) * v)); };
  return f;
}

// f(x,v) = (sum v_i^4)^{1/4}; reversible and 1-homogeneous but with a
// degenerate fundamental tensor at the axes. Used to exercise the
// finite-difference tensor path against an independent oracle.
inline FinslerField quartic_root(const ChartDomain& dom) {
  FinslerField f;
  f.domain = dom;
  f.inj = 1.0;
  f.name = "quartic-root";
  f.f_fn = [](const Vec&, const Vec& v) {
    double s = 0.0;
    for (int i = 0; i < v.size(); ++i) s += v[i] * v[i] * v[i] * v[i];
    return std::pow(s, 0.25);
  };
  return f;
}

// Strongly convex non-Riemannian blend: f^2 = g(v,v) + lambda*sqrt(sum v^4).
inline FinslerField quartic_mix(const MetricField& g, double lambda) {
  FinslerField f;
  f.domain = g.domain;
  f.inj = g.inj;
  f.name = g.name + "-quartic-mix";
  f.f_fn = [g, lambda](const Vec& x, const Vec& v) {
    double q = 0.0;
    for (int i = 0; i < v.size(); ++i) q += v[i] * v[i] * v[i] * v[i];
    return std::sqrt(v.dot(metric_eval(g, x) * v) + lambda * std::sqrt(q));
  };
  return f;
}

namespace detail {

// Mixed second difference of F = f^2/2 along (ei, ej) at step h.
inline double mixed_second_difference(const FinslerField& ff, const Vec& x, const Vec& v,
                                      const Vec& ei, const Vec& ej, double h) {
  auto F = [&](const Vec& u) {
    const double val = ff(x, u);
    return 0.5 * val * val;
  };
  const double fpp = F(v + h * ei + h * ej);
  const double fpm = F(v + h * ei - h * ej);
  const double fmp = F(v - h * ei + h * ej);
  const double fmm = F(v - h * ei - h * ej);
  return (fpp - fpm - fmp + fmm) / (4.0 * h * h);
}

}  // namespace detail

// Fundamental tensor g_v(x) = 1/2 d^2/ds dt f^2(v + s e_i + t e_j). Central
// second differences at three step sizes with Richardson extrapolation; the
// two extrapolants must agree or the field is declared non-smooth at v.
inline Mat finsler_fundamental_tensor(const FinslerField& ff, const Vec& x, const Vec& v_in) {
  const int n = ff.dim();
  const double vnorm = v_in.norm();
  if (vnorm < 1e-12) fail(ErrorCode::NonSmoothAtVector, ff.name + ": zero vector");
  const Vec v = v_in / vnorm;  // g_{lambda v} = g_v by 0-homogeneity

  const double steps[3] = {1e-3, 5e-4, 2.5e-4};
  Mat d[3];
  for (int s = 0; s < 3; ++s) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double val = detail::mixed_second_difference(ff, x, v, Vec::Unit(n, i),
                                                           Vec::Unit(n, j), steps[s]);
        m(i, j) = val;
        m(j, i) = val;
      }
    }
    d[s] = m;
  }
  const Mat e1 = (4.0 * d[1] - d[0]) / 3.0;
  const Mat e2 = (4.0 * d[2] - d[1]) / 3.0;
  const double scale = std::max(1.0, e2.cwiseAbs().maxCoeff());
  if ((e2 - e1).cwiseAbs().maxCoeff() / scale > 1e-4)
    fail(ErrorCode::NonSmoothAtVector,
         ff.name + ": Richardson extrapolants disagree (f not C^2 at v)");
  return symmetrized((16.0 * e2 - e1) / 15.0);
}

// Legendre transform L(v) = g_v(., v) as a covector (coefficient vector).
inline Vec legendre_transform(const FinslerField& ff, const Vec& x, const Vec& v) {
  if (v.norm() < 1e-12) fail(ErrorCode::NonSmoothAtVector, ff.name + ": zero vector");
  const Mat gv = finsler_fundamental_tensor(ff, x, v);
  // restore 1-homogeneity: L(v) = g_{v/|v|}(., v)
  return gv * v;
}

}  // namespace geoperturb

#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "geoperturb/chart_domain.hpp"
#include "geoperturb/errors.hpp"
#include "geoperturb/types.hpp"

namespace geoperturb {

// Third-order array dg[k](i,j) = d g_ij / d x_k.
using MetricDeriv = std::vector<Mat>;

// A Riemannian metric on one chart: point -> SPD matrix. An analytic
// derivative callback is optional; central differences with fd_step are the
// fallback. Constant-coefficient metrics set `flat` so downstream code can
// take closed-form paths (straight geodesics, exact exponential map).
struct MetricField {
  ChartDomain domain;
  std::function<Mat(const Vec&)> eval_fn;
  std::function<MetricDeriv(const Vec&)> deriv_fn;  // may be empty
  double fd_step = 1e-5;
  bool flat = false;          // eval is constant over the chart
  double inj = 1.0;           // declared injectivity bound of the scenario
  std::string name = "metric";

  int dim() const { return domain.dim; }
};

inline MetricField constant_metric(const ChartDomain& dom, const Mat& g,
                                   double inj, const std::string& name) {
  MetricField f;
  f.domain = dom;
  f.eval_fn = [g](const Vec&) { return g; };
  f.deriv_fn = [n = dom.dim](const Vec&) { return MetricDeriv(n, Mat::Zero(n, n)); };
  f.flat = true;
  f.inj = inj;
  f.name = name;
  return f;
}

// Pointwise metric value with periodic reduction, domain and SPD checks.
inline Mat metric_eval(const MetricField& field, const Vec& x) {
  const Vec xr = field.domain.reduce(x);
  if (!field.domain.contains(xr))
    fail(ErrorCode::DomainError, field.name + ": point outside chart box");
  Mat g = field.eval_fn(xr);
  g = symmetrized(g);
  if (!is_positive_definite(g))
    fail(ErrorCode::DegenerateMetric, field.name + ": metric not positive definite");
  return g;
}

inline double metric_inner(const MetricField& field, const Vec& x, const Vec& u,
                           const Vec& v) {
  return u.dot(metric_eval(field, x) * v);
}

inline double metric_norm(const MetricField& field, const Vec& x, const Vec& u) {
  return std::sqrt(metric_inner(field, x, u, u));
}

// dg_ij/dx_k, analytic when available, else second-order central differences.
inline MetricDeriv metric_deriv(const MetricField& field, const Vec& x) {
  const int n = field.dim();
  if (field.deriv_fn) return field.deriv_fn(field.domain.reduce(x));
  MetricDeriv dg(n);
  const double h = field.fd_step;
  for (int k = 0; k < n; ++k) {
    Vec xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    dg[k] = (metric_eval(field, xp) - metric_eval(field, xm)) / (2.0 * h);
  }
  return dg;
}

namespace detail {

inline Mat metric_inverse_checked(const MetricField& field, const Mat& g) {
  Eigen::FullPivLU<Mat> lu(g);
  if (!lu.isInvertible() || lu.rcond() < 1e-12)
    fail(ErrorCode::SingularMetric, field.name + ": metric inversion ill-conditioned");
  return lu.inverse();
}

}  // namespace detail

// Christoffel symbols of the second kind, gamma[k](i,j) = Gamma^k_ij.
inline std::vector<Mat> christoffel(const MetricField& field, const Vec& x) {
  const int n = field.dim();
  if (field.flat) return std::vector<Mat>(n, Mat::Zero(n, n));
  if (!field.deriv_fn && !field.domain.contains(field.domain.reduce(x), field.fd_step))
    fail(ErrorCode::DomainError, field.name + ": point too close to chart boundary for fd");
  const Mat g = metric_eval(field, x);
  const Mat ginv = detail::metric_inverse_checked(field, g);
  const MetricDeriv dg = metric_deriv(field, x);
  std::vector<Mat> gamma(n, Mat::Zero(n, n));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l) {
          s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        }
        gamma[k](i, j) = 0.5 * s;
        gamma[k](j, i) = gamma[k](i, j);
      }
    }
  }
  return gamma;
}

// Gamma^k_ij u^i v^j for all k.
inline Vec christoffel_apply(const std::vector<Mat>& gamma, const Vec& u, const Vec& v) {
  const int n = static_cast<int>(gamma.size());
  Vec out(n);
  for (int k = 0; k < n; ++k) out[k] = u.dot(gamma[k] * v);
  return out;
}

}  // namespace geoperturb

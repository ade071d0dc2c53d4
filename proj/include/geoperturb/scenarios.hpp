#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "geoperturb/curve.hpp"
#include "geoperturb/errors.hpp"
#include "geoperturb/finsler_field.hpp"
#include "geoperturb/metric_field.hpp"
#include "geoperturb/types.hpp"

namespace geoperturb {

// A registered scenario: the metric, validated perturbation geometry
// defaults and whatever closed-geodesic seeds the chart supports.
struct Scenario {
  std::string name;
  MetricField field;
  double eta = 0.0;
  double eps = 0.0;
  double delta = 0.0;
  double s_max = 0.0;     // residual-certified displacement budget
  double s_budget = 0.0;  // disentangle displacement budget (<= delta)
  Vec base_point;         // canonical perturbation center
  double metric_lambda_min = 1.0;  // eigenvalue bounds over the chart
  double metric_lambda_max = 1.0;

  // closed-geodesic seeds (chart paths; non-uniform parametrization is fine)
  std::vector<CurveDiscrete> seeds;
  std::vector<std::string> seed_names;
};

namespace detail {

inline Vec vec3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

struct EllipsoidChart {
  Vec axes;            // semi-axes of the ellipsoid
  Vec pole, e1, e2;    // rotated orthonormal frame; pole avoids the principal planes

  static EllipsoidChart make(const Vec& axes) {
    EllipsoidChart ec;
    ec.axes = axes;
    ec.pole = vec3(1, 1, 1).normalized();
    Vec a = vec3(1, 0, 0);
    ec.e1 = (a - a.dot(ec.pole) * ec.pole).normalized();
    ec.e2 = Vec(3);
    ec.e2[0] = ec.pole[1] * ec.e1[2] - ec.pole[2] * ec.e1[1];
    ec.e2[1] = ec.pole[2] * ec.e1[0] - ec.pole[0] * ec.e1[2];
    ec.e2[2] = ec.pole[0] * ec.e1[1] - ec.pole[1] * ec.e1[0];
    return ec;
  }

  Vec sphere_point(double theta, double phi) const {
    return std::cos(theta) * pole + std::sin(theta) * (std::cos(phi) * e1 + std::sin(phi) * e2);
  }

  Vec embed(const Vec& x) const {
    const Vec n = sphere_point(x[0], x[1]);
    Vec p(3);
    for (int i = 0; i < 3; ++i) p[i] = axes[i] * n[i];
    return p;
  }

  Mat metric(const Vec& x) const {
    const double th = x[0], ph = x[1];
    const Vec m = std::cos(ph) * e1 + std::sin(ph) * e2;
    const Vec mp = -std::sin(ph) * e1 + std::cos(ph) * e2;
    Vec J1(3), J2(3);
    for (int i = 0; i < 3; ++i) {
      J1[i] = axes[i] * (-std::sin(th) * pole[i] + std::cos(th) * m[i]);
      J2[i] = axes[i] * (std::sin(th) * mp[i]);
    }
    Mat g(2, 2);
    g(0, 0) = J1.dot(J1);
    g(0, 1) = g(1, 0) = J1.dot(J2);
    g(1, 1) = J2.dot(J2);
    return g;
  }

  MetricDeriv metric_deriv(const Vec& x) const {
    const double th = x[0], ph = x[1];
    const Vec m = std::cos(ph) * e1 + std::sin(ph) * e2;
    const Vec mp = -std::sin(ph) * e1 + std::cos(ph) * e2;
    const Vec n = sphere_point(th, ph);
    Vec J1(3), J2(3), J1t(3), J2t(3), J1p(3), J2p(3);
    for (int i = 0; i < 3; ++i) {
      const double nth = -std::sin(th) * pole[i] + std::cos(th) * m[i];
      const double nph = std::sin(th) * mp[i];
      const double nthth = -n[i];
      const double nthph = std::cos(th) * mp[i];
      const double nphph = -std::sin(th) * m[i];
      J1[i] = axes[i] * nth;
      J2[i] = axes[i] * nph;
      J1t[i] = axes[i] * nthth;
      J2t[i] = axes[i] * nthph;
      J1p[i] = axes[i] * nthph;
      J2p[i] = axes[i] * nphph;
    }
    MetricDeriv dg(2, Mat::Zero(2, 2));
    dg[0](0, 0) = 2.0 * J1.dot(J1t);
    dg[0](0, 1) = dg[0](1, 0) = J1t.dot(J2) + J1.dot(J2t);
    dg[0](1, 1) = 2.0 * J2.dot(J2t);
    dg[1](0, 0) = 2.0 * J1.dot(J1p);
    dg[1](0, 1) = dg[1](1, 0) = J1p.dot(J2) + J1.dot(J2p);
    dg[1](1, 1) = 2.0 * J2.dot(J2p);
    return dg;
  }

  // Chart path of the great circle in the principal plane (i, j); its image
  // on the ellipsoid is the planar section with semi-axes (axes_i, axes_j).
  CurveDiscrete principal_circle_path(int i, int j, int count) const {
    CurveDiscrete c;
    c.closed = true;
    double prev_phi = 0.0;
    bool first = true;
    for (int k = 0; k < count; ++k) {
      const double tau = 2.0 * M_PI * static_cast<double>(k) / (count - 1);
      Vec n = Vec::Zero(3);
      n[i] = std::cos(tau);
      n[j] = std::sin(tau);
      const double th = std::acos(std::min(1.0, std::max(-1.0, n.dot(pole))));
      double phw = std::atan2(n.dot(e2), n.dot(e1));
      if (!first) {
        while (phw - prev_phi > M_PI) phw -= 2.0 * M_PI;
        while (phw - prev_phi < -M_PI) phw += 2.0 * M_PI;
      }
      first = false;
      prev_phi = phw;
      Vec x(2);
      x << th, phw;
      c.nodes.push_back(x);
      c.params.push_back(tau);
    }
    return c;
  }
};

inline void estimate_lambda_bounds(Scenario& sc, int grid = 12) {
  double lmin = 1e300, lmax = 0.0;
  const ChartDomain& dom = sc.field.domain;
  const int n = dom.dim;
  std::vector<int> idx(n, 0);
  const int total = static_cast<int>(std::pow(grid, n));
  for (int t = 0; t < total; ++t) {
    int rem = t;
    Vec x(n);
    for (int i = 0; i < n; ++i) {
      const int k = rem % grid;
      rem /= grid;
      const double a = dom.periodic(i) ? 0.0 : dom.lo[i];
      const double b = dom.periodic(i) ? dom.period[i] : dom.hi[i];
      x[i] = a + (b - a) * (k + 0.5) / grid;
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(metric_eval(sc.field, x), Eigen::EigenvaluesOnly);
    lmin = std::min(lmin, es.eigenvalues().minCoeff());
    lmax = std::max(lmax, es.eigenvalues().maxCoeff());
  }
  sc.metric_lambda_min = lmin;
  sc.metric_lambda_max = lmax;
}

}  // namespace detail

using ScenarioParams = std::map<std::string, double>;

inline double param_or(const ScenarioParams& p, const std::string& key, double dflt) {
  auto it = p.find(key);
  return it == p.end() ? dflt : it->second;
}

// Scenario registry. Names: euclidean | euclidean-r3 | flat-torus |
// torus-cross | sphere-chart | ellipsoid-113 | ellipsoid-chart | poly-test.
inline Scenario make_scenario(const std::string& name, const ScenarioParams& params = {}) {
  Scenario sc;
  sc.name = name;

  if (name == "euclidean" || name == "euclidean-r3") {
    const int dim = static_cast<int>(param_or(params, "dim", 3));
    const double half = param_or(params, "box_half", 2.0);
    sc.field = constant_metric(
        ChartDomain::box(Vec::Constant(dim, -half), Vec::Constant(dim, half)),
        Mat::Identity(dim, dim), 2.0 * half, name);
    sc.eta = param_or(params, "eta", 0.7);
    sc.eps = param_or(params, "eps", 0.095);
    sc.delta = param_or(params, "delta", 0.045);
    sc.s_max = param_or(params, "s_max", 4e-4);
    sc.s_budget = param_or(params, "s_budget", 0.04);
    sc.base_point = Vec::Zero(dim);
    return sc;
  }

  if (name == "flat-torus" || name == "torus-cross") {
    Vec periods;
    if (name == "torus-cross") {
      periods = detail::vec3(param_or(params, "period1", 1.0), param_or(params, "period2", 1.0),
                             param_or(params, "period3", 1.4));
    } else {
      const int dim = static_cast<int>(param_or(params, "dim", 2));
      periods = Vec::Constant(dim, 1.0);
      periods[dim - 1] = 1.3;
      if (params.count("period1")) periods[0] = params.at("period1");
      if (params.count("period2")) periods[1] = params.at("period2");
    }
    const int dim = static_cast<int>(periods.size());
    sc.field = constant_metric(ChartDomain::torus(periods), Mat::Identity(dim, dim),
                               0.5 * periods.minCoeff(), name);
    sc.eta = param_or(params, "eta", 0.15);
    sc.eps = param_or(params, "eps", 0.02);
    sc.delta = param_or(params, "delta", 0.008);
    sc.s_max = param_or(params, "s_max", 2e-4);
    sc.s_budget = param_or(params, "s_budget", 0.008);
    sc.base_point = Vec::Zero(dim);
    return sc;
  }

  if (name == "sphere-chart") {
    const double cap = param_or(params, "cap", 0.3);
    ChartDomain dom;
    dom.dim = 2;
    dom.lo = Vec(2);
    dom.hi = Vec(2);
    dom.period = Vec(2);
    dom.lo << cap, 0.0;
    dom.hi << M_PI - cap, 2.0 * M_PI;
    dom.period << 0.0, 2.0 * M_PI;
    sc.field.domain = dom;
    sc.field.eval_fn = [](const Vec& x) {
      Mat g = Mat::Identity(2, 2);
      const double s = std::sin(x[0]);
      g(1, 1) = s * s;
      return g;
    };
    sc.field.deriv_fn = [](const Vec& x) {
      MetricDeriv dg(2, Mat::Zero(2, 2));
      dg[0](1, 1) = 2.0 * std::sin(x[0]) * std::cos(x[0]);
      return dg;
    };
    sc.field.inj = M_PI;
    sc.field.name = name;
    sc.eta = param_or(params, "eta", 0.4);
    sc.eps = param_or(params, "eps", 0.05);
    sc.delta = param_or(params, "delta", 0.024);
    sc.s_max = param_or(params, "s_max", 2e-4);
    sc.s_budget = param_or(params, "s_budget", 0.02);
    sc.base_point = Vec(2);
    sc.base_point << M_PI / 2.0, 1.0;
    // equator seed
    CurveDiscrete eq;
    eq.closed = true;
    const int m = 257;
    for (int k = 0; k < m; ++k) {
      Vec x(2);
      x << M_PI / 2.0, 2.0 * M_PI * static_cast<double>(k) / (m - 1);
      eq.nodes.push_back(x);
      eq.params.push_back(2.0 * M_PI * static_cast<double>(k) / (m - 1));
    }
    sc.seeds.push_back(eq);
    sc.seed_names.push_back("equator");
    detail::estimate_lambda_bounds(sc);
    return sc;
  }

  if (name == "ellipsoid-113" || name == "ellipsoid-chart") {
    Vec axes = detail::vec3(param_or(params, "axis1", 1.0), param_or(params, "axis2", 1.1),
                            param_or(params, "axis3", 1.3));
    const auto ec = detail::EllipsoidChart::make(axes);
    const double cap = param_or(params, "cap", 0.35);
    ChartDomain dom;
    dom.dim = 2;
    dom.lo = Vec(2);
    dom.hi = Vec(2);
    dom.period = Vec(2);
    dom.lo << cap, 0.0;
    dom.hi << M_PI - cap, 2.0 * M_PI;
    dom.period << 0.0, 2.0 * M_PI;
    sc.field.domain = dom;
    sc.field.eval_fn = [ec](const Vec& x) { return ec.metric(x); };
    sc.field.deriv_fn = [ec](const Vec& x) { return ec.metric_deriv(x); };
    sc.field.inj = param_or(params, "inj", 1.2);
    sc.field.name = name;
    sc.eta = param_or(params, "eta", 0.35);
    sc.eps = param_or(params, "eps", 0.0496);
    sc.delta = param_or(params, "delta", 0.0225);
    sc.s_max = param_or(params, "s_max", 1.2e-4);
    sc.s_budget = param_or(params, "s_budget", 0.02);
    // crossing point of the (x,y) and (x,z) sections: the +x axis point
    Vec n = Vec::Zero(3);
    n[0] = 1.0;
    sc.base_point = Vec(2);
    sc.base_point << std::acos(n.dot(ec.pole)), std::atan2(n.dot(ec.e2), n.dot(ec.e1));
    if (sc.base_point[1] < 0.0) sc.base_point[1] += 2.0 * M_PI;
    const int m = 513;
    const int planes[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    const char* names[3] = {"equator-xy", "equator-xz", "equator-yz"};
    for (int q = 0; q < 3; ++q) {
      sc.seeds.push_back(ec.principal_circle_path(planes[q][0], planes[q][1], m));
      sc.seed_names.push_back(names[q]);
    }
    detail::estimate_lambda_bounds(sc);
    return sc;
  }

  if (name == "poly-test") {
    const double half = param_or(params, "box_half", 1.0);
    ChartDomain dom = ChartDomain::box(Vec::Constant(2, -half), Vec::Constant(2, half));
    sc.field.domain = dom;
    sc.field.eval_fn = [](const Vec& x) {
      Mat g = Mat::Identity(2, 2);
      g(0, 0) = 1.0 + x[1] * x[1];
      return g;
    };
    sc.field.deriv_fn = [](const Vec& x) {
      MetricDeriv dg(2, Mat::Zero(2, 2));
      dg[1](0, 0) = 2.0 * x[1];
      return dg;
    };
    sc.field.inj = 0.8;
    sc.field.name = name;
    sc.eta = param_or(params, "eta", 0.25);
    sc.eps = param_or(params, "eps", 0.034);
    sc.delta = param_or(params, "delta", 0.016);
    sc.s_max = param_or(params, "s_max", 1e-4);
    sc.s_budget = param_or(params, "s_budget", 0.015);
    sc.base_point = Vec::Zero(2);
    detail::estimate_lambda_bounds(sc);
    return sc;
  }

  fail(ErrorCode::ConfigError, "unknown scenario: " + name);
}

inline std::vector<std::string> scenario_names() {
  return {"euclidean", "euclidean-r3", "flat-torus", "torus-cross",
          "sphere-chart", "ellipsoid-113", "poly-test"};
}

}  // namespace geoperturb

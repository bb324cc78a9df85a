#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbsurf/jets.hpp"

namespace sbsurf {

using Matrix2cd = Eigen::Matrix2cd;

struct DegenerateMetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MetricSpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MetricFamily { torus_flat, torus_perturbed, hopf_standard, hopf_conformal, fubini_study };

enum class JetMode { analytic, fd };

// A builtin Hermitian metric family on one of the three compact models.
// Immutable after construction; evaluation is pure.
class MetricField {
 public:
  static MetricField torus_flat();
  static MetricField torus_perturbed(double eps, std::uint64_t seed = 0);
  static MetricField hopf_standard();
  static MetricField hopf_conformal(double eps);
  static MetricField fubini_study();

  // Accepts "torus-flat", "torus-perturbed:eps=0.1[,seed=3]",
  // "hopf-standard", "hopf-conformal:eps=0.05", "fubini-study".
  static MetricField parse(const std::string& spec);

  MetricFamily family() const { return family_; }
  Chart chart() const;
  double eps() const { return eps_; }
  std::uint64_t seed() const { return seed_; }
  std::string name() const;

  // True when the fundamental form is closed for every parameter value of
  // the family (the two Kaehler families).
  bool kaehler_family() const {
    return family_ == MetricFamily::torus_flat || family_ == MetricFamily::fubini_study;
  }

  // Analytic second-order jet of h_{i jbar} at p.
  Jet2 component(int i, int j, const Point& p) const;
  cplx component_value(int i, int j, const Point& p) const { return component(i, j, p).v; }

 private:
  MetricField(MetricFamily f, double eps, std::uint64_t seed) : family_(f), eps_(eps), seed_(seed) {}

  MetricFamily family_;
  double eps_;
  std::uint64_t seed_;
  std::array<double, 4> phase_{};  // torus_perturbed optional phase shifts
};

// Jets of the metric, its inverse and log det at one point.
struct MetricJet {
  Point p;
  std::array<std::array<Jet2, 2>, 2> h;     // h[i][j] = h_{i jbar}
  std::array<std::array<Jet2, 2>, 2> hinv;  // hinv[k][l]: value pattern h^{k lbar}
  Jet2 det;                                 // det h
  std::array<std::array<cplx, 2>, 2> logdet_dd;  // d_i dbar_j log det h

  Matrix2cd H() const {
    Matrix2cd m;
    m << h[0][0].v, h[0][1].v, h[1][0].v, h[1][1].v;
    return m;
  }

  // up(i,k) = h^{i kbar}, the inverse-transpose pairing:
  // sum_k up(i,k) h_{j kbar} = delta_ij and sum_i up(i,k) h_{i lbar} = delta_kl.
  cplx up(int i, int k) const { return hinv[i][k].v; }

  // d/dz^a of h_{i jbar}, as a first-order jet.
  Jet1 dh(int a, int i, int j) const { return h[i][j].deriv(a); }
};

// Analytic (or finite-difference) metric jets at p; throws
// DegenerateMetricError when positivity fails.
MetricJet metric_jet(const MetricField& m, const Point& p, JetMode mode = JetMode::analytic,
                     double fd_step = 0.0);

struct PositivityReport {
  double min_eigenvalue;
  Point argmin;
};

// Minimum Hermitian eigenvalue of h over a tensor grid of the given
// per-axis resolution.
PositivityReport positivity_scan(const MetricField& m, int resolution);

}  // namespace sbsurf

#pragma once

#include <functional>
#include <vector>

#include "sbsurf/sample.hpp"

namespace sbsurf {

// Deterministic tensor quadrature grid on one of the compact models.
// Weights carry the quadrature weight times the Lebesgue-to-chart
// Jacobian; the volume density 4 det h is applied by the integrator.
struct QuadratureGrid {
  Chart model = Chart::torus;
  int resolution = 0;
  std::vector<Point> nodes;
  std::vector<double> weights;
};

// torus: uniform N^4 with trapezoidal (periodic) weights.
// hopf: Gauss-Legendre in log r over one fundamental window and in the
//       polar angle, uniform periodic in the two phases.
// cp2: Gauss-Legendre in theta with r = tan(theta), angular part as hopf.
// log_r_offset shifts the hopf radial window (used to check equivariance).
QuadratureGrid build_grid(Chart model, int resolution, double log_r_offset = 0.0);

// Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

struct IntegralResult {
  cplx value{};
  double error_estimate = 0.0;  // two-resolution difference when requested
};

// Deterministic integral of a scalar field against omega^2/2: the node sum
// of w * 4 det h * f with fixed-order compensated block summation,
// independent of worker count.
cplx integrate(const std::function<cplx(const Point&)>& f, const MetricField& m,
               const QuadratureGrid& g, int jobs = 0);

// All integrand blocks in one pass over the grid.
Blocks integrate_blocks(const MetricField& m, const QuadratureGrid& g, int jobs = 0,
                        JetMode mode = JetMode::analytic);

// L2 pairing of two form fields of equal bidegree.
cplx l2_pairing(const std::function<Form(const Point&)>& A,
                const std::function<Form(const Point&)>& B, const MetricField& m,
                const QuadratureGrid& g, int jobs = 0);

int default_jobs();

}  // namespace sbsurf

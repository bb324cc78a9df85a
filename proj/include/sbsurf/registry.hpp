#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbsurf/quadrature.hpp"
#include "sbsurf/sample.hpp"

namespace sbsurf {

struct UnknownIdentityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class IdentityKind { pointwise_scalar, pointwise_form, integral };
enum class Applicability { unconditional, gauduchon };

struct PointCheck {
  double resid = 0.0;  // max componentwise |LHS - RHS|
  double scale = 0.0;  // max |individual term|
  double lhs = 0.0;    // representative magnitudes for reporting
  double rhs = 0.0;
};

struct IdentityDescriptor {
  std::string id;
  IdentityKind kind;
  Applicability applicability;
  std::string statement;  // human-readable formula, both sides
};

const std::vector<IdentityDescriptor>& pointwise_catalogue();
const std::vector<IdentityDescriptor>& integral_catalogue();
const IdentityDescriptor& find_identity(const std::string& id);

PointCheck evaluate_pointwise(const std::string& id, const PointSample& s);

struct IntegralCheck {
  cplx lhs{};
  cplx rhs{};
  double scale = 0.0;
  double extra_resid = 0.0;  // companion equalities folded into the residual
};

IntegralCheck evaluate_integral(const std::string& id, const Blocks& B, Chart model);

struct VerificationReport {
  std::string id;
  std::string kind;
  std::string metric;
  int points = 0;
  std::uint64_t seed = 0;
  int grid = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool skipped = false;
  std::string skip_reason;
};

// Gauduchon test: max sampled |del dbar omega| below threshold.
bool is_gauduchon(const MetricField& m, const std::vector<Point>& pts, double threshold = 1e-9);

VerificationReport verify_pointwise(const std::string& id, const MetricField& m, int n_points,
                                    std::uint64_t seed, double tol,
                                    JetMode mode = JetMode::analytic);

std::vector<VerificationReport> verify_pointwise_suite(const MetricField& m, int n_points,
                                                       std::uint64_t seed, double tol,
                                                       JetMode mode = JetMode::analytic);

VerificationReport verify_integral(const std::string& id, const MetricField& m, int grid_n,
                                   double tol, int jobs = 0);

std::vector<VerificationReport> verify_integral_suite(const MetricField& m, int grid_n, double tol,
                                                      int jobs = 0);

struct ChernResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

// One of the four quadrature routes to 4 pi^2 c_1^2; formula keys are the
// stable identifiers "3.23", "4.1", "4.9", "4.17".
ChernResult chern_number(const MetricField& m, int grid_n, const std::string& formula,
                         int jobs = 0);

const std::vector<std::string>& chern_formulas();

// Ratio || cric20 + t(cric20) - 3 T(x)T ||^2 / (|dbar*w|^4, 1); zero when
// the denominator vanishes below tolerance.
double estimate_a(const MetricField& m, int grid_n, int jobs = 0);

struct TheoremReport {
  std::string theorem;
  std::string metric;
  int grid = 0;
  double ric20_max = 0.0;
  double gauduchon_max = 0.0;
  double parallel_residual = 0.0;
  double kahler_defect = 0.0;
  double a_estimate = 0.0;
  double eig_min = 0.0;
  double eig_max = 0.0;
  std::vector<std::pair<double, double>> option_ranges;
  bool hypotheses_hold = false;
  std::string verdict;
  std::vector<std::string> flags;
};

const std::vector<std::string>& theorem_ids();

// Diagnostics for the hypotheses of the semi-definiteness theorems; reports
// hold/fail of hypotheses only, never a conclusion.
TheoremReport theorem_report(const MetricField& m, int grid_n, const std::string& theorem,
                             int jobs = 0);

}  // namespace sbsurf

#include "sbsurf/metrics.hpp"

#include <cmath>
#include <numbers>

namespace sbsurf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double frac(double x) { return x - std::floor(x); }

// splitmix64, used only to derive reproducible phase shifts from a seed.
std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw MetricSpecError("invalid numeric value '" + s + "' for " + what);
  }
}

}  // namespace

MetricField MetricField::torus_flat() { return MetricField(MetricFamily::torus_flat, 0.0, 0); }

MetricField MetricField::torus_perturbed(double eps, std::uint64_t seed) {
  if (!(eps > 0.0 && eps <= 0.4))
    throw MetricSpecError("torus-perturbed requires eps in (0, 0.4]");
  MetricField m(MetricFamily::torus_perturbed, eps, seed);
  if (seed != 0) {
    std::uint64_t s = seed;
    for (int r = 0; r < 4; ++r) m.phase_[r] = kTwoPi * frac(double(splitmix64(s) >> 11) * 0x1p-53);
  }
  return m;
}

MetricField MetricField::hopf_standard() { return MetricField(MetricFamily::hopf_standard, 0.0, 0); }

MetricField MetricField::hopf_conformal(double eps) {
  if (!(eps > 0.0 && eps <= 0.5))
    throw MetricSpecError("hopf-conformal requires eps in (0, 0.5]");
  return MetricField(MetricFamily::hopf_conformal, eps, 0);
}

MetricField MetricField::fubini_study() { return MetricField(MetricFamily::fubini_study, 0.0, 0); }

MetricField MetricField::parse(const std::string& spec) {
  std::string head = spec;
  std::string args;
  if (auto pos = spec.find(':'); pos != std::string::npos) {
    head = spec.substr(0, pos);
    args = spec.substr(pos + 1);
  }

  double eps = 0.0;
  bool have_eps = false;
  std::uint64_t seed = 0;
  std::string rest = args;
  while (!rest.empty()) {
    std::string token = rest;
    if (auto pos = rest.find(','); pos != std::string::npos) {
      token = rest.substr(0, pos);
      rest = rest.substr(pos + 1);
    } else {
      rest.clear();
    }
    auto eq = token.find('=');
    if (eq == std::string::npos) throw MetricSpecError("malformed metric option '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string val = token.substr(eq + 1);
    if (key == "eps") {
      eps = parse_double(val, "eps");
      have_eps = true;
    } else if (key == "seed") {
      seed = static_cast<std::uint64_t>(parse_double(val, "seed"));
    } else {
      throw MetricSpecError("unknown metric option '" + key + "'");
    }
  }

  if (head == "torus-flat") {
    if (have_eps || seed) throw MetricSpecError("torus-flat takes no options");
    return torus_flat();
  }
  if (head == "torus-perturbed") {
    if (!have_eps) throw MetricSpecError("torus-perturbed requires eps=<value>");
    return torus_perturbed(eps, seed);
  }
  if (head == "hopf-standard") {
    if (have_eps || seed) throw MetricSpecError("hopf-standard takes no options");
    return hopf_standard();
  }
  if (head == "hopf-conformal") {
    if (!have_eps) throw MetricSpecError("hopf-conformal requires eps=<value>");
    if (seed) throw MetricSpecError("hopf-conformal takes no seed");
    return hopf_conformal(eps);
  }
  if (head == "fubini-study") {
    if (have_eps || seed) throw MetricSpecError("fubini-study takes no options");
    return fubini_study();
  }
  throw MetricSpecError("unknown metric family '" + head + "'");
}

Chart MetricField::chart() const {
  switch (family_) {
    case MetricFamily::torus_flat:
    case MetricFamily::torus_perturbed:
      return Chart::torus;
    case MetricFamily::hopf_standard:
    case MetricFamily::hopf_conformal:
      return Chart::hopf;
    default:
      return Chart::cp2;
  }
}

std::string MetricField::name() const {
  switch (family_) {
    case MetricFamily::torus_flat: return "torus-flat";
    case MetricFamily::torus_perturbed: {
      std::string s = "torus-perturbed:eps=" + std::to_string(eps_);
      if (seed_) s += ",seed=" + std::to_string(seed_);
      return s;
    }
    case MetricFamily::hopf_standard: return "hopf-standard";
    case MetricFamily::hopf_conformal: return "hopf-conformal:eps=" + std::to_string(eps_);
    default: return "fubini-study";
  }
}

Jet2 MetricField::component(int i, int j, const Point& p) const {
  switch (family_) {
    case MetricFamily::torus_flat:
      return jet_const(i == j ? 1.0 : 0.0);

    case MetricFamily::torus_perturbed: {
      // h_11 = 1 + eps cos(2 pi x1), h_22 = 1 + eps cos(2 pi x2),
      // h_12 = eps/2 (cos 2 pi x3 + i sin 2 pi x4), h_21 = conj(h_12).
      if (i == j) {
        const Jet2 t = kTwoPi * jet_x(i, p) + cplx(phase_[i], 0.0);
        return cplx(eps_, 0.0) * jet_cos(t) + cplx(1.0, 0.0);
      }
      const Jet2 t3 = kTwoPi * jet_x(2, p) + cplx(phase_[2], 0.0);
      const Jet2 t4 = kTwoPi * jet_x(3, p) + cplx(phase_[3], 0.0);
      const Jet2 off = cplx(0.5 * eps_, 0.0) * (jet_cos(t3) + cplx(0.0, 1.0) * jet_sin(t4));
      return (i == 0) ? off : jet_conj(off);
    }

    case MetricFamily::hopf_standard: {
      if (i != j) return jet_const(0.0);
      return jet_inv(jet_rho(p));
    }

    case MetricFamily::hopf_conformal: {
      // exp(eps cos(2 pi log rho / log 4)) delta_ij / rho, invariant under z -> 2z.
      if (i != j) return jet_const(0.0);
      const Jet2 rho = jet_rho(p);
      const Jet2 u = cplx(kTwoPi / std::log(4.0), 0.0) * jet_log(rho);
      return jet_exp(cplx(eps_, 0.0) * jet_cos(u)) * jet_inv(rho);
    }

    default: {
      // ((1 + rho) delta_ij - zbar_i z_j) / (1 + rho)^2
      const Jet2 opr = jet_rho(p) + cplx(1.0, 0.0);
      Jet2 num = jet_const(0.0) - jet_zbar(i, p) * jet_z(j, p);
      if (i == j) num = num + opr;
      return num * jet_inv(opr * opr);
    }
  }
}

MetricJet metric_jet(const MetricField& m, const Point& p, JetMode mode, double fd_step) {
  MetricJet mj;
  mj.p = p;

  if (mode == JetMode::analytic) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) mj.h[i][j] = m.component(i, j, p);
  } else {
    const double step = fd_step > 0.0 ? fd_step : fd_default_step(p);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        mj.h[i][j] = fd_jet2([&m, i, j](const Point& q) { return m.component_value(i, j, q); }, p, step);
  }

  mj.det = mj.h[0][0] * mj.h[1][1] - mj.h[0][1] * mj.h[1][0];
  if (!(mj.h[0][0].v.real() > 0.0) || !(mj.det.v.real() > 0.0))
    throw DegenerateMetricError("metric not positive definite at sampled point");

  // hinv[k][l] carries h^{k lbar}; as matrices this is the transposed inverse.
  const Jet2 idet = jet_inv(mj.det);
  mj.hinv[0][0] = mj.h[1][1] * idet;
  mj.hinv[1][1] = mj.h[0][0] * idet;
  mj.hinv[0][1] = -mj.h[1][0] * idet;
  mj.hinv[1][0] = -mj.h[0][1] * idet;

  const Jet2 ld = jet_log(mj.det);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) mj.logdet_dd[i][j] = ld.dd[i][2 + j];
  return mj;
}

PositivityReport positivity_scan(const MetricField& m, int resolution) {
  if (resolution < 2) throw std::invalid_argument("positivity_scan: resolution must be >= 2");
  PositivityReport rep{std::numeric_limits<double>::infinity(), Point{}};

  auto visit = [&](const Point& p) {
    Matrix2cd H;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) H(i, j) = m.component_value(i, j, p);
    const double tr = H.real().trace();
    const double dt = (H(0, 0) * H(1, 1) - H(0, 1) * H(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - dt));
    const double lam = 0.5 * tr - disc;
    if (lam < rep.min_eigenvalue) {
      rep.min_eigenvalue = lam;
      rep.argmin = p;
    }
  };

  const int n = resolution;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Point p;
          p.chart = m.chart();
          switch (m.chart()) {
            case Chart::torus: {
              const double x1 = double(a) / n, x2 = double(b) / n, x3 = double(c) / n, x4 = double(d) / n;
              p.z1 = cplx(x1, x3);
              p.z2 = cplx(x2, x4);
              break;
            }
            case Chart::hopf: {
              const double r = std::exp(std::log(2.0) * (a + 0.5) / n);
              const double al = 0.5 * std::numbers::pi * (b + 0.5) / n;
              const double be = kTwoPi * c / n, ga = kTwoPi * d / n;
              p.z1 = r * std::sin(al) * cplx(std::cos(be), std::sin(be));
              p.z2 = r * std::cos(al) * cplx(std::cos(ga), std::sin(ga));
              break;
            }
            case Chart::cp2: {
              const double th = 0.5 * std::numbers::pi * (a + 0.5) / n;
              const double r = std::tan(th);
              const double al = 0.5 * std::numbers::pi * (b + 0.5) / n;
              const double be = kTwoPi * c / n, ga = kTwoPi * d / n;
              p.z1 = r * std::sin(al) * cplx(std::cos(be), std::sin(be));
              p.z2 = r * std::cos(al) * cplx(std::cos(ga), std::sin(ga));
              break;
            }
          }
          visit(p);
        }
  return rep;
}

}  // namespace sbsurf

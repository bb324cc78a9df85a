#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>

namespace sbsurf {

using cplx = std::complex<double>;

// Wirtinger directions: 0 = d/dz1, 1 = d/dz2, 2 = d/dz1bar, 3 = d/dz2bar.
inline constexpr int conj_dir(int a) { return a < 2 ? a + 2 : a - 2; }

enum class Chart { torus, hopf, cp2 };

// A point on one of the builtin models, in the chart z1 = x1 + i*x3,
// z2 = x2 + i*x4.
struct Point {
  cplx z1{};
  cplx z2{};
  Chart chart = Chart::torus;

  cplx z(int k) const { return k == 0 ? z1 : z2; }

  // Real coordinates indexed 0..3 as (x1, x2, x3, x4).
  double x(int r) const {
    switch (r) {
      case 0: return z1.real();
      case 1: return z2.real();
      case 2: return z1.imag();
      default: return z2.imag();
    }
  }

  Point shifted(int r, double dt) const {
    Point q = *this;
    switch (r) {
      case 0: q.z1 += dt; break;
      case 1: q.z2 += dt; break;
      case 2: q.z1 += cplx(0.0, dt); break;
      default: q.z2 += cplx(0.0, dt); break;
    }
    return q;
  }
};

// Complex value with first Wirtinger partials.
struct Jet1 {
  cplx v{};
  std::array<cplx, 4> d{};

  Jet1() = default;
  explicit Jet1(cplx value) : v(value) {}
};

inline Jet1 operator+(const Jet1& a, const Jet1& b) {
  Jet1 r;
  r.v = a.v + b.v;
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}

inline Jet1 operator-(const Jet1& a, const Jet1& b) {
  Jet1 r;
  r.v = a.v - b.v;
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}

inline Jet1 operator-(const Jet1& a) {
  Jet1 r;
  r.v = -a.v;
  for (int i = 0; i < 4; ++i) r.d[i] = -a.d[i];
  return r;
}

inline Jet1 operator*(const Jet1& a, const Jet1& b) {
  Jet1 r;
  r.v = a.v * b.v;
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}

inline Jet1 operator*(const cplx& s, const Jet1& a) {
  Jet1 r;
  r.v = s * a.v;
  for (int i = 0; i < 4; ++i) r.d[i] = s * a.d[i];
  return r;
}

inline Jet1 operator*(const Jet1& a, const cplx& s) { return s * a; }

inline Jet1 operator+(const Jet1& a, const cplx& s) {
  Jet1 r = a;
  r.v += s;
  return r;
}

inline Jet1 jet_conj(const Jet1& a) {
  Jet1 r;
  r.v = std::conj(a.v);
  for (int i = 0; i < 4; ++i) r.d[i] = std::conj(a.d[conj_dir(i)]);
  return r;
}

// f -> 1/f, requires f.v != 0.
inline Jet1 jet_inv(const Jet1& a) {
  Jet1 r;
  const cplx iv = 1.0 / a.v;
  r.v = iv;
  const cplx m = -iv * iv;
  for (int i = 0; i < 4; ++i) r.d[i] = m * a.d[i];
  return r;
}

inline Jet1 operator/(const Jet1& a, const Jet1& b) { return a * jet_inv(b); }

// Complex value with all Wirtinger partials through total order 2.
// dd is kept as a full symmetric 4x4 array (mixed partials commute).
struct Jet2 {
  cplx v{};
  std::array<cplx, 4> d{};
  std::array<std::array<cplx, 4>, 4> dd{};

  Jet2() = default;
  explicit Jet2(cplx value) : v(value) {}

  Jet1 truncate() const {
    Jet1 r;
    r.v = v;
    r.d = d;
    return r;
  }

  // The scalar field d/dz^a of this one, as a first-order jet.
  Jet1 deriv(int a) const {
    Jet1 r;
    r.v = d[a];
    for (int b = 0; b < 4; ++b) r.d[b] = dd[a][b];
    return r;
  }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v + b.v;
  for (int i = 0; i < 4; ++i) {
    r.d[i] = a.d[i] + b.d[i];
    for (int j = 0; j < 4; ++j) r.dd[i][j] = a.dd[i][j] + b.dd[i][j];
  }
  return r;
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v - b.v;
  for (int i = 0; i < 4; ++i) {
    r.d[i] = a.d[i] - b.d[i];
    for (int j = 0; j < 4; ++j) r.dd[i][j] = a.dd[i][j] - b.dd[i][j];
  }
  return r;
}

inline Jet2 operator-(const Jet2& a) {
  Jet2 r;
  r.v = -a.v;
  for (int i = 0; i < 4; ++i) {
    r.d[i] = -a.d[i];
    for (int j = 0; j < 4; ++j) r.dd[i][j] = -a.dd[i][j];
  }
  return r;
}

// Leibniz rule through order 2.
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v * b.v;
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const cplx t = a.dd[i][j] * b.v + a.d[i] * b.d[j] + a.d[j] * b.d[i] + a.v * b.dd[i][j];
      r.dd[i][j] = t;
      r.dd[j][i] = t;
    }
  return r;
}

inline Jet2 operator*(const cplx& s, const Jet2& a) {
  Jet2 r;
  r.v = s * a.v;
  for (int i = 0; i < 4; ++i) {
    r.d[i] = s * a.d[i];
    for (int j = 0; j < 4; ++j) r.dd[i][j] = s * a.dd[i][j];
  }
  return r;
}

inline Jet2 operator*(const Jet2& a, const cplx& s) { return s * a; }

inline Jet2 operator+(const Jet2& a, const cplx& s) {
  Jet2 r = a;
  r.v += s;
  return r;
}

inline Jet2 jet_conj(const Jet2& a) {
  Jet2 r;
  r.v = std::conj(a.v);
  for (int i = 0; i < 4; ++i) r.d[i] = std::conj(a.d[conj_dir(i)]);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.dd[i][j] = std::conj(a.dd[conj_dir(i)][conj_dir(j)]);
  return r;
}

// g(f) for g analytic near f.v, given g(f.v), g'(f.v), g''(f.v).
inline Jet2 jet_compose(const Jet2& f, cplx g0, cplx g1, cplx g2) {
  Jet2 r;
  r.v = g0;
  for (int i = 0; i < 4; ++i) r.d[i] = g1 * f.d[i];
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const cplx t = g2 * f.d[i] * f.d[j] + g1 * f.dd[i][j];
      r.dd[i][j] = t;
      r.dd[j][i] = t;
    }
  return r;
}

inline Jet2 jet_inv(const Jet2& a) {
  const cplx iv = 1.0 / a.v;
  return jet_compose(a, iv, -iv * iv, 2.0 * iv * iv * iv);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * jet_inv(b); }

inline Jet2 jet_log(const Jet2& a) {
  const cplx iv = 1.0 / a.v;
  return jet_compose(a, std::log(a.v), iv, -iv * iv);
}

inline Jet2 jet_exp(const Jet2& a) {
  const cplx e = std::exp(a.v);
  return jet_compose(a, e, e, e);
}

inline Jet2 jet_cos(const Jet2& a) {
  return jet_compose(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v));
}

inline Jet2 jet_sin(const Jet2& a) {
  return jet_compose(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v));
}

// Coordinate seeds at a point.
inline Jet2 jet_z(int k, const Point& p) {
  Jet2 r(p.z(k));
  r.d[k] = 1.0;
  return r;
}

inline Jet2 jet_zbar(int k, const Point& p) {
  Jet2 r(std::conj(p.z(k)));
  r.d[2 + k] = 1.0;
  return r;
}

// Real coordinates as jets: x1 = (z1 + z1bar)/2, x3 = (z1 - z1bar)/(2i), etc.
inline Jet2 jet_x(int r, const Point& p) {
  const int k = (r == 0 || r == 2) ? 0 : 1;
  Jet2 j(cplx(p.x(r), 0.0));
  if (r < 2) {
    j.d[k] = 0.5;
    j.d[2 + k] = 0.5;
  } else {
    j.d[k] = cplx(0.0, -0.5);
    j.d[2 + k] = cplx(0.0, 0.5);
  }
  return j;
}

inline Jet2 jet_const(cplx c) { return Jet2(c); }

// |z1|^2 + |z2|^2 as a jet.
inline Jet2 jet_rho(const Point& p) {
  return jet_z(0, p) * jet_zbar(0, p) + jet_z(1, p) * jet_zbar(1, p);
}

// Central-difference second-order jet of a scalar field over the real
// coordinates, Richardson-extrapolated over steps {s, s/2}, converted to
// Wirtinger partials.
Jet2 fd_jet2(const std::function<cplx(const Point&)>& f, const Point& p, double step);

// Default step used by the finite-difference engine.
inline double fd_default_step(const Point& p) {
  const double r = std::sqrt(std::norm(p.z1) + std::norm(p.z2));
  return 1e-4 * (1.0 + r);
}

}  // namespace sbsurf

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <stdexcept>

#include "sbsurf/jets.hpp"
#include "sbsurf/metrics.hpp"

namespace sbsurf {

struct FormContractError : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {

inline constexpr int popcount2(int m) { return (m & 1) + ((m >> 1) & 1); }

// Sign of sorting dz^{m1} dz^{m2} into ascending order; 0 on overlap.
// Universe has two axes, so the only out-of-order pair is ({2},{1}).
inline constexpr int merge_sign(int m1, int m2) {
  if (m1 & m2) return 0;
  return (m1 == 2 && m2 == 1) ? -1 : 1;
}

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<cplx> {
  static cplx conj(const cplx& x) { return std::conj(x); }
};

template <>
struct ScalarOps<Jet1> {
  static Jet1 conj(const Jet1& x) { return jet_conj(x); }
};

template <>
struct ScalarOps<Jet2> {
  static Jet2 conj(const Jet2& x) { return jet_conj(x); }
};

template <class S>
struct JetLower;

template <>
struct JetLower<Jet2> {
  using type = Jet1;
  static Jet1 deriv(const Jet2& s, int a) { return s.deriv(a); }
};

template <>
struct JetLower<Jet1> {
  using type = cplx;
  static cplx deriv(const Jet1& s, int a) { return s.d[a]; }
};

}  // namespace detail

// A (p,q)-form value with coefficients on canonical monomials
// dz^{S} wedge dzbar^{T}, S and T ascending subsets of {1,2} stored as
// bitmasks. The coefficient convention is the full antisymmetric array
// with the 1/(p! q!) normalization, i.e. the stored entry is the
// coefficient of the sorted monomial.
template <class S>
struct FormValue {
  int p = 0;
  int q = 0;
  std::array<S, 16> c{};

  FormValue() = default;
  FormValue(int p_, int q_) : p(p_), q(q_) {}

  static constexpr int slot(int maskH, int maskA) { return maskH | (maskA << 2); }

  S& at(int maskH, int maskA) { return c[slot(maskH, maskA)]; }
  const S& at(int maskH, int maskA) const { return c[slot(maskH, maskA)]; }

  template <class F>
  void for_each(F&& fn) const {
    for (int mh = 0; mh < 4; ++mh) {
      if (detail::popcount2(mh) != p) continue;
      for (int ma = 0; ma < 4; ++ma) {
        if (detail::popcount2(ma) != q) continue;
        fn(mh, ma, c[slot(mh, ma)]);
      }
    }
  }
};

using Form = FormValue<cplx>;
using FormJ1 = FormValue<Jet1>;
using FormJ2 = FormValue<Jet2>;

template <class S>
FormValue<S> operator+(const FormValue<S>& a, const FormValue<S>& b) {
  FormValue<S> r(a.p, a.q);
  for (int i = 0; i < 16; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

template <class S>
FormValue<S> operator-(const FormValue<S>& a, const FormValue<S>& b) {
  FormValue<S> r(a.p, a.q);
  for (int i = 0; i < 16; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

template <class S>
FormValue<S> operator*(const cplx& s, const FormValue<S>& a) {
  FormValue<S> r(a.p, a.q);
  for (int i = 0; i < 16; ++i) r.c[i] = s * a.c[i];
  return r;
}

// Graded exterior product; degree overflow gives the zero top-degree form.
template <class S>
FormValue<S> wedge(const FormValue<S>& a, const FormValue<S>& b) {
  FormValue<S> r(std::min(a.p + b.p, 2), std::min(a.q + b.q, 2));
  if (a.p + b.p > 2 || a.q + b.q > 2) return r;
  a.for_each([&](int sh1, int sa1, const S& c1) {
    b.for_each([&](int sh2, int sa2, const S& c2) {
      const int sH = detail::merge_sign(sh1, sh2);
      const int sA = detail::merge_sign(sa1, sa2);
      if (sH == 0 || sA == 0) return;
      const int cross = (detail::popcount2(sa1) * detail::popcount2(sh2)) & 1 ? -1 : 1;
      const double sign = double(sH * sA * cross);
      r.at(sh1 | sh2, sa1 | sa2) = r.at(sh1 | sh2, sa1 | sa2) + cplx(sign, 0.0) * (c1 * c2);
    });
  });
  return r;
}

// Complex conjugate form: (p,q) -> (q,p).
template <class S>
FormValue<S> conj_form(const FormValue<S>& a) {
  FormValue<S> r(a.q, a.p);
  a.for_each([&](int sh, int sa, const S& c) {
    const int sign = (detail::popcount2(sh) * detail::popcount2(sa)) & 1 ? -1 : 1;
    r.at(sa, sh) = cplx(double(sign), 0.0) * detail::ScalarOps<S>::conj(c);
  });
  return r;
}

// Pointwise metric data lifted to the scalar ring of the form algebra.
template <class S>
struct MetricOps {
  std::array<std::array<S, 2>, 2> up;   // h^{i kbar}
  std::array<std::array<S, 2>, 2> low;  // h_{i kbar}
  S det;
  S idet;
};

inline MetricOps<cplx> metric_ops(const MetricJet& mj) {
  MetricOps<cplx> m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m.up[i][j] = mj.hinv[i][j].v;
      m.low[i][j] = mj.h[i][j].v;
    }
  m.det = mj.det.v;
  m.idet = 1.0 / mj.det.v;
  return m;
}

inline MetricOps<Jet1> metric_ops_jet(const MetricJet& mj) {
  MetricOps<Jet1> m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m.up[i][j] = mj.hinv[i][j].truncate();
      m.low[i][j] = mj.h[i][j].truncate();
    }
  m.det = mj.det.truncate();
  m.idet = jet_inv(m.det);
  return m;
}

// Pointwise Hermitian inner product, normalized so that <omega,omega> = 2.
template <class S>
S inner(const FormValue<S>& a, const FormValue<S>& b, const MetricOps<S>& m) {
  if (a.p != b.p || a.q != b.q) throw FormContractError("inner: bidegree mismatch");
  using Ops = detail::ScalarOps<S>;
  S acc{};
  const int p = a.p, q = a.q;

  if (p == 0 && q == 0) return a.at(0, 0) * Ops::conj(b.at(0, 0));

  if (p == 1 && q == 0) {
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        acc = acc + a.at(1 << i, 0) * Ops::conj(b.at(1 << k, 0)) * m.up[i][k];
    return acc;
  }
  if (p == 0 && q == 1) {
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l)
        acc = acc + a.at(0, 1 << j) * Ops::conj(b.at(0, 1 << l)) * m.up[l][j];
    return acc;
  }
  if (p == 1 && q == 1) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            acc = acc + a.at(1 << i, 1 << j) * Ops::conj(b.at(1 << k, 1 << l)) * m.up[i][k] * m.up[l][j];
    return acc;
  }
  if (p == 2 && q == 0) return a.at(3, 0) * Ops::conj(b.at(3, 0)) * m.idet;
  if (p == 0 && q == 2) return a.at(0, 3) * Ops::conj(b.at(0, 3)) * m.idet;

  if (p == 2 && q == 1) {
    for (int k = 0; k < 2; ++k)
      for (int n = 0; n < 2; ++n)
        acc = acc + a.at(3, 1 << k) * Ops::conj(b.at(3, 1 << n)) * m.up[n][k];
    return acc * m.idet;
  }
  if (p == 1 && q == 2) {
    for (int k = 0; k < 2; ++k)
      for (int n = 0; n < 2; ++n)
        acc = acc + a.at(1 << k, 3) * Ops::conj(b.at(1 << n, 3)) * m.up[k][n];
    return acc * m.idet;
  }
  // (2,2)
  return a.at(3, 3) * Ops::conj(b.at(3, 3)) * m.idet * m.idet;
}

// omega = i h_{i jbar} dz^i wedge dzbar^j at value or jet level.
template <class S>
FormValue<S> omega_form(const MetricOps<S>& m) {
  FormValue<S> w(1, 1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) w.at(1 << i, 1 << j) = cplx(0.0, 1.0) * m.low[i][j];
  return w;
}

inline FormJ2 omega_form_jet2(const MetricJet& mj) {
  FormJ2 w(1, 1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) w.at(1 << i, 1 << j) = cplx(0.0, 1.0) * mj.h[i][j];
  return w;
}

// omega^2/2; its canonical coefficient is det h, and against Lebesgue
// measure in the oriented coordinates (x1,x3,x2,x4) it integrates with
// density 4 det h.
template <class S>
FormValue<S> volume_form(const MetricOps<S>& m) {
  FormValue<S> v(2, 2);
  v.at(3, 3) = m.det;
  return v;
}

// Hodge star: the unique operator with a wedge star(b) = <a, conj b> vol
// for all a of the complementary bidegree. Maps (p,q) to (2-q, 2-p).
template <class S>
FormValue<S> hodge_star(const FormValue<S>& a, const MetricOps<S>& m) {
  FormValue<S> r(2 - a.q, 2 - a.p);
  const FormValue<S> ca = conj_form(a);
  r.for_each([&](int sh, int sa, const S&) {
    const int ch = 3 ^ sh, caM = 3 ^ sa;
    // alpha wedge mu = sign * top
    const int sH = detail::merge_sign(ch, sh);
    const int sA = detail::merge_sign(caM, sa);
    const int cross = (detail::popcount2(caM) * detail::popcount2(sh)) & 1 ? -1 : 1;
    const double sign = double(sH * sA * cross);
    FormValue<S> alpha(detail::popcount2(ch), detail::popcount2(caM));
    alpha.at(ch, caM) = S{cplx(1.0, 0.0)};
    const S val = inner(alpha, ca, m) * m.det;
    r.at(sh, sa) = cplx(1.0 / sign, 0.0) * val;
  });
  return r;
}

// Metric trace against omega. Normalized so lambda(omega) = 2.
// Supported on bidegrees (1,1), (2,1), (1,2) and (2,2).
Form lambda_contract(const Form& a, const MetricJet& mj);

// Dolbeault operators on forms with jet coefficients.
template <class S>
FormValue<typename detail::JetLower<S>::type> del(const FormValue<S>& F) {
  using L = typename detail::JetLower<S>::type;
  if (F.p + 1 > 2) return FormValue<L>(2, F.q);  // degree overflow -> zero by convention
  FormValue<L> r(F.p + 1, F.q);
  F.for_each([&](int sh, int sa, const S& f) {
    for (int mdir = 0; mdir < 2; ++mdir) {
      const int mm = 1 << mdir;
      const int sH = detail::merge_sign(mm, sh);
      if (sH == 0) continue;
      r.at(mm | sh, sa) = r.at(mm | sh, sa) + cplx(double(sH), 0.0) * detail::JetLower<S>::deriv(f, mdir);
    }
  });
  return r;
}

template <class S>
FormValue<typename detail::JetLower<S>::type> dbar(const FormValue<S>& F) {
  using L = typename detail::JetLower<S>::type;
  if (F.q + 1 > 2) return FormValue<L>(F.p, 2);
  FormValue<L> r(F.p, F.q + 1);
  F.for_each([&](int sh, int sa, const S& f) {
    for (int mdir = 0; mdir < 2; ++mdir) {
      const int mm = 1 << mdir;
      const int sA = detail::merge_sign(mm, sa);
      if (sA == 0) continue;
      const int cross = detail::popcount2(sh) & 1 ? -1 : 1;
      r.at(sh, mm | sa) = r.at(sh, mm | sa) + cplx(double(sA * cross), 0.0) * detail::JetLower<S>::deriv(f, 2 + mdir);
    }
  });
  return r;
}

// Star-route codifferentials on fields with first-order coefficient jets:
// del* = -star dbar star, dbar* = -star del star. The result is a value.
Form codifferential_del_star(const FormJ1& F, const MetricJet& mj);
Form codifferential_dbar_star(const FormJ1& F, const MetricJet& mj);

inline Form values(const FormJ1& F) {
  Form r(F.p, F.q);
  for (int i = 0; i < 16; ++i) r.c[i] = F.c[i].v;
  return r;
}

inline FormJ1 truncate(const FormJ2& F) {
  FormJ1 r(F.p, F.q);
  for (int i = 0; i < 16; ++i) r.c[i] = F.c[i].truncate();
  return r;
}

inline double max_abs(const Form& a) {
  double m = 0.0;
  for (const auto& x : a.c) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace sbsurf

#include "sbsurf/jets.hpp"

namespace sbsurf {

namespace {

struct RealPartials {
  std::array<cplx, 4> d1{};
  std::array<std::array<cplx, 4>, 4> d2{};
};

RealPartials real_partials(const std::function<cplx(const Point&)>& f, const Point& p, double h) {
  RealPartials r;
  const cplx f0 = f(p);
  std::array<cplx, 4> fp, fm;
  for (int a = 0; a < 4; ++a) {
    fp[a] = f(p.shifted(a, h));
    fm[a] = f(p.shifted(a, -h));
    r.d1[a] = (fp[a] - fm[a]) / (2.0 * h);
    r.d2[a][a] = (fp[a] - 2.0 * f0 + fm[a]) / (h * h);
  }
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const cplx fpp = f(p.shifted(a, h).shifted(b, h));
      const cplx fpm = f(p.shifted(a, h).shifted(b, -h));
      const cplx fmp = f(p.shifted(a, -h).shifted(b, h));
      const cplx fmm = f(p.shifted(a, -h).shifted(b, -h));
      const cplx m = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
      r.d2[a][b] = m;
      r.d2[b][a] = m;
    }
  return r;
}

}  // namespace

Jet2 fd_jet2(const std::function<cplx(const Point&)>& f, const Point& p, double step) {
  const RealPartials coarse = real_partials(f, p, step);
  const RealPartials fine = real_partials(f, p, 0.5 * step);

  RealPartials rich;
  for (int a = 0; a < 4; ++a) {
    rich.d1[a] = (4.0 * fine.d1[a] - coarse.d1[a]) / 3.0;
    for (int b = 0; b < 4; ++b) rich.d2[a][b] = (4.0 * fine.d2[a][b] - coarse.d2[a][b]) / 3.0;
  }

  // d/dz1 = (d/dx1 - i d/dx3)/2, d/dz2 = (d/dx2 - i d/dx4)/2, conjugates with +i.
  std::array<std::array<cplx, 4>, 4> L{};
  const cplx half(0.5, 0.0), mih(0.0, -0.5), pih(0.0, 0.5);
  L[0][0] = half; L[0][2] = mih;
  L[1][1] = half; L[1][3] = mih;
  L[2][0] = half; L[2][2] = pih;
  L[3][1] = half; L[3][3] = pih;

  Jet2 out;
  out.v = f(p);
  for (int a = 0; a < 4; ++a) {
    cplx s = 0.0;
    for (int r = 0; r < 4; ++r) s += L[a][r] * rich.d1[r];
    out.d[a] = s;
  }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      cplx s = 0.0;
      for (int r = 0; r < 4; ++r)
        for (int t = 0; t < 4; ++t) s += L[a][r] * L[b][t] * rich.d2[r][t];
      out.dd[a][b] = s;
    }
  return out;
}

}  // namespace sbsurf

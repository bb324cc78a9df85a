#include "sbsurf/forms.hpp"

namespace sbsurf {

namespace {

// Codifferential sign, fixed once by the torsion-trace anchor
// dbar*(omega) = i T_i dz^i on the builtin metrics.
constexpr double kCodiffSign = -1.0;

}  // namespace

Form lambda_contract(const Form& a, const MetricJet& mj) {
  const MetricOps<cplx> m = metric_ops(mj);

  if (a.p == 1 && a.q == 1) {
    Form r(0, 0);
    cplx acc = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) acc += m.up[i][j] * a.at(1 << i, 1 << j);
    r.at(0, 0) = cplx(0.0, -1.0) * acc;
    return r;
  }

  const Form w = omega_form(m);

  if (a.p == 2 && a.q == 1) {
    // <lambda a, dz^k> = <a, omega wedge dz^k>
    std::array<cplx, 2> rhs{};
    for (int k = 0; k < 2; ++k) {
      Form basis(1, 0);
      basis.at(1 << k, 0) = 1.0;
      rhs[k] = inner(a, wedge(w, basis), m);
    }
    Form r(1, 0);
    for (int i = 0; i < 2; ++i) {
      cplx acc = 0.0;
      for (int k = 0; k < 2; ++k) acc += rhs[k] * m.low[i][k];
      r.at(1 << i, 0) = acc;
    }
    return r;
  }

  if (a.p == 1 && a.q == 2) {
    std::array<cplx, 2> rhs{};
    for (int k = 0; k < 2; ++k) {
      Form basis(0, 1);
      basis.at(0, 1 << k) = 1.0;
      rhs[k] = inner(a, wedge(w, basis), m);
    }
    Form r(0, 1);
    for (int j = 0; j < 2; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < 2; ++k) acc += rhs[k] * m.low[k][j];
      r.at(0, 1 << j) = acc;
    }
    return r;
  }

  if (a.p == 2 && a.q == 2) {
    // Gram solve over the (1,1) monomial basis.
    Eigen::Matrix4cd G;
    Eigen::Vector4cd rhs;
    auto flat = [](int i, int j) { return 2 * i + j; };
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Form mu(1, 1);
        mu.at(1 << i, 1 << j) = 1.0;
        rhs(flat(i, j)) = inner(a, wedge(w, mu), m);
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) G(flat(i, j), flat(k, l)) = m.up[k][i] * m.up[j][l];
      }
    // G[(i,j)],(k,l)] = <mu_{k lbar}, mu_{i jbar}> so that G x = rhs with
    // x the coefficients of lambda a.
    const Eigen::Vector4cd x = G.colPivHouseholderQr().solve(rhs);
    Form r(1, 1);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.at(1 << i, 1 << j) = x(flat(i, j));
    return r;
  }

  throw FormContractError("lambda_contract: unsupported bidegree");
}

Form codifferential_del_star(const FormJ1& F, const MetricJet& mj) {
  const MetricOps<Jet1> mj1 = metric_ops_jet(mj);
  const MetricOps<cplx> m0 = metric_ops(mj);
  const FormJ1 s1 = hodge_star(F, mj1);
  const Form d = dbar(s1);
  return kCodiffSign * cplx(1.0, 0.0) * hodge_star(d, m0);
}

Form codifferential_dbar_star(const FormJ1& F, const MetricJet& mj) {
  const MetricOps<Jet1> mj1 = metric_ops_jet(mj);
  const MetricOps<cplx> m0 = metric_ops(mj);
  const FormJ1 s1 = hodge_star(F, mj1);
  const Form d = del(s1);
  return kCodiffSign * cplx(1.0, 0.0) * hodge_star(d, m0);
}

}  // namespace sbsurf

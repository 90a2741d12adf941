#include "minkq/discretization.hpp"

#include <cmath>
#include <sstream>

#include "minkq/error.hpp"

namespace minkq {

int DofLayout::dof(const MetricGraph& g, int edge, int local) const {
  const int n = elements[edge];
  if (local == 0) return g.edges()[edge].from;
  if (local == n) return g.edges()[edge].to;
  return offset[edge] + local - 1;
}

DiscretizedForm assemble(const MetricGraph& g, double h) {
  if (!(h > 0.0)) fail(ErrorCode::BadMesh, "mesh size must be positive");
  DiscretizedForm form;
  form.h = h;
  auto& lay = form.layout;
  lay.vertex_count = static_cast<int>(g.vertices().size());
  int next = lay.vertex_count;
  for (const auto& e : g.edges()) {
    // the small slack keeps l/h = 20 + round-off from becoming 21 elements
    const int n = static_cast<int>(std::ceil(e.length / h - 1e-9));
    if (n < 2) {
      std::ostringstream os;
      os << "edge of length " << e.length << " gets " << n << " element(s) at h=" << h;
      fail(ErrorCode::BadMesh, os.str());
    }
    lay.elements.push_back(n);
    lay.offset.push_back(next);
    next += n - 1;
  }
  lay.size = next;

  form.E = Eigen::MatrixXd::Zero(lay.size, lay.size);
  form.mass = Eigen::MatrixXd::Zero(lay.size, lay.size);
  form.nodes.assign(lay.size, Vec3::Zero());
  for (int v = 0; v < lay.vertex_count; ++v) form.nodes[v] = g.vertices()[v].position;

  for (int ei = 0; ei < static_cast<int>(g.edges().size()); ++ei) {
    const auto& e = g.edges()[ei];
    const int n = lay.elements[ei];
    const double d = e.length / n;
    const Arc arc = g.arc(ei);
    for (int j = 1; j < n; ++j) form.nodes[lay.offset[ei] + j - 1] = arc.point(j * d);
    // element matrices: mass d/6 [2 1; 1 2], stiffness 1/d [1 -1; -1 1]
    const double m_diag = d / 3.0;
    const double m_off = d / 6.0;
    const double k = 1.0 / d;
    for (int j = 0; j < n; ++j) {
      const int a = lay.dof(g, ei, j);
      const int b = lay.dof(g, ei, j + 1);
      const double ew = e.weight / 6.0;
      const double mw = e.weight / 2.0;
      form.E(a, a) += ew * (m_diag - k);
      form.E(b, b) += ew * (m_diag - k);
      form.E(a, b) += ew * (m_off + k);
      form.E(b, a) += ew * (m_off + k);
      form.mass(a, a) += mw * m_diag;
      form.mass(b, b) += mw * m_diag;
      form.mass(a, b) += mw * m_off;
      form.mass(b, a) += mw * m_off;
    }
  }
  return form;
}

Eigen::VectorXd interpolate(const DiscretizedForm& form, const SupportEvaluator& f) {
  Eigen::VectorXd x(form.layout.size);
  for (int i = 0; i < form.layout.size; ++i) x[i] = f(form.nodes[i]);
  return x;
}

SpectrumResult spectrum(const DiscretizedForm& form, int k) {
  const int n = form.layout.size;
  if (k <= 0) fail(ErrorCode::BadParam, "eigenpair count must be positive");
  if (k > n) {
    std::ostringstream os;
    os << "requested " << k << " eigenpairs from a system of size " << n;
    fail(ErrorCode::InsufficientSpectrum, os.str());
  }
  Eigen::LLT<Eigen::MatrixXd> llt(form.mass);
  if (llt.info() != Eigen::Success) {
    fail(ErrorCode::NumericalFailure, "mass matrix is not positive definite");
  }
  const Eigen::MatrixXd L = llt.matrixL();
  // C = L^{-1} E L^{-T}
  Eigen::MatrixXd C = L.triangularView<Eigen::Lower>().solve(form.E);
  C = L.triangularView<Eigen::Lower>().solve(C.transpose()).transpose();
  C = 0.5 * (C + C.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C);
  if (es.info() != Eigen::Success) fail(ErrorCode::NumericalFailure, "eigensolver did not converge");

  SpectrumResult out;
  out.system_size = n;
  out.vectors.resize(n, k);
  for (int j = 0; j < k; ++j) {
    const int col = n - 1 - j;
    out.values.push_back(es.eigenvalues()[col]);
    out.vectors.col(j) = L.transpose().triangularView<Eigen::Upper>().solve(es.eigenvectors().col(col));
  }
  for (int j = 0; j < k; ++j) {
    const Eigen::VectorXd r = form.E * out.vectors.col(j) - out.values[j] * (form.mass * out.vectors.col(j));
    out.residuals.push_back(r.norm());
  }
  return out;
}

KernelReport kernel_analysis(const SpectrumResult& spec, const DiscretizedForm& form, double tau) {
  if (!(tau > 0.0)) fail(ErrorCode::BadParam, "kernel window must be positive");
  KernelReport rep;
  rep.tau = tau;
  if (!spec.complete() && !spec.values.empty() && spec.values.back() > -tau) {
    fail(ErrorCode::InsufficientSpectrum,
         "kernel window reaches the last computed eigenvalue; request more eigenpairs");
  }
  std::vector<int> cols;
  for (int j = 0; j < static_cast<int>(spec.values.size()); ++j) {
    if (std::abs(spec.values[j]) < tau) cols.push_back(j);
    if (spec.values[j] >= tau) ++rep.positive;
  }
  rep.dimension = static_cast<int>(cols.size());

  const int n = form.layout.size;
  Eigen::MatrixXd X(n, 3);
  for (int i = 0; i < n; ++i) X.row(i) = form.nodes[i].transpose();
  // mass-orthonormal basis of the coordinate functions
  const Eigen::MatrixXd gram = X.transpose() * form.mass * X;
  Eigen::LLT<Eigen::MatrixXd> gl(gram);
  if (gl.info() != Eigen::Success) {
    rep.angle_residual = 1.0;
    return rep;
  }
  const Eigen::MatrixXd Q = gl.matrixU().transpose().solve(X.transpose()).transpose();
  Eigen::MatrixXd V(n, rep.dimension);
  for (int j = 0; j < rep.dimension; ++j) V.col(j) = spec.vectors.col(cols[j]);
  const Eigen::MatrixXd R = Q - V * (V.transpose() * form.mass * Q);
  const Eigen::MatrixXd S = R.transpose() * form.mass * R;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (S + S.transpose()), Eigen::EigenvaluesOnly);
  rep.angle_residual = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  return rep;
}

}  // namespace minkq

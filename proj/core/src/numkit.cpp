#include "fredkit/numkit.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace fredkit::num {

namespace {

double rank_threshold(double tol, double sigma_max) {
  return tol * std::max(1.0, sigma_max);
}

}  // namespace

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.isZero(0.0)) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

Eigen::Index matrix_rank(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double thresh = rank_threshold(tol, sv(0));
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > thresh) ++r;
  return r;
}

PolarParts polar_decompose(const ComplexMatrix& m, double tol) {
  PolarParts out;
  if (m.size() == 0) {
    out.isometry = ComplexMatrix::Zero(m.rows(), m.cols());
    out.psd = ComplexMatrix::Zero(m.cols(), m.cols());
    return out;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double thresh = sv.size() ? rank_threshold(tol, sv(0)) : 0.0;
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > thresh) ++r;
  out.rank = r;

  const ComplexMatrix u = svd.matrixU().leftCols(r);
  const ComplexMatrix v = svd.matrixV().leftCols(r);
  out.isometry = u * v.adjoint();
  out.psd = v * sv.head(r).asDiagonal() * v.adjoint();
  if (r == 0) {
    out.isometry = ComplexMatrix::Zero(m.rows(), m.cols());
    out.psd = ComplexMatrix::Zero(m.cols(), m.cols());
  }
  return out;
}

ComplexMatrix psd_inv_sqrt(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) raise(ErrorCode::NotPSD, "matrix is not square");
  if (m.size() == 0) return m;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol * scale * 10) {
    raise(ErrorCode::NotPSD, "matrix is not self-adjoint within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((m + m.adjoint()) / 2.0);
  const auto& ev = es.eigenvalues();
  const double lam_max = std::max(0.0, ev.size() ? ev(ev.size() - 1) : 0.0);
  const double thresh = rank_threshold(tol, lam_max);
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -thresh) {
      raise(ErrorCode::NotPSD, "negative eigenvalue " + std::to_string(ev(i)));
    }
    if (ev(i) > thresh) {
      const ComplexMatrix vec = es.eigenvectors().col(i);
      out += vec * vec.adjoint() / std::sqrt(ev(i));
    }
  }
  return out;
}

ComplexMatrix range_projection(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) return ComplexMatrix::Zero(m.rows(), m.rows());
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double thresh = sv.size() ? rank_threshold(tol, sv(0)) : 0.0;
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > thresh) ++r;
  const ComplexMatrix u = svd.matrixU().leftCols(r);
  return u * u.adjoint();
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) return m.adjoint();
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double thresh = sv.size() ? rank_threshold(tol, sv(0)) : 0.0;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > thresh) inv(i) = 1.0 / sv(i);
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

}  // namespace fredkit::num

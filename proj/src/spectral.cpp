#include "tvho/spectral.hpp"

#include <stdexcept>

#include "tvho/kernels.hpp"

namespace tvho {

namespace {

void eig_axis(const DerivativeOperator& op, Eigen::MatrixXd& q, Eigen::VectorXd& lam) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.gram());
  if (es.info() != Eigen::Success)
    throw std::runtime_error("factorize: eigendecomposition failed");
  q = es.eigenvectors();
  lam = es.eigenvalues().cwiseMax(0.0);  // clamp numerical jitter
}

}  // namespace

SpectralFactorization factorize(const DerivativeOperator& dm,
                                const DerivativeOperator& dn,
                                const DerivativeOperator& dN,
                                double mu1, double mu2, double mu3) {
  if (!(mu2 + mu3 > 0.0))
    throw std::invalid_argument("factorize: mu2 + mu3 must be positive");
  SpectralFactorization sf;
  sf.mu1 = mu1;
  sf.mu2 = mu2;
  sf.mu3 = mu3;
  eig_axis(dm, sf.qm, sf.lm);
  eig_axis(dn, sf.qn, sf.ln);
  eig_axis(dN, sf.qN, sf.lN);

  const int m = dm.n, n = dn.n, N = dN.n;
  sf.lambda0.resize(static_cast<Eigen::Index>(m) * n * N);
  Eigen::Index idx = 0;
  for (int t = 0; t < N; ++t)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < m; ++i)
        sf.lambda0[idx++] = (mu2 + mu3) + mu1 * (sf.lm[i] + sf.ln[j] + sf.lN[t]);
  return sf;
}

VideoTensor SpectralFactorization::solve_f(const VideoTensor& rhs) const {
  if (rhs.m != qm.rows() || rhs.n != qn.rows() || rhs.frames != qN.rows())
    throw std::invalid_argument("solve_f: shape mismatch");
  VideoTensor t = mode3_product(
      mode2_product(mode1_product(rhs, qm.transpose()), qn.transpose()), qN.transpose());
  kern::diag_solve(t.data.data(), lambda0.data(), t.data.data(), t.size());
  return mode3_product(mode2_product(mode1_product(t, qm), qn), qN);
}

}  // namespace tvho

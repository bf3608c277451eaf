#include "tvho/tensor.hpp"

namespace tvho {

namespace {
void check_dim(const Eigen::MatrixXd& a, int dim, const char* mode) {
  if (a.rows() != a.cols() || a.rows() != dim)
    throw std::invalid_argument(std::string("mode product: matrix size mismatch on ") + mode);
}
}  // namespace

VideoTensor mode1_product(const VideoTensor& f, const Eigen::MatrixXd& a) {
  check_dim(a, f.m, "mode 1");
  VideoTensor out(f.m, f.n, f.frames);
  // Columns of the m x (n*N) unfolding are exactly the mode-1 fibers.
  Eigen::Map<const Eigen::MatrixXd> in(f.data.data(), f.m,
                                       static_cast<Eigen::Index>(f.n) * f.frames);
  Eigen::Map<Eigen::MatrixXd> res(out.data.data(), f.m,
                                  static_cast<Eigen::Index>(f.n) * f.frames);
  res.noalias() = a * in;
  return out;
}

VideoTensor mode2_product(const VideoTensor& f, const Eigen::MatrixXd& a) {
  check_dim(a, f.n, "mode 2");
  VideoTensor out(f.m, f.n, f.frames);
  for (int t = 0; t < f.frames; ++t)
    out.frame(t).noalias() = f.frame(t) * a.transpose();
  return out;
}

VideoTensor mode3_product(const VideoTensor& f, const Eigen::MatrixXd& a) {
  check_dim(a, f.frames, "mode 3");
  VideoTensor out(f.m, f.n, f.frames);
  Eigen::Map<const Eigen::MatrixXd> in(f.data.data(),
                                       static_cast<Eigen::Index>(f.m) * f.n, f.frames);
  Eigen::Map<Eigen::MatrixXd> res(out.data.data(),
                                  static_cast<Eigen::Index>(f.m) * f.n, f.frames);
  res.noalias() = in * a.transpose();
  return out;
}

}  // namespace tvho

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <stdexcept>

namespace tvho {

/// m x n x N real volume stored in mode-1 vectorization order:
/// linear index = i + m*j + m*n*t for pixel (i, j) of frame t.
struct VideoTensor {
  int m = 0, n = 0, frames = 0;
  Eigen::VectorXd data;

  VideoTensor() = default;
  VideoTensor(int m_, int n_, int frames_)
      : m(m_), n(n_), frames(frames_) {
    if (m <= 0 || n <= 0 || frames <= 0)
      throw std::invalid_argument("VideoTensor: dimensions must be positive");
    data = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m) * n * frames);
  }

  std::size_t size() const { return static_cast<std::size_t>(m) * n * frames; }

  double& at(int i, int j, int t) {
    return data[i + static_cast<Eigen::Index>(m) * j +
                static_cast<Eigen::Index>(m) * n * t];
  }
  double at(int i, int j, int t) const {
    return data[i + static_cast<Eigen::Index>(m) * j +
                static_cast<Eigen::Index>(m) * n * t];
  }

  bool same_shape(const VideoTensor& o) const {
    return m == o.m && n == o.n && frames == o.frames;
  }

  /// Frame t viewed as an m x n column-major matrix.
  Eigen::Map<Eigen::MatrixXd> frame(int t) {
    return {data.data() + static_cast<Eigen::Index>(m) * n * t, m, n};
  }
  Eigen::Map<const Eigen::MatrixXd> frame(int t) const {
    return {data.data() + static_cast<Eigen::Index>(m) * n * t, m, n};
  }
};

/// Mode-k products with a square matrix: Y = F x_k A. The matrix dimension
/// must equal the size of mode k.
VideoTensor mode1_product(const VideoTensor& f, const Eigen::MatrixXd& a);
VideoTensor mode2_product(const VideoTensor& f, const Eigen::MatrixXd& a);
VideoTensor mode3_product(const VideoTensor& f, const Eigen::MatrixXd& a);

}  // namespace tvho

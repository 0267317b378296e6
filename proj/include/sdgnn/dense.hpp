#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "sdgnn/common.hpp"

namespace sdgnn {

// Row-major so that a node's feature/embedding row is contiguous.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

using FeatureMatrix = Matrix;
using EmbeddingMatrix = Matrix;

inline void check_finite(const Matrix& m, const std::string& ctx) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!std::isfinite(m(r, c)))
        throw io_error(ctx + ": non-finite entry at row " + std::to_string(r) + ", col " +
                       std::to_string(c));
}

// Matrix binary format "SDM1":
//   magic (4 bytes) | rows u64 LE | dim u64 LE | rows*dim f64 LE, row-major.
inline void save_matrix(const std::string& path, const Matrix& m) {
  check_finite(m, path);
  auto out = open_output(path);
  write_magic(out, "SDM1");
  write_u64(out, static_cast<std::uint64_t>(m.rows()));
  write_u64(out, static_cast<std::uint64_t>(m.cols()));
  out.write(reinterpret_cast<const char*>(m.data()),
            static_cast<std::streamsize>(sizeof(double)) * m.size());
  if (!out) throw io_error(path + ": write failed");
}

inline Matrix load_matrix(const std::string& path) {
  auto in = open_input(path);
  expect_magic(in, "SDM1", path);
  const std::uint64_t rows = read_u64(in, path);
  const std::uint64_t dim = read_u64(in, path);
  if (rows > (1ULL << 32) || dim > (1ULL << 32))
    throw io_error(path + ": implausible matrix header");
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(dim));
  const std::streamsize bytes = static_cast<std::streamsize>(sizeof(double)) * m.size();
  if (!in.read(reinterpret_cast<char*>(m.data()), bytes))
    throw io_error(path + ": payload shorter than rows*dim in header");
  expect_eof(in, path);
  check_finite(m, path);
  return m;
}

}  // namespace sdgnn

#pragma once

#include <Eigen/Dense>

namespace dfa {

/** Scalar type used throughout the library. */
using scalar_t = double;

/** Dynamic column vector. */
using vector_t = Eigen::Matrix<scalar_t, Eigen::Dynamic, 1>;

/** Dynamic matrix, one row per observation. */
using matrix_t = Eigen::Matrix<scalar_t, Eigen::Dynamic, Eigen::Dynamic>;

/** Index type matching Eigen's. */
using index_t = Eigen::Index;

}  // namespace dfa

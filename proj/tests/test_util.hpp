#ifndef DICKE_TESTS_TEST_UTIL_HPP
#define DICKE_TESTS_TEST_UTIL_HPP

#include <random>

#include <Eigen/Dense>

#include "dicke/types.hpp"

namespace test_util {

inline Eigen::VectorXcd random_unit_vector(std::mt19937& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (int k = 0; k < dim; ++k) v(k) = dicke::Complex(gauss(rng), gauss(rng));
  v /= v.norm();
  return v;
}

inline dicke::DickeState random_state(std::mt19937& rng, int n_dots) {
  return dicke::DickeState(n_dots, random_unit_vector(rng, n_dots + 1));
}

inline double max_abs(const Eigen::MatrixXcd& m) {
  return m.cwiseAbs().maxCoeff();
}

}  // namespace test_util

#endif

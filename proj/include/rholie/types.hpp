#pragma once

#include "rholie/rational.hpp"

#include <Eigen/Core>

namespace rholie {

using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline bool is_zero_vec(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!rat_is_zero(v[i])) return false;
  return true;
}

inline bool is_zero_mat(const Mat& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!rat_is_zero(m(r, c))) return false;
  return true;
}

inline bool mat_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

inline bool vec_equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::string format_vec(const Vec& v);
std::string format_mat(const Mat& m);
std::string format_tuple(const std::vector<int>& t);

}  // namespace rholie

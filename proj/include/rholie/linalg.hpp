#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace rholie {

// Exact elimination over any field scalar.  Pivoting is deterministic: columns
// are processed left to right and the pivot is the first row (top to bottom)
// with a nonzero entry, so results are reproducible across runs and platforms.

namespace detail {

template <class S>
struct RrefResult {
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> m;
  std::vector<int> pivot_cols;  // ascending; pivot_cols[r] is the pivot of row r
};

template <class S>
RrefResult<S> rref(Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  RrefResult<S> out;
  Eigen::Index pr = 0;
  for (Eigen::Index c = 0; c < cols && pr < rows; ++c) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = pr; r < rows; ++r) {
      if (m(r, c) != S(0)) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pr) m.row(sel).swap(m.row(pr));
    S inv = S(1) / m(pr, c);
    for (Eigen::Index j = c; j < cols; ++j) m(pr, j) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == pr || m(r, c) == S(0)) continue;
      S f = m(r, c);
      for (Eigen::Index j = c; j < cols; ++j) m(r, j) -= f * m(pr, j);
    }
    out.pivot_cols.push_back(static_cast<int>(c));
    ++pr;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace detail

template <class S>
int rank(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& m) {
  return static_cast<int>(detail::rref<S>(m).pivot_cols.size());
}

/// Basis of {v : m v = 0}.  One vector per free column, in ascending free
/// column order; the vector for free column f has a 1 in coordinate f.
template <class S>
std::vector<Eigen::Matrix<S, Eigen::Dynamic, 1>> kernel_basis(
    const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& m) {
  using V = Eigen::Matrix<S, Eigen::Dynamic, 1>;
  auto r = detail::rref<S>(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int pc : r.pivot_cols) is_pivot[pc] = true;
  std::vector<V> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    V v = V::Zero(cols);
    v[f] = S(1);
    for (size_t row = 0; row < r.pivot_cols.size(); ++row)
      v[r.pivot_cols[row]] = -r.m(static_cast<Eigen::Index>(row), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
struct AffineSolution {
  Eigen::Matrix<S, Eigen::Dynamic, 1> particular;  // free coordinates set to 0
  std::vector<Eigen::Matrix<S, Eigen::Dynamic, 1>> kernel;
};

/// All solutions of m x = b, or nullopt when the system is inconsistent.
template <class S>
std::optional<AffineSolution<S>> solve_affine(
    const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& m,
    const Eigen::Matrix<S, Eigen::Dynamic, 1>& b) {
  using M = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  using V = Eigen::Matrix<S, Eigen::Dynamic, 1>;
  const Eigen::Index cols = m.cols();
  M aug(m.rows(), cols + 1);
  aug.leftCols(cols) = m;
  aug.col(cols) = b;
  auto r = detail::rref<S>(aug);
  for (int pc : r.pivot_cols)
    if (pc == cols) return std::nullopt;

  AffineSolution<S> sol;
  sol.particular = V::Zero(cols);
  for (size_t row = 0; row < r.pivot_cols.size(); ++row)
    sol.particular[r.pivot_cols[row]] = r.m(static_cast<Eigen::Index>(row), cols);

  std::vector<bool> is_pivot(cols, false);
  for (int pc : r.pivot_cols) is_pivot[pc] = true;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    V v = V::Zero(cols);
    v[f] = S(1);
    for (size_t row = 0; row < r.pivot_cols.size(); ++row)
      v[r.pivot_cols[row]] = -r.m(static_cast<Eigen::Index>(row), f);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

}  // namespace rholie

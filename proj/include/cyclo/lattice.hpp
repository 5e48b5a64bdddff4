#pragma once

// Exact integer lattice utilities: Hermite normal form, kernels and images of
// integer matrices. A matrix M with `rows` target coordinates and `cols`
// source coordinates represents the map Z^cols -> Z^rows, x -> M x.

#include <cstddef>
#include <utility>
#include <vector>

#include "cyclo/integer.hpp"

namespace cyclo::lattice {

using Vector = std::vector<Int>;
using Matrix = std::vector<Vector>;  // row-major, Matrix[i][j]

inline Matrix transpose(const Matrix& m, std::size_t cols) {
  Matrix out(cols, Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = m[i][j];
  return out;
}

namespace detail {

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline void axpy(Vector& row, const Int& q, const Vector& pivot) {
  if (q == 0) return;
  for (std::size_t k = 0; k < row.size(); ++k) row[k] -= q * pivot[k];
}

/// Row-reduces `rows` in place using only the first `width` columns to choose
/// pivots (remaining columns ride along). Returns the number of pivot rows,
/// which occupy the top of `rows` in Hermite normal form on those columns.
inline std::size_t hermite_in_place(Matrix& rows, std::size_t width) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        axpy(rows[i], rows[i][col] / rows[r][col], rows[r]);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) axpy(rows[i], floor_div(rows[i][col], rows[r][col]), rows[r]);
    ++r;
  }
  return r;
}

}  // namespace detail

/// Canonical Hermite basis of the lattice spanned by `vectors` (all of equal
/// length `dim`). Two generating sets span the same lattice iff their Hermite
/// bases are equal.
inline Matrix hermite_basis(Matrix vectors, std::size_t dim) {
  const std::size_t rank = detail::hermite_in_place(vectors, dim);
  vectors.resize(rank);
  return vectors;
}

/// Lattice spanned by the columns of `m` (the image of m).
inline Matrix image_basis(const Matrix& m, std::size_t cols) { return hermite_basis(transpose(m, cols), m.size()); }

inline std::size_t rank(const Matrix& m, std::size_t cols) { return image_basis(m, cols).size(); }

/// Basis of {x in Z^cols : m x = 0}, in Hermite form.
inline Matrix kernel_basis(const Matrix& m, std::size_t cols) {
  const std::size_t rows = m.size();
  Matrix aug(cols, Vector(rows + cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) aug[j][i] = m[i][j];
    aug[j][rows + j] = 1;
  }
  const std::size_t r = detail::hermite_in_place(aug, rows);
  Matrix kernel;
  for (std::size_t i = r; i < aug.size(); ++i) kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(rows), aug[i].end());
  return hermite_basis(std::move(kernel), cols);
}

inline Matrix identity(std::size_t n) {
  Matrix out(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

}  // namespace cyclo::lattice

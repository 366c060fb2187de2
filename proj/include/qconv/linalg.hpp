#pragma once

#include <cstddef>

#include "qconv/rng.hpp"
#include "qconv/types.hpp"

namespace qconv {

/// Dense complex matrix, row-major.
class LinearMap {
 public:
  LinearMap(int rows, int cols);  // zero-filled
  LinearMap(int rows, int cols, Sequence entries);

  static LinearMap identity(int dim);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int r, int c) {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }
  Complex operator()(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }

  const Sequence& entries() const { return entries_; }
  Sequence& entries() { return entries_; }

 private:
  int rows_;
  int cols_;
  Sequence entries_;
};

LinearMap dagger(const LinearMap& m);
LinearMap kron(const LinearMap& a, const LinearMap& b);
LinearMap subtract(const LinearMap& a, const LinearMap& b);

/// Matrix-vector product; OpenMP-parallel over rows for large maps.
Sequence apply(const LinearMap& m, const Sequence& v);

/// Matrix product; OpenMP-parallel over rows of the result.
LinearMap multiply(const LinearMap& a, const LinearMap& b);

/// max |m - I| entrywise deviation.
double deviation_from_identity(const LinearMap& m);

double max_abs_diff(const LinearMap& a, const LinearMap& b);

bool all_finite(const LinearMap& m);

/// Haar-ish random unitary: complex Gaussian matrix orthonormalized by
/// two passes of modified Gram-Schmidt.
LinearMap random_unitary_matrix(int dim, Rng& rng);

namespace serial {

// Single-threaded reference kernels, kept as oracles for the parallel ones.
Sequence apply(const LinearMap& m, const Sequence& v);
LinearMap multiply(const LinearMap& a, const LinearMap& b);

}  // namespace serial

}  // namespace qconv

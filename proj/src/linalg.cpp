#include "qconv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace qconv {

LinearMap::LinearMap(int rows, int cols)
    : rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols) {
  if (rows <= 0 || cols <= 0) {
    throw InvalidInput("LinearMap: dimensions must be positive");
  }
}

LinearMap::LinearMap(int rows, int cols, Sequence entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows <= 0 || cols <= 0) {
    throw InvalidInput("LinearMap: dimensions must be positive");
  }
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw InvalidInput("LinearMap: entry count does not match dimensions");
  }
  if (!qconv::all_finite(entries_)) {
    throw InvalidInput("LinearMap: entries must be finite");
  }
}

LinearMap LinearMap::identity(int dim) {
  LinearMap m(dim, dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

LinearMap dagger(const LinearMap& m) {
  LinearMap out(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
  }
  return out;
}

LinearMap kron(const LinearMap& a, const LinearMap& b) {
  LinearMap out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ra = 0; ra < a.rows(); ++ra) {
    for (int ca = 0; ca < a.cols(); ++ca) {
      const Complex f = a(ra, ca);
      for (int rb = 0; rb < b.rows(); ++rb) {
        for (int cb = 0; cb < b.cols(); ++cb) {
          out(ra * b.rows() + rb, ca * b.cols() + cb) = f * b(rb, cb);
        }
      }
    }
  }
  return out;
}

LinearMap subtract(const LinearMap& a, const LinearMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("subtract: dimension mismatch");
  }
  LinearMap out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    out.entries()[i] = a.entries()[i] - b.entries()[i];
  }
  return out;
}

Sequence apply(const LinearMap& m, const Sequence& v) {
  if (v.size() != static_cast<std::size_t>(m.cols())) {
    throw InvalidInput("apply: dimension mismatch");
  }
  const int rows = m.rows();
  const int cols = m.cols();
  const Complex* data = m.entries().data();
  Sequence out(rows);
#pragma omp parallel for schedule(static) \
    if (static_cast<std::int64_t>(rows) * cols >= (1 << 14))
  for (int r = 0; r < rows; ++r) {
    const Complex* row = data + static_cast<std::size_t>(r) * cols;
    Complex acc{};
    for (int c = 0; c < cols; ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

LinearMap multiply(const LinearMap& a, const LinearMap& b) {
  if (a.cols() != b.rows()) {
    throw InvalidInput("multiply: dimension mismatch");
  }
  const int rows = a.rows();
  const int inner = a.cols();
  const int cols = b.cols();
  LinearMap out(rows, cols);
  Complex* od = out.entries().data();
  const Complex* ad = a.entries().data();
  const Complex* bd = b.entries().data();
#pragma omp parallel for schedule(static) \
    if (static_cast<std::int64_t>(rows) * inner * cols >= (1 << 16))
  for (int r = 0; r < rows; ++r) {
    Complex* orow = od + static_cast<std::size_t>(r) * cols;
    for (int k = 0; k < inner; ++k) {
      const Complex f = ad[static_cast<std::size_t>(r) * inner + k];
      const Complex* brow = bd + static_cast<std::size_t>(k) * cols;
      for (int c = 0; c < cols; ++c) orow[c] += f * brow[c];
    }
  }
  return out;
}

double deviation_from_identity(const LinearMap& m) {
  double dev = 0.0;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const Complex want = (r == c) ? Complex{1.0, 0.0} : Complex{};
      dev = std::max(dev, std::abs(m(r, c) - want));
    }
  }
  return dev;
}

double max_abs_diff(const LinearMap& a, const LinearMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("max_abs_diff: dimension mismatch");
  }
  return qconv::max_abs_diff(a.entries(), b.entries());
}

bool all_finite(const LinearMap& m) { return qconv::all_finite(m.entries()); }

LinearMap random_unitary_matrix(int dim, Rng& rng) {
  LinearMap m(dim, dim);
  for (Complex& z : m.entries()) z = rng.next_complex_gaussian();
  // two passes of modified Gram-Schmidt over the columns
  for (int pass = 0; pass < 2; ++pass) {
    for (int c = 0; c < dim; ++c) {
      for (int p = 0; p < c; ++p) {
        Complex proj{};
        for (int r = 0; r < dim; ++r) proj += std::conj(m(r, p)) * m(r, c);
        for (int r = 0; r < dim; ++r) m(r, c) -= proj * m(r, p);
      }
      double n2 = 0.0;
      for (int r = 0; r < dim; ++r) n2 += std::norm(m(r, c));
      if (n2 < 1e-24) {
        // degenerate column; replace and redo it
        for (int r = 0; r < dim; ++r) m(r, c) = rng.next_complex_gaussian();
        --c;
        continue;
      }
      const double inv = 1.0 / std::sqrt(n2);
      for (int r = 0; r < dim; ++r) m(r, c) *= inv;
    }
  }
  return m;
}

namespace serial {

Sequence apply(const LinearMap& m, const Sequence& v) {
  if (v.size() != static_cast<std::size_t>(m.cols())) {
    throw InvalidInput("apply: dimension mismatch");
  }
  Sequence out(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    Complex acc{};
    for (int c = 0; c < m.cols(); ++c) acc += m(r, c) * v[c];
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

LinearMap multiply(const LinearMap& a, const LinearMap& b) {
  if (a.cols() != b.rows()) {
    throw InvalidInput("multiply: dimension mismatch");
  }
  LinearMap out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex f = a(r, k);
      for (int c = 0; c < b.cols(); ++c) out(r, c) += f * b(k, c);
    }
  }
  return out;
}

}  // namespace serial

}  // namespace qconv
